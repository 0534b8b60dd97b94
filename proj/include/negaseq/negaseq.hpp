#pragma once

#include "negaseq/bigint.hpp"
#include "negaseq/bounds.hpp"
#include "negaseq/counting.hpp"
#include "negaseq/debruijn.hpp"
#include "negaseq/dot.hpp"
#include "negaseq/error.hpp"
#include "negaseq/excluded_edges.hpp"
#include "negaseq/search.hpp"
#include "negaseq/sequence.hpp"
#include "negaseq/tuple.hpp"
#include "negaseq/verifier.hpp"
