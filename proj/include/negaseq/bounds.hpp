#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "negaseq/bigint.hpp"
#include "negaseq/excluded_edges.hpp"

namespace negaseq {

struct BoundValue {
    unsigned n = 0;
    unsigned k = 0;
    BigInt value;
    Regime regime = Regime::N2Odd;
    BoundBreakdown breakdown;
};

namespace detail {

/// Numerator of the closed-form period bound; the bound is numerator / 2.
inline BigInt bound_numerator(unsigned n, unsigned k) {
    const BigInt K = k;
    switch (regime_of(n, k)) {
        case Regime::N2Odd: return K * K - K;
        case Regime::N2Even: return K * K - K - 2;
        case Regime::N3Odd: return ipow(k, 3) - 2 * K + 1;
        case Regime::N3Even: return ipow(k, 3) - 2 * K - 6;
        case Regime::N4Odd: return ipow(k, 4) - 2 * K * K + 1;
        case Regime::N4Even: return ipow(k, 4) - 2 * K * K + K - 2;
        case Regime::OddOdd: return ipow(k, n) - 5 * ipow(k, (n - 1) / 2) + 4 * K;
        case Regime::OddEven: return ipow(k, n) - 6 * ipow(k, (n - 1) / 2) + 3 * K + 2;
        case Regime::EvenOdd: return ipow(k, n) - 3 * ipow(k, n / 2) - 2 * ipow(k, (n - 2) / 2) + K * K + 3 * K;
        case Regime::EvenEven: return ipow(k, n) - 3 * ipow(k, n / 2) + K * K + K - 2;
    }
    throw consistency_error("unhandled regime");
}

}  // namespace detail

/// Upper bound on the period of a NOS_k(n), with the edge budget behind it.
[[nodiscard]] inline BoundValue nos_bound(unsigned n, unsigned k) {
    detail::require(n >= 2 && k >= 3, "nos_bound requires n >= 2 and k >= 3");
    const BigInt num = detail::bound_numerator(n, k);
    if (num % 2 != 0) {
        throw consistency_error("odd numerator " + num.str() + " for n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    BoundValue b{n, k, num / 2, regime_of(n, k), excluded_edge_budget(n, k)};
    return b;
}

// ---------------------------------------------------------------------------
// Reference data

struct ReferenceEntry {
    std::optional<BigInt> new_bound;
    std::optional<BigInt> old_bound;
    std::optional<BigInt> best_known;
    bool maximal = false;
};

/// Reference values keyed by (n, k). Loaded from CSV with header
/// `n,k,new_bound,old_bound,best_known,maximal`; empty fields mean "not listed".
class ReferenceTable {
public:
    using Key = std::pair<unsigned, unsigned>;

    static ReferenceTable parse(std::istream& in) {
        ReferenceTable t;
        std::string line;
        std::size_t lineno = 0;
        bool header_seen = false;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            std::vector<std::string> f;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) f.push_back(cell);
            if (!line.empty() && line.back() == ',') f.emplace_back();
            if (!header_seen) {
                detail::require(line == "n,k,new_bound,old_bound,best_known,maximal",
                                "reference CSV: unexpected header '" + line + "'");
                header_seen = true;
                continue;
            }
            detail::require(f.size() == 6, "reference CSV line " + std::to_string(lineno) + ": expected 6 fields");
            auto num = [&](const std::string& s) -> std::optional<BigInt> {
                if (s.empty()) return std::nullopt;
                detail::require(s.find_first_not_of("0123456789") == std::string::npos,
                                "reference CSV line " + std::to_string(lineno) + ": bad number '" + s + "'");
                return BigInt(s);
            };
            ReferenceEntry e{num(f[2]), num(f[3]), num(f[4]), f[5] == "1" || f[5] == "true"};
            const unsigned n = static_cast<unsigned>(std::stoul(f[0]));
            const unsigned k = static_cast<unsigned>(std::stoul(f[1]));
            t.entries_[{n, k}] = std::move(e);
        }
        detail::require(header_seen, "reference CSV: missing header");
        return t;
    }

    static ReferenceTable load(const std::string& path) {
        std::ifstream in(path);
        detail::require(static_cast<bool>(in), "cannot open reference CSV '" + path + "'");
        return parse(in);
    }

    [[nodiscard]] const ReferenceEntry* find(unsigned n, unsigned k) const {
        auto it = entries_.find({n, k});
        return it == entries_.end() ? nullptr : &it->second;
    }
    [[nodiscard]] const std::map<Key, ReferenceEntry>& entries() const noexcept { return entries_; }

private:
    std::map<Key, ReferenceEntry> entries_;
};

#ifdef NEGASEQ_DEFAULT_REFERENCE
inline constexpr const char* default_reference_path = NEGASEQ_DEFAULT_REFERENCE;
#else
inline constexpr const char* default_reference_path = "data/reference_bounds.csv";
#endif

struct BoundCell {
    unsigned n;
    unsigned k;
    BigInt bound;
    Regime regime;
    std::optional<ReferenceEntry> reference;
    /// Set when the reference lists a new bound for this cell.
    std::optional<bool> matches_reference;
};

struct InclusiveRange {
    unsigned lo;
    unsigned hi;
};

/// nos_bound for every cell of the grid, row-major (n outer, k inner).
[[nodiscard]] inline std::vector<BoundCell> bound_table(InclusiveRange n_range, InclusiveRange k_range,
                                                        const ReferenceTable* reference = nullptr) {
    detail::require(n_range.lo >= 2 && n_range.lo <= n_range.hi, "n range must satisfy 2 <= lo <= hi");
    detail::require(k_range.lo >= 3 && k_range.lo <= k_range.hi, "k range must satisfy 3 <= lo <= hi");
    std::vector<BoundCell> out;
    for (unsigned n = n_range.lo; n <= n_range.hi; ++n) {
        for (unsigned k = k_range.lo; k <= k_range.hi; ++k) {
            const BoundValue b = nos_bound(n, k);
            BoundCell c{n, k, b.value, b.regime, std::nullopt, std::nullopt};
            if (reference) {
                if (const ReferenceEntry* e = reference->find(n, k)) {
                    c.reference = *e;
                    if (e->new_bound) c.matches_reference = (*e->new_bound == b.value);
                }
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace negaseq
