#pragma once

#include <string_view>

#include "negaseq/bigint.hpp"
#include "negaseq/counting.hpp"
#include "negaseq/debruijn.hpp"

namespace negaseq {

/// Which case of the period bound applies; determined by n in {2,3,4} or the
/// parities of n and k.
enum class Regime { N2Odd, N2Even, N3Odd, N3Even, N4Odd, N4Even, OddOdd, OddEven, EvenOdd, EvenEven };

[[nodiscard]] inline Regime regime_of(unsigned n, unsigned k) {
    detail::require(n >= 2 && k >= 3, "bounds need n >= 2 and k >= 3");
    const bool k_odd = k % 2 == 1;
    switch (n) {
        case 2: return k_odd ? Regime::N2Odd : Regime::N2Even;
        case 3: return k_odd ? Regime::N3Odd : Regime::N3Even;
        case 4: return k_odd ? Regime::N4Odd : Regime::N4Even;
        default: break;
    }
    if (n % 2 == 1) return k_odd ? Regime::OddOdd : Regime::OddEven;
    return k_odd ? Regime::EvenOdd : Regime::EvenEven;
}

[[nodiscard]] constexpr std::string_view name(Regime r) noexcept {
    switch (r) {
        case Regime::N2Odd: return "n2-odd";
        case Regime::N2Even: return "n2-even";
        case Regime::N3Odd: return "n3-odd";
        case Regime::N3Even: return "n3-even";
        case Regime::N4Odd: return "n4-odd";
        case Regime::N4Even: return "n4-even";
        case Regime::OddOdd: return "odd-odd";
        case Regime::OddEven: return "odd-even";
        case Regime::EvenOdd: return "even-odd";
        case Regime::EvenEven: return "even-even";
    }
    return "?";
}

/// Edge budget behind a period bound. u_* are edges excluded because a vertex
/// would otherwise have unequal in- and out-degree; p_* are edges excluded
/// because a negasymmetric vertex would otherwise have odd degree. The ix_*
/// fields are the largest possible overlaps between those sets (upper-bound
/// inputs, not measurements of a particular sequence):
///   ix_up = |U_out & P_in|, ix_pu = |P_out & U_in|,
///   ix_uu = |U_out & U_in|, ix_pp = |P_out & P_in|.
/// Terms that do not enter the regime's formula are zero.
struct BoundBreakdown {
    unsigned n = 0;
    unsigned k = 0;
    Regime regime = Regime::N2Odd;
    BigInt edges;  // N_k(n)
    BigInt u_out, u_in, p_out, p_in;
    BigInt ix_up, ix_pu, ix_uu, ix_pp;
    BigInt resulting_edge_cap;
    BigInt resulting_period_bound;
};

[[nodiscard]] inline BoundBreakdown excluded_edge_budget(unsigned n, unsigned k) {
    using C = TupleClass;
    BoundBreakdown b;
    b.n = n;
    b.k = k;
    b.regime = regime_of(n, k);
    b.edges = edge_count_formula(n, k);
    const unsigned v = n - 1;  // vertex label length
    auto count = [&](C c, unsigned len) { return count_class(c, len, k); };

    switch (b.regime) {
        case Regime::N2Odd:
            // the only negasymmetric 1-tuple is (0), which is uniform
            b.p_out = count(C::Negasymmetric, 1) - 1;
            b.resulting_edge_cap = b.edges - b.p_out;
            break;
        case Regime::N2Even:
            // (0) and (k/2): negasymmetric and, vacuously, uniform-alternating
            b.p_out = count(C::Negasymmetric, 1);
            b.resulting_edge_cap = b.edges - b.p_out;
            break;
        case Regime::N3Odd:
            b.p_out = b.p_in = count(C::Negasymmetric, v) - count(C::UniformNegasymmetric, v);
            b.ix_pp = count(C::UniformAlternating, n) - count(C::UniformAndUniformAlternating, n);
            b.resulting_edge_cap = b.edges - b.p_out - b.p_in + b.ix_pp;
            break;
        case Regime::N3Even: {
            // 2-tuples with both entries in {0, k/2}: uniform or alternating
            const BigInt fixed = count(C::UniformNegasymmetric, v);
            b.p_out = b.p_in = fixed * fixed;
            b.ix_pp = fixed * (fixed - 1);
            b.resulting_edge_cap = b.edges - b.p_out - b.p_in + b.ix_pp;
            break;
        }
        case Regime::N4Odd:
            b.u_out = count(C::NonUniformAlternatingLeftSns, v);
            b.p_out = count(C::Negasymmetric, v) - count(C::UniformNegasymmetric, v);
            b.resulting_edge_cap = b.edges - b.u_out - b.p_out;
            break;
        case Regime::N4Even:
            b.u_out = count(C::NonUniformAlternatingLeftSns, v);
            b.p_out = count(C::UniformAlternatingNegasymmetric, v);
            b.resulting_edge_cap = b.edges - b.u_out - b.p_out;
            break;
        case Regime::OddOdd:
            b.u_out = b.u_in = count(C::NonUniformLeftSns, v);
            b.p_out = b.p_in = count(C::Negasymmetric, v) - count(C::UniformNegasymmetric, v);
            // period-4 words with c1 = c3 = 0, less the all-zero word
            b.ix_uu = k - 1;
            // period-3 words with one entry fixed at 0, less the all-zero word
            b.ix_up = b.ix_pu = k - 1;
            b.ix_pp = count(C::UniformAlternating, v) - count(C::UniformAndUniformAlternating, v);
            break;
        case Regime::OddEven:
            b.u_out = b.u_in = count(C::NonUniformNonAlternatingLeftSns, v);
            // period-4 words with c1, c3 in {0, k/2}, less 2 uniform and 2 alternating
            b.ix_uu = 4 * BigInt(k) - 4;
            b.p_out = b.p_in = count(C::UniformNegasymmetric, v) + count(C::AlternatingNegasymmetric, v);
            // U sets touch only non-uniform non-alternating vertices, P sets only the others
            b.ix_up = b.ix_pu = 0;
            b.ix_pp = count(C::UniformAlternating, n) - count(C::UniformAlternatingNegasymmetric, n);
            break;
        case Regime::EvenOdd:
            b.u_out = b.u_in = count(C::NonUniformAlternatingLeftSns, v);
            b.ix_uu = BigInt(k) * (k - 1);
            b.p_out = b.p_in = count(C::Negasymmetric, v) - count(C::UniformNegasymmetric, v);
            b.ix_up = b.ix_pu = k - 1;
            b.ix_pp = 0;
            break;
        case Regime::EvenEven:
            b.u_out = b.u_in = count(C::NonUniformAlternatingLeftSns, v);
            b.ix_uu = BigInt(k) * (k - 1);
            b.p_out = b.p_in = count(C::UniformAlternatingNegasymmetric, v);
            b.ix_up = b.ix_pu = 0;
            b.ix_pp = 2;
            break;
    }
    if (n > 4) {
        b.resulting_edge_cap = b.edges - b.u_out - b.u_in - b.p_out - b.p_in + b.ix_up + b.ix_pu + b.ix_uu + b.ix_pp;
    }
    b.resulting_period_bound = b.resulting_edge_cap / 2;
    return b;
}

}  // namespace negaseq
