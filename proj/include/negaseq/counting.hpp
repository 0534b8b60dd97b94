#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negaseq/bigint.hpp"
#include "negaseq/error.hpp"
#include "negaseq/tuple.hpp"

namespace negaseq {

/// Tuple classes with a closed-form count. The trailing comment gives the
/// defining predicate.
enum class TupleClass {
    Negasymmetric,                     // t == -t^R
    Uniform,                           // all symbols equal
    UniformAlternating,                // t[i+1] == -t[i]
    UniformAndUniformAlternating,      // uniform and uniform-alternating
    UniformNegasymmetric,              // uniform and negasymmetric
    UniformAlternatingNegasymmetric,   // uniform-alternating and negasymmetric
    AlternatingNegasymmetric,          // alternating and negasymmetric
    LeftSns,                           // prefix of length n-1 negasymmetric
    NonUniformLeftSns,                 // left-sns, not uniform
    NonUniformAlternatingLeftSns,      // left-sns, not uniform-alternating
    NonUniformNonAlternatingLeftSns,   // left-sns, neither uniform nor alternating
    RightSns,
    NonUniformRightSns,
    NonUniformAlternatingRightSns,
    NonUniformNonAlternatingRightSns,
};

inline constexpr std::array<TupleClass, 15> all_tuple_classes = {
    TupleClass::Negasymmetric,
    TupleClass::Uniform,
    TupleClass::UniformAlternating,
    TupleClass::UniformAndUniformAlternating,
    TupleClass::UniformNegasymmetric,
    TupleClass::UniformAlternatingNegasymmetric,
    TupleClass::AlternatingNegasymmetric,
    TupleClass::LeftSns,
    TupleClass::NonUniformLeftSns,
    TupleClass::NonUniformAlternatingLeftSns,
    TupleClass::NonUniformNonAlternatingLeftSns,
    TupleClass::RightSns,
    TupleClass::NonUniformRightSns,
    TupleClass::NonUniformAlternatingRightSns,
    TupleClass::NonUniformNonAlternatingRightSns,
};

[[nodiscard]] constexpr std::string_view name(TupleClass c) noexcept {
    switch (c) {
        case TupleClass::Negasymmetric: return "negasymmetric";
        case TupleClass::Uniform: return "uniform";
        case TupleClass::UniformAlternating: return "uniform-alternating";
        case TupleClass::UniformAndUniformAlternating: return "uniform-and-uniform-alternating";
        case TupleClass::UniformNegasymmetric: return "uniform-negasymmetric";
        case TupleClass::UniformAlternatingNegasymmetric: return "uniform-alternating-negasymmetric";
        case TupleClass::AlternatingNegasymmetric: return "alternating-negasymmetric";
        case TupleClass::LeftSns: return "left-sns";
        case TupleClass::NonUniformLeftSns: return "non-uniform-left-sns";
        case TupleClass::NonUniformAlternatingLeftSns: return "non-uniform-alternating-left-sns";
        case TupleClass::NonUniformNonAlternatingLeftSns: return "non-uniform-non-alternating-left-sns";
        case TupleClass::RightSns: return "right-sns";
        case TupleClass::NonUniformRightSns: return "non-uniform-right-sns";
        case TupleClass::NonUniformAlternatingRightSns: return "non-uniform-alternating-right-sns";
        case TupleClass::NonUniformNonAlternatingRightSns: return "non-uniform-non-alternating-right-sns";
    }
    return "?";
}

[[nodiscard]] inline std::optional<TupleClass> parse_tuple_class(std::string_view s) {
    for (TupleClass c : all_tuple_classes) {
        if (name(c) == s) return c;
    }
    return std::nullopt;
}

/// Right-sns classes map to their left-sns counterpart; others map to themselves.
[[nodiscard]] constexpr TupleClass left_counterpart(TupleClass c) noexcept {
    switch (c) {
        case TupleClass::RightSns: return TupleClass::LeftSns;
        case TupleClass::NonUniformRightSns: return TupleClass::NonUniformLeftSns;
        case TupleClass::NonUniformAlternatingRightSns: return TupleClass::NonUniformAlternatingLeftSns;
        case TupleClass::NonUniformNonAlternatingRightSns: return TupleClass::NonUniformNonAlternatingLeftSns;
        default: return c;
    }
}

[[nodiscard]] constexpr bool is_right_class(TupleClass c) noexcept { return left_counterpart(c) != c; }

[[nodiscard]] constexpr unsigned min_length(TupleClass c) noexcept {
    return c == TupleClass::Negasymmetric ? 1U : 2U;
}

/// Membership test for `t` in class `c`.
[[nodiscard]] inline bool matches(TupleClass c, const Tuple& t) {
    detail::require(t.size() >= min_length(c),
                    std::string(name(c)) + " requires n >= " + std::to_string(min_length(c)));
    switch (c) {
        case TupleClass::Negasymmetric: return is_negasymmetric(t);
        case TupleClass::Uniform: return is_uniform(t);
        case TupleClass::UniformAlternating: return is_uniform_alternating(t);
        case TupleClass::UniformAndUniformAlternating: return is_uniform(t) && is_uniform_alternating(t);
        case TupleClass::UniformNegasymmetric: return is_uniform(t) && is_negasymmetric(t);
        case TupleClass::UniformAlternatingNegasymmetric: return is_uniform_alternating(t) && is_negasymmetric(t);
        case TupleClass::AlternatingNegasymmetric: return is_alternating(t) && is_negasymmetric(t);
        case TupleClass::LeftSns: return is_left_sns(t);
        case TupleClass::NonUniformLeftSns: return is_left_sns(t) && !is_uniform(t);
        case TupleClass::NonUniformAlternatingLeftSns: return is_left_sns(t) && !is_uniform_alternating(t);
        case TupleClass::NonUniformNonAlternatingLeftSns:
            return is_left_sns(t) && !is_uniform(t) && !is_alternating(t);
        case TupleClass::RightSns: return is_right_sns(t);
        case TupleClass::NonUniformRightSns: return is_right_sns(t) && !is_uniform(t);
        case TupleClass::NonUniformAlternatingRightSns: return is_right_sns(t) && !is_uniform_alternating(t);
        case TupleClass::NonUniformNonAlternatingRightSns:
            return is_right_sns(t) && !is_uniform(t) && !is_alternating(t);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Closed-form counts. Each parity case is its own branch.

namespace detail {

inline BigInt count_negasymmetric(unsigned n, unsigned k) {
    const bool n_odd = n % 2 == 1, k_odd = k % 2 == 1;
    if (n_odd && k_odd) return ipow(k, (n - 1) / 2);
    if (n_odd) return 2 * ipow(k, (n - 1) / 2);
    return ipow(k, n / 2);
}

inline BigInt count_left_sns(unsigned n, unsigned k) {
    const bool n_odd = n % 2 == 1, k_odd = k % 2 == 1;
    if (n_odd) return ipow(k, (n + 1) / 2);
    if (k_odd) return ipow(k, n / 2);
    return 2 * ipow(k, n / 2);
}

inline BigInt count_non_uniform_left_sns(unsigned n, unsigned k) {
    const bool n_odd = n % 2 == 1, k_odd = k % 2 == 1;
    if (n_odd && k_odd) return ipow(k, (n + 1) / 2) - 1;
    if (n_odd) return ipow(k, (n + 1) / 2) - 2;
    if (k_odd) return ipow(k, n / 2) - 1;
    return 2 * ipow(k, n / 2) - 2;
}

inline BigInt count_non_uniform_alternating_left_sns(unsigned n, unsigned k) {
    const bool n_odd = n % 2 == 1, k_odd = k % 2 == 1;
    if (n_odd) return ipow(k, (n + 1) / 2) - k;
    if (k_odd) return ipow(k, n / 2) - 1;
    return 2 * ipow(k, n / 2) - 2;
}

inline BigInt count_non_uniform_non_alternating_left_sns(unsigned n, unsigned k) {
    // Every non-uniform 2-tuple is alternating, so the class is empty at n=2;
    // the general expressions below count on an alternating (n-1)-prefix.
    if (n == 2) return 0;
    const bool n_odd = n % 2 == 1, k_odd = k % 2 == 1;
    if (n_odd) return ipow(k, (n + 1) / 2) - k;
    if (k_odd) return ipow(k, n / 2) - 1;
    return 2 * ipow(k, n / 2) - 4;
}

}  // namespace detail

/// Closed-form number of k-ary n-tuples in class `c`.
[[nodiscard]] inline BigInt count_class(TupleClass c, unsigned n, unsigned k) {
    detail::require(k >= 3, "k must be at least 3");
    detail::require(n >= min_length(c),
                    std::string(name(c)) + " is only defined for n >= " + std::to_string(min_length(c)));
    const bool n_odd = n % 2 == 1, k_odd = k % 2 == 1;
    switch (left_counterpart(c)) {
        case TupleClass::Negasymmetric: return detail::count_negasymmetric(n, k);
        case TupleClass::Uniform: return k;
        case TupleClass::UniformAlternating: return k;
        case TupleClass::UniformAndUniformAlternating: return k_odd ? 1 : 2;
        case TupleClass::UniformNegasymmetric: return k_odd ? 1 : 2;
        case TupleClass::UniformAlternatingNegasymmetric:
            if (n_odd && k_odd) return 1;
            if (n_odd) return 2;
            return k;
        case TupleClass::AlternatingNegasymmetric:
            if (n_odd && k_odd) return 0;
            if (n_odd) return 2;
            if (k_odd) return k - 1;
            return k - 2;
        case TupleClass::LeftSns: return detail::count_left_sns(n, k);
        case TupleClass::NonUniformLeftSns: return detail::count_non_uniform_left_sns(n, k);
        case TupleClass::NonUniformAlternatingLeftSns: return detail::count_non_uniform_alternating_left_sns(n, k);
        case TupleClass::NonUniformNonAlternatingLeftSns:
            return detail::count_non_uniform_non_alternating_left_sns(n, k);
        default: break;
    }
    throw consistency_error("unhandled tuple class");
}

// ---------------------------------------------------------------------------
// Brute-force enumeration

inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

/// Calls `fn(const Tuple&)` for every k-ary n-tuple in lexicographic order
/// (symbol 0 first, leftmost symbol most significant).
template <typename Fn>
void for_each_tuple(unsigned n, unsigned k, Fn&& fn, std::uint64_t budget = default_enumeration_budget) {
    detail::require(k >= 3, "k must be at least 3");
    const auto total = checked_pow(k, n);
    if (!total || *total > budget) {
        throw budget_error("enumerating " + std::to_string(k) + "^" + std::to_string(n) +
                           " tuples exceeds the budget of " + std::to_string(budget));
    }
    std::vector<Symbol> digits(n, 0);
    for (std::uint64_t i = 0; i < *total; ++i) {
        fn(Tuple(digits, k));
        for (unsigned p = n; p-- > 0;) {
            if (++digits[p] < k) break;
            digits[p] = 0;
        }
    }
}

[[nodiscard]] inline std::vector<Tuple> enumerate_class(TupleClass c, unsigned n, unsigned k,
                                                        std::uint64_t budget = default_enumeration_budget) {
    detail::require(n >= min_length(c),
                    std::string(name(c)) + " is only defined for n >= " + std::to_string(min_length(c)));
    std::vector<Tuple> out;
    for_each_tuple(
        n, k,
        [&](const Tuple& t) {
            if (matches(c, t)) out.push_back(t);
        },
        budget);
    return out;
}

}  // namespace negaseq
