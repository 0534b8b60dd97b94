#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negaseq/error.hpp"

namespace negaseq {

using Symbol = std::uint32_t;
using Code = std::uint64_t;

/// A word of fixed length over Z_k, k >= 3. Carries its alphabet size so that
/// operations can reject mixed-alphabet arguments.
class Tuple {
public:
    Tuple(std::vector<Symbol> symbols, unsigned k) : symbols_(std::move(symbols)), k_(k) {
        detail::require(k_ >= 3, "alphabet size k must be at least 3 (negation is the identity on Z_2)");
        for (Symbol s : symbols_) {
            detail::require(s < k_, "symbol " + std::to_string(s) + " out of range for k=" + std::to_string(k_));
        }
    }

    /// Parses "1,0,2" (whitespace tolerated around symbols).
    static Tuple parse(std::string_view text, unsigned k);

    [[nodiscard]] unsigned k() const noexcept { return k_; }
    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// Sub-word [first, first+count).
    [[nodiscard]] Tuple slice(std::size_t first, std::size_t count) const {
        detail::require(first + count <= size(), "slice out of range");
        return Tuple(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(first),
                                         symbols_.begin() + static_cast<std::ptrdiff_t>(first + count)),
                     k_);
    }

    /// Symbols joined by `sep`; with an empty separator and k > 10 a '.' is used
    /// so that names stay unambiguous.
    [[nodiscard]] std::string str(std::string_view sep = ",") const {
        if (sep.empty() && k_ > 10) sep = ".";
        std::string out;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) out += sep;
            out += std::to_string(symbols_[i]);
        }
        return out;
    }

    friend bool operator==(const Tuple& a, const Tuple& b) {
        same_alphabet(a, b);
        return a.symbols_ == b.symbols_;
    }
    friend std::strong_ordering operator<=>(const Tuple& a, const Tuple& b) {
        same_alphabet(a, b);
        return a.symbols_ <=> b.symbols_;
    }

    static void same_alphabet(const Tuple& a, const Tuple& b) {
        detail::require(a.k_ == b.k_, "tuples over different alphabets (k=" + std::to_string(a.k_) +
                                          " vs k=" + std::to_string(b.k_) + ")");
    }

private:
    std::vector<Symbol> symbols_;
    unsigned k_;
};

inline Tuple Tuple::parse(std::string_view text, unsigned k) {
    std::vector<Symbol> out;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return Tuple({}, k);
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view field = trim(text.substr(pos, comma - pos));
        detail::require(!field.empty() && std::all_of(field.begin(), field.end(),
                                                       [](char c) { return c >= '0' && c <= '9'; }),
                        "malformed symbol list: '" + std::string(text) + "'");
        unsigned long long v = 0;
        for (char c : field) {
            v = v * 10 + static_cast<unsigned>(c - '0');
            detail::require(v < k, "symbol " + std::string(field) + " out of range for k=" + std::to_string(k));
        }
        out.push_back(static_cast<Symbol>(v));
        pos = comma + 1;
    }
    return Tuple(std::move(out), k);
}

// ---------------------------------------------------------------------------
// Symmetry operations

[[nodiscard]] inline Symbol negate_symbol(Symbol s, unsigned k) noexcept { return s == 0 ? 0 : k - s; }

[[nodiscard]] inline Tuple reverse(const Tuple& t) {
    std::vector<Symbol> out(t.symbols().rbegin(), t.symbols().rend());
    return Tuple(std::move(out), t.k());
}

[[nodiscard]] inline Tuple negate(const Tuple& t) {
    std::vector<Symbol> out;
    out.reserve(t.size());
    for (Symbol s : t.symbols()) out.push_back(negate_symbol(s, t.k()));
    return Tuple(std::move(out), t.k());
}

/// -t^R: reverse then negate.
[[nodiscard]] inline Tuple nega_reverse(const Tuple& t) { return negate(reverse(t)); }

// ---------------------------------------------------------------------------
// Structural predicates. The empty word is vacuously negasymmetric, which makes
// every 1-tuple both left-sns and right-sns.

namespace detail {

inline bool negasymmetric_range(std::span<const Symbol> s, unsigned k) noexcept {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i] != negate_symbol(s[n - 1 - i], k)) return false;
    }
    return true;
}

}  // namespace detail

[[nodiscard]] inline bool is_negasymmetric(const Tuple& t) noexcept {
    return detail::negasymmetric_range(t.symbols(), t.k());
}

[[nodiscard]] inline bool is_uniform(const Tuple& t) {
    detail::require(t.size() >= 1, "is_uniform requires n >= 1");
    const auto s = t.symbols();
    return std::all_of(s.begin(), s.end(), [&](Symbol x) { return x == s[0]; });
}

[[nodiscard]] inline bool is_alternating(const Tuple& t) {
    detail::require(t.size() >= 2, "is_alternating requires n >= 2");
    const auto s = t.symbols();
    if (s[0] == s[1]) return false;
    for (std::size_t i = 2; i < s.size(); ++i) {
        if (s[i] != s[i - 2]) return false;
    }
    return true;
}

[[nodiscard]] inline bool is_uniform_alternating(const Tuple& t) {
    detail::require(t.size() >= 2, "is_uniform_alternating requires n >= 2");
    const auto s = t.symbols();
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != negate_symbol(s[i - 1], t.k())) return false;
    }
    return true;
}

/// Prefix of length n-1 is negasymmetric.
[[nodiscard]] inline bool is_left_sns(const Tuple& t) {
    detail::require(t.size() >= 1, "is_left_sns requires n >= 1");
    return detail::negasymmetric_range(t.symbols().first(t.size() - 1), t.k());
}

/// Suffix of length n-1 is negasymmetric.
[[nodiscard]] inline bool is_right_sns(const Tuple& t) {
    detail::require(t.size() >= 1, "is_right_sns requires n >= 1");
    return detail::negasymmetric_range(t.symbols().last(t.size() - 1), t.k());
}

// ---------------------------------------------------------------------------
// Base-k integer codes, leftmost symbol most significant.

/// k^n if it fits in 64 bits.
[[nodiscard]] constexpr std::optional<Code> checked_pow(Code k, unsigned n) noexcept {
    Code r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (r > std::numeric_limits<Code>::max() / k) return std::nullopt;
        r *= k;
    }
    return r;
}

[[nodiscard]] inline Code encode(const Tuple& t) {
    detail::require(checked_pow(t.k(), static_cast<unsigned>(t.size())).has_value(),
                    "tuple too long for a 64-bit code");
    Code c = 0;
    for (Symbol s : t.symbols()) c = c * t.k() + s;
    return c;
}

[[nodiscard]] inline Tuple decode(Code code, unsigned n, unsigned k) {
    std::vector<Symbol> out(n);
    for (unsigned i = n; i-- > 0;) {
        out[i] = static_cast<Symbol>(code % k);
        code /= k;
    }
    detail::require(code == 0, "code out of range for the given length");
    return Tuple(std::move(out), k);
}

}  // namespace negaseq
