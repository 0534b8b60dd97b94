#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "negaseq/sequence.hpp"
#include "negaseq/tuple.hpp"

namespace negaseq {

enum class Property { Window, Nos, Os };
enum class CollisionKind { DuplicateWindow, NegaReverseCollision, ReverseCollision, NegasymmetricWindow, PalindromeWindow };

[[nodiscard]] constexpr std::string_view name(Property p) noexcept {
    switch (p) {
        case Property::Window: return "window";
        case Property::Nos: return "nos";
        case Property::Os: return "os";
    }
    return "?";
}

[[nodiscard]] constexpr std::string_view name(CollisionKind c) noexcept {
    switch (c) {
        case CollisionKind::DuplicateWindow: return "duplicate-window";
        case CollisionKind::NegaReverseCollision: return "nega-reverse-collision";
        case CollisionKind::ReverseCollision: return "reverse-collision";
        case CollisionKind::NegasymmetricWindow: return "negasymmetric-window";
        case CollisionKind::PalindromeWindow: return "palindrome-window";
    }
    return "?";
}

/// Violating pair of window indices. For repeated and colliding windows i < j;
/// for a window that is its own image i == j.
struct Witness {
    std::size_t i;
    std::size_t j;
    CollisionKind kind;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool valid = false;
    Property property = Property::Nos;
    unsigned order = 0;
    std::size_t period = 0;  // minimal period of the stored word
    std::optional<Witness> witness;
    /// Order larger than the stored length: windows wrap around more than once.
    bool order_exceeds_period = false;
};

/// Human-readable one-line summary, e.g. "valid NOS, period 3".
[[nodiscard]] inline std::string describe(const Verdict& v) {
    std::string label = v.property == Property::Window ? "window sequence"
                        : v.property == Property::Nos ? "NOS"
                                                      : "OS";
    std::string out = (v.valid ? "valid " : "invalid ") + label + ", period " + std::to_string(v.period);
    if (v.witness) {
        out += ", witness (" + std::to_string(v.witness->i) + "," + std::to_string(v.witness->j) + ") " +
               std::string(name(v.witness->kind));
    }
    return out;
}

namespace detail {

enum class Partner { None, NegaReverse, Reverse };

template <typename Key>
std::optional<Witness> smallest_violation(const std::vector<Key>& keys, const std::vector<Key>& partners,
                                          Partner mode) {
    const std::size_t m = keys.size();
    std::unordered_map<Key, std::vector<std::size_t>> occ;
    for (std::size_t i = 0; i < m; ++i) occ[keys[i]].push_back(i);
    auto next_after = [&](const Key& key, std::size_t i) -> std::optional<std::size_t> {
        auto it = occ.find(key);
        if (it == occ.end()) return std::nullopt;
        auto pos = std::upper_bound(it->second.begin(), it->second.end(), i);
        if (pos == it->second.end()) return std::nullopt;
        return *pos;
    };
    // Both relations are symmetric, so the first row with a violation holds the
    // smallest pair and its partner index is >= the row index.
    for (std::size_t i = 0; i < m; ++i) {
        if (mode != Partner::None && partners[i] == keys[i]) {
            return Witness{i, i,
                           mode == Partner::NegaReverse ? CollisionKind::NegasymmetricWindow
                                                        : CollisionKind::PalindromeWindow};
        }
        std::optional<Witness> best;
        if (auto j = next_after(keys[i], i)) best = Witness{i, *j, CollisionKind::DuplicateWindow};
        if (mode != Partner::None) {
            if (auto j = next_after(partners[i], i); j && (!best || *j < best->j)) {
                best = Witness{i, *j,
                               mode == Partner::NegaReverse ? CollisionKind::NegaReverseCollision
                                                            : CollisionKind::ReverseCollision};
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

inline Verdict verify(const PeriodicSequence& s, unsigned n, Property property) {
    require(n >= 2, "verification requires order n >= 2");
    Verdict v;
    v.property = property;
    v.order = n;
    v.period = minimal_period(s);
    v.order_exceeds_period = n > s.length();
    const Partner mode = property == Property::Window ? Partner::None
                         : property == Property::Nos  ? Partner::NegaReverse
                                                      : Partner::Reverse;
    if (checked_pow(s.k(), n)) {
        std::vector<Code> keys = s.window_codes(n), partners;
        if (mode == Partner::NegaReverse) partners = nega_reverse(s).window_codes(n);
        if (mode == Partner::Reverse) partners = PeriodicSequence(reverse(s.word())).window_codes(n);
        if (mode != Partner::None) {
            // window j of the reversed word is the image of window m - n - j (mod m) of s
            const std::size_t m = s.length();
            std::vector<Code> aligned(m);
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t j = (2 * m - n % m - i) % m;
                aligned[i] = partners[j];
            }
            partners = std::move(aligned);
        }
        v.witness = smallest_violation(keys, partners, mode);
    } else {
        // Symbols packed into strings when codes would overflow.
        std::vector<std::string> keys, partners;
        for (std::size_t i = 0; i < s.length(); ++i) {
            Tuple w = s.window(i, n);
            auto pack = [](const Tuple& t) {
                std::string out;
                for (Symbol x : t.symbols()) out.append(reinterpret_cast<const char*>(&x), sizeof x);
                return out;
            };
            keys.push_back(pack(w));
            if (mode == Partner::NegaReverse) partners.push_back(pack(nega_reverse(w)));
            if (mode == Partner::Reverse) partners.push_back(pack(reverse(w)));
        }
        v.witness = smallest_violation(keys, partners, mode);
    }
    v.valid = !v.witness.has_value();
    return v;
}

}  // namespace detail

/// All stored-length windows pairwise distinct. A stored word longer than its
/// minimal period p repeats window 0 at index p and is rejected.
[[nodiscard]] inline Verdict is_window_sequence(const PeriodicSequence& s, unsigned n) {
    return detail::verify(s, n, Property::Window);
}

/// Window sequence in which no window equals the negated reverse of any window,
/// itself included.
[[nodiscard]] inline Verdict is_nos(const PeriodicSequence& s, unsigned n) {
    detail::require(s.k() >= 3, "NOS verification requires k >= 3");
    return detail::verify(s, n, Property::Nos);
}

/// Window sequence with no window equal to the reverse of another and no
/// palindromic window.
[[nodiscard]] inline Verdict is_os(const PeriodicSequence& s, unsigned n) { return detail::verify(s, n, Property::Os); }

}  // namespace negaseq
