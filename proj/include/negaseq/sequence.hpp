#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "negaseq/tuple.hpp"

namespace negaseq {

/// One period of a k-ary sequence, read cyclically.
class PeriodicSequence {
public:
    PeriodicSequence(std::vector<Symbol> symbols, unsigned k) : word_(std::move(symbols), k) {
        detail::require(!word_.empty(), "a periodic sequence needs at least one symbol");
    }
    explicit PeriodicSequence(Tuple word) : word_(std::move(word)) {
        detail::require(!word_.empty(), "a periodic sequence needs at least one symbol");
    }

    static PeriodicSequence parse(std::string_view line, unsigned k) { return PeriodicSequence(Tuple::parse(line, k)); }

    [[nodiscard]] unsigned k() const noexcept { return word_.k(); }
    [[nodiscard]] std::size_t length() const noexcept { return word_.size(); }
    [[nodiscard]] Symbol at(std::size_t i) const noexcept { return word_[i % word_.size()]; }
    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return word_.symbols(); }
    [[nodiscard]] const Tuple& word() const noexcept { return word_; }

    /// s_n(i) = (s_i, ..., s_{i+n-1}), indices mod length.
    [[nodiscard]] Tuple window(std::size_t i, unsigned n) const {
        std::vector<Symbol> out(n);
        for (unsigned j = 0; j < n; ++j) out[j] = at(i + j);
        return Tuple(std::move(out), k());
    }

    /// Base-k codes of all `length()` windows of order n; requires k^n < 2^64.
    [[nodiscard]] std::vector<Code> window_codes(unsigned n) const {
        const auto span = checked_pow(k(), n);
        detail::require(span.has_value(), "window order too large for 64-bit codes");
        const std::size_t m = length();
        std::vector<Code> out(m);
        Code c = 0;
        for (unsigned j = 0; j < n; ++j) c = c * k() + at(j);
        const Code high = *span / k();
        for (std::size_t i = 0; i < m; ++i) {
            out[i] = c;
            c = (c - at(i) * high) * k() + at(i + n);
        }
        return out;
    }

    [[nodiscard]] std::string str() const { return word_.str(","); }

    friend bool operator==(const PeriodicSequence& a, const PeriodicSequence& b) { return a.word_ == b.word_; }
    friend auto operator<=>(const PeriodicSequence& a, const PeriodicSequence& b) { return a.word_ <=> b.word_; }

private:
    Tuple word_;
};

/// -S^R as a periodic sequence.
[[nodiscard]] inline PeriodicSequence nega_reverse(const PeriodicSequence& s) {
    return PeriodicSequence(nega_reverse(s.word()));
}

/// Smallest p dividing the stored length with s[i] == s[i mod p].
[[nodiscard]] inline std::size_t minimal_period(const PeriodicSequence& s) {
    const std::size_t m = s.length();
    for (std::size_t p = 1; p < m; ++p) {
        if (m % p) continue;
        bool ok = true;
        for (std::size_t i = p; i < m && ok; ++i) ok = s.at(i) == s.at(i - p);
        if (ok) return p;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Text format: one sequence per line, decimal symbols separated by commas.
// Blank lines and anything after '#' are ignored.

struct SequenceLine {
    std::size_t line_number;
    PeriodicSequence sequence;
};

[[nodiscard]] inline std::vector<SequenceLine> read_sequences(std::istream& in, unsigned k) {
    std::vector<SequenceLine> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back({lineno, PeriodicSequence::parse(line, k)});
        } catch (const precondition_error& e) {
            throw precondition_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline void write_sequence(std::ostream& out, const PeriodicSequence& s) { out << s.str() << '\n'; }

}  // namespace negaseq
