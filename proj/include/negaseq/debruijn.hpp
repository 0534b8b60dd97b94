#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negaseq/bigint.hpp"
#include "negaseq/error.hpp"
#include "negaseq/sequence.hpp"
#include "negaseq/tuple.hpp"

namespace negaseq {

/// N_k(n): number of non-negasymmetric k-ary n-tuples, i.e. edges of B-_k(n-1).
[[nodiscard]] inline BigInt edge_count_formula(unsigned n, unsigned k) {
    detail::require(n >= 2 && k >= 3, "edge_count_formula requires n >= 2 and k >= 3");
    const BigInt all = ipow(k, n);
    const bool n_odd = n % 2 == 1, k_odd = k % 2 == 1;
    if (n_odd && k_odd) return all - ipow(k, (n - 1) / 2);
    if (n_odd) return all - 2 * ipow(k, (n - 1) / 2);
    return all - ipow(k, n / 2);
}

enum class GraphMode { Implicit, Explicit };

/// Edges above this count are refused in explicit mode.
inline constexpr std::uint64_t default_explicit_edge_budget = std::uint64_t{1} << 28;

/// B-_k(n-1): the order-(n-1) de Bruijn digraph over Z_k with negasymmetric
/// edges removed. Vertices and edges are addressed by base-k codes; edge e runs
/// from vertex e / k to vertex e mod k^(n-1).
///
/// Implicit mode answers edge queries arithmetically. Explicit mode keeps an
/// edge bitmap and the nega-reverse partner of every edge. Both modes must
/// agree edge for edge.
class ReducedGraph {
public:
    ReducedGraph(unsigned n, unsigned k, GraphMode mode = GraphMode::Implicit,
                 std::uint64_t explicit_budget = default_explicit_edge_budget)
        : n_(n), k_(k), mode_(mode) {
        detail::require(n >= 2, "the reduced graph needs n >= 2");
        detail::require(k >= 3, "alphabet size k must be at least 3 (negation is the identity on Z_2)");
        const auto edges = checked_pow(k, n);
        detail::require(edges.has_value(), "k^n does not fit the 64-bit tuple encoding");
        edge_space_ = *edges;
        vertex_count_ = edge_space_ / k;
        if (mode_ == GraphMode::Explicit) {
            if (edge_space_ > explicit_budget) {
                throw budget_error("explicit graph with " + std::to_string(edge_space_) +
                                   " edge slots exceeds the budget of " + std::to_string(explicit_budget));
            }
            partner_.resize(edge_space_);
            present_.resize(edge_space_);
            for (Code e = 0; e < edge_space_; ++e) {
                partner_[e] = compute_nega_reverse(e);
                present_[e] = partner_[e] != e;
            }
        }
    }

    [[nodiscard]] unsigned n() const noexcept { return n_; }
    [[nodiscard]] unsigned k() const noexcept { return k_; }
    [[nodiscard]] GraphMode mode() const noexcept { return mode_; }
    [[nodiscard]] Code vertex_count() const noexcept { return vertex_count_; }
    /// k^n: the number of edge codes, present or not.
    [[nodiscard]] Code edge_space() const noexcept { return edge_space_; }

    [[nodiscard]] Code tail(Code e) const noexcept { return e / k_; }
    [[nodiscard]] Code head(Code e) const noexcept { return e % vertex_count_; }
    [[nodiscard]] Code out_edge(Code v, Symbol x) const noexcept { return v * k_ + x; }
    [[nodiscard]] Code in_edge(Symbol y, Code v) const noexcept { return y * vertex_count_ + v; }

    [[nodiscard]] Code nega_reverse_code(Code e) const {
        return mode_ == GraphMode::Explicit ? partner_[e] : compute_nega_reverse(e);
    }

    [[nodiscard]] bool has_edge(Code e) const {
        if (e >= edge_space_) return false;
        return mode_ == GraphMode::Explicit ? static_cast<bool>(present_[e]) : compute_nega_reverse(e) != e;
    }

    [[nodiscard]] unsigned out_degree(Code v) const {
        unsigned d = 0;
        for (Symbol x = 0; x < k_; ++x) d += has_edge(out_edge(v, x));
        return d;
    }
    [[nodiscard]] unsigned in_degree(Code v) const {
        unsigned d = 0;
        for (Symbol y = 0; y < k_; ++y) d += has_edge(in_edge(y, v));
        return d;
    }

    /// Calls fn(code) for every present edge in increasing code order.
    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (Code e = 0; e < edge_space_; ++e) {
            if (has_edge(e)) fn(e);
        }
    }

    /// Counts edges by iteration (O(k^n)).
    [[nodiscard]] std::uint64_t count_edges() const {
        std::uint64_t c = 0;
        for_each_edge([&](Code) { ++c; });
        return c;
    }

    /// FNV-1a over the sorted list of present edge codes, plus n and k.
    [[nodiscard]] std::uint64_t content_hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&](std::uint64_t v) {
            for (int i = 0; i < 8; ++i) {
                h ^= (v >> (8 * i)) & 0xff;
                h *= 0x100000001b3ULL;
            }
        };
        mix(n_);
        mix(k_);
        for_each_edge(mix);
        return h;
    }

    [[nodiscard]] Tuple vertex_label(Code v) const { return decode(v, n_ - 1, k_); }
    [[nodiscard]] Tuple edge_label(Code e) const { return decode(e, n_, k_); }

private:
    Code compute_nega_reverse(Code e) const {
        Code out = 0;
        for (unsigned i = 0; i < n_; ++i) {
            out = out * k_ + negate_symbol(static_cast<Symbol>(e % k_), k_);
            e /= k_;
        }
        return out;
    }

    unsigned n_;
    unsigned k_;
    GraphMode mode_;
    Code edge_space_ = 0;
    Code vertex_count_ = 0;
    std::vector<Code> partner_;
    std::vector<std::uint8_t> present_;
};

// ---------------------------------------------------------------------------

struct VertexFlags {
    bool left_sns = false;
    bool right_sns = false;
    bool negasymmetric = false;
    bool uniform = false;
    bool alternating = false;
    bool uniform_alternating = false;
};

struct VertexProfile {
    Tuple label;
    unsigned in_degree = 0;
    unsigned out_degree = 0;
    VertexFlags flags;

    [[nodiscard]] bool in_odd() const noexcept { return in_degree % 2 == 1; }
    [[nodiscard]] bool out_odd() const noexcept { return out_degree % 2 == 1; }
};

/// Flags of an (n-1)-tuple vertex label; alternation flags are false for 1-tuples.
[[nodiscard]] inline VertexFlags classify_vertex(const Tuple& v) {
    VertexFlags f;
    f.left_sns = is_left_sns(v);
    f.right_sns = is_right_sns(v);
    f.negasymmetric = is_negasymmetric(v);
    f.uniform = is_uniform(v);
    if (v.size() >= 2) {
        f.alternating = is_alternating(v);
        f.uniform_alternating = is_uniform_alternating(v);
    }
    return f;
}

/// Degrees by probing the k candidate edges in each direction.
[[nodiscard]] inline VertexProfile vertex_profile(const ReducedGraph& g, const Tuple& v) {
    detail::require(v.size() + 1 == g.n(), "vertex label must have length n-1 = " + std::to_string(g.n() - 1));
    detail::require(v.k() == g.k(), "vertex label alphabet differs from the graph's");
    const Code code = encode(v);
    VertexProfile p{v, g.in_degree(code), g.out_degree(code), classify_vertex(v)};
    const unsigned expect_in = g.k() - (p.flags.left_sns ? 1 : 0);
    const unsigned expect_out = g.k() - (p.flags.right_sns ? 1 : 0);
    if (p.in_degree != expect_in || p.out_degree != expect_out) {
        throw consistency_error("vertex " + v.str() + " violates the sns degree rule");
    }
    return p;
}

// ---------------------------------------------------------------------------
// Nega-sequence-subgraph B-(S, n)

enum class EdgeSource { Sequence, NegaReverse };

struct SubgraphEdge {
    Code code;
    EdgeSource source;
    std::size_t index;  // window index within S or within -S^R
};

struct WindowCollision {
    Code edge;
    SubgraphEdge first;
    SubgraphEdge second;
};

/// Thrown when S and -S^R do not contribute 2m distinct edges, so S is not a NOS.
class subgraph_collision_error : public precondition_error {
public:
    subgraph_collision_error(std::string what, std::vector<WindowCollision> collisions)
        : precondition_error(std::move(what)), collisions_(std::move(collisions)) {}
    [[nodiscard]] const std::vector<WindowCollision>& collisions() const noexcept { return collisions_; }

private:
    std::vector<WindowCollision> collisions_;
};

struct VertexBalance {
    Code vertex;
    unsigned in_degree;
    unsigned out_degree;
};

class SequenceSubgraph {
public:
    SequenceSubgraph(unsigned n, unsigned k, std::vector<SubgraphEdge> edges) : n_(n), k_(k), edges_(std::move(edges)) {
        std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
        const Code vcount = *checked_pow(k, n - 1);
        for (const auto& e : edges_) {
            ++degrees_[e.code / k].second;
            ++degrees_[e.code % vcount].first;
        }
    }

    [[nodiscard]] unsigned n() const noexcept { return n_; }
    [[nodiscard]] unsigned k() const noexcept { return k_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Edges sorted by code.
    [[nodiscard]] const std::vector<SubgraphEdge>& edges() const noexcept { return edges_; }

    [[nodiscard]] bool contains(Code e) const {
        return std::binary_search(edges_.begin(), edges_.end(), SubgraphEdge{e, EdgeSource::Sequence, 0},
                                  [](const auto& a, const auto& b) { return a.code < b.code; });
    }

    [[nodiscard]] unsigned in_degree(Code v) const {
        auto it = degrees_.find(v);
        return it == degrees_.end() ? 0 : it->second.first;
    }
    [[nodiscard]] unsigned out_degree(Code v) const {
        auto it = degrees_.find(v);
        return it == degrees_.end() ? 0 : it->second.second;
    }

    /// Vertices with at least one incident edge, in code order.
    [[nodiscard]] std::vector<VertexBalance> balance() const {
        std::vector<VertexBalance> out;
        out.reserve(degrees_.size());
        for (const auto& [v, d] : degrees_) out.push_back({v, d.first, d.second});
        return out;
    }

    [[nodiscard]] bool is_balanced() const {
        return std::all_of(degrees_.begin(), degrees_.end(), [](const auto& kv) { return kv.second.first == kv.second.second; });
    }

    [[nodiscard]] bool has_negasymmetric_edge() const {
        return std::any_of(edges_.begin(), edges_.end(),
                           [&](const auto& e) { return is_negasymmetric(decode(e.code, n_, k_)); });
    }

    [[nodiscard]] bool closed_under_nega_reverse() const {
        return std::all_of(edges_.begin(), edges_.end(),
                           [&](const auto& e) { return contains(encode(nega_reverse(decode(e.code, n_, k_)))); });
    }

private:
    unsigned n_;
    unsigned k_;
    std::vector<SubgraphEdge> edges_;
    std::map<Code, std::pair<unsigned, unsigned>> degrees_;  // vertex -> (in, out)
};

/// Builds B-(S, n) from the windows of S and of -S^R. Any repeated edge means S
/// is not a NOS of order n; every collision is reported.
[[nodiscard]] inline SequenceSubgraph sequence_subgraph(const PeriodicSequence& s, unsigned n) {
    detail::require(n >= 2, "sequence_subgraph requires n >= 2");
    const std::vector<Code> fwd = s.window_codes(n);
    const std::vector<Code> rev = nega_reverse(s).window_codes(n);
    std::vector<SubgraphEdge> edges;
    edges.reserve(fwd.size() + rev.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) edges.push_back({fwd[i], EdgeSource::Sequence, i});
    for (std::size_t i = 0; i < rev.size(); ++i) edges.push_back({rev[i], EdgeSource::NegaReverse, i});

    std::map<Code, SubgraphEdge> seen;
    std::vector<WindowCollision> collisions;
    for (const auto& e : edges) {
        auto [it, inserted] = seen.emplace(e.code, e);
        if (!inserted) collisions.push_back({e.code, it->second, e});
    }
    if (!collisions.empty()) {
        const auto& c = collisions.front();
        throw subgraph_collision_error("not a NOS of order " + std::to_string(n) + ": edge " +
                                           decode(c.edge, n, s.k()).str() + " occurs more than once (" +
                                           std::to_string(collisions.size()) + " collisions)",
                                       std::move(collisions));
    }
    return SequenceSubgraph(n, s.k(), std::move(edges));
}

}  // namespace negaseq
