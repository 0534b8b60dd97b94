#pragma once

// Graphviz export.
//
// Output is deterministic: a header line, one node statement per vertex in
// increasing code order (= lexicographic label order), then one edge statement
// per edge in increasing code order. LF line endings, no trailing whitespace.
//
//   digraph "reduced_n2_k3" {
//     node [shape=circle, style=filled];
//     "0" [label="0", shape=doublecircle, fillcolor="plum"];
//     "0" -> "1" [label="01"];
//   }
//
// Node names are the concatenated symbols of the label ('.'-separated when
// k > 10), so they only contain digits and dots and need no escaping.
// Node styling:
//   fillcolor  "plum" left-sns and right-sns, "lightblue" left-sns only,
//              "lightpink" right-sns only, "white" neither
//   shape      doublecircle for a negasymmetric label, circle otherwise
// Sequence-subgraph edges carry style=solid when they are windows of S and
// style=dashed when they are windows of -S^R.

#include <cstdint>
#include <sstream>
#include <string>

#include "negaseq/debruijn.hpp"

namespace negaseq {

struct DotOptions {
    std::uint64_t max_edges = 100'000;
    bool edge_labels = true;
};

namespace detail {

inline void dot_node(std::ostream& out, const Tuple& label) {
    const VertexFlags f = classify_vertex(label);
    const char* fill = f.left_sns && f.right_sns ? "plum" : f.left_sns ? "lightblue" : f.right_sns ? "lightpink" : "white";
    const std::string name = label.str("");
    out << "  \"" << name << "\" [label=\"" << name << "\", shape=" << (f.negasymmetric ? "doublecircle" : "circle")
        << ", fillcolor=\"" << fill << "\"];\n";
}

inline void dot_edge(std::ostream& out, unsigned n, unsigned k, Code e, bool labels, const char* style) {
    const Tuple t = decode(e, n, k);
    out << "  \"" << t.slice(0, n - 1).str("") << "\" -> \"" << t.slice(1, n - 1).str("") << "\"";
    if (labels || style) {
        out << " [";
        if (labels) out << "label=\"" << t.str("") << "\"";
        if (labels && style) out << ", ";
        if (style) out << "style=" << style;
        out << "]";
    }
    out << ";\n";
}

inline void dot_budget(std::uint64_t vertices, std::uint64_t edges, const DotOptions& opt) {
    if (edges > opt.max_edges || vertices > opt.max_edges) {
        throw budget_error("DOT export of " + std::to_string(edges) + " edges on " + std::to_string(vertices) +
                           " vertices exceeds the budget of " + std::to_string(opt.max_edges));
    }
}

}  // namespace detail

[[nodiscard]] inline std::string export_dot(const ReducedGraph& g, const DotOptions& opt = {}) {
    const BigInt edges = edge_count_formula(g.n(), g.k());
    detail::dot_budget(g.vertex_count(), fits_u64(edges) ? static_cast<std::uint64_t>(edges) : UINT64_MAX, opt);
    std::ostringstream out;
    out << "digraph \"reduced_n" << g.n() << "_k" << g.k() << "\" {\n";
    out << "  node [shape=circle, style=filled];\n";
    for (Code v = 0; v < g.vertex_count(); ++v) detail::dot_node(out, g.vertex_label(v));
    g.for_each_edge([&](Code e) { detail::dot_edge(out, g.n(), g.k(), e, opt.edge_labels, nullptr); });
    out << "}\n";
    return out.str();
}

[[nodiscard]] inline std::string export_dot(const SequenceSubgraph& sg, const DotOptions& opt = {}) {
    const Code vertices = *checked_pow(sg.k(), sg.n() - 1);
    detail::dot_budget(vertices, sg.edge_count(), opt);
    std::ostringstream out;
    out << "digraph \"subgraph_n" << sg.n() << "_k" << sg.k() << "\" {\n";
    out << "  node [shape=circle, style=filled];\n";
    for (Code v = 0; v < vertices; ++v) detail::dot_node(out, decode(v, sg.n() - 1, sg.k()));
    for (const auto& e : sg.edges()) {
        detail::dot_edge(out, sg.n(), sg.k(), e.code, opt.edge_labels,
                         e.source == EdgeSource::Sequence ? "solid" : "dashed");
    }
    out << "}\n";
    return out.str();
}

}  // namespace negaseq
