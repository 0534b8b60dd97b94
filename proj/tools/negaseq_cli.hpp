#pragma once

// negaseq-cli: command-line front end.
//
// Results go to the output stream (or --output FILE), diagnostics to the error
// stream. Exit codes:
//   0  success / verified
//   1  verification failed, reference mismatch, or search found nothing
//   2  usage or input error
//   3  budget exceeded
//   4  internal consistency failure

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "negaseq/negaseq.hpp"

namespace negaseq::cli {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_budget = 3, exit_internal = 4 };

using Json = nlohmann::ordered_json;

/// `a..b` (inclusive) or a single value `a`.
inline InclusiveRange parse_range(const std::string& text) {
    auto number = [&](const std::string& s) -> unsigned {
        detail::require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
                        "bad range '" + text + "': expected a or a..b");
        return static_cast<unsigned>(std::stoul(s));
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned v = number(text);
        return {v, v};
    }
    const InclusiveRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
    detail::require(r.lo <= r.hi, "bad range '" + text + "': lower end exceeds upper end");
    return r;
}

namespace detail_cli {

inline Json big(const BigInt& v) {
    if (fits_u64(v)) return static_cast<std::uint64_t>(v);
    return v.str();
}

inline const char* yes(bool b) { return b ? "true" : "false"; }

/// Validator wording reused for every --k flag.
inline std::string validate_k(std::string& text) {
    InclusiveRange r;
    try {
        r = parse_range(text);
    } catch (const std::exception& e) {
        return e.what();
    }
    if (r.lo < 3) return "k must be at least 3: negation mod 2 is the identity, so NOS need an alphabet with k > 2";
    return {};
}

inline std::string validate_n(std::string& text) {
    try {
        if (parse_range(text).lo < 1) return "n must be positive";
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

struct Common {
    std::string n = "";
    std::string k = "";
    std::string format = "text";
    std::string output;
    std::uint64_t budget = 0;  // 0 = command default
    bool json() const { return format == "json"; }
};

inline unsigned single(const std::string& text, const char* flag) {
    const InclusiveRange r = parse_range(text);
    detail::require(r.lo == r.hi, std::string(flag) + " takes a single value here, not a range");
    return r.lo;
}

inline void add_common(CLI::App* sub, Common& c, bool need_n, bool ranges) {
    const char* what = ranges ? "value or inclusive range a..b" : "value";
    auto* n = sub->add_option("--n", c.n, std::string("window length n (") + what + ")");
    n->check(CLI::Validator(validate_n, "N"));
    if (need_n) n->required();
    sub->add_option("--k", c.k, std::string("alphabet size k >= 3 (") + what + ")")
        ->required()
        ->check(CLI::Validator(validate_k, "K"));
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", c.output, "write results to this file instead of standard output");
}

struct Emitter {
    std::ostream& out;
    const Common& c;
    void json(const Json& j) const { out << j.dump(2) << '\n'; }
};

// ---------------------------------------------------------------------------

inline int cmd_classify(const Common& c, const std::vector<std::string>& tuples, std::ostream& out) {
    const unsigned k = single(c.k, "--k");
    const std::optional<unsigned> n = c.n.empty() ? std::nullopt : std::optional<unsigned>(single(c.n, "--n"));
    Json rows = Json::array();
    for (const auto& text : tuples) {
        const Tuple t = Tuple::parse(text, k);
        detail::require(!n || t.size() == *n, "tuple " + text + " does not have length " + std::to_string(n.value_or(0)));
        const VertexFlags f = classify_vertex(t);
        std::vector<std::string> flags;
        if (f.negasymmetric) flags.emplace_back("negasymmetric");
        if (f.uniform) flags.emplace_back("uniform");
        if (f.alternating) flags.emplace_back("alternating");
        if (f.uniform_alternating) flags.emplace_back("uniform-alternating");
        if (f.left_sns) flags.emplace_back("left-sns");
        if (f.right_sns) flags.emplace_back("right-sns");
        std::vector<std::string> classes;
        for (TupleClass cls : all_tuple_classes) {
            if (t.size() >= min_length(cls) && matches(cls, t)) classes.emplace_back(name(cls));
        }
        if (c.json()) {
            rows.push_back({{"tuple", t.str()}, {"flags", flags}, {"classes", classes}});
        } else {
            auto join = [](const std::vector<std::string>& v) {
                std::string s;
                for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
                return s.empty() ? std::string("-") : s;
            };
            out << t.str() << "  flags=" << join(flags) << "  classes=" << join(classes) << '\n';
        }
    }
    if (c.json()) Emitter{out, c}.json({{"command", "classify"}, {"k", k}, {"tuples", rows}});
    return exit_ok;
}

inline int cmd_count(const Common& c, const std::vector<std::string>& class_names, bool enumerate, std::ostream& out,
                     std::ostream& err) {
    const InclusiveRange nr = parse_range(c.n), kr = parse_range(c.k);
    std::vector<TupleClass> classes;
    for (const auto& s : class_names) {
        auto cls = parse_tuple_class(s);
        detail::require(cls.has_value(), "unknown class '" + s + "'");
        classes.push_back(*cls);
    }
    if (classes.empty()) classes.assign(all_tuple_classes.begin(), all_tuple_classes.end());
    const std::uint64_t budget = c.budget ? c.budget : default_enumeration_budget;

    bool mismatch = false;
    Json rows = Json::array();
    std::ostringstream text;
    text << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(40) << "class" << std::right
         << std::setw(14) << "count" << (enumerate ? "  enumerated" : "") << '\n';
    for (unsigned n = nr.lo; n <= nr.hi; ++n) {
        for (unsigned k = kr.lo; k <= kr.hi; ++k) {
            for (TupleClass cls : classes) {
                if (n < min_length(cls)) continue;
                const BigInt count = count_class(cls, n, k);
                Json row = {{"n", n}, {"k", k}, {"class", std::string(name(cls))}, {"count", big(count)}};
                text << std::left << std::setw(4) << n << std::setw(4) << k << std::setw(40) << name(cls) << std::right
                     << std::setw(14) << count.str();
                if (enumerate) {
                    std::uint64_t found = 0;
                    for_each_tuple(
                        n, k,
                        [&](const Tuple& t) {
                            if (matches(cls, t)) ++found;
                        },
                        budget);
                    row["enumerated"] = found;
                    const bool ok = BigInt(found) == count;
                    mismatch |= !ok;
                    text << "  " << found << (ok ? "" : "  MISMATCH");
                }
                text << '\n';
                rows.push_back(std::move(row));
            }
        }
    }
    if (c.json()) Emitter{out, c}.json({{"command", "count"}, {"rows", rows}});
    else out << text.str();
    if (mismatch) err << "closed form and enumeration disagree\n";
    return mismatch ? exit_failed : exit_ok;
}

inline int cmd_edges(const Common& c, bool build, std::ostream& out, std::ostream& err) {
    const InclusiveRange nr = parse_range(c.n), kr = parse_range(c.k);
    detail::require(nr.lo >= 2, "edges requires n >= 2");
    const std::uint64_t budget = c.budget ? c.budget : default_explicit_edge_budget;
    bool mismatch = false;
    Json rows = Json::array();
    std::ostringstream text;
    text << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::right << std::setw(20) << "edges"
         << (build ? "  built" : "") << '\n';
    for (unsigned n = nr.lo; n <= nr.hi; ++n) {
        for (unsigned k = kr.lo; k <= kr.hi; ++k) {
            const BigInt formula = edge_count_formula(n, k);
            Json row = {{"n", n}, {"k", k}, {"edges", big(formula)}};
            text << std::left << std::setw(4) << n << std::setw(4) << k << std::right << std::setw(20) << formula.str();
            if (build) {
                const auto space = checked_pow(k, n);
                if (!space || *space > budget) {
                    throw budget_error("building B-_" + std::to_string(k) + "(" + std::to_string(n - 1) +
                                       ") exceeds the edge-slot budget of " + std::to_string(budget));
                }
                const std::uint64_t counted = ReducedGraph(n, k, GraphMode::Implicit).count_edges();
                row["built"] = counted;
                const bool ok = BigInt(counted) == formula;
                mismatch |= !ok;
                text << "  " << counted << (ok ? "" : "  MISMATCH");
            }
            text << '\n';
            rows.push_back(std::move(row));
        }
    }
    if (c.json()) Emitter{out, c}.json({{"command", "edges"}, {"rows", rows}});
    else out << text.str();
    if (mismatch) err << "edge-count formula and built graph disagree\n";
    return mismatch ? exit_failed : exit_ok;
}

inline int cmd_profile(const Common& c, const std::vector<std::string>& vertices, std::ostream& out) {
    const unsigned n = single(c.n, "--n"), k = single(c.k, "--k");
    const ReducedGraph g(n, k, GraphMode::Implicit);
    std::vector<Tuple> labels;
    if (vertices.empty()) {
        const std::uint64_t budget = c.budget ? c.budget : 1'000'000;
        if (g.vertex_count() > budget) {
            throw budget_error("profiling all " + std::to_string(g.vertex_count()) + " vertices exceeds the budget of " +
                               std::to_string(budget) + "; name vertices explicitly");
        }
        for (Code v = 0; v < g.vertex_count(); ++v) labels.push_back(g.vertex_label(v));
    } else {
        for (const auto& s : vertices) labels.push_back(Tuple::parse(s, k));
    }
    Json rows = Json::array();
    std::ostringstream text;
    const std::size_t width = std::max<std::size_t>(6, labels.empty() ? 0 : labels.front().str().size() + 2);
    text << std::left << std::setw(static_cast<int>(width)) << "vertex" << std::right << std::setw(4) << "in" << std::setw(5)
         << "out" << "  flags\n";
    for (const auto& label : labels) {
        const VertexProfile p = vertex_profile(g, label);
        std::string flags;
        auto add = [&](bool on, const char* f) {
            if (on) flags += (flags.empty() ? "" : ",") + std::string(f);
        };
        add(p.flags.negasymmetric, "negasymmetric");
        add(p.flags.uniform, "uniform");
        add(p.flags.alternating, "alternating");
        add(p.flags.uniform_alternating, "uniform-alternating");
        add(p.flags.left_sns, "left-sns");
        add(p.flags.right_sns, "right-sns");
        rows.push_back({{"vertex", label.str()},
                        {"in_degree", p.in_degree},
                        {"out_degree", p.out_degree},
                        {"negasymmetric", p.flags.negasymmetric},
                        {"uniform", p.flags.uniform},
                        {"alternating", p.flags.alternating},
                        {"uniform_alternating", p.flags.uniform_alternating},
                        {"left_sns", p.flags.left_sns},
                        {"right_sns", p.flags.right_sns}});
        text << std::left << std::setw(static_cast<int>(width)) << label.str() << std::right << std::setw(4) << p.in_degree
             << std::setw(5) << p.out_degree << "  " << (flags.empty() ? "-" : flags) << '\n';
    }
    if (c.json()) Emitter{out, c}.json({{"command", "profile"}, {"n", n}, {"k", k}, {"vertices", rows}});
    else out << text.str();
    return exit_ok;
}

inline Json breakdown_json(const BoundBreakdown& b) {
    return {{"edges", big(b.edges)},
            {"u_out", big(b.u_out)},
            {"u_in", big(b.u_in)},
            {"p_out", big(b.p_out)},
            {"p_in", big(b.p_in)},
            {"ix_up", big(b.ix_up)},
            {"ix_pu", big(b.ix_pu)},
            {"ix_uu", big(b.ix_uu)},
            {"ix_pp", big(b.ix_pp)},
            {"edge_cap", big(b.resulting_edge_cap)},
            {"period_bound", big(b.resulting_period_bound)}};
}

inline int cmd_bound(const Common& c, bool breakdown, std::ostream& out) {
    const unsigned n = single(c.n, "--n"), k = single(c.k, "--k");
    const BoundValue b = nos_bound(n, k);
    if (c.json()) {
        Json j = {{"command", "bound"}, {"n", n}, {"k", k}, {"bound", big(b.value)}, {"regime", std::string(name(b.regime))}};
        if (breakdown) j["breakdown"] = breakdown_json(b.breakdown);
        Emitter{out, c}.json(j);
        return exit_ok;
    }
    out << b.value.str() << '\n';
    if (breakdown) {
        const BoundBreakdown& d = b.breakdown;
        out << "regime " << name(b.regime) << '\n'
            << "edges " << d.edges.str() << '\n'
            << "u_out " << d.u_out.str() << "\nu_in " << d.u_in.str() << '\n'
            << "p_out " << d.p_out.str() << "\np_in " << d.p_in.str() << '\n'
            << "ix_up " << d.ix_up.str() << "\nix_pu " << d.ix_pu.str() << '\n'
            << "ix_uu " << d.ix_uu.str() << "\nix_pp " << d.ix_pp.str() << '\n'
            << "edge_cap " << d.resulting_edge_cap.str() << '\n'
            << "period_bound " << d.resulting_period_bound.str() << '\n';
    }
    return exit_ok;
}

inline int cmd_table(const Common& c, bool check, const std::string& column, const std::string& reference_path,
                     std::ostream& out, std::ostream& err) {
    const InclusiveRange nr = parse_range(c.n), kr = parse_range(c.k);
    std::optional<ReferenceTable> ref;
    if (check || column != "new") ref = ReferenceTable::load(reference_path);
    const auto cells = bound_table(nr, kr, ref ? &*ref : nullptr);

    auto value = [&](const BoundCell& cell) -> std::optional<BigInt> {
        if (column == "new") return cell.bound;
        if (!cell.reference) return std::nullopt;
        return column == "old" ? cell.reference->old_bound : cell.reference->best_known;
    };
    std::size_t width = 3;
    for (const auto& cell : cells) {
        if (auto v = value(cell)) width = std::max(width, v->str().size() + 2);
    }
    std::size_t matched = 0, differ = 0, missing = 0;
    for (const auto& cell : cells) {
        if (!cell.matches_reference) ++missing;
        else if (*cell.matches_reference) ++matched;
        else ++differ;
    }

    if (c.json()) {
        Json rows = Json::array();
        for (const auto& cell : cells) {
            Json j = {{"n", cell.n}, {"k", cell.k}, {"bound", big(cell.bound)}, {"regime", std::string(name(cell.regime))}};
            if (cell.reference) {
                auto opt = [](const std::optional<BigInt>& v) { return v ? big(*v) : Json(nullptr); };
                j["reference"] = {{"new_bound", opt(cell.reference->new_bound)},
                                  {"old_bound", opt(cell.reference->old_bound)},
                                  {"best_known", opt(cell.reference->best_known)},
                                  {"maximal", cell.reference->maximal}};
            }
            if (check) j["matches_reference"] = cell.matches_reference ? Json(*cell.matches_reference) : Json(nullptr);
            rows.push_back(std::move(j));
        }
        Json j = {{"command", "table"}, {"column", column}, {"cells", rows}};
        if (check) j["summary"] = {{"cells", cells.size()}, {"match", matched}, {"differ", differ}, {"missing", missing}};
        Emitter{out, c}.json(j);
    } else {
        // rows n, columns k; '*' marks a cell that differs from the reference
        const int cw = static_cast<int>(width) + (check ? 1 : 0);
        out << std::left << std::setw(5) << "n\\k" << std::right;
        for (unsigned k = kr.lo; k <= kr.hi; ++k) out << std::setw(cw) << (std::to_string(k) + (check ? " " : ""));
        out << '\n';
        std::size_t i = 0;
        for (unsigned n = nr.lo; n <= nr.hi; ++n) {
            out << std::left << std::setw(5) << n << std::right;
            for (unsigned k = kr.lo; k <= kr.hi; ++k, ++i) {
                const BoundCell& cell = cells[i];
                const auto v = value(cell);
                std::string s = v ? v->str() : "-";
                if (check && cell.matches_reference && !*cell.matches_reference) s += "*";
                else if (check) s += " ";
                out << std::setw(cw) << s;
            }
            out << '\n';
        }
        if (check) {
            out << "checked " << cells.size() << " cells: " << matched << " match, " << differ << " differ, " << missing
                << " without reference\n";
        }
    }
    if (check && differ > 0) {
        err << differ << " cell(s) differ from the reference table\n";
        return exit_failed;
    }
    return exit_ok;
}

inline int cmd_verify(const Common& c, const std::string& property_name, const std::vector<std::string>& sequences,
                      const std::string& input, const std::string& certificate, std::istream& in, std::ostream& out,
                      std::ostream& err) {
    if (!certificate.empty()) {
        std::ifstream f(certificate);
        detail::require(static_cast<bool>(f), "cannot open certificate '" + certificate + "'");
        const CertificateCheck check = check_certificate(parse_certificate(f));
        if (c.json()) {
            Emitter{out, c}.json({{"command", "verify-certificate"}, {"ok", check.ok}, {"problems", check.problems}});
        } else {
            out << (check.ok ? "certificate ok" : "certificate rejected") << '\n';
            for (const auto& p : check.problems) out << "  " << p << '\n';
        }
        return check.ok ? exit_ok : exit_failed;
    }

    const unsigned n = single(c.n, "--n"), k = single(c.k, "--k");
    const Property property = property_name == "os" ? Property::Os : property_name == "window" ? Property::Window : Property::Nos;
    std::vector<SequenceLine> lines;
    if (!sequences.empty()) {
        std::size_t i = 0;
        for (const auto& s : sequences) lines.push_back({++i, PeriodicSequence::parse(s, k)});
    } else if (!input.empty()) {
        std::ifstream f(input);
        detail::require(static_cast<bool>(f), "cannot open input '" + input + "'");
        lines = read_sequences(f, k);
    } else {
        lines = read_sequences(in, k);
    }
    detail::require(!lines.empty(), "no sequences to verify");

    bool all_valid = true;
    Json rows = Json::array();
    for (const auto& line : lines) {
        const Verdict v = property == Property::Nos  ? is_nos(line.sequence, n)
                          : property == Property::Os ? is_os(line.sequence, n)
                                                     : is_window_sequence(line.sequence, n);
        all_valid &= v.valid;
        if (c.json()) {
            Json j = {{"line", line.line_number},
                      {"sequence", line.sequence.str()},
                      {"valid", v.valid},
                      {"period", v.period},
                      {"length", line.sequence.length()},
                      {"order_exceeds_period", v.order_exceeds_period}};
            if (v.witness) {
                j["witness"] = {{"i", v.witness->i}, {"j", v.witness->j}, {"kind", std::string(name(v.witness->kind))}};
            }
            rows.push_back(std::move(j));
        } else {
            if (lines.size() > 1) out << "line " << line.line_number << ": ";
            out << describe(v) << '\n';
        }
    }
    if (c.json()) {
        Emitter{out, c}.json(
            {{"command", "verify"}, {"n", n}, {"k", k}, {"property", std::string(name(property))}, {"results", rows}});
    }
    if (!all_valid) err << "verification failed\n";
    return all_valid ? exit_ok : exit_failed;
}

struct SearchFlags {
    std::uint64_t time_budget_ms = 0;
    unsigned threads = 1;
    bool no_symmetry = false;
    bool no_prune = false;
    bool no_reachability = false;
    bool no_stop_at_bound = false;
    bool timing = false;
    std::string seed_file;
    std::string certificate;
};

inline int cmd_search(const Common& c, const SearchFlags& s, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.n = single(c.n, "--n");
    cfg.k = single(c.k, "--k");
    if (c.budget) cfg.node_budget = c.budget;
    if (s.time_budget_ms) cfg.time_budget = std::chrono::milliseconds(s.time_budget_ms);
    cfg.threads = std::max(1U, s.threads);
    cfg.symmetry_reduction = !s.no_symmetry;
    cfg.prune_bound = !s.no_prune;
    cfg.prune_reachability = !s.no_reachability;
    cfg.stop_at_bound = !s.no_stop_at_bound;
    if (!s.seed_file.empty()) {
        std::ifstream f(s.seed_file);
        detail::require(static_cast<bool>(f), "cannot open seed file '" + s.seed_file + "'");
        const auto seeds = read_sequences(f, cfg.k);
        detail::require(!seeds.empty(), "seed file '" + s.seed_file + "' holds no sequence");
        cfg.seed = seeds.front().sequence;
    }

    const SearchResult r = max_nos_search(cfg);
    const std::string seq = r.best_sequence ? r.best_sequence->str() : "";
    if (c.json()) {
        Json j = {{"command", "search"},
                  {"n", cfg.n},
                  {"k", cfg.k},
                  {"period", r.period},
                  {"bound", r.bound},
                  {"optimal", r.optimal},
                  {"status", std::string(name(r.status))},
                  {"sequence", r.best_sequence ? Json(seq) : Json(nullptr)},
                  {"expansions", r.expansions},
                  {"branches", r.branches}};
        if (s.timing) j["elapsed_ms"] = r.elapsed.count();
        Emitter{out, c}.json(j);
    } else {
        out << "n " << cfg.n << "\nk " << cfg.k << "\nperiod " << r.period << "\nbound " << r.bound << "\noptimal "
            << yes(r.optimal) << "\nstatus " << name(r.status) << "\nsequence " << seq << "\nexpansions "
            << r.expansions << '\n';
    }
    if (s.timing) err << "elapsed_ms " << r.elapsed.count() << '\n';
    if (!s.certificate.empty()) {
        std::ofstream f(s.certificate);
        detail::require(static_cast<bool>(f), "cannot write certificate '" + s.certificate + "'");
        f << certify(r);
    }
    if (r.status != SearchStatus::Exhausted) {
        err << "search stopped early (" << name(r.status) << "); result is not certified optimal\n";
        return exit_budget;
    }
    if (!r.best_sequence) {
        err << "no NOS found\n";
        return exit_failed;
    }
    return exit_ok;
}

inline int cmd_export_dot(const Common& c, const std::string& sequence, bool no_labels, std::ostream& out) {
    const unsigned n = single(c.n, "--n"), k = single(c.k, "--k");
    detail::require(n >= 2, "export-dot requires n >= 2");
    DotOptions opt;
    if (c.budget) opt.max_edges = c.budget;
    opt.edge_labels = !no_labels;
    std::string dot;
    if (sequence.empty()) {
        const auto space = checked_pow(k, n);
        if (!space || *space > default_explicit_edge_budget) throw budget_error("graph too large to export");
        dot = export_dot(ReducedGraph(n, k, GraphMode::Implicit), opt);
    } else {
        dot = export_dot(sequence_subgraph(PeriodicSequence::parse(sequence, k), n), opt);
    }
    if (c.json()) Emitter{out, c}.json({{"command", "export-dot"}, {"n", n}, {"k", k}, {"dot", dot}});
    else out << dot;
    return exit_ok;
}

}  // namespace detail_cli

/// Parse `args` (program name first) and dispatch. Never throws.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
    using namespace detail_cli;
    CLI::App app{"Negative orientable sequences: counting, bounds, verification and search", "negaseq-cli"};
    app.require_subcommand(1, 1);

    Common c;
    std::vector<std::string> positional, classes;
    bool enumerate = false, build = false, breakdown = false, check_reference = false, no_labels = false;
    std::string column = "new", reference = default_reference_path, property = "nos", input, certificate, sequence;
    SearchFlags sf;

    auto* classify = app.add_subcommand("classify", "flags and class memberships of tuples");
    add_common(classify, c, false, false);
    classify->add_option("tuples", positional, "tuples such as 0,1,2")->required();

    auto* count = app.add_subcommand("count", "closed-form counts of structured tuples");
    add_common(count, c, true, true);
    count->add_option("--class", classes, "restrict to these classes (default: all)");
    count->add_flag("--enumerate", enumerate, "cross-check every count by brute-force enumeration");
    count->add_option("--budget", c.budget, "maximum tuples per enumeration");

    auto* edges = app.add_subcommand("edges", "edge counts of the reduced de Bruijn graph");
    add_common(edges, c, true, true);
    edges->add_flag("--build", build, "also build the graph and count its edges");
    edges->add_option("--budget", c.budget, "maximum edge slots k^n when building");

    auto* profile = app.add_subcommand("profile", "degrees and flags of vertices");
    add_common(profile, c, true, false);
    profile->add_option("vertices", positional, "vertex labels (default: all vertices)");
    profile->add_option("--budget", c.budget, "maximum vertices when profiling all");

    auto* bound = app.add_subcommand("bound", "upper bound on the period of a NOS");
    add_common(bound, c, true, false);
    bound->add_flag("--breakdown", breakdown, "show the excluded-edge budget");

    auto* table = app.add_subcommand("table", "grid of bounds, rows n and columns k");
    add_common(table, c, true, true);
    table->add_flag("--check-reference", check_reference, "compare every cell with the reference CSV");
    table->add_option("--column", column, "which value to print")->check(CLI::IsMember({"new", "old", "best"}));
    table->add_option("--reference", reference, "reference CSV path");

    auto* verify = app.add_subcommand("verify", "check sequences for the NOS, OS or window property");
    add_common(verify, c, false, false);
    verify->add_option("sequences", positional, "sequences such as 0,1,1 (default: read lines from --input or stdin)");
    verify->add_option("--property", property, "property to check")->check(CLI::IsMember({"nos", "os", "window"}));
    verify->add_option("--input", input, "file with one sequence per line");
    verify->add_option("--certificate", certificate, "replay a search certificate instead");

    auto* search = app.add_subcommand("search", "exhaustive search for a longest NOS");
    add_common(search, c, true, false);
    search->add_option("--budget", c.budget, "maximum search-tree expansions (default 1e9)");
    search->add_option("--time-budget", sf.time_budget_ms, "wall-clock cap in milliseconds");
    search->add_option("--threads", sf.threads, "worker threads");
    search->add_flag("--no-symmetry", sf.no_symmetry, "disable first-edge symmetry reduction");
    search->add_flag("--no-prune", sf.no_prune, "disable the remaining-pairs cut");
    search->add_flag("--no-reachability", sf.no_reachability, "disable the return-path cut");
    search->add_flag("--no-stop-at-bound", sf.no_stop_at_bound, "keep searching after reaching the closed-form bound");
    search->add_option("--seed-file", sf.seed_file, "file whose first sequence seeds the incumbent");
    search->add_option("--certificate", sf.certificate, "write a replayable certificate to this file");
    search->add_flag("--timing", sf.timing, "report elapsed time (stderr, and elapsed_ms in JSON)");

    auto* dot = app.add_subcommand("export-dot", "Graphviz export of the reduced graph or a sequence subgraph");
    add_common(dot, c, true, false);
    dot->add_option("--sequence", sequence, "export the nega-sequence-subgraph of this sequence");
    dot->add_flag("--no-labels", no_labels, "omit edge labels");
    dot->add_option("--budget", c.budget, "maximum edges to export");

    // a certificate carries its own n and k
    verify->get_option("--k")->required(false);

    std::ostringstream buffer;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        std::ostream& sink = c.output.empty() ? static_cast<std::ostream&>(out) : buffer;
        int code = exit_ok;
        if (*classify) code = cmd_classify(c, positional, sink);
        else if (*count) code = cmd_count(c, classes, enumerate, sink, err);
        else if (*edges) code = cmd_edges(c, build, sink, err);
        else if (*profile) code = cmd_profile(c, positional, sink);
        else if (*bound) code = cmd_bound(c, breakdown, sink);
        else if (*table) code = cmd_table(c, check_reference, column, reference, sink, err);
        else if (*verify) {
            detail::require(!certificate.empty() || !c.k.empty(), "--k is required");
            detail::require(!certificate.empty() || !c.n.empty(), "--n is required");
            code = cmd_verify(c, property, positional, input, certificate, in, sink, err);
        } else if (*search) code = cmd_search(c, sf, sink, err);
        else if (*dot) code = cmd_export_dot(c, sequence, no_labels, sink);
        if (!c.output.empty()) {
            std::ofstream f(c.output);
            if (!f) {
                err << "error: cannot write '" << c.output << "'\n";
                return exit_usage;
            }
            f << buffer.str();
        }
        return code;
    } catch (const subgraph_collision_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const consistency_error& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace negaseq::cli
