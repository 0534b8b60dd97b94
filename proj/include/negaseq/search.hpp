#pragma once

// Exhaustive search for long negative orientable sequences.
//
// A NOS of order n and period m is a closed walk of length m in B-_k(n-1) whose
// edges are distinct and which never uses both an edge e and its nega-reverse
// partner -e^R. The search is a depth-first enumeration of such walks:
// taking an edge blocks that edge and its partner, and every return to the
// start vertex is a candidate period.
//
// Symmetry reduction. The maps x -> u*x (u a unit of Z_k) and S -> -S^R
// preserve the NOS property, and together generate a group G that also
// contains plain reversal (compose -S^R with u = -1). G acts on sequences and
// on edge sets, and the edge set H(S) = E(S) u -E(S)^R of a sequence is mapped
// accordingly. Pick g in G minimising min(g(H(S))); that minimum e* is then the
// least edge of its own G-orbit (otherwise a further map would lower it). So
// every NOS has an image whose least H-edge is an orbit representative, and
// after switching to -S^R if needed, a rotation that starts with it. The
// search therefore only starts from orbit representatives e0 and only admits
// edges that, together with their partner, exceed e0.
//
// Pruning. A walk of length L with R untouched admissible pairs left can grow
// to at most L + R. With reachability pruning, only pairs with an edge that
// lies on some path from the current vertex back to the start are counted, and
// a walk that can no longer return to its start is abandoned.
//
// Determinism. Each first-edge representative is a branch with index b. The
// shared incumbent is ranked by (period, -b), so a branch keeps looking for ties
// against branches after it but not before it. The reported walk is the first
// maximum-length walk (in DFS order) of the lowest branch attaining the
// maximum, whatever the number of workers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "negaseq/bounds.hpp"
#include "negaseq/debruijn.hpp"
#include "negaseq/sequence.hpp"
#include "negaseq/verifier.hpp"

namespace negaseq {

/// Exhaustive search refuses graphs with more edge slots than this.
inline constexpr std::uint64_t max_search_edge_space = std::uint64_t{1} << 24;

struct SearchConfig {
    unsigned n = 2;
    unsigned k = 3;
    std::uint64_t node_budget = 1'000'000'000;
    std::optional<std::chrono::milliseconds> time_budget;
    bool symmetry_reduction = true;
    bool prune_bound = true;
    /// Abandon walks that can no longer return to their start, and count only
    /// pairs that lie on some path back to it. Applies to graphs with at most
    /// 64 vertices; larger graphs use the plain pair count.
    bool prune_reachability = true;
    /// Treat the closed-form period bound as a cap: once a walk attains it, the
    /// remaining branches cannot improve and are cut.
    bool stop_at_bound = true;
    unsigned threads = 1;
    /// Optional known NOS used as the initial incumbent.
    std::optional<PeriodicSequence> seed;
};

enum class SearchStatus { Exhausted, NodeBudget, TimeBudget };

[[nodiscard]] constexpr std::string_view name(SearchStatus s) noexcept {
    switch (s) {
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::NodeBudget: return "node-budget";
        case SearchStatus::TimeBudget: return "time-budget";
    }
    return "?";
}

struct SearchResult {
    SearchConfig config;
    std::optional<PeriodicSequence> best_sequence;  // canonical form
    std::size_t period = 0;
    bool optimal = false;  // search space exhausted
    SearchStatus status = SearchStatus::Exhausted;
    std::uint64_t bound = 0;  // closed-form period bound
    bool bound_attained = false;
    std::uint64_t expansions = 0;
    std::size_t branches = 0;  // first-edge representatives
    std::uint64_t graph_hash = 0;
    std::chrono::milliseconds elapsed{0};
};

// ---------------------------------------------------------------------------
// Canonical form

/// Start index of the lexicographically least rotation.
[[nodiscard]] inline std::size_t least_rotation(std::span<const Symbol> s) {
    const std::size_t m = s.size();
    std::size_t i = 0, j = 1, off = 0;
    while (i < m && j < m && off < m) {
        const Symbol a = s[(i + off) % m], b = s[(j + off) % m];
        if (a == b) {
            ++off;
            continue;
        }
        if (a > b) i += off + 1;
        else j += off + 1;
        if (i == j) ++j;
        off = 0;
    }
    return std::min(i, j);
}

[[nodiscard]] inline std::vector<Symbol> units_of(unsigned k) {
    std::vector<Symbol> u;
    for (Symbol x = 1; x < k; ++x) {
        if (std::gcd(x, k) == 1) u.push_back(x);
    }
    return u;
}

/// Least word over all rotations of S and -S^R under every unit multiplier.
[[nodiscard]] inline PeriodicSequence canonicalize(const PeriodicSequence& s, unsigned n) {
    detail::require(n >= 2, "canonicalize requires n >= 2");
    const unsigned k = s.k();
    const std::size_t m = s.length();
    std::optional<std::vector<Symbol>> best;
    const PeriodicSequence images[2] = {s, nega_reverse(s)};
    std::vector<Symbol> w(m), rot(m);
    for (Symbol u : units_of(k)) {
        for (const auto& img : images) {
            for (std::size_t i = 0; i < m; ++i) w[i] = static_cast<Symbol>((std::uint64_t{u} * img.at(i)) % k);
            const std::size_t r = least_rotation(w);
            for (std::size_t i = 0; i < m; ++i) rot[i] = w[(r + i) % m];
            if (!best || rot < *best) best = rot;
        }
    }
    return PeriodicSequence(std::move(*best), k);
}

// ---------------------------------------------------------------------------

namespace detail {

class NosSearch {
public:
    explicit NosSearch(const SearchConfig& cfg) : cfg_(cfg), graph_(checked_graph(cfg)) {
        const unsigned k = cfg.k;
        const Code space = graph_.edge_space();
        bound_ = static_cast<std::uint64_t>(nos_bound(cfg.n, k).value);

        // Orbit representatives of edges under units x {identity, reversal}.
        std::vector<Symbol> units = units_of(k);
        std::vector<Symbol> digits(cfg.n);
        for (Code e = 0; e < space; ++e) {
            if (!graph_.has_edge(e)) continue;
            bool rep = true;
            if (cfg.symmetry_reduction) {
                decode_into(e, digits);
                for (Symbol u : units) {
                    Code fwd = 0, bwd = 0;
                    for (unsigned i = 0; i < cfg.n; ++i) {
                        fwd = fwd * k + (std::uint64_t{u} * digits[i]) % k;
                        bwd = bwd * k + (std::uint64_t{u} * digits[cfg.n - 1 - i]) % k;
                    }
                    if (fwd < e || bwd < e) {
                        rep = false;
                        break;
                    }
                }
            }
            if (rep) reps_.push_back(e);
            const Code p = graph_.nega_reverse_code(e);
            if (e < p) pair_mins_.push_back(e);
        }
        if (graph_.vertex_count() > 64) use_reach_ = false;
        else use_reach_ = cfg.prune_reachability;
    }

    SearchResult run() {
        const auto t0 = std::chrono::steady_clock::now();
        start_time_ = t0;
        SearchResult res;
        res.config = cfg_;
        res.bound = bound_;
        res.branches = reps_.size();
        res.graph_hash = graph_.content_hash();

        if (cfg_.seed) {
            const Verdict v = is_nos(*cfg_.seed, cfg_.n);
            require(v.valid, "seed is not a NOS of order " + std::to_string(cfg_.n) + ": " + describe(v));
            seed_walk_ = *cfg_.seed;
            incumbent_.store((std::uint64_t{cfg_.seed->length()} << 32) | seed_priority);
        }

        branch_best_.assign(reps_.size(), {});
        const unsigned workers = std::max(1U, std::min<unsigned>(cfg_.threads, static_cast<unsigned>(reps_.size())));
        if (workers == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back([this] { worker(); });
            for (auto& t : pool) t.join();
        }

        const std::uint64_t key = incumbent_.load();
        const std::uint32_t prio = static_cast<std::uint32_t>(key & 0xffffffffULL);
        std::optional<PeriodicSequence> best;
        if (key != 0) {
            if (prio == seed_priority) best = seed_walk_;
            else best = branch_best_[seed_priority - 1 - prio];
        }
        if (best) {
            res.period = best->length();
            res.best_sequence = canonicalize(*best, cfg_.n);
        }
        res.status = status_.load();
        res.optimal = res.status == SearchStatus::Exhausted;
        res.bound_attained = res.period == bound_;
        res.expansions = expansions_.load();
        res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        return res;
    }

private:
    static constexpr std::uint32_t seed_priority = 0xffffffffU;

    static ReducedGraph checked_graph(const SearchConfig& cfg) {
        require(cfg.n >= 2, "search requires n >= 2");
        require(cfg.k >= 3, "alphabet size k must be at least 3 (negation is the identity on Z_2)");
        require(cfg.node_budget > 0, "node budget must be positive");
        require(!cfg.time_budget || cfg.time_budget->count() > 0, "time budget must be positive");
        const auto space = checked_pow(cfg.k, cfg.n);
        if (!space || *space > max_search_edge_space) {
            throw budget_error("search refused: k^n = " + (space ? std::to_string(*space) : std::string("overflow")) +
                               " exceeds the exhaustive-search limit of 2^24 edge slots");
        }
        return ReducedGraph(cfg.n, cfg.k, GraphMode::Explicit);
    }

    void decode_into(Code e, std::vector<Symbol>& digits) const {
        for (unsigned i = cfg_.n; i-- > 0;) {
            digits[i] = static_cast<Symbol>(e % cfg_.k);
            e /= cfg_.k;
        }
    }

    static std::uint64_t make_key(std::uint64_t length, std::uint32_t prio) { return (length << 32) | prio; }
    std::uint32_t branch_priority(std::size_t b) const { return seed_priority - 1 - static_cast<std::uint32_t>(b); }

    struct Worker {
        std::vector<std::uint8_t> used;
        std::vector<Code> walk;
        std::vector<Symbol> next;
        std::vector<std::uint64_t> out_adj, in_adj;
        std::uint64_t local_expansions = 0;
    };

    void worker() {
        Worker w;
        w.used.assign(graph_.edge_space(), 0);
        for (;;) {
            const std::size_t b = next_branch_.fetch_add(1);
            if (b >= reps_.size() || stop_.load(std::memory_order_relaxed)) break;
            search_branch(w, b);
        }
        expansions_.fetch_add(w.local_expansions);
        w.local_expansions = 0;
    }

    bool admissible(const Worker& w, Code e, Code e0) const {
        if (!graph_.has_edge(e) || w.used[e]) return false;
        if (cfg_.symmetry_reduction && (e < e0 || graph_.nega_reverse_code(e) < e0)) return false;
        return true;
    }

    // Reachability state: out_adj[v] / in_adj[v] hold, as vertex bitmasks, the
    // heads / tails of admissible edges at v. Distinct out-edges of a vertex
    // have distinct heads, so the masks identify edges exactly.
    void reach_set(Worker& w, Code e, bool on) const {
        const std::uint64_t hb = std::uint64_t{1} << graph_.head(e), tb = std::uint64_t{1} << graph_.tail(e);
        if (on) {
            w.out_adj[graph_.tail(e)] |= hb;
            w.in_adj[graph_.head(e)] |= tb;
        } else {
            w.out_adj[graph_.tail(e)] &= ~hb;
            w.in_adj[graph_.head(e)] &= ~tb;
        }
    }

    void reach_init(Worker& w, Code e0) const {
        w.out_adj.assign(graph_.vertex_count(), 0);
        w.in_adj.assign(graph_.vertex_count(), 0);
        for (Code e = 0; e < graph_.edge_space(); ++e) {
            if (admissible(w, e, e0)) reach_set(w, e, true);
        }
    }

    /// Pairs still available to extend the walk currently ending at `at` back to `start`.
    std::uint64_t reachable_pairs(const Worker& w, Code at, Code start, bool& can_return) const {
        auto closure = [](const std::vector<std::uint64_t>& adj, Code from) {
            std::uint64_t seen = std::uint64_t{1} << from, frontier = seen;
            while (frontier) {
                std::uint64_t grow = 0;
                for (std::uint64_t f = frontier; f; f &= f - 1) grow |= adj[__builtin_ctzll(f)];
                frontier = grow & ~seen;
                seen |= grow;
            }
            return seen;
        };
        const std::uint64_t fwd = closure(w.out_adj, at);
        can_return = (fwd >> start) & 1;
        if (!can_return) return 0;
        const std::uint64_t bwd = closure(w.in_adj, start);
        const unsigned k = cfg_.k;
        auto usable = [&](Code e) {
            const Code t = graph_.tail(e), h = graph_.head(e);
            return ((fwd >> t) & 1) && ((bwd >> h) & 1) && ((w.out_adj[t] >> h) & 1);
        };
        std::uint64_t count = 0;
        for (std::uint64_t f = fwd; f; f &= f - 1) {
            const Code v = static_cast<Code>(__builtin_ctzll(f));
            for (std::uint64_t hs = w.out_adj[v] & bwd; hs; hs &= hs - 1) {
                const Code e = graph_.out_edge(v, static_cast<Symbol>(__builtin_ctzll(hs) % k));
                const Code p = graph_.nega_reverse_code(e);
                if (e < p || !usable(p)) ++count;
            }
        }
        return count;
    }

    bool over_budget(Worker& w) {
        if (stop_.load(std::memory_order_relaxed)) return true;
        const bool flush = (w.local_expansions & 0xff) == 0;
        if (flush) {
            flushed_.fetch_add(0x100);
            if ((w.local_expansions & 0xfff) == 0 && cfg_.time_budget &&
                std::chrono::steady_clock::now() - start_time_ >= *cfg_.time_budget) {
                halt(SearchStatus::TimeBudget);
                return true;
            }
        }
        const std::uint64_t approx = flushed_.load(std::memory_order_relaxed) + (w.local_expansions & 0xff);
        if (approx > cfg_.node_budget) {
            halt(SearchStatus::NodeBudget);
            return true;
        }
        return false;
    }

    void halt(SearchStatus s) {
        std::lock_guard lock(mutex_);
        if (status_.load() == SearchStatus::Exhausted) status_.store(s);
        stop_.store(true);
    }

    void record(const Worker& w, std::size_t b) {
        const std::uint64_t length = w.walk.size();
        const std::uint64_t key = make_key(length, branch_priority(b));
        std::uint64_t cur = incumbent_.load();
        if (key <= cur) return;
        std::vector<Symbol> symbols;
        symbols.reserve(length);
        for (Code e : w.walk) symbols.push_back(static_cast<Symbol>(e / graph_.vertex_count()));
        PeriodicSequence seq(std::move(symbols), cfg_.k);
        const Verdict v = is_nos(seq, cfg_.n);
        if (!v.valid) throw consistency_error("search produced a non-NOS walk: " + describe(v));
        if (length > bound_) {
            throw consistency_error("search found period " + std::to_string(length) + " above the bound " +
                                    std::to_string(bound_));
        }
        std::lock_guard lock(mutex_);
        cur = incumbent_.load();
        if (key <= cur) return;
        branch_best_[b] = std::move(seq);
        incumbent_.store(key);
    }

    /// Whether a subtree whose walks are at most `ub` long may still matter.
    bool worth_exploring(std::uint64_t ub, std::size_t b) const {
        if (cfg_.stop_at_bound) ub = std::min(ub, bound_);
        return make_key(ub, branch_priority(b)) > incumbent_.load(std::memory_order_relaxed);
    }

    void search_branch(Worker& w, std::size_t b) {
        const Code e0 = reps_[b];
        const Code start = graph_.tail(e0);
        const auto pairs_above = static_cast<std::uint64_t>(
            pair_mins_.end() - std::upper_bound(pair_mins_.begin(), pair_mins_.end(), e0));
        // untouched admissible pairs, excluding the one containing e0
        std::uint64_t remaining = cfg_.symmetry_reduction ? pairs_above : pair_mins_.size() - 1;

        auto take = [&](Code e) {
            const Code p = graph_.nega_reverse_code(e);
            if (use_reach_) {
                reach_set(w, e, false);
                reach_set(w, p, false);
            }
            w.used[e] = 1;
            w.used[p] = 1;
            w.walk.push_back(e);
            w.next.push_back(0);
        };
        auto drop = [&] {
            const Code e = w.walk.back(), p = graph_.nega_reverse_code(e);
            w.used[e] = 0;
            w.used[p] = 0;
            if (use_reach_) {
                if (admissible(w, e, e0)) reach_set(w, e, true);
                if (admissible(w, p, e0)) reach_set(w, p, true);
            }
            w.walk.pop_back();
            w.next.pop_back();
        };

        if (!worth_exploring(1 + remaining, b)) return;
        if (use_reach_) reach_init(w, e0);
        ++w.local_expansions;
        take(e0);
        if (graph_.head(e0) == start) record(w, b);

        while (!w.walk.empty()) {
            if (w.next.back() == 0) {
                bool prune = cfg_.prune_bound && !worth_exploring(w.walk.size() + remaining, b);
                if (!prune && use_reach_) {
                    bool can_return = true;
                    const std::uint64_t r = reachable_pairs(w, graph_.head(w.walk.back()), start, can_return);
                    prune = !can_return || (cfg_.prune_bound && !worth_exploring(w.walk.size() + r, b));
                }
                if (prune) w.next.back() = static_cast<Symbol>(cfg_.k);
            }
            const Code v = graph_.head(w.walk.back());
            bool advanced = false;
            while (w.next.back() < cfg_.k) {
                const Code e = graph_.out_edge(v, w.next.back()++);
                if (!admissible(w, e, e0)) continue;
                ++w.local_expansions;
                if (over_budget(w)) {
                    while (!w.walk.empty()) drop();
                    return;
                }
                take(e);
                --remaining;
                if (graph_.head(e) == start) record(w, b);
                advanced = true;
                break;
            }
            if (!advanced) {
                drop();
                if (!w.walk.empty()) ++remaining;
            }
        }
    }

    SearchConfig cfg_;
    ReducedGraph graph_;
    std::uint64_t bound_ = 0;
    std::vector<Code> reps_;
    std::vector<Code> pair_mins_;  // sorted: smaller edge of each nega-reverse pair
    bool use_reach_ = false;

    std::atomic<std::uint64_t> incumbent_{0};
    std::atomic<std::size_t> next_branch_{0};
    std::atomic<bool> stop_{false};
    std::atomic<SearchStatus> status_{SearchStatus::Exhausted};
    std::atomic<std::uint64_t> expansions_{0};
    std::atomic<std::uint64_t> flushed_{0};
    std::chrono::steady_clock::time_point start_time_;
    std::mutex mutex_;
    std::vector<std::optional<PeriodicSequence>> branch_best_;
    std::optional<PeriodicSequence> seed_walk_;
};

}  // namespace detail

/// Longest NOS of order n over Z_k reachable within the configured budgets.
[[nodiscard]] inline SearchResult max_nos_search(const SearchConfig& cfg) { return detail::NosSearch(cfg).run(); }

// ---------------------------------------------------------------------------
// Certificates
//
// Plain `key=value` lines, one per field, in a fixed order:
//
//   negaseq-certificate=1
//   n=3
//   k=3
//   period=10
//   bound=11
//   optimal=true
//   status=exhausted
//   verdict=valid NOS, period 10
//   expansions=186
//   branches=8
//   config.symmetry_reduction=true
//   ...
//   graph_hash=0x...
//   sequence=0,0,1,0,1,1,1,2,1,1
//
// A certificate can be replayed without repeating the search: the bound, the
// graph hash and the NOS property of the sequence are all recomputed.

[[nodiscard]] inline std::string certify(const SearchResult& r) {
    std::ostringstream out;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "negaseq-certificate=1\n";
    out << "n=" << r.config.n << "\nk=" << r.config.k << "\n";
    out << "period=" << r.period << "\nbound=" << r.bound << "\n";
    out << "optimal=" << flag(r.optimal) << "\nstatus=" << name(r.status) << "\n";
    out << "verdict=" << (r.best_sequence ? describe(is_nos(*r.best_sequence, r.config.n)) : "none") << "\n";
    out << "expansions=" << r.expansions << "\nbranches=" << r.branches << "\n";
    out << "config.node_budget=" << r.config.node_budget << "\n";
    out << "config.time_budget_ms=" << (r.config.time_budget ? std::to_string(r.config.time_budget->count()) : "none")
        << "\n";
    out << "config.symmetry_reduction=" << flag(r.config.symmetry_reduction) << "\n";
    out << "config.prune_bound=" << flag(r.config.prune_bound) << "\n";
    out << "config.prune_reachability=" << flag(r.config.prune_reachability) << "\n";
    out << "config.stop_at_bound=" << flag(r.config.stop_at_bound) << "\n";
    out << "config.seeded=" << flag(r.config.seed.has_value()) << "\n";
    char hash[19];
    std::snprintf(hash, sizeof hash, "0x%016llx", static_cast<unsigned long long>(r.graph_hash));
    out << "graph_hash=" << hash << "\n";
    out << "sequence=" << (r.best_sequence ? r.best_sequence->str() : "") << "\n";
    return out.str();
}

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> problems;
};

[[nodiscard]] inline std::map<std::string, std::string> parse_certificate(std::istream& in) {
    std::map<std::string, std::string> fields;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto eq = line.find('=');
        detail::require(eq != std::string::npos && eq > 0, "certificate: malformed line '" + line + "'");
        fields[line.substr(0, eq)] = line.substr(eq + 1);
    }
    detail::require(fields.count("negaseq-certificate") == 1, "certificate: missing format marker");
    return fields;
}

/// Recompute everything a certificate claims that does not need the search.
[[nodiscard]] inline CertificateCheck check_certificate(const std::map<std::string, std::string>& f) {
    CertificateCheck c;
    auto get = [&](const std::string& key) -> const std::string* {
        auto it = f.find(key);
        if (it == f.end()) {
            c.problems.push_back("missing field " + key);
            return nullptr;
        }
        return &it->second;
    };
    const std::string *sn = get("n"), *sk = get("k"), *sp = get("period"), *sb = get("bound"), *sh = get("graph_hash"),
                      *ss = get("sequence");
    if (!c.problems.empty()) return c;
    try {
        const unsigned n = static_cast<unsigned>(std::stoul(*sn)), k = static_cast<unsigned>(std::stoul(*sk));
        const std::uint64_t bound = static_cast<std::uint64_t>(nos_bound(n, k).value);
        if (std::to_string(bound) != *sb) c.problems.push_back("bound mismatch: recomputed " + std::to_string(bound));
        const auto space = checked_pow(k, n);
        if (space && *space <= max_search_edge_space) {
            char hash[19];
            std::snprintf(hash, sizeof hash, "0x%016llx",
                          static_cast<unsigned long long>(ReducedGraph(n, k, GraphMode::Implicit).content_hash()));
            if (*sh != hash) c.problems.push_back(std::string("graph hash mismatch: recomputed ") + hash);
        }
        if (ss->empty()) {
            if (*sp != "0") c.problems.push_back("period claimed without a sequence");
        } else {
            const PeriodicSequence seq = PeriodicSequence::parse(*ss, k);
            const Verdict v = is_nos(seq, n);
            if (!v.valid) c.problems.push_back("sequence is not a NOS: " + describe(v));
            if (std::to_string(seq.length()) != *sp) c.problems.push_back("period mismatch: sequence has length " +
                                                                          std::to_string(seq.length()));
            if (seq.length() > bound) c.problems.push_back("period exceeds the bound");
        }
    } catch (const std::exception& e) {
        c.problems.push_back(e.what());
    }
    c.ok = c.problems.empty();
    return c;
}

}  // namespace negaseq
