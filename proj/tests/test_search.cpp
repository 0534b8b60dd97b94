#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "negaseq/search.hpp"
#include "oracles.hpp"

using namespace negaseq;

namespace {

SearchConfig config(unsigned n, unsigned k) {
    SearchConfig c;
    c.n = n;
    c.k = k;
    return c;
}

oracle::Word word(const PeriodicSequence& s) { return {s.symbols().begin(), s.symbols().end()}; }

void require_sound(const SearchResult& r) {
    REQUIRE(r.best_sequence);
    const Verdict v = is_nos(*r.best_sequence, r.config.n);
    REQUIRE(v.valid);
    REQUIRE(r.best_sequence->length() == r.period);
    REQUIRE(r.period <= r.bound);
    const SequenceSubgraph sg = sequence_subgraph(*r.best_sequence, r.config.n);
    REQUIRE(sg.edge_count() == 2 * r.period);
    REQUIRE(sg.is_balanced());
    // reported sequences are in canonical form
    REQUIRE(canonicalize(*r.best_sequence, r.config.n) == *r.best_sequence);
}

}  // namespace

TEST_CASE("n = 2 maxima") {
    const std::size_t expected[] = {3, 5, 10, 14, 21, 27};
    for (unsigned k = 3; k <= 8; ++k) {
        CAPTURE(k);
        const SearchResult r = max_nos_search(config(2, k));
        require_sound(r);
        CHECK(r.period == expected[k - 3]);
        CHECK(r.optimal);
        CHECK(r.status == SearchStatus::Exhausted);
        CHECK(r.bound_attained);
    }
}

TEST_CASE("search agrees with brute force over all words") {
    CHECK(max_nos_search(config(2, 3)).period == oracle::brute_max_nos(2, 3, 4));
    CHECK(max_nos_search(config(2, 4)).period == oracle::brute_max_nos(2, 4, 7));
    // every ternary word up to the bound 11
    const std::size_t brute = oracle::brute_max_nos(3, 3, 11);
    CHECK(brute == 10);
    SearchConfig c = config(3, 3);
    c.stop_at_bound = false;
    const SearchResult r = max_nos_search(c);
    CHECK(r.period == brute);
    CHECK(r.optimal);
}

TEST_CASE("symmetry reduction and pruning do not change the maximum") {
    const std::vector<std::pair<unsigned, unsigned>> cases = {{2, 3}, {2, 4}, {2, 5}, {3, 3}};
    for (const auto& [n, k] : cases) {
        CAPTURE(n, k);
        std::vector<std::size_t> periods;
        for (int variant = 0; variant < 5; ++variant) {
            SearchConfig c = config(n, k);
            c.stop_at_bound = false;
            c.symmetry_reduction = variant != 1 && variant != 2;
            c.prune_bound = variant != 2 && variant != 3;
            c.prune_reachability = variant != 4;
            const SearchResult r = max_nos_search(c);
            require_sound(r);
            CHECK(r.optimal);
            periods.push_back(r.period);
        }
        for (auto p : periods) CHECK(p == periods.front());
    }
}

TEST_CASE("symmetry reduction shrinks the branch set") {
    SearchConfig on = config(3, 3), off = config(3, 3);
    off.symmetry_reduction = false;
    on.stop_at_bound = off.stop_at_bound = false;
    const SearchResult a = max_nos_search(on), b = max_nos_search(off);
    CHECK(a.branches < b.branches);
    CHECK(b.branches == 24);
    CHECK(a.expansions < b.expansions);
}

TEST_CASE("results do not depend on the number of workers") {
    const std::vector<std::pair<unsigned, unsigned>> cases = {{2, 6}, {2, 7}, {3, 3}, {2, 8}};
    for (const auto& [n, k] : cases) {
        for (bool stop : {true, false}) {
            if (k == 8 && !stop) continue;
            CAPTURE(n, k, stop);
            SearchConfig c = config(n, k);
            c.stop_at_bound = stop;
            const SearchResult one = max_nos_search(c);
            for (unsigned threads : {2U, 4U, 7U}) {
                c.threads = threads;
                const SearchResult many = max_nos_search(c);
                CHECK(many.period == one.period);
                CHECK(many.optimal == one.optimal);
                REQUIRE(many.best_sequence);
                CHECK(*many.best_sequence == *one.best_sequence);
            }
        }
    }
}

TEST_CASE("budgets stop the search") {
    SearchConfig c = config(4, 3);
    c.node_budget = 50;
    const SearchResult r = max_nos_search(c);
    CHECK_FALSE(r.optimal);
    CHECK(r.status == SearchStatus::NodeBudget);
    CHECK(r.expansions <= 51);
    if (r.best_sequence) CHECK(is_nos(*r.best_sequence, 4).valid);

    SearchConfig t = config(5, 3);
    t.time_budget = std::chrono::milliseconds(50);
    t.threads = 2;
    const SearchResult tr = max_nos_search(t);
    CHECK_FALSE(tr.optimal);
    CHECK(tr.status == SearchStatus::TimeBudget);
    CHECK(tr.elapsed < std::chrono::milliseconds(5000));
}

TEST_CASE("search preconditions") {
    CHECK_THROWS_AS(max_nos_search(config(1, 3)), precondition_error);
    CHECK_THROWS_AS(max_nos_search(config(3, 2)), precondition_error);
    CHECK_THROWS_AS(max_nos_search(config(9, 7)), budget_error);
    SearchConfig zero = config(2, 3);
    zero.node_budget = 0;
    CHECK_THROWS_AS(max_nos_search(zero), precondition_error);
    SearchConfig bad_seed = config(2, 3);
    bad_seed.seed = PeriodicSequence({0, 1, 2}, 3);
    CHECK_THROWS_AS(max_nos_search(bad_seed), precondition_error);
}

TEST_CASE("seeded search") {
    SearchConfig c = config(3, 4);
    c.seed = PeriodicSequence::parse("0,0,1,0,1,1,0,2,1,1,1,2,0,1,3,1,1,3,2,2,3,2,3,1", 4);
    c.node_budget = 1000;
    const SearchResult r = max_nos_search(c);
    REQUIRE(r.best_sequence);
    CHECK(r.period >= 24);
    CHECK(is_nos(*r.best_sequence, 3).valid);

    // a seed at the bound leaves nothing to search
    SearchConfig full = config(2, 5);
    full.seed = max_nos_search(config(2, 5)).best_sequence;
    const SearchResult f = max_nos_search(full);
    CHECK(f.optimal);
    CHECK(f.period == 10);
    CHECK(f.expansions == 0);
}

TEST_CASE("least rotation") {
    const std::vector<Symbol> a{2, 0, 1, 0, 0};
    CHECK(least_rotation(a) == 3);
    const std::vector<Symbol> b{1, 1, 1};
    CHECK(least_rotation(b) == 0);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Symbol> w(1 + rng() % 12);
        for (auto& x : w) x = static_cast<Symbol>(rng() % 3);
        const std::size_t r = least_rotation(w);
        std::vector<Symbol> rotated(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) rotated[i] = w[(r + i) % w.size()];
        for (std::size_t s = 0; s < w.size(); ++s) {
            std::vector<Symbol> other(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) other[i] = w[(s + i) % w.size()];
            REQUIRE(rotated <= other);
        }
    }
}

TEST_CASE("canonical form") {
    CHECK(canonicalize(PeriodicSequence({0, 1, 1}, 3), 2).str() == "0,1,1");
    CHECK(canonicalize(PeriodicSequence({1, 1, 0}, 3), 2).str() == "0,1,1");
    CHECK(canonicalize(PeriodicSequence({2, 2, 0}, 3), 2).str() == "0,1,1");

    for (unsigned k = 3; k <= 5; ++k) {
        for (unsigned m = 1; m <= 6; ++m) {
            for (const auto& w : oracle::all_words(m, k)) {
                if (oracle::naive_nos(w, 2, k)) continue;
                CAPTURE(w, k);
                const PeriodicSequence s(w, k);
                const PeriodicSequence c = canonicalize(s, 2);
                REQUIRE(word(c) == oracle::naive_canonical(w, k));
                REQUIRE(canonicalize(c, 2) == c);
                REQUIRE(canonicalize(nega_reverse(s), 2) == c);
                REQUIRE(is_nos(c, 2).valid);
            }
        }
    }
}

TEST_CASE("certificates replay") {
    const SearchResult r = max_nos_search(config(3, 3));
    const std::string text = certify(r);
    CHECK(text.find("\nperiod=10\n") != std::string::npos);
    CHECK(text.find("\nbound=11\n") != std::string::npos);
    CHECK(text.find("\noptimal=true\n") != std::string::npos);
    CHECK(text.find("\nverdict=valid NOS, period 10\n") != std::string::npos);
    CHECK(text == certify(max_nos_search(config(3, 3))));

    std::istringstream in(text);
    const auto fields = parse_certificate(in);
    CHECK(fields.at("status") == "exhausted");
    CHECK(check_certificate(fields).ok);

    auto tampered = fields;
    tampered["sequence"] = "0,0,1,0,1,1,1,2,1,2";
    const CertificateCheck bad = check_certificate(tampered);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.problems.empty());

    auto wrong_bound = fields;
    wrong_bound["bound"] = "12";
    CHECK_FALSE(check_certificate(wrong_bound).ok);
    auto wrong_hash = fields;
    wrong_hash["graph_hash"] = "0x0000000000000000";
    CHECK_FALSE(check_certificate(wrong_hash).ok);
    auto missing = fields;
    missing.erase("sequence");
    CHECK_FALSE(check_certificate(missing).ok);

    SearchConfig budgeted = config(4, 3);
    budgeted.node_budget = 20;
    const std::string partial = certify(max_nos_search(budgeted));
    CHECK(partial.find("\noptimal=false\n") != std::string::npos);
    CHECK(partial.find("\nstatus=node-budget\n") != std::string::npos);
    CHECK(partial.find("\nconfig.node_budget=20\n") != std::string::npos);

    std::istringstream junk("hello\n");
    CHECK_THROWS_AS(parse_certificate(junk), precondition_error);
}
