#include "scl/error.hpp"
#include "scl/scan.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

using namespace scl;

namespace {

ScanConfig config_of(std::vector<CheckSpec> checks, int jobs = 1)
{
    ScanConfig c;
    c.checks = std::move(checks);
    c.jobs = jobs;
    return c;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

} // namespace

TEST_CASE("labeled enumeration counts")
{
    for (auto [n, expected] : {std::pair{3, 8ULL}, {4, 64ULL}, {6, 32768ULL}}) {
        std::uint64_t seen = 0;
        enumerate_labeled(n, [&](const Graph&) { ++seen; });
        CHECK(seen == expected);
        CHECK(labeled_count(n) == expected);
    }
    CHECK_THROWS(enumerate_labeled(9, [](const Graph&) {}));
    CHECK_THROWS(enumerate_labeled(0, [](const Graph&) {}));

    // Edge-mask order follows graph6 pair order.
    CHECK(labeled_graph(3, 0b001) == Graph(3, {{0, 1}}));
    CHECK(labeled_graph(3, 0b010) == Graph(3, {{0, 2}}));
    CHECK(labeled_graph(3, 0b100) == Graph(3, {{1, 2}}));

    std::set<std::string> distinct;
    enumerate_labeled(4, [&](const Graph& g) { distinct.insert(emit_graph6(g)); });
    CHECK(distinct.size() == 64);
}

TEST_CASE("exhaustive theorem1 scan on n=5")
{
    CheckSpec t1{CheckKind::theorem1, {2, 3}, {}, {}, {}};
    auto res = scan(CorpusSpec::exhaustive(5), config_of({t1}));
    CHECK(res.graphs_seen == 1024);
    CHECK(res.graphs_checked == 1024);
    CHECK(res.evaluations == 2048);
    CHECK(res.violations_total == 0);
    CHECK(res.violations.empty());
    CHECK(res.errors.empty());
}

TEST_CASE("polyn equalities are the complete multipartite graphs")
{
    CheckSpec polyn{CheckKind::polyn, {}, {}, {}, {}};
    auto res = scan(CorpusSpec::exhaustive(6), config_of({polyn}));
    CHECK(res.violations_total == 0);
    std::set<std::string> eq;
    for (const auto& r : res.equalities)
        eq.insert(r.graph6);
    CHECK(res.equalities_total == res.equalities.size());

    std::set<std::string> recognized;
    enumerate_labeled(6, [&](const Graph& g) {
        if (is_complete_multipartite_plus_isolated(g).accepted)
            recognized.insert(emit_graph6(g));
    });
    CHECK(eq == recognized);
    CHECK_FALSE(eq.empty());
}

TEST_CASE("random conjecture scan with clique filter")
{
    for (int r : {2, 3}) {
        auto corpus = CorpusSpec::random(8, 0.5, 1000, 7);
        corpus.filters.kfree = r + 1;
        CheckSpec conj{CheckKind::conjecture, {r}, {}, {}, {}};
        auto res = scan(corpus, config_of({conj}, 2));
        CHECK(res.graphs_seen == 1000);
        CHECK(res.graphs_checked > 0);
        CHECK(res.graphs_checked < 1000);
        CHECK(res.discoveries_total == 0);
        CHECK(res.violations_total == 0);
        CHECK(res.out_of_domain == 0);
    }
}

TEST_CASE("filter soundness")
{
    auto corpus = CorpusSpec::exhaustive(5);
    corpus.filters.kfree = 3;
    corpus.filters.connected = true;
    CheckSpec wilf{CheckKind::wilf, {}, {}, {}, {}};
    auto cfg = config_of({wilf});
    auto res = scan(corpus, cfg);
    REQUIRE(res.graphs_checked > 0);
    std::uint64_t expected = 0;
    enumerate_labeled(5, [&](const Graph& g) {
        if (is_connected(g) && clique_counts(g).k(3) == 0)
            ++expected;
    });
    CHECK(res.graphs_checked == expected);
    for (const auto& rec : res.equalities) {
        Graph g = parse_graph6(rec.graph6);
        CHECK(clique_counts(g).k(3) == 0);
        CHECK(is_connected(g));
    }

    auto nb = CorpusSpec::exhaustive(4);
    nb.filters.non_bipartite = true;
    auto res2 = scan(nb, cfg);
    std::uint64_t nonbip = 0;
    enumerate_labeled(4, [&](const Graph& g) { nonbip += is_bipartite(g) ? 0 : 1; });
    CHECK(res2.graphs_checked == nonbip);
}

TEST_CASE("scan is independent of worker count")
{
    auto corpus = CorpusSpec::exhaustive(5);
    auto cfg1 = config_of(theorem_suite(), 1);
    auto cfg4 = config_of(theorem_suite(), 4);
    cfg1.top_k = cfg4.top_k = 7;
    auto first = scan(corpus, cfg1);
    CHECK(first.errors.empty());
    CHECK(first.violations_total == 0);
    auto a = to_json(first, false).dump();
    auto b = to_json(scan(corpus, cfg4), false).dump();
    CHECK(a == b);

    auto rnd = CorpusSpec::random(7, 0.4, 300, 11);
    std::vector<CheckSpec> checks{{CheckKind::conjecture, {2, 3}, {}, {}, {}}};
    auto c = to_json(scan(rnd, config_of(checks, 1)), false).dump();
    auto d = to_json(scan(rnd, config_of(checks, 3)), false).dump();
    CHECK(c == d);
}

TEST_CASE("brute-force oracles agree with the fast paths")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, static_cast<double>(rng() % 11) / 10.0, rng());
        CHECK(brute_force_cliques(g).counts == clique_counts(g).counts);
        auto slow = brute_force_walks(g, 6);
        auto fast = walk_counts(g, 6);
        for (int l = 1; l <= 6; ++l) {
            CHECK(slow.total(l) == fast.total(l));
            for (int u = 0; u < n; ++u)
                CHECK(slow.at(l, u) == fast.at(l, u));
        }
    }
    CHECK(brute_force_walks(path_graph(3), 3).total(3) == 6);
    CHECK(brute_force_walks(complete_graph(3), 4).total(4) == 24);
    CHECK(brute_force_walks(empty_graph(4), 3).total(3) == 0);
    CHECK(brute_force_cliques(cycle_graph(5)).k(3) == 0);
    CHECK_THROWS(brute_force_cliques(empty_graph(21)));
    CHECK_THROWS(brute_force_walks(empty_graph(11), 3));
    CHECK_THROWS(brute_force_walks(empty_graph(4), 9));
}

TEST_CASE("tightness ranking")
{
    SUBCASE("Turan graphs are tight for the conjecture when r divides n")
    {
        std::vector<Graph> gs{turan_graph(2, 4), turan_graph(2, 6), cycle_graph(5)};
        auto cfg = config_of({{CheckKind::conjecture, {2}, {}, {}, {}}});
        cfg.top_k = 2;
        auto res = scan(CorpusSpec::inline_list(gs), cfg);
        REQUIRE(res.tightest.size() == 2);
        for (const auto& r : res.tightest)
            CHECK(std::fabs(r.report.slack) <= 1e-9);
    }
    SUBCASE("complete graphs are tight for wilf")
    {
        std::vector<Graph> gs;
        for (int n = 2; n <= 6; ++n)
            gs.push_back(complete_graph(n));
        auto cfg = config_of({{CheckKind::wilf, {}, {}, {}, {}}});
        auto res = scan(CorpusSpec::inline_list(gs), cfg);
        REQUIRE(res.tightest.size() == 5);
        for (const auto& r : res.tightest)
            CHECK(r.report.equality);
    }
    SUBCASE("ordering and ties")
    {
        auto mk = [](std::string g6, double slack) {
            ScanRecord r;
            r.graph6 = std::move(g6);
            r.report.name = "x";
            r.report.slack = slack;
            r.report.holds = true;
            return r;
        };
        auto ranked = tightness_rank({mk("C", 0.5), mk("B", 0.0), mk("A", 0.0), mk("D", 0.1)}, 3);
        REQUIRE(ranked.size() == 3);
        CHECK(ranked[0].graph6 == "A");
        CHECK(ranked[1].graph6 == "B");
        CHECK(ranked[2].graph6 == "D");
    }
    SUBCASE("stable across runs")
    {
        auto cfg = config_of({{CheckKind::theorem1, {}, {}, {}, {}}});
        auto a = scan(CorpusSpec::exhaustive(5), cfg).tightest;
        auto b = scan(CorpusSpec::exhaustive(5), cfg).tightest;
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i].graph6 == b[i].graph6);
    }
}

TEST_CASE("graph6 file ingestion")
{
    auto p = temp_file("scl_ingest.g6", "# comment\nBw\n\nDhc\n");
    auto gs = read_graph6_file(p.string());
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == complete_graph(3));
    CHECK(gs[1] == cycle_graph(5));

    auto res = scan(CorpusSpec::file(p.string()), config_of({{CheckKind::momo, {}, {}, {}, {}}}));
    CHECK(res.graphs_checked == 2);
    CHECK(res.violations_total == 0);

    auto bad = temp_file("scl_bad.g6", "Bw\nBx\n");
    try {
        read_graph6_file(bad.string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
    CHECK_THROWS_AS(read_graph6_file("/nonexistent/dir/x.g6"), Error);
    std::filesystem::remove(p);
    std::filesystem::remove(bad);
}

TEST_CASE("serialization")
{
    auto cfg = config_of({{CheckKind::polyn, {}, {}, {}, {}}});
    auto res = scan(CorpusSpec::inline_list({complete_graph(3), cycle_graph(5)}), cfg);
    auto j = to_json(res, false);
    for (const char* key : {"graphs_checked", "violations", "equalities", "tightest", "out_of_domain", "timing_s"})
        CHECK(j.contains(key));
    CHECK(j["timing_s"].is_null());
    CHECK(to_json(res, true)["timing_s"].is_number());
    CHECK(j["graphs_checked"] == 2);
    REQUIRE(j["equalities"].size() == 1);
    CHECK(j["equalities"][0]["graph6"] == "Bw");

    auto csv = to_csv(res);
    CHECK(csv.rfind("kind,item,graph6,check,params,lhs,rhs,slack,holds,equality\n", 0) == 0);
    CHECK(csv.find("equality,0,Bw,polyn") != std::string::npos);

    BoundParams bp;
    bp.r = 2;
    bp.s = 1;
    bp.alpha = Rational(1, 20);
    CHECK(bp.str() == "r=2,s=1,alpha=1/20");
}

TEST_CASE("check grids and names")
{
    for (CheckKind k : all_check_kinds())
        CHECK(parse_check_kind(to_string(k)) == k);
    CHECK_FALSE(parse_check_kind("nope").has_value());

    Graph k4 = complete_graph(4);
    GraphStats st(k4);
    Tolerance tol;
    CHECK(evaluate_check({CheckKind::maxmu, {}, {}, {}, {}}, st, tol).size() == 4);
    CHECK(evaluate_check({CheckKind::theorem1, {}, {}, {}, {}}, st, tol).size() == 3);
    // r = 2: s in {1,2}; r = 3: s in {1,2,3}; four alphas each.
    CHECK(evaluate_check({CheckKind::theorem3, {}, {}, {}, {}}, st, tol).size() == 20);
    // oldin: s = 2..4, l = 2..3.
    CHECK(evaluate_check({CheckKind::oldin, {}, {}, {}, {}}, st, tol).size() == 6);
}
