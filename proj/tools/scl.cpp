// scl: spectra, cliques and bound checks from the command line.
//
// Exit codes: 0 ok, 1 theorem violation, 2 usage or malformed input,
// 3 I/O failure, 4 conjecture discovery.

#include "scl/error.hpp"
#include "scl/scan.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using scl::Rational;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;
constexpr int kDiscovery = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw UsageError("not an integer: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

// "2..4" or "1,3,5" (items may themselves be ranges).
std::vector<int> parse_int_grid(const std::string& text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    for (const auto& item : split(text, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(item));
            continue;
        }
        int lo = parse_int(std::string_view(item).substr(0, dots));
        int hi = parse_int(std::string_view(item).substr(dots + 2));
        if (hi < lo)
            throw UsageError("empty range '" + item + "'");
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rational_grid(const std::string& text)
{
    std::vector<Rational> out;
    if (text.empty())
        return out;
    for (const auto& item : split(text, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw UsageError("bad alpha '" + item + "': " + e.what());
        }
    }
    return out;
}

struct Grids {
    std::string r, s, l, alpha;

    void add(CLI::App* app)
    {
        app->add_option("--r", r, "r values, e.g. 2..4 or 2,3");
        app->add_option("--s", s, "s values");
        app->add_option("--l", l, "l values");
        app->add_option("--alpha", alpha, "alpha values (decimals or p/q)");
    }

    scl::CheckSpec spec(scl::CheckKind kind) const
    {
        return {kind, parse_int_grid(r), parse_int_grid(s), parse_int_grid(l), parse_rational_grid(alpha)};
    }
};

std::vector<scl::CheckSpec> build_checks(const std::vector<std::string>& names, const Grids& grids)
{
    if (names.empty()) {
        auto suite = scl::theorem_suite();
        for (auto& c : suite)
            c = grids.spec(c.kind);
        return suite;
    }
    std::vector<scl::CheckSpec> out;
    for (const auto& name : names) {
        auto kind = scl::parse_check_kind(name);
        if (!kind)
            throw UsageError("unknown check '" + name + "'");
        out.push_back(grids.spec(*kind));
    }
    return out;
}

std::vector<scl::Graph> read_corpus_file(const std::string& path)
{
    if (path != "-") {
        try {
            return scl::read_graph6_file(path);
        } catch (const scl::ParseError&) {
            throw;
        } catch (const scl::Error& e) {
            throw IoError(e.what());
        }
    }
    std::vector<scl::Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        try {
            out.push_back(scl::parse_graph6(line));
        } catch (const scl::ParseError& e) {
            throw scl::ParseError("<stdin>:" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_text(const std::string& path, const std::string& body)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << body;
    out.flush();
    if (!out)
        throw IoError("write failed for '" + path + "'");
}

scl::Tolerance tolerance(double factor)
{
    if (!(factor > 0.0))
        throw UsageError("--tol must be positive");
    return scl::Tolerance{}.scaled(factor);
}

// ---------------------------------------------------------------------- gen

struct GenArgs {
    std::string kind;
    int r = 0, n = 0, isolated = 0, count = 1;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string parts, name, out;
};

std::vector<scl::Graph> generate(const GenArgs& a)
{
    std::vector<scl::Graph> gs;
    if (a.kind == "turan") {
        if (a.r < 1 || a.n < 1 || a.r > a.n)
            throw UsageError("turan needs 1 <= r <= n");
        gs.push_back(scl::turan_graph(a.r, a.n));
    } else if (a.kind == "multipartite") {
        std::vector<int> parts = parse_int_grid(a.parts);
        if (parts.empty())
            throw UsageError("multipartite needs --parts, e.g. 2,2,3");
        for (int p : parts)
            if (p < 1)
                throw UsageError("class sizes must be positive");
        if (a.isolated < 0)
            throw UsageError("--isolated must be nonnegative");
        gs.push_back(scl::complete_multipartite(parts, a.isolated));
    } else if (a.kind == "random") {
        if (a.n < 1 || a.count < 0 || a.p < 0.0 || a.p > 1.0)
            throw UsageError("random needs n >= 1, 0 <= p <= 1, count >= 0");
        for (int i = 0; i < a.count; ++i)
            gs.push_back(scl::random_graph(a.n, a.p, scl::mix_seed(a.seed, static_cast<std::uint64_t>(i))));
    } else if (a.kind == "named") {
        if (a.n < 1)
            throw UsageError("named graphs need --n >= 1");
        if (a.name == "complete")
            gs.push_back(scl::complete_graph(a.n));
        else if (a.name == "empty")
            gs.push_back(scl::empty_graph(a.n));
        else if (a.name == "cycle") {
            if (a.n < 3)
                throw UsageError("cycle needs n >= 3");
            gs.push_back(scl::cycle_graph(a.n));
        } else if (a.name == "path")
            gs.push_back(scl::path_graph(a.n));
        else if (a.name == "star")
            gs.push_back(scl::star_graph(a.n - 1));
        else
            throw UsageError("unknown name '" + a.name + "' (complete, empty, cycle, path, star)");
    } else {
        throw UsageError("unknown generator '" + a.kind + "' (turan, multipartite, random, named)");
    }
    return gs;
}

int cmd_gen(const GenArgs& a)
{
    std::vector<scl::Graph> gs = generate(a);
    std::string body;
    for (const auto& g : gs)
        body += scl::emit_graph6(g) + "\n";
    if (a.out.empty()) {
        // The graph6 stream is the machine-readable result here.
        std::cout << body;
        return kOk;
    }
    write_text(a.out, body);
    json j;
    j["path"] = a.out;
    j["count"] = gs.size();
    j["graphs"] = json::array();
    for (const auto& g : gs)
        j["graphs"].push_back(scl::emit_graph6(g));
    std::cout << j.dump(2) << "\n";
    std::cerr << "wrote " << gs.size() << " graph(s) to " << a.out << "\n";
    return kOk;
}

// -------------------------------------------------------------------- check

struct CheckArgs {
    std::vector<std::string> g6;
    std::string file;
    std::vector<std::string> theorems;
    Grids grids;
};

int cmd_check(const CheckArgs& a, const scl::Tolerance& tol)
{
    std::vector<scl::Graph> gs;
    for (const auto& s : a.g6)
        gs.push_back(scl::parse_graph6(s));
    if (!a.file.empty()) {
        auto more = read_corpus_file(a.file);
        gs.insert(gs.end(), more.begin(), more.end());
    }
    if (gs.empty())
        throw UsageError("check needs --g6 or --file");
    auto checks = build_checks(a.theorems, a.grids);

    json reports = json::array();
    bool violation = false, discovery = false;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        scl::GraphStats st(gs[i]);
        const std::string g6 = scl::emit_graph6(gs[i]);
        for (const auto& c : checks) {
            for (const auto& rep : scl::evaluate_check(c, st, tol)) {
                json row = scl::to_json(scl::ScanRecord{i, g6, rep});
                reports.push_back(std::move(row));
                if (rep.in_domain && !rep.holds) {
                    ++failures;
                    (c.kind == scl::CheckKind::conjecture ? discovery : violation) = true;
                }
            }
        }
    }
    json j;
    j["graphs"] = gs.size();
    j["all_hold"] = failures == 0;
    j["reports"] = std::move(reports);
    std::cout << j.dump(2) << "\n";
    std::cerr << gs.size() << " graph(s), " << j["reports"].size() << " report(s), " << failures << " failing\n";
    return violation ? kViolation : discovery ? kDiscovery : kOk;
}

// --------------------------------------------------------------------- scan

struct ScanArgs {
    int exhaustive_n = 0;
    bool allow_n8 = false;
    std::string file;
    int random_n = 0;
    double random_p = 0.5;
    std::uint64_t random_count = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;
    Grids grids;
    std::vector<std::string> filters;
    int kfree = 0;
    int jobs = 1;
    int top_k = 10;
    std::size_t max_records = 1000;
    std::string csv;
    bool timing = false;
    std::string discovery_out = "scl-discoveries.json";
    std::string reproducer_out = "scl-reproducer.json";
};

json persisted(const std::vector<scl::ScanRecord>& records)
{
    json arr = json::array();
    for (const auto& r : records)
        arr.push_back(scl::to_json(r));
    return arr;
}

int cmd_scan(const ScanArgs& a, const scl::Tolerance& tol)
{
    const int sources = (a.exhaustive_n > 0) + !a.file.empty() + (a.random_n > 0);
    if (sources != 1)
        throw UsageError("scan needs exactly one of --exhaustive-n, --file, --random-n");

    scl::CorpusSpec corpus;
    if (a.exhaustive_n > 0) {
        const int limit = a.allow_n8 ? scl::kExhaustiveOverrideMaxN : scl::kExhaustiveMaxN;
        if (a.exhaustive_n > limit)
            throw UsageError("exhaustive scans stop at n = " + std::to_string(limit) +
                             (a.allow_n8 ? "" : " (use --allow-n8 for n = 8)"));
        corpus = scl::CorpusSpec::exhaustive(a.exhaustive_n);
        corpus.allow_n8 = a.allow_n8;
    } else if (!a.file.empty()) {
        corpus = scl::CorpusSpec::inline_list(read_corpus_file(a.file));
    } else {
        if (a.random_p < 0.0 || a.random_p > 1.0)
            throw UsageError("--p must lie in [0, 1]");
        corpus = scl::CorpusSpec::random(a.random_n, a.random_p, a.random_count, a.seed);
    }

    scl::ScanConfig cfg;
    cfg.checks = build_checks(a.checks, a.grids);
    cfg.tol = tol;
    cfg.top_k = a.top_k;
    cfg.jobs = a.jobs;
    cfg.max_records = a.max_records;
    if (cfg.top_k < 1 || cfg.jobs < 1)
        throw UsageError("--top-k and --jobs must be at least 1");

    for (const auto& f : a.filters) {
        if (f == "connected")
            corpus.filters.connected = true;
        else if (f == "nonbipartite" || f == "non-bipartite")
            corpus.filters.non_bipartite = true;
        else if (f == "kfree") {
            if (a.kfree > 0) {
                corpus.filters.kfree = a.kfree;
            } else {
                // K_{r+1}-free for the smallest r in the grid (the strictest filter).
                auto rs = parse_int_grid(a.grids.r);
                if (rs.empty())
                    throw UsageError("--filter kfree needs --r or --kfree");
                corpus.filters.kfree = *std::min_element(rs.begin(), rs.end()) + 1;
            }
        } else
            throw UsageError("unknown filter '" + f + "' (connected, nonbipartite, kfree)");
    }
    if (a.kfree > 0 && !corpus.filters.kfree)
        corpus.filters.kfree = a.kfree;

    scl::ScanResult res = scl::scan(corpus, cfg);

    if (!a.csv.empty())
        write_text(a.csv, scl::to_csv(res));
    if (!res.violations.empty()) {
        json rep;
        rep["violations"] = persisted(res.violations);
        write_text(a.reproducer_out, rep.dump(2) + "\n");
        std::cerr << res.violations_total << " theorem violation(s); reproducer in " << a.reproducer_out << "\n";
    }
    if (!res.discoveries.empty()) {
        json rep;
        rep["discoveries"] = persisted(res.discoveries);
        write_text(a.discovery_out, rep.dump(2) + "\n");
        std::cerr << res.discoveries_total << " conjecture counterexample(s); saved to " << a.discovery_out << "\n";
    }

    std::cout << scl::to_json(res, a.timing).dump(2) << "\n";
    std::cerr << res.graphs_checked << " of " << res.graphs_seen << " graph(s) checked, " << res.evaluations
              << " evaluation(s), " << res.equalities_total << " equality case(s), " << res.errors.size()
              << " error(s)\n";
    if (res.violations_total > 0)
        return kViolation;
    if (res.discoveries_total > 0)
        return kDiscovery;
    return kOk;
}

// ------------------------------------------------------------------ witness

struct WitnessArgs {
    std::string g6, file, alpha = "0", mode;
    int r = 2;
};

int cmd_witness(const WitnessArgs& a)
{
    std::vector<scl::Graph> gs;
    if (!a.g6.empty())
        gs.push_back(scl::parse_graph6(a.g6));
    if (!a.file.empty()) {
        auto more = read_corpus_file(a.file);
        gs.insert(gs.end(), more.begin(), more.end());
    }
    if (gs.empty())
        throw UsageError("witness needs --g6 or --file");
    if (a.r < 2)
        throw UsageError("--r must be at least 2");
    const auto alphas = parse_rational_grid(a.alpha);
    if (alphas.size() != 1 || alphas[0] < Rational(0))
        throw UsageError("--alpha takes one nonnegative value");

    json arr = json::array();
    bool miss = false;
    for (const auto& g : gs) {
        scl::SearchMode mode;
        if (a.mode.empty())
            mode = g.order() <= scl::kExhaustiveWitnessMaxN ? scl::SearchMode::exhaustive : scl::SearchMode::heuristic;
        else if (a.mode == "exhaustive") {
            if (g.order() > scl::kExhaustiveWitnessMaxN)
                throw UsageError("exhaustive witness search stops at n = " +
                                 std::to_string(scl::kExhaustiveWitnessMaxN));
            mode = scl::SearchMode::exhaustive;
        } else if (a.mode == "heuristic")
            mode = scl::SearchMode::heuristic;
        else
            throw UsageError("--mode is exhaustive or heuristic");
        auto rep = scl::stability_search(g, a.r, alphas[0], mode);
        miss = miss || rep.verdict == scl::StabilityVerdict::exhaustive_miss;
        json j;
        j["graph6"] = scl::emit_graph6(g);
        j.update(scl::to_json(rep));
        std::cerr << j["graph6"].get<std::string>() << ": " << scl::to_string(rep.verdict) << "\n";
        arr.push_back(std::move(j));
    }
    std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return miss ? kViolation : kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral and clique bound checker"};
    app.require_subcommand(1);
    double tol_factor = 1.0;
    app.add_option("--tol", tol_factor, "scale every tolerance by this factor");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate graphs as graph6");
    g->add_option("kind", gen.kind, "turan | multipartite | random | named")->required();
    g->add_option("--r", gen.r, "number of classes (turan)");
    g->add_option("--n", gen.n, "number of vertices");
    g->add_option("--parts", gen.parts, "class sizes (multipartite), e.g. 2,2,3");
    g->add_option("--isolated", gen.isolated, "extra isolated vertices (multipartite)");
    g->add_option("--p", gen.p, "edge probability (random)");
    g->add_option("--count", gen.count, "number of graphs (random)");
    g->add_option("--seed", gen.seed, "seed (random)");
    g->add_option("--name", gen.name, "complete | empty | cycle | path | star (named)");
    g->add_option("--out", gen.out, "output file (graph6 lines); stdout if omitted");

    CheckArgs chk;
    auto* c = app.add_subcommand("check", "evaluate bounds on given graphs");
    c->add_option("--g6", chk.g6, "graph6 string (repeatable)");
    c->add_option("--file", chk.file, "graph6 file, '-' for stdin");
    c->add_option("--theorem,--check", chk.theorems, "check name (repeatable); default: theorem suite");
    chk.grids.add(c);

    ScanArgs sc;
    auto* s = app.add_subcommand("scan", "run checks across a corpus");
    s->add_option("--exhaustive-n", sc.exhaustive_n, "all labeled graphs on n vertices");
    s->add_flag("--allow-n8", sc.allow_n8, "permit exhaustive n = 8");
    s->add_option("--file", sc.file, "graph6 corpus, '-' for stdin");
    s->add_option("--random-n", sc.random_n, "random corpus order");
    s->add_option("--p", sc.random_p, "random corpus edge probability");
    s->add_option("--count", sc.random_count, "random corpus size");
    s->add_option("--seed", sc.seed, "random corpus seed");
    s->add_option("--check,--theorem", sc.checks, "check name (repeatable); default: theorem suite");
    sc.grids.add(s);
    s->add_option("--filter", sc.filters, "connected | nonbipartite | kfree (repeatable)");
    s->add_option("--kfree", sc.kfree, "keep graphs without a clique of this size");
    s->add_option("--jobs", sc.jobs, "worker threads");
    s->add_option("--top-k", sc.top_k, "tightest instances to keep");
    s->add_option("--max-records", sc.max_records, "cap on listed records per category (0 = all)");
    s->add_option("--csv", sc.csv, "also write CSV here");
    s->add_flag("--timing", sc.timing, "report wall time (makes stdout run-dependent)");
    s->add_option("--discovery-out", sc.discovery_out, "where conjecture counterexamples go");
    s->add_option("--reproducer-out", sc.reproducer_out, "where theorem violations go");

    WitnessArgs wit;
    auto* w = app.add_subcommand("witness", "search for an induced r-partite witness");
    w->add_option("--g6", wit.g6, "graph6 string");
    w->add_option("--file", wit.file, "graph6 file, '-' for stdin");
    w->add_option("--r", wit.r, "number of classes");
    w->add_option("--alpha", wit.alpha, "alpha (decimal or p/q)");
    w->add_option("--mode", wit.mode, "exhaustive | heuristic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const scl::Tolerance tol = tolerance(tol_factor);
        if (g->parsed())
            return cmd_gen(gen);
        if (c->parsed())
            return cmd_check(chk, tol);
        if (s->parsed())
            return cmd_scan(sc, tol);
        return cmd_witness(wit);
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const scl::ParseError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "io: " << e.what() << "\n";
        return kIo;
    } catch (const scl::CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
