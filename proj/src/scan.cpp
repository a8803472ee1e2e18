#include "scl/scan.hpp"

#include "scl/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace scl {

// ------------------------------------------------------------------ corpora

std::uint64_t labeled_count(int n)
{
    if (n < 1 || n > kExhaustiveOverrideMaxN)
        throw std::invalid_argument("labeled enumeration supports 1 <= n <= 8");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t mask)
{
    std::uint64_t rows[kExhaustiveOverrideMaxN] = {};
    int k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            if ((mask >> k) & 1u) {
                rows[u] |= std::uint64_t{1} << v;
                rows[v] |= std::uint64_t{1} << u;
            }
        }
    }
    return from_adjacency(n, std::span<const std::uint64_t>(rows, static_cast<std::size_t>(n)));
}

void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit)
{
    const std::uint64_t total = labeled_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        visit(labeled_graph(n, mask));
}

std::vector<Graph> read_graph6_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open graph6 file '" + path + "'");
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (in.bad())
        throw Error("read failure on graph6 file '" + path + "'");
    return out;
}

CorpusSpec CorpusSpec::exhaustive(int n)
{
    CorpusSpec c;
    c.mode = Mode::exhaustive;
    c.n = n;
    return c;
}

CorpusSpec CorpusSpec::random(int n, double p, std::uint64_t count, std::uint64_t seed)
{
    CorpusSpec c;
    c.mode = Mode::random;
    c.n = n;
    c.p = p;
    c.count = count;
    c.seed = seed;
    return c;
}

CorpusSpec CorpusSpec::file(std::string path)
{
    CorpusSpec c;
    c.mode = Mode::graph6_file;
    c.path = std::move(path);
    return c;
}

CorpusSpec CorpusSpec::inline_list(std::vector<Graph> graphs)
{
    CorpusSpec c;
    c.mode = Mode::inline_graphs;
    c.graphs = std::move(graphs);
    return c;
}

// ------------------------------------------------------------------- checks

namespace {

struct KindName {
    CheckKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {CheckKind::wilf, "wilf"},
    {CheckKind::maxmu, "maxmu"},
    {CheckKind::maxmu1, "maxmu1"},
    {CheckKind::polyn, "polyn"},
    {CheckKind::theorem1, "theorem1"},
    {CheckKind::theorem2, "theorem2"},
    {CheckKind::theorem3, "theorem3"},
    {CheckKind::momo, "momo"},
    {CheckKind::oldin, "oldin"},
    {CheckKind::conjecture, "conjecture"},
    {CheckKind::edge_corollary, "edge_corollary"},
    {CheckKind::stability, "stability"},
};

std::vector<int> range(int lo, int hi)
{
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i)
        out.push_back(i);
    return out;
}

template <class T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback)
{
    return given.empty() ? fallback : given;
}

BoundReport stability_as_report(const Graph& g, int r, const Rational& alpha)
{
    const SearchMode mode = g.order() <= kExhaustiveWitnessMaxN ? SearchMode::exhaustive : SearchMode::heuristic;
    StabilityReport st = stability_search(g, r, alpha, mode);
    BoundReport rep;
    rep.name = "stability";
    rep.params.r = r;
    rep.params.alpha = alpha;
    rep.exact = true;
    rep.lhs = st.thresholds.order_min;
    rep.rhs = st.witness ? st.witness->order : 0.0;
    rep.slack = rep.rhs - rep.lhs;
    rep.scale = std::max({1.0, std::fabs(rep.lhs), std::fabs(rep.rhs)});
    rep.in_domain = st.premise_ok;
    rep.holds = st.verdict != StabilityVerdict::exhaustive_miss;
    rep.vacuous = st.verdict != StabilityVerdict::witnessed;
    rep.note = to_string(st.verdict) + " (" + to_string(mode) + (st.thresholds.boundary ? ", boundary" : "") + ")";
    return rep;
}

} // namespace

std::string to_string(CheckKind kind)
{
    for (const auto& kn : kKindNames)
        if (kn.kind == kind)
            return kn.name;
    return "unknown";
}

std::optional<CheckKind> parse_check_kind(std::string_view name)
{
    for (const auto& kn : kKindNames)
        if (name == kn.name)
            return kn.kind;
    return std::nullopt;
}

const std::vector<CheckKind>& all_check_kinds()
{
    static const std::vector<CheckKind> kinds = [] {
        std::vector<CheckKind> out;
        for (const auto& kn : kKindNames)
            out.push_back(kn.kind);
        return out;
    }();
    return kinds;
}

std::vector<BoundReport> evaluate_check(const CheckSpec& check, const GraphStats& st, const Tolerance& tol)
{
    static const std::vector<Rational> default_alphas = {Rational(0), Rational(1, 20), Rational(1, 10), Rational(1, 4)};
    std::vector<BoundReport> out;
    switch (check.kind) {
    case CheckKind::wilf:
        out.push_back(reverified(st, tol, [&](const GraphStats& s) { return wilf_bound(s, tol); }));
        break;
    case CheckKind::maxmu:
        for (int s : or_default(check.s, range(1, 4)))
            out.push_back(reverified(st, tol, [&](const GraphStats& x) { return walk_power_bound(x, s, tol); }));
        break;
    case CheckKind::maxmu1:
        out.push_back(turan_edge_bound(st));
        break;
    case CheckKind::polyn:
        out.push_back(reverified(st, tol, [&](const GraphStats& s) { return polyn_bound(s, tol); }));
        break;
    case CheckKind::theorem1:
        for (int r : or_default(check.r, range(2, 4)))
            out.push_back(reverified(st, tol, [&](const GraphStats& s) { return theorem1_bound(s, r, tol); }));
        break;
    case CheckKind::theorem2:
        for (int r : or_default(check.r, range(2, 3)))
            out.push_back(reverified(st, tol, [&](const GraphStats& s) { return theorem2_lower(s, r, tol); }));
        break;
    case CheckKind::theorem3:
        for (int r : or_default(check.r, range(2, 3)))
            for (int s : or_default(check.s, range(1, r))) {
                if (s < 1 || s > r)
                    continue;
                for (const Rational& a : or_default(check.alpha, default_alphas))
                    out.push_back(to_bound_report(theorem3_conditional(st, r, s, a), r, s, a));
            }
        break;
    case CheckKind::momo:
        out = momo_reports(st);
        break;
    case CheckKind::oldin:
        for (int s : or_default(check.s, range(2, st.omega())))
            for (int l : or_default(check.l, range(2, 3))) {
                if (s < 2 || s > st.omega() || l < 2) {
                    BoundReport rep;
                    rep.name = "oldin";
                    rep.params.s = s;
                    rep.params.l = l;
                    rep.in_domain = false;
                    rep.note = "requires 2 <= s <= omega and l >= 2";
                    out.push_back(rep);
                    continue;
                }
                out.push_back(oldin_check(st, s, l));
            }
        break;
    case CheckKind::conjecture:
        for (int r : or_default(check.r, range(2, 3)))
            out.push_back(reverified(st, tol, [&](const GraphStats& s) { return conjecture_check(s, r, tol); }));
        break;
    case CheckKind::edge_corollary:
        for (int r : or_default(check.r, range(2, 3)))
            for (const Rational& a : or_default(check.alpha, std::vector<Rational>{Rational(0)}))
                out.push_back(edge_corollary_check(st, r, a, tol));
        break;
    case CheckKind::stability:
        for (int r : or_default(check.r, range(2, 3))) {
            std::vector<Rational> alphas = check.alpha.empty() ? std::vector<Rational>{stability_alpha_max(r)} : check.alpha;
            for (const Rational& a : alphas)
                out.push_back(stability_as_report(st.graph(), r, a));
        }
        break;
    }
    return out;
}

std::vector<CheckSpec> theorem_suite()
{
    return {
        {CheckKind::wilf, {}, {}, {}, {}},     {CheckKind::maxmu, {}, {}, {}, {}},
        {CheckKind::maxmu1, {}, {}, {}, {}},   {CheckKind::polyn, {}, {}, {}, {}},
        {CheckKind::theorem1, {}, {}, {}, {}}, {CheckKind::theorem2, {}, {}, {}, {}},
        {CheckKind::momo, {}, {}, {}, {}},     {CheckKind::oldin, {}, {}, {}, {}},
    };
}

// -------------------------------------------------------------------- scans

namespace {

bool tight_less(const ScanRecord& a, const ScanRecord& b)
{
    const double sa = std::max(a.report.slack, 0.0);
    const double sb = std::max(b.report.slack, 0.0);
    if (sa != sb)
        return sa < sb;
    if (a.graph6 != b.graph6)
        return a.graph6 < b.graph6;
    if (a.report.name != b.report.name)
        return a.report.name < b.report.name;
    const auto pa = a.report.params.str();
    const auto pb = b.report.params.str();
    if (pa != pb)
        return pa < pb;
    return a.item < b.item;
}

bool tight_candidate(const BoundReport& r) { return r.in_domain && !r.vacuous && r.holds; }

struct Partial {
    ScanResult result;

    void offer_tight(const ScanRecord& rec, int k)
    {
        auto& t = result.tightest;
        if (static_cast<int>(t.size()) == k && !tight_less(rec, t.back()))
            return;
        t.insert(std::upper_bound(t.begin(), t.end(), rec, tight_less), rec);
        if (static_cast<int>(t.size()) > k)
            t.pop_back();
    }
};

class Corpus {
public:
    explicit Corpus(const CorpusSpec& spec) : spec_(spec)
    {
        switch (spec.mode) {
        case CorpusSpec::Mode::exhaustive: {
            const int limit = spec.allow_n8 ? kExhaustiveOverrideMaxN : kExhaustiveMaxN;
            if (spec.n < 1 || spec.n > limit)
                throw std::invalid_argument("exhaustive corpus requires 1 <= n <= " + std::to_string(limit));
            size_ = labeled_count(spec.n);
            break;
        }
        case CorpusSpec::Mode::random:
            if (!(spec.p >= 0.0 && spec.p <= 1.0))
                throw std::invalid_argument("edge probability must lie in [0, 1]");
            if (spec.n < 1 || spec.n > vertex_cap())
                throw std::invalid_argument("random corpus order outside 1..cap");
            size_ = spec.count;
            break;
        case CorpusSpec::Mode::graph6_file:
            loaded_ = read_graph6_file(spec.path);
            size_ = loaded_.size();
            break;
        case CorpusSpec::Mode::inline_graphs:
            size_ = spec.graphs.size();
            break;
        }
    }

    std::uint64_t size() const { return size_; }

    Graph at(std::uint64_t i) const
    {
        switch (spec_.mode) {
        case CorpusSpec::Mode::exhaustive: return labeled_graph(spec_.n, i);
        case CorpusSpec::Mode::random: return random_graph(spec_.n, spec_.p, mix_seed(spec_.seed, i));
        case CorpusSpec::Mode::graph6_file: return loaded_[i];
        case CorpusSpec::Mode::inline_graphs: return spec_.graphs[i];
        }
        throw std::logic_error("unknown corpus mode");
    }

private:
    const CorpusSpec& spec_;
    std::vector<Graph> loaded_;
    std::uint64_t size_ = 0;
};

bool passes(const CorpusFilters& f, const Graph& g, const GraphStats& st)
{
    if (f.kfree && st.omega() >= *f.kfree)
        return false;
    if (f.connected && !is_connected(g))
        return false;
    if (f.non_bipartite && is_bipartite(g))
        return false;
    return true;
}

void process_item(const Corpus& corpus, std::uint64_t item, const CorpusSpec& spec, const ScanConfig& cfg,
                  Partial& part)
{
    ScanResult& res = part.result;
    const Graph g = corpus.at(item);
    ++res.graphs_seen;
    GraphStats st(g, cfg.tol.jacobi_off);
    if (!passes(spec.filters, g, st))
        return;
    ++res.graphs_checked;
    const std::string g6 = emit_graph6(g);

    for (const CheckSpec& check : cfg.checks) {
        std::vector<BoundReport> reports;
        try {
            reports = evaluate_check(check, st, cfg.tol);
        } catch (const std::exception& e) {
            res.errors.push_back({item, g6, to_string(check.kind), e.what()});
            continue;
        }
        for (BoundReport& rep : reports) {
            ++res.evaluations;
            if (!rep.in_domain) {
                ++res.out_of_domain;
                continue;
            }
            ScanRecord rec{item, g6, std::move(rep)};
            if (!rec.report.holds) {
                if (check.kind == CheckKind::conjecture)
                    res.discoveries.push_back(rec);
                else
                    res.violations.push_back(rec);
                continue;
            }
            if (tight_candidate(rec.report)) {
                if (rec.report.equality)
                    res.equalities.push_back(rec);
                part.offer_tight(rec, cfg.top_k);
            }
        }
    }
}

template <class T>
void append(std::vector<T>& dst, std::vector<T>& src)
{
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

template <class T>
void order_by_item(std::vector<T>& v)
{
    std::stable_sort(v.begin(), v.end(), [](const T& a, const T& b) { return a.item < b.item; });
}

} // namespace

std::vector<ScanRecord> tightness_rank(std::vector<ScanRecord> records, int k)
{
    if (k < 1)
        throw std::invalid_argument("tightness rank needs k >= 1");
    std::erase_if(records, [](const ScanRecord& r) { return !tight_candidate(r.report); });
    std::sort(records.begin(), records.end(), tight_less);
    if (static_cast<int>(records.size()) > k)
        records.resize(static_cast<std::size_t>(k));
    return records;
}

ScanResult scan(const CorpusSpec& spec, const ScanConfig& cfg)
{
    if (cfg.top_k < 1)
        throw std::invalid_argument("top_k must be at least 1");
    const auto started = std::chrono::steady_clock::now();
    const Corpus corpus(spec);
    const std::uint64_t total = corpus.size();
    const int jobs = std::max(1, cfg.jobs);

    // Workers pull fixed-size chunks in increasing order; every record
    // carries its item index so the merge below restores corpus order.
    constexpr std::uint64_t kChunk = 512;
    std::atomic<std::uint64_t> next{0};
    std::vector<Partial> partials(static_cast<std::size_t>(jobs));
    auto work = [&](Partial& part) {
        for (;;) {
            const std::uint64_t begin = next.fetch_add(kChunk);
            if (begin >= total)
                return;
            const std::uint64_t end = std::min(total, begin + kChunk);
            for (std::uint64_t i = begin; i < end; ++i)
                process_item(corpus, i, spec, cfg, part);
        }
    };
    if (jobs == 1) {
        work(partials[0]);
    } else {
        std::vector<std::thread> pool;
        for (auto& part : partials)
            pool.emplace_back(work, std::ref(part));
        for (auto& t : pool)
            t.join();
    }

    ScanResult out;
    std::vector<ScanRecord> tight;
    for (auto& part : partials) {
        ScanResult& r = part.result;
        out.graphs_seen += r.graphs_seen;
        out.graphs_checked += r.graphs_checked;
        out.evaluations += r.evaluations;
        out.out_of_domain += r.out_of_domain;
        append(out.violations, r.violations);
        append(out.discoveries, r.discoveries);
        append(out.equalities, r.equalities);
        append(out.errors, r.errors);
        append(tight, r.tightest);
    }
    order_by_item(out.violations);
    order_by_item(out.discoveries);
    order_by_item(out.equalities);
    order_by_item(out.errors);
    out.tightest = tightness_rank(std::move(tight), cfg.top_k);

    out.violations_total = out.violations.size();
    out.discoveries_total = out.discoveries.size();
    out.equalities_total = out.equalities.size();
    if (cfg.max_records > 0) {
        for (auto* v : {&out.violations, &out.discoveries, &out.equalities})
            if (v->size() > cfg.max_records)
                v->resize(cfg.max_records);
    }
    out.timing_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

// ------------------------------------------------------------------ oracles

CliqueProfile brute_force_cliques(const Graph& g)
{
    const int n = g.order();
    if (n > kBruteCliqueMaxN)
        throw std::invalid_argument("brute-force clique oracle supports n <= 20");
    CliqueProfile out;
    out.counts.assign(static_cast<std::size_t>(n + 1), 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        bool complete = true;
        for (int u = 0; u < n && complete; ++u) {
            if (!((mask >> u) & 1u))
                continue;
            for (int v = u + 1; v < n && complete; ++v)
                if (((mask >> v) & 1u) && !g.adjacent(u, v))
                    complete = false;
        }
        if (complete)
            ++out.counts[static_cast<std::size_t>(std::popcount(mask))];
    }
    out.omega = 1;
    for (int s = 1; s <= n; ++s)
        if (out.counts[static_cast<std::size_t>(s)] > 0)
            out.omega = s;
    return out;
}

namespace {

void extend_walk(const Graph& g, int start, int last, int length, int max_length, WalkProfile& out)
{
    out.totals[static_cast<std::size_t>(length - 1)] += 1;
    out.per_vertex[static_cast<std::size_t>(length - 1)][static_cast<std::size_t>(start)] += 1;
    if (length == max_length)
        return;
    for (int v = 0; v < g.order(); ++v)
        if (g.adjacent(last, v))
            extend_walk(g, start, v, length + 1, max_length, out);
}

} // namespace

WalkProfile brute_force_walks(const Graph& g, int max_length)
{
    if (max_length < 1 || max_length > kBruteWalkMaxL || g.order() > kBruteWalkMaxN)
        throw std::invalid_argument("brute-force walk oracle supports L <= 8 and n <= 10");
    WalkProfile out;
    out.totals.assign(static_cast<std::size_t>(max_length), 0);
    out.per_vertex.assign(static_cast<std::size_t>(max_length), std::vector<i128>(static_cast<std::size_t>(g.order()), 0));
    for (int u = 0; u < g.order(); ++u)
        extend_walk(g, u, u, 1, max_length, out);
    return out;
}

// ------------------------------------------------------------ serialization

using nlohmann::ordered_json;

ordered_json to_json(const BoundParams& p)
{
    ordered_json j = ordered_json::object();
    if (p.r)
        j["r"] = *p.r;
    if (p.s)
        j["s"] = *p.s;
    if (p.l)
        j["l"] = *p.l;
    if (p.t)
        j["t"] = *p.t;
    if (p.alpha)
        j["alpha"] = p.alpha->str();
    return j;
}

ordered_json to_json(const BoundReport& r)
{
    ordered_json j;
    j["check"] = r.name;
    j["params"] = to_json(r.params);
    j["in_domain"] = r.in_domain;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["holds"] = r.holds;
    j["equality"] = r.equality;
    j["exact"] = r.exact;
    j["vacuous"] = r.vacuous;
    j["reverified"] = r.reverified;
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

ordered_json to_json(const ScanRecord& r)
{
    ordered_json j;
    j["item"] = r.item;
    j["graph6"] = r.graph6;
    const ordered_json rep = to_json(r.report);
    for (auto& [k, v] : rep.items())
        j[k] = v;
    return j;
}

ordered_json to_json(const StabilityWitness& w)
{
    ordered_json j;
    j["vertices"] = w.vertices.members();
    j["classes"] = w.partition;
    j["order"] = w.order;
    j["min_degree"] = w.min_degree;
    return j;
}

ordered_json to_json(const StabilityReport& r)
{
    ordered_json j;
    j["r"] = r.r;
    j["alpha"] = r.alpha.str();
    j["premise_ok"] = r.premise_ok;
    j["thresholds"] = {{"order_min", r.thresholds.order_min},
                       {"degree_min", r.thresholds.degree_min},
                       {"boundary", r.thresholds.boundary}};
    j["search_mode"] = to_string(r.mode);
    j["verdict"] = to_string(r.verdict);
    j["witness"] = r.witness ? to_json(*r.witness) : ordered_json(nullptr);
    return j;
}

ordered_json to_json(const ScanResult& r, bool include_timing)
{
    auto list = [](const std::vector<ScanRecord>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& rec : v)
            a.push_back(to_json(rec));
        return a;
    };
    ordered_json j;
    j["graphs_seen"] = r.graphs_seen;
    j["graphs_checked"] = r.graphs_checked;
    j["evaluations"] = r.evaluations;
    j["out_of_domain"] = r.out_of_domain;
    j["violations_total"] = r.violations_total;
    j["equalities_total"] = r.equalities_total;
    j["discoveries_total"] = r.discoveries_total;
    j["violations"] = list(r.violations);
    j["discoveries"] = list(r.discoveries);
    j["equalities"] = list(r.equalities);
    j["tightest"] = list(r.tightest);
    ordered_json errs = ordered_json::array();
    for (const auto& e : r.errors)
        errs.push_back({{"item", e.item}, {"graph6", e.graph6}, {"check", e.check}, {"message", e.message}});
    j["errors"] = errs;
    j["timing_s"] = include_timing ? ordered_json(r.timing_s) : ordered_json(nullptr);
    return j;
}

namespace {

std::string fmt_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const ScanResult& r)
{
    std::string out = "kind,item,graph6,check,params,lhs,rhs,slack,holds,equality\n";
    auto rows = [&](const char* kind, const std::vector<ScanRecord>& v) {
        for (const auto& rec : v) {
            out += kind;
            out += ',' + std::to_string(rec.item);
            out += ',' + csv_quote(rec.graph6);
            out += ',' + rec.report.name;
            out += ',' + csv_quote(rec.report.params.str());
            out += ',' + fmt_double(rec.report.lhs);
            out += ',' + fmt_double(rec.report.rhs);
            out += ',' + fmt_double(rec.report.slack);
            out += rec.report.holds ? ",true" : ",false";
            out += rec.report.equality ? ",true\n" : ",false\n";
        }
    };
    rows("violation", r.violations);
    rows("discovery", r.discoveries);
    rows("equality", r.equalities);
    rows("tightest", r.tightest);
    return out;
}

} // namespace scl
