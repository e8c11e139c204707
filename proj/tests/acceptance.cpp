// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include "fuzz.hpp"
#include "oracles.hpp"

#include "dartcover/canonical.hpp"
#include "dartcover/constructions.hpp"
#include "dartcover/disconnected.hpp"
#include "dartcover/generate.hpp"
#include "dartcover/stronger.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace dartcover;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Result {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Result& r, double secs, double limit)
{
    const bool ok = r.pass && secs < limit;
    if (!ok)
        ++failures;
    std::printf("criterion %2d: %s  %s  [%s; %.2fs, limit %.0fs]\n", id, ok ? "PASS" : "FAIL", title,
                r.detail.c_str(), secs, limit);
    std::fflush(stdout);
}

template <class F>
void run(int id, const char* title, double limit, F&& body)
{
    const auto t = Clock::now();
    Result r;
    try {
        r = body();
    }
    catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    report(id, title, r, seconds_since(t), limit);
}

Graph join(const std::vector<Graph>& parts)
{
    Graph out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = disjoint_union(out, parts[i]);
    return out;
}

// 1 ------------------------------------------------------------------------

Result small_graph_census()
{
    struct Target {
        std::string name;
        Graph h;
        std::function<bool(const Graph&, int)> expected;  // graph, its regular degree or -1
    };
    std::vector<Target> targets;
    for (int k = 0; k <= 3; ++k)
        targets.push_back({"F(" + std::to_string(k) + ",0)", build_F(k, 0),
                           [k](const Graph& g, int d) { return d == k && oracle::edge_colorable(g, k); }});
    for (int k = 0; k <= 3; ++k)
        targets.push_back({"F(1," + std::to_string(k) + ")", build_F(1, k), [k](const Graph& g, int d) {
                               return d == 2 * k + 1 && oracle::has_perfect_matching(g);
                           }});
    for (int k = 1; k <= 3; ++k)
        targets.push_back({"W(0,0," + std::to_string(k) + ",0,0)", build_W(0, 0, k, 0, 0),
                           [k](const Graph& g, int d) { return d == k && oracle::bipartite_bfs(g); }});

    long graphs = 0, checks = 0, yes = 0, mismatches = 0;
    std::string first;
    generate_simple_graphs({10, -1, true}, [&](const SimpleGraph& s) {
        ++graphs;
        const Graph g = from_simple(s);
        const int d = oracle::regular_degree(g);
        for (const auto& t : targets) {
            ++checks;
            const auto f = find_cover(g, t.h);
            const bool want = t.expected(g, d);
            if (f.has_value() != want || (f && !verify_cover(g, t.h, *f).empty())) {
                ++mismatches;
                if (first.empty())
                    first = "; first mismatch on " + t.name;
            }
            yes += f.has_value();
        }
    });
    std::ostringstream out;
    out << graphs << " connected graphs on <=10 vertices, " << checks << " checks, " << yes << " covers, "
        << mismatches << " mismatches" << first;
    return {mismatches == 0 && graphs == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117 + 261080 + 11716571, out.str()};
}

// 2 ------------------------------------------------------------------------

Result snark_witness()
{
    const bool p11 = find_cover(petersen(), build_F(1, 1)).has_value();
    const bool p30 = find_cover(petersen(), build_F(3, 0)).has_value();
    const bool k11 = find_cover(complete(4), build_F(1, 1)).has_value();
    const bool k30 = find_cover(complete(4), build_F(3, 0)).has_value();
    std::ostringstream out;
    out << "Petersen->F(1,1) " << p11 << ", Petersen->F(3,0) " << p30 << ", K4->F(1,1) " << k11
        << ", K4->F(3,0) " << k30;
    return {p11 && !p30 && k11 && k30, out.str()};
}

// 3 ------------------------------------------------------------------------

Result semantics_triple()
{
    const Graph g = join({cycle(3), cycle(4)});
    const Graph h = join({build_F(0, 1), build_F(2, 0)});
    const auto lb = decide(g, h, Semantics::LBHom, true);
    const auto su = decide(g, h, Semantics::Surjective, true);
    const auto eq = decide(g, h, Semantics::Equitable, true);
    const bool lb_ok = lb.answer && lb.witness && verify_cover(g, h, *lb.witness, false).empty();
    const bool su_ok = su.answer && su.witness && verify_cover(g, h, *su.witness, true).empty();
    const bool eq_ok = !eq.answer && !eq.witness;
    std::ostringstream out;
    out << "lbhom " << (lb.answer ? "yes" : "no") << ", surjective " << (su.answer ? "yes" : "no")
        << ", equitable " << (eq.answer ? "yes" : "no") << " (" << eq.reason << ")";
    return {lb_ok && su_ok && eq_ok, out.str()};
}

// 4 ------------------------------------------------------------------------

Result lbhom_collapse()
{
    std::vector<Graph> cubic;
    generate_simple_graphs({10, 3, true}, [&](const SimpleGraph& s) { cubic.push_back(from_simple(s)); });
    const Graph h = join({build_F(3, 0), build_F(1, 1)});
    std::vector<std::vector<int>> unions;
    for (std::size_t a = 0; a < cubic.size(); ++a)
        for (std::size_t b = a; b < cubic.size(); ++b)
            unions.push_back({static_cast<int>(a), static_cast<int>(b)});
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(cubic.size()) - 1), size(1, 4);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> u(size(rng));
        for (auto& x : u)
            x = pick(rng);
        unions.push_back(u);
    }
    for (std::size_t a = 0; a < cubic.size(); ++a)
        unions.push_back({static_cast<int>(a)});

    int mismatches = 0, yes = 0;
    for (const auto& u : unions) {
        std::vector<Graph> parts;
        bool each = true;
        for (int i : u) {
            parts.push_back(cubic[i]);
            each = each && oracle::has_perfect_matching(cubic[i]);
        }
        const Graph g = join(parts);
        const auto d = decide(g, h, Semantics::LBHom, true);
        if (d.answer != each || (d.answer && !verify_cover(g, h, *d.witness, false).empty()))
            ++mismatches;
        yes += d.answer;
    }
    std::ostringstream out;
    out << unions.size() << " unions over " << cubic.size() << " cubic graphs, " << yes << " yes, " << mismatches
        << " mismatches";
    return {mismatches == 0 && unions.size() >= 200, out.str()};
}

// 5 ------------------------------------------------------------------------

Result equitable_dp()
{
    std::mt19937 rng(505);
    int yes = 0, mismatches = 0, bad_sigma = 0, cases = 0;
    while (cases < 100) {
        std::uniform_int_distribution<int> qd(1, 3), kd(1, 12), hd(1, 3);
        const int q = qd(rng), k = kd(rng);
        std::vector<int> h_sizes(q);
        for (auto& x : h_sizes)
            x = hd(rng);
        // plant a split of k at every target, then perturb
        std::vector<int> g_sizes;
        std::vector<int> home;
        for (int j = 0; j < q; ++j) {
            int left = k;
            while (left > 0) {
                const int w = std::uniform_int_distribution<int>(1, left)(rng);
                g_sizes.push_back(w * h_sizes[j]);
                home.push_back(j);
                left -= w;
            }
        }
        if (g_sizes.size() > 8)
            continue;
        const int p = static_cast<int>(g_sizes.size());
        if (std::bernoulli_distribution(0.4)(rng)) {
            const int i = std::uniform_int_distribution<int>(0, p - 1)(rng);
            g_sizes[i] = h_sizes[home[i]] * std::uniform_int_distribution<int>(1, 4)(rng);
        }
        std::vector<std::vector<int>> w(p, std::vector<int>(q, 0));
        std::bernoulli_distribution keep_home(0.8), extra(0.4);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                const bool on = j == home[i] ? keep_home(rng) : extra(rng);
                if (on && g_sizes[i] % h_sizes[j] == 0)
                    w[i][j] = g_sizes[i] / h_sizes[j];
            }
        long long n_g = 0, n_h = 0;
        for (int s : g_sizes)
            n_g += s;
        for (int s : h_sizes)
            n_h += s;
        if (n_g % n_h != 0 || n_g / n_h > 12)
            continue;
        ++cases;
        const int kk = static_cast<int>(n_g / n_h);
        const auto d = decide_equitable(pattern_from_weights(w, g_sizes, h_sizes), n_g, n_h);
        const bool expected = oracle::equitable_exists(w, kk);
        if (d.answer != expected)
            ++mismatches;
        if (d.answer) {
            ++yes;
            std::vector<int> load(q, 0);
            bool ok = static_cast<int>(d.sigma.size()) == p;
            for (int i = 0; ok && i < p; ++i) {
                ok = w[i][d.sigma[i]] > 0;
                if (ok)
                    load[d.sigma[i]] += w[i][d.sigma[i]];
            }
            for (int x : load)
                ok = ok && x == kk;
            bad_sigma += !ok;
        }
    }
    std::ostringstream out;
    out << cases << " patterns, " << yes << " yes, " << mismatches << " mismatches, " << bad_sigma
        << " bad reconstructions";
    return {mismatches == 0 && bad_sigma == 0, out.str()};
}

// 6 ------------------------------------------------------------------------

Result bin_packing_family()
{
    long instances = 0, mismatches = 0, yes = 0;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (!parts.empty()) {
            for (int q = 1; q <= 3; ++q) {
                ++instances;
                const auto [g, h] = gen_binpacking({parts, q});
                const bool got = decide(g, h, Semantics::Equitable, false).answer;
                if (got != oracle::partition_feasible(parts, q))
                    ++mismatches;
                yes += got;
            }
        }
        for (int x = std::min(left, max_part); x >= 1; --x) {
            parts.push_back(x);
            rec(left - x, x);
            parts.pop_back();
        }
    };
    rec(30, 30);
    std::ostringstream out;
    out << instances << " instances (item multisets with sum <= 30, q <= 3), " << yes << " yes, " << mismatches
        << " mismatches";
    return {mismatches == 0 && instances >= 10000, out.str()};
}

// 7 ------------------------------------------------------------------------

/// Connected uncoloured multigraphs with at most `max_darts` darts, one per
/// isomorphism class, by multiplicities of semi-edges, loops and edges.
std::vector<Graph> small_multigraphs(int max_darts)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_darts / 2 + 1; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        // slots: semis per vertex, loops per vertex, edges per pair
        const int slots = 2 * n + static_cast<int>(pairs.size());
        std::vector<int> mult(slots, 0);
        std::set<std::vector<int>> seen;
        auto cost = [&](int s) { return s < n ? 1 : 2; };
        auto canonical = [&]() {
            std::vector<int> perm(n), best;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> key(slots);
                for (int v = 0; v < n; ++v) {
                    key[perm[v]] = mult[v];
                    key[n + perm[v]] = mult[n + v];
                }
                std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
                for (std::size_t e = 0; e < pairs.size(); ++e) {
                    const int a = perm[pairs[e].first], b = perm[pairs[e].second];
                    m[a][b] = m[b][a] = mult[2 * n + e];
                }
                for (std::size_t e = 0; e < pairs.size(); ++e)
                    key[2 * n + e] = m[pairs[e].first][pairs[e].second];
                if (best.empty() || key < best)
                    best = key;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return best;
        };
        std::function<void(int, int)> rec = [&](int slot, int budget) {
            if (slot == slots) {
                GraphBuilder b;
                for (int v = 0; v < n; ++v)
                    b.add_vertex();
                for (int v = 0; v < n; ++v) {
                    for (int i = 0; i < mult[v]; ++i)
                        b.add_semi(v);
                    for (int i = 0; i < mult[n + v]; ++i)
                        b.add_loop(v);
                }
                for (std::size_t e = 0; e < pairs.size(); ++e)
                    for (int i = 0; i < mult[2 * n + e]; ++i)
                        b.add_edge(pairs[e].first, pairs[e].second);
                Graph g = b.build();
                if (is_connected(g) && seen.insert(canonical()).second)
                    out.push_back(std::move(g));
                return;
            }
            for (int m = 0; m * cost(slot) <= budget; ++m) {
                mult[slot] = m;
                rec(slot + 1, budget - m * cost(slot));
            }
            mult[slot] = 0;
        };
        rec(0, max_darts);
    }
    return out;
}

Result double_cover_laws()
{
    const auto graphs = small_multigraphs(8);
    std::vector<Graph> bipartite;
    generate_simple_graphs({8, -1, false}, [&](const SimpleGraph& s) {
        Graph g = from_simple(s);
        if (oracle::bipartite_bfs(g))
            bipartite.push_back(std::move(g));
    });
    auto covers = [](const Graph& g, const Graph& h) {
        if (is_connected(h))
            return find_cover(g, h).has_value();
        return decide(g, h, Semantics::LBHom, false).answer;
    };
    long projection_failures = 0, law_mismatches = 0, pairs = 0, yes = 0;
    for (const Graph& g : graphs) {
        const auto dc = double_cover(g);
        std::vector<int> fibre(g.num_vertices(), 0);
        for (VertexId x : dc.projection.vertex_map)
            ++fibre[x];
        const bool two_fold = std::all_of(fibre.begin(), fibre.end(), [](int x) { return x == 2; });
        if (!verify_cover(dc.graph, g, dc.projection).empty() || !two_fold)
            ++projection_failures;
        for (const Graph& b : bipartite) {
            ++pairs;
            const bool direct = covers(b, g);
            if (direct != covers(b, dc.graph))
                ++law_mismatches;
            yes += direct;
        }
    }
    std::ostringstream out;
    out << graphs.size() << " connected graphs with <=8 darts, " << bipartite.size() << " bipartite simple graphs, "
        << pairs << " pairs (" << yes << " covering), " << projection_failures << " projection failures, "
        << law_mismatches << " law mismatches";
    return {projection_failures == 0 && law_mismatches == 0, out.str()};
}

// 8 ------------------------------------------------------------------------

std::string cert(const Graph& g)
{
    return certificate(to_simple(g));
}

Result stronger_evidence()
{
    constexpr int jobs = 4;
    const auto a = check_stronger(build_F(2, 0), build_F(0, 1), 10, jobs);
    const bool a_ok = a.outcome == StrongerReport::Outcome::VerifiedUpTo && a.n_max == 10;

    const auto e = check_equivalent(build_W(0, 0, 2, 0, 0), build_F(2, 0), 10, jobs);
    std::set<std::string> even;
    for (int n = 4; n <= 10; n += 2)
        even.insert(cert(cycle(n)));
    auto as_set = [](const std::vector<Graph>& gs) {
        std::set<std::string> s;
        for (const auto& g : gs)
            s.insert(cert(g));
        return s;
    };
    const bool e_ok = e.equivalent() && as_set(e.forward.covers_of_a) == even && as_set(e.backward.covers_of_a) == even &&
                      e.forward.covers_of_a.size() == even.size() && e.backward.covers_of_a.size() == even.size();

    const auto s = check_stronger(build_F(1, 1), build_F(3, 0), 10, jobs);
    bool s_ok = s.outcome == StrongerReport::Outcome::Counterexample && s.counterexample &&
                s.counterexample->num_vertices() == 10 &&
                verify_cover(*s.counterexample, build_F(1, 1), *s.witness_to_a).empty() &&
                enumerate_covers(*s.counterexample, build_F(3, 0), 1).covers.empty();
    bool has_petersen = false;
    for (const auto& g : s.minimum_counterexamples) {
        has_petersen = has_petersen || cert(g) == cert(petersen());
        s_ok = s_ok && g.num_vertices() == 10 && enumerate_covers(g, build_F(3, 0), 1).covers.empty();
    }
    std::ostringstream out;
    out << "F(2,0)|>F(0,1) " << (a_ok ? "verified" : "NOT verified") << "; W(0,0,2,0,0)~F(2,0) "
        << (e_ok ? "verified, covers = even cycles" : "NOT verified") << "; F(1,1)|>F(3,0) counterexample order "
        << (s.counterexample ? s.counterexample->num_vertices() : 0) << ", " << s.minimum_counterexamples.size()
        << " of that order, Petersen " << (has_petersen ? "among them" : "missing");
    return {a_ok && e_ok && s_ok && has_petersen, out.str()};
}

// 9 ------------------------------------------------------------------------

Result classifier_table()
{
    struct Row {
        std::string name;
        Graph h;
        Verdict verdict;
        std::string cites;
    };
    std::vector<Row> rows;
    for (int c = 0; c <= 3; ++c) {
        rows.push_back({"F(0," + std::to_string(c) + ")", build_F(0, c), Verdict::P, ""});
        rows.push_back({"F(1," + std::to_string(c) + ")", build_F(1, c), Verdict::P, ""});
    }
    rows.push_back({"F(2,0)", build_F(2, 0), Verdict::P, ""});
    for (int k = 1; k <= 3; ++k)
        rows.push_back({"W(0,0," + std::to_string(k) + ",0,0)", build_W(0, 0, k, 0, 0), Verdict::P, ""});
    rows.push_back({"F(2,1)", build_F(2, 1), Verdict::NPComplete, "F(2,1): a>=2 and a+b>=3, NP-complete"});
    rows.push_back({"F(3,0)", build_F(3, 0), Verdict::NPComplete, "F(3,0): a>=2 and a+b>=3, NP-complete"});
    rows.push_back({"W(1,1,1,1,1)", build_W(1, 1, 1, 1, 1), Verdict::NPComplete,
                    "W(1,1,1,1,1): l>=1, k+2m=q+2p>0 and k+2m+l>=3, NP-complete"});
    rows.push_back({"WD(1,2,1)", build_WD(1, 2, 1), Verdict::NPComplete, "WD(1,2,1): l>=1, m>0 and m+l>=3, NP-complete"});
    rows.push_back({"W(2,2,2,1,1)", build_W(2, 2, 2, 1, 1), Verdict::NPComplete, "F(2,2): a>=2 and a+b>=3, NP-complete"});

    int wrong = 0;
    std::string first;
    for (const auto& r : rows) {
        const auto c = classify(r.h);
        bool ok = c.verdict == r.verdict;
        if (!r.cites.empty())
            ok = ok && std::any_of(c.rule_chain.begin(), c.rule_chain.end(), [&](const std::string& s) {
                     return s.find(r.cites) != std::string::npos;
                 });
        if (!ok) {
            ++wrong;
            if (first.empty())
                first = "; first wrong row " + r.name;
        }
    }
    std::ostringstream out;
    out << rows.size() << " rows, " << wrong << " wrong" << first;
    return {wrong == 0, out.str()};
}

// 10 -----------------------------------------------------------------------

Result decider_fuzz()
{
    int total = 0, mismatches = 0, bad = 0, families = 0, yes = 0;
    std::string first;
    unsigned seed = 1000;
    for (const auto& f : fuzz::families()) {
        ++families;
        const auto o = fuzz::run(f, 1000, 16, seed++);
        total += o.cases;
        yes += o.yes;
        mismatches += o.mismatches;
        bad += o.bad_witnesses;
        if (first.empty() && !o.first_failure.empty())
            first = "; first failure: " + f.name;
    }
    std::ostringstream out;
    out << families << " target families x 1000 inputs (<=16 darts), " << yes << " yes, " << mismatches
        << " mismatches, " << bad << " unverified witnesses" << first;
    return {mismatches == 0 && bad == 0, out.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    // optional criterion filter, e.g. `acceptance 3 5`
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));
    auto want = [&](int id) { return only.empty() || only.contains(id); };

    if (want(1))
        run(1, "small-graph census against F(k,0), F(1,k), W(0,0,k,0,0)", 600, small_graph_census);
    if (want(2))
        run(2, "snark witness", 1, snark_witness);
    if (want(3))
        run(3, "disconnected semantics triple", 1, semantics_triple);
    if (want(4))
        run(4, "lbhom collapse onto F(3,0)+F(1,1)", 60, lbhom_collapse);
    if (want(5))
        run(5, "equitable DP against sigma enumeration", 60, equitable_dp);
    if (want(6))
        run(6, "bin-packing instance family", 600, bin_packing_family);
    if (want(7))
        run(7, "double cover laws", 600, double_cover_laws);
    if (want(8))
        run(8, "stronger-than evidence", 300, stronger_evidence);
    if (want(9))
        run(9, "classifier table", 1, classifier_table);
    if (want(10))
        run(10, "polynomial deciders against the exact search", 600, decider_fuzz);
    return failures;
}
