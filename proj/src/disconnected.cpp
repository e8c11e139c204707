#include "dartcover/disconnected.hpp"

#include "dartcover/dichotomy.hpp"
#include "dartcover/errors.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

namespace dartcover {

std::vector<int> CoveringPattern::neighbours(int i) const
{
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.i == i)
            out.push_back(e.j);
    return out;
}

const PatternEdge* CoveringPattern::edge(int i, int j) const
{
    for (const auto& e : edges)
        if (e.i == i && e.j == j)
            return &e;
    return nullptr;
}

CellDecider default_cell_decider(int dart_budget)
{
    return [dart_budget](const Graph& a, const Graph& b) -> std::optional<DartMapping> {
        if (b.num_vertices() <= 2 && classify(b).verdict == Verdict::P)
            return decide_colored(a, b).witness;
        if (a.num_darts() > dart_budget)
            throw ResourceLimit("component with " + std::to_string(a.num_darts()) +
                                " darts exceeds the exact-search budget of " + std::to_string(dart_budget));
        return find_cover(a, b);
    };
}

namespace {

struct Cells {
    ComponentDecomposition gc, hc;
    std::vector<std::optional<DartMapping>> result;
};

[[noreturn]] void rethrow_cell(std::exception_ptr ep, int i, int j)
{
    const std::string where = "cell (" + std::to_string(i) + "," + std::to_string(j) + "): ";
    try {
        std::rethrow_exception(ep);
    }
    catch (const ResourceLimit& e) {
        throw ResourceLimit(where + e.what());
    }
    catch (const Error& e) {
        throw Error(e.kind(), where + e.what());
    }
}

std::optional<DartMapping> run_cell(const Cells& c, int i, int j, const CellDecider& decider)
{
    const Graph& a = c.gc.components[i].graph;
    const Graph& b = c.hc.components[j].graph;
    if (a.num_vertices() % b.num_vertices() != 0)
        return std::nullopt;
    return decider(a, b);
}

CoveringPattern assemble(Cells& c)
{
    CoveringPattern p;
    for (const auto& comp : c.gc.components)
        p.g_sizes.push_back(comp.graph.num_vertices());
    for (const auto& comp : c.hc.components)
        p.h_sizes.push_back(comp.graph.num_vertices());
    const int q = p.q();
    for (int i = 0; i < p.p(); ++i)
        for (int j = 0; j < q; ++j)
            if (auto& w = c.result[static_cast<std::size_t>(i) * q + j])
                p.edges.push_back({i, j, p.g_sizes[i] / p.h_sizes[j], std::move(*w)});
    return p;
}

}  // namespace

CoveringPattern build_pattern(const Graph& g, const Graph& h, const CellDecider& decider, int jobs)
{
    Cells c{components(g), components(h), {}};
    const int p = static_cast<int>(c.gc.components.size());
    const int q = static_cast<int>(c.hc.components.size());
    const long cells = static_cast<long>(p) * q;
    c.result.resize(cells);
    std::vector<std::exception_ptr> errors(cells);

#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
    for (long cell = 0; cell < cells; ++cell) {
        try {
            c.result[cell] = run_cell(c, static_cast<int>(cell / q), static_cast<int>(cell % q), decider);
        }
        catch (...) {
            errors[cell] = std::current_exception();
        }
    }

    for (long cell = 0; cell < cells; ++cell)
        if (errors[cell])
            rethrow_cell(errors[cell], static_cast<int>(cell / q), static_cast<int>(cell % q));
    return assemble(c);
}

CoveringPattern build_pattern_serial(const Graph& g, const Graph& h, const CellDecider& decider)
{
    Cells c{components(g), components(h), {}};
    const int p = static_cast<int>(c.gc.components.size());
    const int q = static_cast<int>(c.hc.components.size());
    c.result.resize(static_cast<std::size_t>(p) * q);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
            try {
                c.result[static_cast<std::size_t>(i) * q + j] = run_cell(c, i, j, decider);
            }
            catch (...) {
                rethrow_cell(std::current_exception(), i, j);
            }
        }
    }
    return assemble(c);
}

CoveringPattern pattern_from_weights(const std::vector<std::vector<int>>& weights, std::vector<int> g_sizes,
                                     std::vector<int> h_sizes)
{
    CoveringPattern p{std::move(g_sizes), std::move(h_sizes), {}};
    if (static_cast<int>(weights.size()) != p.p())
        throw std::invalid_argument("pattern_from_weights: row count differs from p");
    for (int i = 0; i < p.p(); ++i) {
        if (static_cast<int>(weights[i].size()) != p.q())
            throw std::invalid_argument("pattern_from_weights: column count differs from q");
        for (int j = 0; j < p.q(); ++j)
            if (weights[i][j] > 0)
                p.edges.push_back({i, j, weights[i][j], {}});
    }
    return p;
}

const char* to_string(Semantics s)
{
    switch (s) {
    case Semantics::LBHom: return "lbhom";
    case Semantics::Surjective: return "surjective";
    case Semantics::Equitable: return "equitable";
    case Semantics::Cover: return "cover";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(const std::string& s)
{
    for (Semantics v : {Semantics::LBHom, Semantics::Surjective, Semantics::Equitable, Semantics::Cover})
        if (s == to_string(v))
            return v;
    return std::nullopt;
}

BipartiteMatching max_pattern_matching(const CoveringPattern& p)
{
    std::vector<std::vector<int>> adj(p.p());
    for (const auto& e : p.edges)
        adj[e.i].push_back(e.j);
    return max_bipartite_matching(p.p(), p.q(), adj);
}

namespace {

Decision make(Semantics s, const CoveringPattern& p)
{
    Decision d;
    d.semantics = s;
    d.pattern = p;
    return d;
}

int first_isolated(const CoveringPattern& p)
{
    std::vector<char> has(p.p(), 0);
    for (const auto& e : p.edges)
        has[e.i] = 1;
    auto it = std::find(has.begin(), has.end(), 0);
    return it == has.end() ? -1 : static_cast<int>(it - has.begin());
}

}  // namespace

Decision decide_lbhom(const CoveringPattern& p)
{
    Decision d = make(Semantics::LBHom, p);
    if (const int i = first_isolated(p); i >= 0) {
        d.reason = "component g_" + std::to_string(i) + " covers no component of H";
        return d;
    }
    d.answer = true;
    for (int i = 0; i < p.p(); ++i)
        d.sigma.push_back(p.neighbours(i).front());
    return d;
}

Decision decide_surjective(const CoveringPattern& p)
{
    Decision d = make(Semantics::Surjective, p);
    if (const int i = first_isolated(p); i >= 0) {
        d.reason = "component g_" + std::to_string(i) + " covers no component of H";
        return d;
    }
    if (max_pattern_matching(p).size < p.q()) {
        d.reason = "no matching of the pattern saturates all " + std::to_string(p.q()) + " components of H";
        return d;
    }

    // Greedy smallest choice, keeping the uncovered targets matchable into
    // the sources still to be assigned.
    std::vector<std::vector<int>> nbr(p.p());
    for (int i = 0; i < p.p(); ++i)
        nbr[i] = p.neighbours(i);
    std::vector<int> covered(p.q(), 0);
    auto completable = [&](int next) {
        std::vector<int> open;
        for (int j = 0; j < p.q(); ++j)
            if (!covered[j])
                open.push_back(j);
        std::vector<std::vector<int>> adj(open.size());
        for (std::size_t a = 0; a < open.size(); ++a)
            for (int i = next; i < p.p(); ++i)
                if (std::binary_search(nbr[i].begin(), nbr[i].end(), open[a]))
                    adj[a].push_back(i - next);
        return max_bipartite_matching(static_cast<int>(open.size()), p.p() - next, adj).size ==
               static_cast<int>(open.size());
    };
    for (int i = 0; i < p.p(); ++i) {
        bool placed = false;
        for (int j : nbr[i]) {
            ++covered[j];
            if (completable(i + 1)) {
                d.sigma.push_back(j);
                placed = true;
                break;
            }
            --covered[j];
        }
        if (!placed)
            throw std::logic_error("surjective assignment lost feasibility");
    }
    d.answer = true;
    return d;
}

Decision decide_equitable(const CoveringPattern& p, long long n_g, long long n_h)
{
    Decision d = make(Semantics::Equitable, p);
    if (n_h == 0) {
        d.answer = n_g == 0;
        if (!d.answer)
            d.reason = "H is empty but G is not";
        return d;
    }
    if (n_g == 0 || n_g % n_h != 0) {
        d.reason = "k = " + std::to_string(n_g) + "/" + std::to_string(n_h) + " is not a positive integer";
        return d;
    }
    const long long k = n_g / n_h;
    const int q = p.q();

    // States are fibre vectors (k_1..k_q) in mixed radix k+1.
    std::vector<std::uint64_t> radix(q + 1, 1);
    for (int j = 0; j < q; ++j) {
        if (radix[j] > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k + 1))
            throw ResourceLimit("equitable table (k+1)^q does not fit in 64 bits");
        radix[j + 1] = radix[j] * static_cast<std::uint64_t>(k + 1);
    }
    std::uint64_t goal = 0;
    for (int j = 0; j < q; ++j)
        goal += static_cast<std::uint64_t>(k) * radix[j];
    auto digit = [&](std::uint64_t s, int j) { return static_cast<long long>((s / radix[j]) % (k + 1)); };

    std::vector<std::vector<std::pair<int, int>>> moves(p.p());  // (j, r_ij)
    for (const auto& e : p.edges)
        moves[e.i].emplace_back(e.j, e.weight);

    // good[s]: partial vectors over components < s that can still reach the goal.
    std::vector<std::unordered_set<std::uint64_t>> good(p.p() + 1);
    good[p.p()].insert(goal);
    for (int s = p.p() - 1; s >= 0; --s) {
        for (std::uint64_t state : good[s + 1])
            for (auto [j, r] : moves[s])
                if (digit(state, j) >= r)
                    good[s].insert(state - static_cast<std::uint64_t>(r) * radix[j]);
        if (good[s].empty())
            break;
    }
    if (!good[0].contains(0)) {
        d.reason = "no assignment gives every component of H exactly k = " + std::to_string(k);
        return d;
    }

    std::uint64_t state = 0;
    for (int s = 0; s < p.p(); ++s) {
        int best = -1;
        std::uint64_t best_state = 0;
        for (auto [j, r] : moves[s]) {
            if (digit(state, j) + r > k)
                continue;
            const std::uint64_t next = state + static_cast<std::uint64_t>(r) * radix[j];
            if (good[s + 1].contains(next) && (best < 0 || j < best)) {
                best = j;
                best_state = next;
            }
        }
        d.sigma.push_back(best);
        state = best_state;
    }
    d.answer = true;
    return d;
}

Decision decide(const Graph& g, const Graph& h, Semantics semantics, bool want_witness, const DecideOptions& options)
{
    require_valid(g);
    require_valid(h);
    if (semantics == Semantics::Cover && !is_connected(h))
        throw OutOfScope("cover semantics needs a connected target; use lbhom, surjective or equitable");

    const auto decider = default_cell_decider(options.dart_budget);
    CoveringPattern pattern = build_pattern(g, h, decider, options.jobs);
    Decision d;
    switch (semantics) {
    case Semantics::LBHom:
    case Semantics::Cover: d = decide_lbhom(pattern); break;
    case Semantics::Surjective: d = decide_surjective(pattern); break;
    case Semantics::Equitable: d = decide_equitable(pattern, g.num_vertices(), h.num_vertices()); break;
    }
    d.semantics = semantics;
    if (!d.answer || !want_witness)
        return d;

    const auto gc = components(g);
    const auto hc = components(h);
    DartMapping f;
    f.dart_map.assign(g.num_darts(), kNoDart);
    f.vertex_map.assign(g.num_vertices(), kNoVertex);
    for (int i = 0; i < d.pattern.p(); ++i) {
        const int j = d.sigma[i];
        const auto& local = d.pattern.edge(i, j)->witness;
        const auto& gi = gc.components[i];
        const auto& hj = hc.components[j];
        for (std::size_t x = 0; x < local.dart_map.size(); ++x)
            f.dart_map[gi.dart_origin[x]] = hj.dart_origin[local.dart_map[x]];
        for (std::size_t x = 0; x < local.vertex_map.size(); ++x)
            f.vertex_map[gi.vertex_origin[x]] = hj.vertex_origin[local.vertex_map[x]];
    }
    const bool onto = semantics != Semantics::LBHom;
    if (auto v = verify_cover(g, h, f, onto); !v.empty())
        throw std::logic_error("stitched witness failed verification: " + v.front().detail);
    std::vector<int> profile(h.num_vertices(), 0);
    for (VertexId x : f.vertex_map)
        ++profile[x];
    if (semantics == Semantics::Equitable) {
        const long long k = g.num_vertices() / h.num_vertices();
        for (int c : profile)
            if (c != k)
                throw std::logic_error("stitched equitable witness has an unequal fibre");
    }
    d.fiber_profile = std::move(profile);
    d.witness = std::move(f);
    return d;
}

}  // namespace dartcover
