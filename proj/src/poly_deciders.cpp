#include "dartcover/poly_deciders.hpp"

#include "dartcover/constructions.hpp"
#include "dartcover/errors.hpp"
#include "dartcover/partition_cover.hpp"
#include "dartcover/two_sat.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dartcover {

const char* to_string(DeciderMethod m)
{
    switch (m) {
    case DeciderMethod::Regularity: return "regularity";
    case DeciderMethod::Matching: return "matching";
    case DeciderMethod::TwoFactor: return "2-factor";
    case DeciderMethod::BipartiteDecomposition: return "bipartite-decomposition";
    case DeciderMethod::TwoSat: return "2-SAT";
    case DeciderMethod::Partition: return "partition";
    case DeciderMethod::BruteForceFallback: return "brute-force-fallback";
    }
    return "?";
}

namespace {

DeciderVerdict no(DeciderMethod method, std::string reason)
{
    return {false, method, std::nullopt, std::move(reason)};
}

DeciderVerdict from_mapping(DeciderMethod method, std::optional<DartMapping> f, std::string reason)
{
    if (f)
        return {true, method, std::move(f), {}};
    return no(method, std::move(reason));
}

std::string vname(VertexId v) { return "vertex " + std::to_string(v); }

/// Semi-edges and loops of colour set {a,a} at one target vertex.
struct Bouquet {
    std::vector<Dart> semis;
    std::vector<std::pair<Dart, Dart>> loops;
};

std::map<Color, Bouquet> bouquets_at(const Graph& h, VertexId x)
{
    std::map<Color, Bouquet> out;
    for (LinkId l = 0; l < h.num_links(); ++l) {
        auto ds = h.link_darts(l);
        if (h.vertex_of(ds[0]) != x || h.link_kind(l) == LinkKind::Edge)
            continue;
        const auto [a, b] = link_color_set(h, l);
        if (a != b)
            continue;
        if (ds.size() == 1)
            out[a].semis.push_back(ds[0]);
        else
            out[a].loops.emplace_back(ds[0], ds[1]);
    }
    return out;
}

void require_two_vertex_target(const Graph& h)
{
    if (h.num_vertices() != 2 || !is_connected(h))
        throw OutOfScope("target must be a connected graph on two vertices");
}

bool distinguishable(const Graph& h)
{
    return h.vertex_color(0) != h.vertex_color(1) || class_profile(h, 0) != class_profile(h, 1);
}

}  // namespace

DeciderVerdict decide_one_vertex(const Graph& g, int b, int c)
{
    if (b < 0 || c < 0)
        throw std::invalid_argument("decide_one_vertex: parameters must be non-negative");
    if (!bouquet_is_polynomial(b, c))
        throw UnsupportedFamily("F(" + std::to_string(b) + "," + std::to_string(c) +
                                ")-Cover is NP-complete (b>=2 and b+c>=3); use the exact search");
    const DeciderMethod method =
        b == 0 ? DeciderMethod::TwoFactor : b == 1 ? DeciderMethod::Matching : DeciderMethod::Regularity;
    if (g.num_vertices() == 0)
        return no(method, "empty graph cannot map onto the target");
    const int want = b + 2 * c;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != want)
            return no(method, vname(v) + " has degree " + std::to_string(g.degree(v)) + ", expected " +
                                  std::to_string(want));
    std::vector<int> semis(g.num_vertices(), 0);
    for (LinkId l = 0; l < g.num_links(); ++l)
        if (g.link_kind(l) == LinkKind::SemiEdge)
            ++semis[g.vertex_of(g.link_darts(l)[0])];
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (semis[v] > b)
            return no(method, vname(v) + " has more semi-edges than the target");

    const Graph s = strip_colors(g);
    const Graph h = build_F(b, c);
    std::string why;
    auto f = cover_from_partition(s, h, std::vector<int>(g.num_vertices(), 0), &why);
    const char* what = b == 0 ? "no 2-factorisation: " : b == 1 ? "no perfect matching: " : "odd cycle: ";
    return from_mapping(method, std::move(f), what + why);
}

DeciderVerdict decide_bipartite_bars(const Graph& g, int k)
{
    if (k < 1)
        throw std::invalid_argument("decide_bipartite_bars: W(0,0,k,0,0) needs k >= 1");
    const DeciderMethod method = DeciderMethod::BipartiteDecomposition;
    if (g.num_vertices() == 0)
        return no(method, "empty graph cannot map onto the target");
    for (LinkId l = 0; l < g.num_links(); ++l)
        if (g.link_kind(l) != LinkKind::Edge)
            return no(method, "graph has a loop or semi-edge");
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != k)
            return no(method, vname(v) + " has degree " + std::to_string(g.degree(v)) + ", expected " +
                                  std::to_string(k));
    auto sides = bipartition(g);
    if (sides.empty())
        return no(method, "graph is not bipartite");
    return from_mapping(method, cover_from_partition(strip_colors(g), build_W(0, 0, k, 0, 0), sides),
                        "regular bipartite graph did not split");
}

DeciderVerdict decide_two_vertex_nonregular(const Graph& g, const Graph& h)
{
    require_two_vertex_target(h);
    if (!distinguishable(h))
        throw OutOfScope("target vertices are indistinguishable; use the 2-SAT decider");
    for (VertexId x = 0; x < 2; ++x)
        for (const auto& [colour, piece] : bouquets_at(h, x)) {
            const int b = static_cast<int>(piece.semis.size()), c = static_cast<int>(piece.loops.size());
            if (!bouquet_is_polynomial(b, c))
                throw UnsupportedFamily("colour " + std::to_string(colour) + " piece at vertex " +
                                        h.vertex_name(x) + " is F(" + std::to_string(b) + "," +
                                        std::to_string(c) + "), NP-complete since b>=2 and b+c>=3");
        }
    const DeciderMethod method = DeciderMethod::Partition;
    if (g.num_vertices() == 0)
        return no(method, "empty graph cannot map onto the target");

    const ClassProfile p0 = class_profile(h, 0), p1 = class_profile(h, 1);
    std::vector<int> side(g.num_vertices());
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const ClassProfile pu = class_profile(g, u);
        if (g.vertex_color(u) == h.vertex_color(0) && pu == p0)
            side[u] = 0;
        else if (g.vertex_color(u) == h.vertex_color(1) && pu == p1)
            side[u] = 1;
        else
            return no(method, vname(u) + " matches neither target vertex");
    }
    std::string why;
    auto f = cover_from_partition(g, h, side, &why);
    return from_mapping(method, std::move(f), why);
}

DeciderVerdict decide_two_vertex_regular_2sat(const Graph& g, const Graph& h)
{
    require_two_vertex_target(h);
    if (distinguishable(h))
        throw OutOfScope("target vertices are distinguishable; use the partition decider");
    const DeciderMethod method = DeciderMethod::TwoSat;
    const int n = g.num_vertices();
    if (n == 0)
        return no(method, "empty graph cannot map onto the target");

    const ClassProfile profile = class_profile(h, 0);
    for (VertexId u = 0; u < n; ++u)
        if (g.vertex_color(u) != h.vertex_color(0) || class_profile(g, u) != profile)
            return no(method, vname(u) + " has the wrong colour profile");

    // Links of every colour set, per graph.
    using Set = std::pair<Color, Color>;
    std::map<Set, std::vector<LinkId>> g_sets, h_sets;
    for (LinkId l = 0; l < g.num_links(); ++l)
        g_sets[link_color_set(g, l)].push_back(l);
    for (LinkId l = 0; l < h.num_links(); ++l)
        h_sets[link_color_set(h, l)].push_back(l);

    TwoSatFormula phi(n);
    auto vertex_a = [&](LinkId l) { return g.vertex_of(g.link_darts(l)[0]); };
    auto vertex_b = [&](LinkId l) { return g.vertex_of(g.link_darts(l).back()); };

    for (const auto& [set, h_links] : h_sets) {
        const auto& links = g_sets[set];
        std::string where = "colour set {" + std::to_string(set.first) + "," + std::to_string(set.second) + "}";

        if (set.first == set.second) {
            int semis[2] = {0, 0}, loops[2] = {0, 0}, bars = 0;
            for (LinkId l : h_links) {
                const VertexId x = h.vertex_of(h.link_darts(l)[0]);
                switch (h.link_kind(l)) {
                case LinkKind::SemiEdge: ++semis[x]; break;
                case LinkKind::Loop: ++loops[x]; break;
                case LinkKind::Edge: ++bars; break;
                }
            }
            const std::string shape = "W(" + std::to_string(semis[0]) + "," + std::to_string(loops[0]) + "," +
                                      std::to_string(bars) + "," + std::to_string(loops[1]) + "," +
                                      std::to_string(semis[1]) + ")";

            // Local counts: semi-edges and loops only map onto their own kind.
            std::vector<int> g_semis(n, 0), g_loops(n, 0);
            for (LinkId l : links) {
                if (g.link_kind(l) == LinkKind::SemiEdge)
                    ++g_semis[vertex_a(l)];
                else if (g.link_kind(l) == LinkKind::Loop)
                    ++g_loops[vertex_a(l)];
            }
            for (VertexId u = 0; u < n; ++u) {
                const bool ok0 = g_semis[u] <= semis[0] && g_loops[u] <= loops[0];
                const bool ok1 = g_semis[u] <= semis[1] && g_loops[u] <= loops[1];
                if (!ok0 && !ok1)
                    return no(method, vname(u) + " has too many semi-edges or loops in " + where);
                if (!ok1)
                    phi.add_unit(pos(u));
                else if (!ok0)
                    phi.add_unit(neg(u));
            }

            if (bars == 0) {
                // Each component of G_i stays on one side and covers that bouquet.
                auto side_bouquets = std::array{bouquets_at(h, 0)[set.first], bouquets_at(h, 1)[set.first]};
                for (const auto& bq : side_bouquets)
                    if (!bouquet_is_polynomial(static_cast<int>(bq.semis.size()), static_cast<int>(bq.loops.size())))
                        throw UnsupportedFamily(shape + " has a hard bouquet component; no clause schema");
                const std::set<LinkId> in_class(links.begin(), links.end());
                auto piece = induced_link_subgraph(g, [&](const Graph&, LinkId l) { return in_class.contains(l); });
                auto comps = components(piece.graph);
                for (const auto& comp : comps.components) {
                    std::vector<Dart> image;
                    const bool can0 = factor_onto_bouquet(comp.graph, side_bouquets[0].semis,
                                                          side_bouquets[0].loops, image);
                    const bool can1 = factor_onto_bouquet(comp.graph, side_bouquets[1].semis,
                                                          side_bouquets[1].loops, image);
                    const VertexId rep = piece.vertex_origin[comp.vertex_origin[0]];
                    if (!can0 && !can1)
                        return no(method, "component of " + vname(rep) + " in " + where +
                                              " covers neither side of " + shape);
                    for (VertexId v : comp.vertex_origin)
                        phi.add_equal(rep, piece.vertex_origin[v]);
                    if (!can1)
                        phi.add_unit(pos(rep));
                    else if (!can0)
                        phi.add_unit(neg(rep));
                }
            }
            else if (semis[0] + loops[0] + semis[1] + loops[1] == 0) {
                for (LinkId l : links) {
                    if (g.link_kind(l) != LinkKind::Edge)
                        return no(method, "loop or semi-edge in " + where + " cannot map onto bars");
                    phi.add_different(vertex_a(l), vertex_b(l));
                }
            }
            else if (semis[0] == 1 && loops[0] == 0 && bars == 1 && loops[1] == 0 && semis[1] == 1) {
                // Along every path or cycle of G_i, links alternate between
                // the bar and a semi-edge fold.
                std::vector<std::vector<Dart>> darts_at(n);
                for (LinkId l : links) {
                    if (g.link_kind(l) == LinkKind::Loop)
                        return no(method, "loop in " + where + " cannot map onto " + shape);
                    for (Dart d : g.link_darts(l))
                        darts_at[g.vertex_of(d)].push_back(d);
                }
                std::vector<char> seen(n, 0);
                auto trace = [&](VertexId start, Dart entry) {
                    std::vector<VertexId> order{start};
                    seen[start] = 1;
                    VertexId v = start;
                    Dart from = entry;
                    while (true) {
                        const Dart x = darts_at[v][0] == from ? darts_at[v][1] : darts_at[v][0];
                        const Dart y = g.mate(x);
                        if (y == x)
                            break;
                        v = g.vertex_of(y);
                        if (seen[v])
                            break;
                        seen[v] = 1;
                        order.push_back(v);
                        from = y;
                    }
                    return order;
                };
                for (VertexId u = 0; u < n; ++u) {
                    if (seen[u])
                        continue;
                    const Dart first_semi = g.mate(darts_at[u][0]) == darts_at[u][0]   ? darts_at[u][0]
                                            : g.mate(darts_at[u][1]) == darts_at[u][1] ? darts_at[u][1]
                                                                                        : kNoDart;
                    if (first_semi == kNoDart)
                        continue;
                    auto path = trace(u, first_semi);
                    if (path.size() % 2 != 0)
                        return no(method, "open path through " + vname(u) + " in " + where +
                                              " has an odd number of vertices");
                    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
                        if (t % 2 == 0)
                            phi.add_different(path[t], path[t + 1]);
                        else
                            phi.add_equal(path[t], path[t + 1]);
                    }
                }
                for (VertexId u = 0; u < n; ++u) {
                    if (seen[u])
                        continue;
                    auto ring = trace(u, darts_at[u][1]);
                    const std::size_t len = ring.size();
                    for (std::size_t t = 0; t < len; ++t)
                        phi.add_different(ring[t], ring[(t + 2) % len]);
                }
            }
            else {
                throw UnsupportedFamily(shape + " in " + where + " has no 2-SAT clause schema");
            }
            continue;
        }

        // Directed piece WD(m,l,m) from colour a (tail) to colour b (head).
        const Color a = set.first;
        int dloops[2] = {0, 0}, bars = 0;
        for (LinkId l : h_links) {
            auto ds = h.link_darts(l);
            if (h.link_kind(l) == LinkKind::Loop)
                ++dloops[h.vertex_of(ds[0])];
            else
                ++bars;
        }
        const int m = dloops[0], ell = bars / 2;
        const std::string shape = "WD(" + std::to_string(m) + "," + std::to_string(ell) + "," + std::to_string(m) + ")";
        std::vector<int> g_loops(n, 0);
        std::vector<std::vector<VertexId>> heads(n), tails(n);
        for (LinkId l : links) {
            auto ds = g.link_darts(l);
            const Dart t = g.dart_color(ds[0]) == a ? ds[0] : ds[1];
            const Dart hd = g.mate(t);
            if (g.link_kind(l) == LinkKind::Loop)
                ++g_loops[g.vertex_of(t)];
            heads[g.vertex_of(t)].push_back(g.vertex_of(hd));
            tails[g.vertex_of(hd)].push_back(g.vertex_of(t));
        }
        for (VertexId u = 0; u < n; ++u)
            if (g_loops[u] > m)
                return no(method, vname(u) + " has too many directed loops in " + where);

        if (ell == 0) {
            for (LinkId l : links)
                phi.add_equal(vertex_a(l), vertex_b(l));
        }
        else if (m == 0) {
            for (LinkId l : links)
                phi.add_different(vertex_a(l), vertex_b(l));
        }
        else if (m == 1 && ell == 1) {
            // Of the two arcs leaving (entering) a vertex, one is the loop and
            // one the bar, so their other ends lie on different sides.
            for (VertexId u = 0; u < n; ++u) {
                if (heads[u].size() != 2 || tails[u].size() != 2)
                    return no(method, vname(u) + " does not have two arcs each way in " + where);
                phi.add_different(heads[u][0], heads[u][1]);
                phi.add_different(tails[u][0], tails[u][1]);
            }
        }
        else {
            throw UnsupportedFamily(shape + " in " + where + " has no 2-SAT clause schema");
        }
    }

    auto model = two_sat_solve(phi);
    if (!model)
        return no(method, "2-SAT formula is unsatisfiable");
    std::vector<int> side(n);
    for (VertexId u = 0; u < n; ++u)
        side[u] = (*model)[u] ? 0 : 1;
    auto f = cover_from_partition(g, h, side);
    if (!f)
        throw std::logic_error("satisfying assignment does not extend to a cover");
    return {true, method, std::move(f), {}};
}

}  // namespace dartcover
