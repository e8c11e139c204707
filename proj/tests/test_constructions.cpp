#include "oracles.hpp"

#include "dartcover/canonical.hpp"
#include "dartcover/constructions.hpp"
#include "dartcover/cover.hpp"
#include "dartcover/generate.hpp"
#include "dartcover/graph_io.hpp"

#include <doctest.h>

using namespace dartcover;

namespace {

int girth(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : oracle::plain_edges(g)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int best = 1 << 30;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                }
                else if (parent[u] != v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("bouquets and two-vertex families")
{
    const Graph f = build_F(2, 3);
    CHECK(f.num_vertices() == 1);
    CHECK(f.num_darts() == 8);
    CHECK(f.link_kind(0) == LinkKind::SemiEdge);
    CHECK(f.link_kind(1) == LinkKind::SemiEdge);
    CHECK(f.link_kind(2) == LinkKind::Loop);

    const Graph w = build_W(1, 2, 3, 1, 2);
    CHECK(w.num_vertices() == 2);
    CHECK(w.degree(0) == 1 + 4 + 3);
    CHECK(w.degree(1) == 3 + 2 + 2);

    // W(k,m,0,p,q) = F(k,m) + F(q,p)
    CHECK(serialize_graph(build_W(1, 2, 0, 3, 1)) == serialize_graph(disjoint_union(build_F(1, 2), build_F(1, 3))));

    const Graph wd = build_WD(1, 2, 1);
    CHECK(wd.degree(0) == 6);
    int out_darts = 0;
    for (Dart d : wd.darts_at(0))
        out_darts += wd.dart_color(d) == 0;
    CHECK(out_darts == 3);

    CHECK_THROWS_AS(build_F(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(cycle(0), std::invalid_argument);
}

TEST_CASE("cycles, complete graphs and Petersen")
{
    CHECK(cycle(1).link_kind(0) == LinkKind::Loop);
    const Graph c2 = cycle(2);
    CHECK(c2.num_links() == 2);
    CHECK(c2.link_kind(0) == LinkKind::Edge);
    CHECK(c2.link_kind(1) == LinkKind::Edge);
    CHECK(oracle::regular_degree(complete(5)) == 4);
    CHECK(complete_bipartite(2, 3).num_links() == 6);

    const Graph p = petersen();
    CHECK(p.num_vertices() == 10);
    CHECK(oracle::regular_degree(p) == 3);
    CHECK(is_simple(p));
    CHECK(girth(p) == 5);
    CHECK_FALSE(oracle::edge_colorable(p, 3));
}

TEST_CASE("double cover examples")
{
    const auto f20 = double_cover(build_F(2, 0));
    CHECK(serialize_graph(f20.graph) == serialize_graph(cycle(2)));
    CHECK(verify_cover(f20.graph, build_F(2, 0), f20.projection).empty());

    const auto c3 = double_cover(cycle(3));
    CHECK(is_connected(c3.graph));
    CHECK(oracle::regular_degree(c3.graph) == 2);
    CHECK(c3.graph.num_vertices() == 6);
    CHECK(girth(c3.graph) == 6);

    const Graph k33 = complete_bipartite(3, 3);
    CHECK(components(double_cover(k33).graph).components.size() == 2);
}

TEST_CASE("double cover is a loopless 2-fold cover")
{
    std::mt19937 rng(31);
    for (int t = 0; t < 300; ++t) {
        const Graph g = oracle::random_multigraph(1 + t % 5, 12, 3, rng);
        const auto dc = double_cover(g);
        for (LinkId l = 0; l < dc.graph.num_links(); ++l)
            CHECK(dc.graph.link_kind(l) == LinkKind::Edge);
        CHECK(verify_cover(dc.graph, g, dc.projection).empty());
        std::vector<int> fibre(g.num_vertices(), 0);
        for (VertexId x : dc.projection.vertex_map)
            ++fibre[x];
        for (int x : fibre)
            CHECK(x == 2);
        CHECK(is_bipartite(dc.graph));
    }
}

TEST_CASE("double of a bipartite graph is two copies")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& s : simple_graphs_of_order(n, -1, true)) {
            const Graph g = from_simple(s);
            if (!oracle::bipartite_bfs(g))
                continue;
            CHECK(components(double_cover(g).graph).components.size() == 2);
        }
}

TEST_CASE("bin-packing instances")
{
    const auto [g, h] = gen_binpacking({{2, 3, 2, 3}, 2});
    CHECK(g.num_vertices() == 10);
    CHECK(h.num_vertices() == 2);
    CHECK(components(g).components.size() == 4);
    CHECK(components(h).components.size() == 2);
    for (const auto& c : components(g).components)
        CHECK(oracle::regular_degree(c.graph) == 2);
    for (const auto& c : components(h).components)
        CHECK(serialize_graph(c.graph) == serialize_graph(build_F(0, 1)));
}
