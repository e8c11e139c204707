#include "dartcover/constructions.hpp"

#include <stdexcept>
#include <string>

namespace dartcover {

namespace {

void require_non_negative(std::initializer_list<int> values, const char* what)
{
    for (int v : values)
        if (v < 0)
            throw std::invalid_argument(std::string(what) + ": parameters must be non-negative");
}

}  // namespace

Graph build_F(int b, int c)
{
    require_non_negative({b, c}, "build_F");
    GraphBuilder gb;
    const VertexId v = gb.add_vertex();
    for (int i = 0; i < b; ++i)
        gb.add_semi(v);
    for (int i = 0; i < c; ++i)
        gb.add_loop(v);
    return gb.build();
}

Graph build_W(int k, int m, int l, int p, int q)
{
    require_non_negative({k, m, l, p, q}, "build_W");
    GraphBuilder gb;
    const VertexId v = gb.add_vertex();
    const VertexId w = gb.add_vertex();
    for (int i = 0; i < k; ++i)
        gb.add_semi(v);
    for (int i = 0; i < m; ++i)
        gb.add_loop(v);
    for (int i = 0; i < l; ++i)
        gb.add_edge(v, w);
    for (int i = 0; i < p; ++i)
        gb.add_loop(w);
    for (int i = 0; i < q; ++i)
        gb.add_semi(w);
    return gb.build();
}

Graph build_WD(int m, int l, int m2)
{
    require_non_negative({m, l, m2}, "build_WD");
    GraphBuilder gb;
    const VertexId v = gb.add_vertex();
    const VertexId w = gb.add_vertex();
    for (int i = 0; i < m; ++i)
        gb.add_loop(v, 0, 1);
    for (int i = 0; i < l; ++i)
        gb.add_edge(v, w, 0, 1);
    for (int i = 0; i < l; ++i)
        gb.add_edge(v, w, 1, 0);
    for (int i = 0; i < m2; ++i)
        gb.add_loop(w, 0, 1);
    return gb.build();
}

Graph cycle(int n)
{
    if (n < 1)
        throw std::invalid_argument("cycle: length must be at least 1");
    GraphBuilder gb;
    for (int i = 0; i < n; ++i)
        gb.add_vertex();
    for (int i = 0; i < n; ++i)
        gb.add_edge(i, (i + 1) % n);
    return gb.build();
}

Graph complete(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete: need at least one vertex");
    GraphBuilder gb;
    for (int i = 0; i < n; ++i)
        gb.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            gb.add_edge(i, j);
    return gb.build();
}

Graph complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete_bipartite: both sides must be non-empty");
    GraphBuilder gb;
    for (int i = 0; i < a + b; ++i)
        gb.add_vertex();
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            gb.add_edge(i, a + j);
    return gb.build();
}

Graph petersen()
{
    GraphBuilder gb;
    for (int i = 0; i < 10; ++i)
        gb.add_vertex();
    for (int i = 0; i < 5; ++i) {
        gb.add_edge(i, (i + 1) % 5);
        gb.add_edge(i, i + 5);
        gb.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return gb.build();
}

DoubleCover double_cover(const Graph& g)
{
    const int nd = g.num_darts();
    const int nv = g.num_vertices();
    std::vector<VertexId> vertex_of(2 * nd);
    std::vector<LinkId> link_of(2 * nd, -1);
    std::vector<Color> dart_color(2 * nd);
    std::vector<Color> vertex_color(2 * nv);
    for (int i = 0; i < 2; ++i) {
        for (Dart d = 0; d < nd; ++d) {
            vertex_of[d + i * nd] = g.vertex_of(d) + i * nv;
            dart_color[d + i * nd] = g.dart_color(d);
        }
        for (VertexId v = 0; v < nv; ++v)
            vertex_color[v + i * nv] = g.vertex_color(v);
    }
    LinkId next = 0;
    for (LinkId l = 0; l < g.num_links(); ++l) {
        auto ds = g.link_darts(l);
        if (ds.size() == 1) {
            link_of[ds[0]] = link_of[ds[0] + nd] = next++;
        }
        else {
            link_of[ds[0]] = link_of[ds[1] + nd] = next++;
            link_of[ds[1]] = link_of[ds[0] + nd] = next++;
        }
    }

    DoubleCover out{Graph(std::move(vertex_of), std::move(link_of), std::move(dart_color), std::move(vertex_color)),
                    {}};
    out.projection.dart_map.resize(2 * nd);
    out.projection.vertex_map.resize(2 * nv);
    for (int i = 0; i < 2; ++i) {
        for (Dart d = 0; d < nd; ++d)
            out.projection.dart_map[d + i * nd] = d;
        for (VertexId v = 0; v < nv; ++v)
            out.projection.vertex_map[v + i * nv] = v;
    }
    return out;
}

std::pair<Graph, Graph> gen_binpacking(const BinPackingInstance& inst)
{
    if (inst.bins < 0)
        throw std::invalid_argument("gen_binpacking: bin count must be non-negative");
    Graph g;
    for (int x : inst.sizes) {
        if (x < 1)
            throw std::invalid_argument("gen_binpacking: item sizes must be positive");
        g = disjoint_union(g, cycle(x));
    }
    Graph h;
    for (int j = 0; j < inst.bins; ++j)
        h = disjoint_union(h, build_F(0, 1));
    return {std::move(g), std::move(h)};
}

}  // namespace dartcover
