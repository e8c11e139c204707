#pragma once

#include "dartcover/cover.hpp"
#include "dartcover/graph.hpp"

#include <utility>
#include <vector>

namespace dartcover {

/// One vertex with b semi-edges and c loops. Darts: semis first, then loops
/// as consecutive pairs.
Graph build_F(int b, int c);

/// Two vertices v, w: k semi-edges and m loops at v, l bars, p loops and q
/// semi-edges at w. With l = 0 this is F(k,m) + F(q,p).
Graph build_W(int k, int m, int l, int p, int q);

/// Directed analogue on colours 0 (tail) and 1 (head): m directed loops at
/// v, l bars in each direction, m2 directed loops at w.
Graph build_WD(int m, int l, int m2);

/// cycle(1) is a loop and cycle(2) a double edge.
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();

struct DoubleCover {
    Graph graph;
    DartMapping projection;
};

/// Canonical double cover G x 2. Vertex (v,i) is v + i*|V|, dart (d,i) is
/// d + i*|D|; semi-edges become edges between the copies.
DoubleCover double_cover(const Graph& g);

struct BinPackingInstance {
    std::vector<int> sizes;
    int bins = 0;
};

/// G = disjoint cycles of the item sizes, H = `bins` disjoint F(0,1).
std::pair<Graph, Graph> gen_binpacking(const BinPackingInstance& inst);

}  // namespace dartcover
