#include "dartcover/matching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dartcover {

namespace {

bool try_kuhn(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_left,
              std::vector<int>& match_right, std::vector<int>& seen, int stamp)
{
    for (int v : adj[u]) {
        if (seen[v] == stamp)
            continue;
        seen[v] = stamp;
        if (match_right[v] < 0 || try_kuhn(match_right[v], adj, match_left, match_right, seen, stamp)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

BipartiteMatching max_bipartite_matching(int n_left, int n_right, const std::vector<std::vector<int>>& adj)
{
    BipartiteMatching m;
    m.match_left.assign(n_left, -1);
    m.match_right.assign(n_right, -1);
    std::vector<int> seen(n_right, -1);
    for (int u = 0; u < n_left; ++u)
        if (try_kuhn(u, adj, m.match_left, m.match_right, seen, u))
            ++m.size;
    return m;
}

std::optional<std::vector<std::vector<int>>> split_regular_bipartite(int n_left, int n_right,
                                                                     const std::vector<BipartiteEdge>& edges,
                                                                     int k)
{
    if (n_left != n_right)
        return std::nullopt;
    std::vector<int> deg_left(n_left, 0), deg_right(n_right, 0);
    for (const auto& e : edges) {
        ++deg_left[e.left];
        ++deg_right[e.right];
    }
    for (int d : deg_left)
        if (d != k)
            return std::nullopt;
    for (int d : deg_right)
        if (d != k)
            return std::nullopt;

    // A regular bipartite multigraph always has a perfect matching; peel
    // one off at a time. Matching runs on edge indices to keep parallels apart.
    std::vector<char> alive(edges.size(), 1);
    std::vector<std::vector<int>> out;
    for (int round = 0; round < k; ++round) {
        std::vector<std::vector<int>> adj(n_left);
        std::vector<std::vector<int>> edge_of(n_left);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!alive[i])
                continue;
            adj[edges[i].left].push_back(edges[i].right);
            edge_of[edges[i].left].push_back(static_cast<int>(i));
        }
        auto m = max_bipartite_matching(n_left, n_right, adj);
        if (m.size != n_left)
            throw std::logic_error("regular bipartite graph without a perfect matching");
        std::vector<int> chosen(n_left);
        for (int u = 0; u < n_left; ++u) {
            auto it = std::find(adj[u].begin(), adj[u].end(), m.match_left[u]);
            chosen[u] = edge_of[u][it - adj[u].begin()];
            alive[chosen[u]] = 0;
        }
        out.push_back(std::move(chosen));
    }
    return out;
}

std::vector<int> max_general_matching(int n, const std::vector<MatchingEdge>& edges)
{
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        if (e.u == e.v)
            continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    std::vector<int> match(n, -1), parent(n), base(n);
    std::vector<char> used(n), blossom(n), on_path(n);
    std::vector<int> queue;

    auto lca = [&](int a, int b) {
        std::fill(on_path.begin(), on_path.end(), 0);
        while (true) {
            a = base[a];
            on_path[a] = 1;
            if (match[a] < 0)
                break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (on_path[b])
                return b;
            b = parent[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };
    auto find_path = [&](int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            base[i] = i;
        used[root] = 1;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to)
                    continue;
                if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
                    const int b = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                }
                else if (parent[to] < 0) {
                    parent[to] = v;
                    if (match[to] < 0)
                        return to;
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    };

    for (int root = 0; root < n; ++root) {
        if (match[root] >= 0)
            continue;
        int v = find_path(root);
        while (v >= 0) {
            const int pv = parent[v];
            const int ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    std::vector<int> out(n, -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.u != e.v && match[e.u] == e.v && out[e.u] < 0 && out[e.v] < 0)
            out[e.u] = out[e.v] = static_cast<int>(i);
    }
    return out;
}

std::optional<std::vector<LinkId>> general_perfect_matching(const Graph& g)
{
    // Semi-edges become edges to a mirror copy; G has a perfect matching with
    // self-covering semi-edges iff the doubled graph has a perfect matching.
    const int n = g.num_vertices();
    std::vector<MatchingEdge> edges;
    std::vector<LinkId> origin;
    std::vector<char> has_semi(n, 0);
    for (LinkId l = 0; l < g.num_links(); ++l) {
        auto ds = g.link_darts(l);
        switch (g.link_kind(l)) {
        case LinkKind::Edge: {
            const VertexId u = g.vertex_of(ds[0]), v = g.vertex_of(ds[1]);
            edges.push_back({u, v});
            origin.push_back(l);
            edges.push_back({u + n, v + n});
            origin.push_back(l);
            break;
        }
        case LinkKind::SemiEdge: {
            const VertexId u = g.vertex_of(ds[0]);
            if (!has_semi[u]) {
                has_semi[u] = 1;
                edges.push_back({u, u + n});
                origin.push_back(l);
            }
            break;
        }
        case LinkKind::Loop:
            break;
        }
    }
    auto matched = max_general_matching(2 * n, edges);
    std::vector<LinkId> out;
    for (VertexId u = 0; u < n; ++u) {
        if (matched[u] < 0)
            return std::nullopt;
        const LinkId l = origin[matched[u]];
        const auto& e = edges[matched[u]];
        // Each normal edge is reported once, from its smaller endpoint.
        if (e.v >= n || std::min(e.u, e.v) == u)
            out.push_back(l);
    }
    for (VertexId u = n; u < 2 * n; ++u)
        if (matched[u] < 0)
            return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dartcover
