#include "dartcover/canonical.hpp"

#include "dartcover/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace dartcover {

int SimpleGraph::degree(int v) const { return std::popcount(rows[v]); }

SimpleGraph to_simple(const Graph& g)
{
    if (g.num_vertices() > 64)
        throw InvalidGraph("simple graph view supports at most 64 vertices");
    if (!is_simple(g))
        throw InvalidGraph("graph is not simple");
    SimpleGraph s{g.num_vertices(), std::vector<std::uint64_t>(g.num_vertices(), 0)};
    for (LinkId l = 0; l < g.num_links(); ++l) {
        auto ds = g.link_darts(l);
        s.add_edge(g.vertex_of(ds[0]), g.vertex_of(ds[1]));
    }
    return s;
}

Graph from_simple(const SimpleGraph& s)
{
    GraphBuilder b;
    for (int v = 0; v < s.n; ++v)
        b.add_vertex();
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v)
            if (s.adjacent(u, v))
                b.add_edge(u, v);
    return b.build();
}

namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t mask_of(const std::vector<int>& cell)
{
    std::uint64_t m = 0;
    for (int v : cell)
        m |= std::uint64_t{1} << v;
    return m;
}

/// Equitable refinement of an ordered partition; cells split in place, so
/// vertex positions of existing singletons never move.
void refine(const SimpleGraph& g, Cells& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const std::uint64_t splitter = mask_of(cells[s]);
            for (std::size_t x = 0; x < cells.size(); ++x) {
                auto& cell = cells[x];
                if (cell.size() == 1)
                    continue;
                std::vector<std::pair<int, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell)
                    keyed.emplace_back(std::popcount(g.rows[v] & splitter), v);
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first)
                    continue;
                Cells pieces;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first)
                        pieces.emplace_back();
                    pieces.back().push_back(keyed[i].second);
                }
                cells.erase(cells.begin() + static_cast<long>(x));
                cells.insert(cells.begin() + static_cast<long>(x), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

class Canonizer {
public:
    explicit Canonizer(const SimpleGraph& g) : g_(g) {}

    std::vector<int> run()
    {
        Cells cells;
        if (g_.n > 0) {
            cells.emplace_back(g_.n);
            std::iota(cells[0].begin(), cells[0].end(), 0);
        }
        search(std::move(cells));
        return best_lab_;
    }

private:
    static constexpr int kNoJump = std::numeric_limits<int>::max();

    struct Leaf {
        std::vector<std::uint64_t> cert;
        std::vector<int> lab;
        std::vector<int> path;
    };

    int search(Cells cells)
    {
        refine(g_, cells);
        const int depth = static_cast<int>(path_.size());
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end())
            return leaf(cells);

        const std::size_t t = static_cast<std::size_t>(target - cells.begin());
        std::vector<int> children = cells[t];
        std::sort(children.begin(), children.end());
        std::vector<int> explored;
        for (int v : children) {
            if (!explored.empty() && in_explored_orbit(v, explored))
                continue;
            Cells next = cells;
            auto& cell = next[t];
            cell.erase(std::find(cell.begin(), cell.end(), v));
            next.insert(next.begin() + static_cast<long>(t), std::vector<int>{v});
            path_.push_back(v);
            const int jump = search(std::move(next));
            path_.pop_back();
            explored.push_back(v);
            if (jump < depth)
                return jump;
        }
        return kNoJump;
    }

    /// Orbits of the automorphisms found so far that fix the current path.
    bool in_explored_orbit(int v, const std::vector<int>& explored) const
    {
        std::vector<int> parent(g_.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int p : path_)
                fixes = fixes && gamma[p] == p;
            if (!fixes)
                continue;
            for (int x = 0; x < g_.n; ++x)
                parent[find(x)] = find(gamma[x]);
        }
        for (int u : explored)
            if (find(u) == find(v))
                return true;
        return false;
    }

    int leaf(const Cells& cells)
    {
        Leaf cur;
        cur.lab.resize(g_.n);
        for (std::size_t i = 0; i < cells.size(); ++i)
            cur.lab[cells[i][0]] = static_cast<int>(i);
        cur.cert.assign(g_.n, 0);
        for (int v = 0; v < g_.n; ++v)
            for (int w = 0; w < g_.n; ++w)
                if (g_.adjacent(v, w))
                    cur.cert[cur.lab[v]] |= std::uint64_t{1} << (g_.n - 1 - cur.lab[w]);
        cur.path = path_;

        if (!have_first_) {
            first_ = cur;
            best_ = cur;
            best_lab_ = cur.lab;
            have_first_ = true;
            return kNoJump;
        }
        for (const Leaf* ref : {&first_, &best_}) {
            if (ref->cert == cur.cert) {
                // Same relabelled graph: the position-preserving map between
                // the two leaves is an automorphism fixing their common prefix.
                std::vector<int> at(g_.n);
                for (int v = 0; v < g_.n; ++v)
                    at[cur.lab[v]] = v;
                std::vector<int> gamma(g_.n);
                for (int v = 0; v < g_.n; ++v)
                    gamma[v] = at[ref->lab[v]];
                automorphisms_.push_back(std::move(gamma));
                std::size_t common = 0;
                while (common < cur.path.size() && common < ref->path.size() &&
                       cur.path[common] == ref->path[common])
                    ++common;
                return static_cast<int>(common);
            }
        }
        if (cur.cert > best_.cert) {
            best_ = cur;
            best_lab_ = cur.lab;
        }
        return kNoJump;
    }

    const SimpleGraph& g_;
    std::vector<int> path_;
    bool have_first_ = false;
    Leaf first_, best_;
    std::vector<int> best_lab_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<int> canonical_labeling(const SimpleGraph& g)
{
    return Canonizer(g).run();
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& lab)
{
    SimpleGraph out{g.n, std::vector<std::uint64_t>(g.n, 0)};
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v))
                out.add_edge(lab[u], lab[v]);
    return out;
}

SimpleGraph canonical_form(const SimpleGraph& g)
{
    return relabel(g, canonical_labeling(g));
}

std::string certificate(const SimpleGraph& g)
{
    const SimpleGraph c = canonical_form(g);
    std::string out(1, static_cast<char>(g.n));
    // Upper triangle, packed eight bits per byte.
    unsigned char acc = 0;
    int bits = 0;
    for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v) {
            acc = static_cast<unsigned char>((acc << 1) | (c.adjacent(u, v) ? 1 : 0));
            if (++bits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits)
        out.push_back(static_cast<char>(acc << (8 - bits)));
    return out;
}

}  // namespace dartcover
