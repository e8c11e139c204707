#include "dartcover/generate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace dartcover {

bool is_connected(const SimpleGraph& g)
{
    if (g.n == 0)
        return false;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1)
            next |= g.rows[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == g.n;
}

namespace {

/// Every graph is reachable by removing a vertex of minimum degree, so a
/// new vertex never needs more neighbours than the smallest child degree.
/// With a target degree d, missing degree must fit into the vertices to come.
bool admissible(const SimpleGraph& child, int new_degree, const GenerateOptions& o)
{
    int min_degree = child.n;
    long deficiency = 0;
    for (int v = 0; v < child.n; ++v) {
        const int dv = child.degree(v);
        min_degree = std::min(min_degree, dv);
        if (o.regular_degree >= 0) {
            if (dv > o.regular_degree)
                return false;
            deficiency += o.regular_degree - dv;
        }
    }
    if (new_degree > min_degree)
        return false;
    if (o.regular_degree >= 0) {
        const long room = static_cast<long>(o.regular_degree) * (o.n_max - child.n);
        if (deficiency > room)
            return false;
    }
    return true;
}

// Upper triangle of an already canonical graph, eight bits per byte.
std::string packed_key(const SimpleGraph& c)
{
    std::string out;
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
    if (bits > 0)
        out.push_back(static_cast<char>(acc));
    return out;
}

bool wanted(const SimpleGraph& g, const GenerateOptions& o)
{
    if (o.connected_only && !is_connected(g))
        return false;
    if (o.regular_degree >= 0)
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) != o.regular_degree)
                return false;
    return true;
}

}  // namespace

void generate_simple_graphs(const GenerateOptions& o, const std::function<void(const SimpleGraph&)>& visit)
{
    if (o.n_max > 64)
        throw std::invalid_argument("generate_simple_graphs: at most 64 vertices");
    if (o.n_max < 1)
        return;
    std::vector<SimpleGraph> level{SimpleGraph{1, {0}}};
    if (wanted(level[0], o))
        visit(level[0]);
    for (int n = 2; n <= o.n_max; ++n) {
        std::vector<SimpleGraph> next;
        std::unordered_set<std::string> seen;
        const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
        for (const SimpleGraph& parent : level) {
            for (std::uint64_t s = 0; s < subsets; ++s) {
                const int k = std::popcount(s);
                if (o.regular_degree >= 0 && k > o.regular_degree)
                    continue;
                SimpleGraph child{n, parent.rows};
                child.rows.push_back(s);
                for (std::uint64_t t = s; t; t &= t - 1)
                    child.rows[std::countr_zero(t)] |= std::uint64_t{1} << (n - 1);
                if (!admissible(child, k, o))
                    continue;
                const SimpleGraph canon = canonical_form(child);
                if (!seen.insert(packed_key(canon)).second)
                    continue;
                // the last level is streamed, not stored
                if (n == o.n_max) {
                    if (wanted(canon, o))
                        visit(canon);
                }
                else {
                    next.push_back(canon);
                }
            }
        }
        for (const auto& g : next)
            if (wanted(g, o))
                visit(g);
        level = std::move(next);
    }
}

std::vector<SimpleGraph> simple_graphs_of_order(int n, int regular_degree, bool connected_only)
{
    std::vector<SimpleGraph> out;
    generate_simple_graphs({n, regular_degree, connected_only}, [&](const SimpleGraph& g) {
        if (g.n == n)
            out.push_back(g);
    });
    return out;
}

}  // namespace dartcover
