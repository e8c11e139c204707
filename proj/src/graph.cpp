#include "dartcover/graph.hpp"

#include "dartcover/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace dartcover {

const char* to_string(LinkKind kind)
{
    switch (kind) {
    case LinkKind::SemiEdge: return "semi";
    case LinkKind::Loop: return "loop";
    case LinkKind::Edge: return "edge";
    }
    return "?";
}

const char* to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::PartitionViolation: return "PartitionViolation";
    case ViolationKind::LinkArityViolation: return "LinkArityViolation";
    case ViolationKind::ColorViolation: return "ColorViolation";
    }
    return "?";
}

Graph::Graph(std::vector<VertexId> vertex_of, std::vector<LinkId> link_of,
             std::vector<Color> dart_color, std::vector<Color> vertex_color,
             std::vector<std::string> vertex_names)
    : vertex_of_(std::move(vertex_of)),
      link_of_(std::move(link_of)),
      dart_color_(std::move(dart_color)),
      vertex_color_(std::move(vertex_color)),
      vertex_names_(std::move(vertex_names))
{
    const int nd = num_darts();
    if (static_cast<int>(link_of_.size()) != nd || static_cast<int>(dart_color_.size()) != nd)
        throw std::invalid_argument("Graph: per-dart arrays differ in length");
    if (!vertex_names_.empty() && vertex_names_.size() != vertex_color_.size())
        throw std::invalid_argument("Graph: vertex name count differs from vertex count");

    const int nv = num_vertices();
    LinkId max_link = -1;
    for (LinkId l : link_of_)
        max_link = std::max(max_link, l);
    const int nl = max_link + 1;

    // Out-of-range ids are left out of the indices; validate() reports them.
    vertex_start_.assign(nv + 1, 0);
    for (VertexId v : vertex_of_)
        if (v >= 0 && v < nv)
            ++vertex_start_[v + 1];
    std::partial_sum(vertex_start_.begin(), vertex_start_.end(), vertex_start_.begin());
    vertex_darts_.assign(vertex_start_.back(), kNoDart);
    {
        std::vector<int> fill(vertex_start_.begin(), vertex_start_.end() - 1);
        for (Dart d = 0; d < nd; ++d) {
            VertexId v = vertex_of_[d];
            if (v >= 0 && v < nv)
                vertex_darts_[fill[v]++] = d;
        }
    }

    link_start_.assign(nl + 1, 0);
    for (LinkId l : link_of_)
        if (l >= 0)
            ++link_start_[l + 1];
    std::partial_sum(link_start_.begin(), link_start_.end(), link_start_.begin());
    link_darts_.assign(link_start_.back(), kNoDart);
    {
        std::vector<int> fill(link_start_.begin(), link_start_.end() - 1);
        for (Dart d = 0; d < nd; ++d)
            if (link_of_[d] >= 0)
                link_darts_[fill[link_of_[d]]++] = d;
    }

    mate_.assign(nd, kNoDart);
    for (LinkId l = 0; l < nl; ++l) {
        auto ds = link_darts(l);
        if (ds.size() == 1) {
            mate_[ds[0]] = ds[0];
        }
        else if (ds.size() == 2) {
            mate_[ds[0]] = ds[1];
            mate_[ds[1]] = ds[0];
        }
    }
}

std::span<const Dart> Graph::darts_at(VertexId v) const
{
    return {vertex_darts_.data() + vertex_start_[v],
            static_cast<std::size_t>(vertex_start_[v + 1] - vertex_start_[v])};
}

std::span<const Dart> Graph::link_darts(LinkId l) const
{
    return {link_darts_.data() + link_start_[l],
            static_cast<std::size_t>(link_start_[l + 1] - link_start_[l])};
}

LinkKind Graph::link_kind(LinkId l) const
{
    auto ds = link_darts(l);
    if (ds.size() == 1)
        return LinkKind::SemiEdge;
    return vertex_of_[ds[0]] == vertex_of_[ds[1]] ? LinkKind::Loop : LinkKind::Edge;
}

std::string Graph::vertex_name(VertexId v) const
{
    if (vertex_names_.empty())
        return std::to_string(v);
    return vertex_names_[v];
}

bool Graph::operator==(const Graph& other) const
{
    return vertex_of_ == other.vertex_of_ && link_of_ == other.link_of_ &&
           dart_color_ == other.dart_color_ && vertex_color_ == other.vertex_color_;
}

void GraphBuilder::check_vertex(VertexId v) const
{
    if (v < 0 || v >= num_vertices())
        throw std::out_of_range("GraphBuilder: unknown vertex " + std::to_string(v));
}

VertexId GraphBuilder::add_vertex(Color color, std::string name)
{
    vertex_color_.push_back(color);
    names_.push_back(std::move(name));
    return num_vertices() - 1;
}

LinkId GraphBuilder::add_edge(VertexId u, VertexId v, Color color_u, Color color_v)
{
    check_vertex(u);
    check_vertex(v);
    vertex_of_.push_back(u);
    vertex_of_.push_back(v);
    link_of_.push_back(next_link_);
    link_of_.push_back(next_link_);
    dart_color_.push_back(color_u);
    dart_color_.push_back(color_v);
    return next_link_++;
}

LinkId GraphBuilder::add_loop(VertexId u, Color color_a, Color color_b)
{
    return add_edge(u, u, color_a, color_b);
}

LinkId GraphBuilder::add_semi(VertexId u, Color color)
{
    check_vertex(u);
    vertex_of_.push_back(u);
    link_of_.push_back(next_link_);
    dart_color_.push_back(color);
    return next_link_++;
}

Graph GraphBuilder::build() const
{
    const bool named = std::any_of(names_.begin(), names_.end(),
                                   [](const std::string& s) { return !s.empty(); });
    std::vector<std::string> names;
    if (named) {
        names = names_;
        for (int v = 0; v < num_vertices(); ++v)
            if (names[v].empty())
                names[v] = std::to_string(v);
    }
    return Graph(vertex_of_, link_of_, dart_color_, vertex_color_, std::move(names));
}

std::vector<Violation> validate(const Graph& g)
{
    std::vector<Violation> out;
    const int nv = g.num_vertices();
    auto vertex_of = g.raw_vertex_of();
    auto link_of = g.raw_link_of();
    for (Dart d = 0; d < g.num_darts(); ++d) {
        if (vertex_of[d] < 0 || vertex_of[d] >= nv)
            out.push_back({ViolationKind::PartitionViolation, d,
                           "dart " + std::to_string(d) + " belongs to no vertex"});
        if (link_of[d] < 0)
            out.push_back({ViolationKind::PartitionViolation, d,
                           "dart " + std::to_string(d) + " belongs to no link"});
        if (g.dart_color(d) < 0)
            out.push_back({ViolationKind::ColorViolation, d,
                           "dart " + std::to_string(d) + " has a negative colour"});
    }
    for (LinkId l = 0; l < g.num_links(); ++l) {
        auto n = g.link_darts(l).size();
        if (n == 0 || n > 2)
            out.push_back({ViolationKind::LinkArityViolation, l,
                           "link " + std::to_string(l) + " owns " + std::to_string(n) + " darts"});
    }
    for (VertexId v = 0; v < nv; ++v)
        if (g.vertex_color(v) < 0)
            out.push_back({ViolationKind::ColorViolation, v,
                           "vertex " + std::to_string(v) + " has a negative colour"});
    return out;
}

void require_valid(const Graph& g)
{
    auto violations = validate(g);
    if (!violations.empty())
        throw InvalidGraph(std::string(to_string(violations.front().kind)) + ": " +
                           violations.front().detail);
}

int degree(const Graph& g, VertexId v)
{
    if (v < 0 || v >= g.num_vertices())
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    return g.degree(v);
}

DegreeSignature degree_signature(const Graph& g, VertexId v)
{
    if (v < 0 || v >= g.num_vertices())
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    DegreeSignature sig;
    sig.vertex_color = g.vertex_color(v);
    for (Dart d : g.darts_at(v))
        sig.dart_colors.push_back(g.dart_color(d));
    std::sort(sig.dart_colors.begin(), sig.dart_colors.end());
    return sig;
}

std::vector<int> bipartition(const Graph& g)
{
    for (LinkId l = 0; l < g.num_links(); ++l)
        if (g.link_kind(l) != LinkKind::Edge)
            return {};
    std::vector<int> side(g.num_vertices(), -1);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<VertexId> queue;
        queue.push(s);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop();
            for (Dart d : g.darts_at(u)) {
                VertexId w = g.vertex_of(g.mate(d));
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push(w);
                }
                else if (side[w] == side[u]) {
                    return {};
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g)
{
    return g.num_vertices() == 0 || !bipartition(g).empty();
}

bool is_simple(const Graph& g)
{
    std::vector<VertexId> seen;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        seen.clear();
        for (Dart d : g.darts_at(v)) {
            LinkKind kind = g.link_kind(g.link_of(d));
            if (kind != LinkKind::Edge)
                return false;
            seen.push_back(g.vertex_of(g.mate(d)));
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return false;
    }
    return true;
}

bool is_connected(const Graph& g)
{
    const int n = g.num_vertices();
    if (n == 0)
        return false;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (Dart d : g.darts_at(u)) {
            const VertexId w = g.vertex_of(g.mate(d));
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

StructuralPredicates structural_predicates(const Graph& g)
{
    StructuralPredicates p;
    p.is_simple = is_simple(g);
    p.is_bipartite = is_bipartite(g);
    p.is_connected = is_connected(g);
    p.is_regular = true;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (v > 0 && g.degree(v) != g.degree(0)) {
            p.is_regular = false;
            break;
        }
    }
    if (p.is_regular)
        p.regular_degree = g.num_vertices() > 0 ? g.degree(0) : 0;
    return p;
}

Subgraph extract_subgraph(const Graph& g, std::span<const VertexId> vertices, const LinkPredicate& keep)
{
    std::vector<VertexId> local(g.num_vertices(), kNoVertex);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<VertexId>(i);

    Subgraph sub;
    sub.vertex_origin.assign(vertices.begin(), vertices.end());
    std::vector<VertexId> vertex_of;
    std::vector<LinkId> link_of;
    std::vector<Color> dart_color;
    std::vector<Color> vertex_color;
    std::vector<std::string> names;
    for (VertexId v : vertices) {
        vertex_color.push_back(g.vertex_color(v));
        if (g.has_names())
            names.push_back(g.vertex_name(v));
    }

    LinkId next = 0;
    for (LinkId l = 0; l < g.num_links(); ++l) {
        auto ds = g.link_darts(l);
        bool inside = std::all_of(ds.begin(), ds.end(),
                                  [&](Dart d) { return local[g.vertex_of(d)] != kNoVertex; });
        if (!inside || (keep && !keep(g, l)))
            continue;
        for (Dart d : ds) {
            vertex_of.push_back(local[g.vertex_of(d)]);
            link_of.push_back(next);
            dart_color.push_back(g.dart_color(d));
            sub.dart_origin.push_back(d);
        }
        ++next;
    }
    sub.graph = Graph(std::move(vertex_of), std::move(link_of), std::move(dart_color),
                      std::move(vertex_color), std::move(names));
    return sub;
}

ComponentDecomposition components(const Graph& g)
{
    ComponentDecomposition out;
    out.component_of_vertex.assign(g.num_vertices(), -1);
    std::vector<std::vector<VertexId>> members;
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (out.component_of_vertex[s] != -1)
            continue;
        const int c = static_cast<int>(members.size());
        members.emplace_back();
        out.component_of_vertex[s] = c;
        std::queue<VertexId> queue;
        queue.push(s);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop();
            members[c].push_back(u);
            for (Dart d : g.darts_at(u)) {
                VertexId w = g.vertex_of(g.mate(d));
                if (out.component_of_vertex[w] == -1) {
                    out.component_of_vertex[w] = c;
                    queue.push(w);
                }
            }
        }
    }
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        out.components.push_back(extract_subgraph(g, m));
    }
    return out;
}

std::pair<Color, Color> link_color_set(const Graph& g, LinkId l)
{
    auto ds = g.link_darts(l);
    Color a = g.dart_color(ds[0]);
    Color b = ds.size() == 2 ? g.dart_color(ds[1]) : a;
    return {std::min(a, b), std::max(a, b)};
}

Subgraph induced_link_subgraph(const Graph& g, const LinkPredicate& keep)
{
    std::vector<VertexId> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    return extract_subgraph(g, all, keep);
}

Subgraph induced_link_subgraph(const Graph& g, Color a, Color b)
{
    const auto wanted = std::pair{std::min(a, b), std::max(a, b)};
    return induced_link_subgraph(
        g, [wanted](const Graph& gg, LinkId l) { return link_color_set(gg, l) == wanted; });
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    std::vector<VertexId> vertex_of(a.raw_vertex_of().begin(), a.raw_vertex_of().end());
    std::vector<LinkId> link_of(a.raw_link_of().begin(), a.raw_link_of().end());
    std::vector<Color> dart_color(a.raw_dart_color().begin(), a.raw_dart_color().end());
    std::vector<Color> vertex_color(a.raw_vertex_color().begin(), a.raw_vertex_color().end());
    for (Dart d = 0; d < b.num_darts(); ++d) {
        vertex_of.push_back(b.vertex_of(d) + a.num_vertices());
        link_of.push_back(b.link_of(d) + a.num_links());
        dart_color.push_back(b.dart_color(d));
    }
    vertex_color.insert(vertex_color.end(), b.raw_vertex_color().begin(), b.raw_vertex_color().end());
    return Graph(std::move(vertex_of), std::move(link_of), std::move(dart_color), std::move(vertex_color));
}

Graph strip_colors(const Graph& g)
{
    return Graph({g.raw_vertex_of().begin(), g.raw_vertex_of().end()},
                 {g.raw_link_of().begin(), g.raw_link_of().end()},
                 std::vector<Color>(g.num_darts(), 0), std::vector<Color>(g.num_vertices(), 0),
                 {g.raw_vertex_names().begin(), g.raw_vertex_names().end()});
}

Graph recolor_darts(const Graph& g, const std::function<Color(Dart)>& color_of_dart)
{
    std::vector<Color> colors(g.num_darts());
    for (Dart d = 0; d < g.num_darts(); ++d)
        colors[d] = color_of_dart(d);
    return Graph({g.raw_vertex_of().begin(), g.raw_vertex_of().end()},
                 {g.raw_link_of().begin(), g.raw_link_of().end()}, std::move(colors),
                 {g.raw_vertex_color().begin(), g.raw_vertex_color().end()},
                 {g.raw_vertex_names().begin(), g.raw_vertex_names().end()});
}

}  // namespace dartcover
