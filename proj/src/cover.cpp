#include "dartcover/cover.hpp"

#include "dartcover/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

namespace dartcover {

const char* to_string(CoverViolationKind kind)
{
    switch (kind) {
    case CoverViolationKind::NotLocalBijection: return "NotLocalBijection";
    case CoverViolationKind::LinkBroken: return "LinkBroken";
    case CoverViolationKind::ColorMismatch: return "ColorMismatch";
    case CoverViolationKind::NotSurjective: return "NotSurjective";
    case CoverViolationKind::VertexColorMismatch: return "VertexColorMismatch";
    }
    return "?";
}

std::vector<VertexId> induced_vertex_map(const Graph& g, const Graph& h, const std::vector<Dart>& dart_map)
{
    std::vector<VertexId> out(g.num_vertices(), kNoVertex);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        auto ds = g.darts_at(u);
        if (!ds.empty() && dart_map[ds[0]] >= 0)
            out[u] = h.vertex_of(dart_map[ds[0]]);
    }
    return out;
}

std::vector<CoverViolation> verify_cover(const Graph& g, const Graph& h, const DartMapping& f,
                                         bool require_surjective)
{
    if (static_cast<int>(f.dart_map.size()) != g.num_darts() ||
        static_cast<int>(f.vertex_map.size()) != g.num_vertices())
        throw std::invalid_argument("verify_cover: mapping is not total");
    for (Dart x : f.dart_map)
        if (x < 0 || x >= h.num_darts())
            throw std::invalid_argument("verify_cover: dart image out of range");
    for (VertexId x : f.vertex_map)
        if (x < 0 || x >= h.num_vertices())
            throw std::invalid_argument("verify_cover: vertex image out of range");

    std::vector<CoverViolation> out;
    std::vector<Dart> images;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const VertexId target = f.vertex_map[u];
        if (g.vertex_color(u) != h.vertex_color(target))
            out.push_back({CoverViolationKind::VertexColorMismatch, {}, {u},
                           "vertex " + std::to_string(u) + " colour differs from its image"});
        images.clear();
        bool star_ok = g.degree(u) == h.degree(target);
        for (Dart d : g.darts_at(u)) {
            const Dart x = f.dart_map[d];
            if (h.vertex_of(x) != target)
                star_ok = false;
            images.push_back(x);
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            star_ok = false;
        if (!star_ok) {
            auto ds = g.darts_at(u);
            out.push_back({CoverViolationKind::NotLocalBijection, {ds.begin(), ds.end()}, {u},
                           "star of vertex " + std::to_string(u) + " is not mapped bijectively"});
        }
    }

    for (Dart d = 0; d < g.num_darts(); ++d) {
        if (g.dart_color(d) != h.dart_color(f.dart_map[d]))
            out.push_back({CoverViolationKind::ColorMismatch, {d}, {g.vertex_of(d)},
                           "dart " + std::to_string(d) + " colour differs from its image"});
    }

    for (LinkId l = 0; l < g.num_links(); ++l) {
        auto ds = g.link_darts(l);
        const Dart d = ds[0];
        const Dart image_mate = h.mate(f.dart_map[d]);
        // Semi-edges must land on semi-edges; two-dart links land on a link,
        // possibly folding both darts onto one semi-edge.
        if (f.dart_map[g.mate(d)] != image_mate)
            out.push_back({CoverViolationKind::LinkBroken, {ds.begin(), ds.end()}, {},
                           "link " + std::to_string(l) + " is not mapped onto a link"});
    }

    if (require_surjective) {
        std::vector<char> dart_hit(h.num_darts(), 0), vertex_hit(h.num_vertices(), 0);
        for (Dart x : f.dart_map)
            dart_hit[x] = 1;
        for (VertexId x : f.vertex_map)
            vertex_hit[x] = 1;
        std::vector<Dart> missed_darts;
        std::vector<VertexId> missed_vertices;
        for (Dart x = 0; x < h.num_darts(); ++x)
            if (!dart_hit[x])
                missed_darts.push_back(x);
        for (VertexId x = 0; x < h.num_vertices(); ++x)
            if (!vertex_hit[x])
                missed_vertices.push_back(x);
        if (!missed_darts.empty() || !missed_vertices.empty())
            out.push_back({CoverViolationKind::NotSurjective, missed_darts, missed_vertices,
                           "mapping is not surjective onto the target"});
    }

#ifndef NDEBUG
    if (out.empty())
        assert(fiber_conditions_hold(g, h, f));
#endif
    return out;
}

bool fiber_conditions_hold(const Graph& g, const Graph& h, const DartMapping& f)
{
    // Link map, which must be well defined.
    std::vector<LinkId> link_image(g.num_links());
    for (LinkId l = 0; l < g.num_links(); ++l) {
        auto ds = g.link_darts(l);
        link_image[l] = h.link_of(f.dart_map[ds[0]]);
        for (Dart d : ds)
            if (h.link_of(f.dart_map[d]) != link_image[l])
                return false;
    }

    std::vector<int> fibre_degree(g.num_vertices());
    for (LinkId e = 0; e < h.num_links(); ++e) {
        const auto hd = h.link_darts(e);
        const LinkKind kind = h.link_kind(e);
        std::fill(fibre_degree.begin(), fibre_degree.end(), 0);
        for (LinkId l = 0; l < g.num_links(); ++l) {
            if (link_image[l] != e)
                continue;
            const auto gd = g.link_darts(l);
            const LinkKind gkind = g.link_kind(l);
            for (Dart d : gd)
                ++fibre_degree[g.vertex_of(d)];
            switch (kind) {
            case LinkKind::Edge: {
                // Matching between the two fibres.
                if (gkind != LinkKind::Edge)
                    return false;
                VertexId a = f.vertex_map[g.vertex_of(gd[0])], b = f.vertex_map[g.vertex_of(gd[1])];
                VertexId x = h.vertex_of(hd[0]), y = h.vertex_of(hd[1]);
                if (!((a == x && b == y) || (a == y && b == x)))
                    return false;
                break;
            }
            case LinkKind::Loop:
                // Cycles: loops and normal edges inside the fibre.
                if (gkind == LinkKind::SemiEdge)
                    return false;
                for (Dart d : gd)
                    if (f.vertex_map[g.vertex_of(d)] != h.vertex_of(hd[0]))
                        return false;
                break;
            case LinkKind::SemiEdge:
                // Semi-edges and normal edges inside the fibre.
                if (gkind == LinkKind::Loop)
                    return false;
                for (Dart d : gd)
                    if (f.vertex_map[g.vertex_of(d)] != h.vertex_of(hd[0]))
                        return false;
                break;
            }
        }
        // Spanning with the right degree on every affected fibre.
        const int want = kind == LinkKind::Loop ? 2 : 1;
        for (VertexId u = 0; u < g.num_vertices(); ++u) {
            const VertexId x = f.vertex_map[u];
            bool in_fibre = false;
            for (Dart d : hd)
                in_fibre = in_fibre || h.vertex_of(d) == x;
            if (in_fibre ? fibre_degree[u] != want : fibre_degree[u] != 0)
                return false;
        }
    }
    return true;
}

namespace {

/// Backtracking over dart images. A vertex's image is fixed by its first
/// assigned dart; assigning a dart immediately assigns its mate, so fibres
/// spread along links and the only branching is the choice of image dart
/// at an already placed vertex (or the image of a new anchor vertex).
class CoverSearch {
public:
    CoverSearch(const Graph& g, const Graph& h, const SearchLimits& limits)
        : g_(g), h_(h), limits_(limits), f_(g.num_darts(), kNoDart), fv_(g.num_vertices(), kNoVertex)
    {
        std::map<DegreeSignature, int> ids;
        h_class_.resize(h.num_vertices());
        for (VertexId x = 0; x < h.num_vertices(); ++x) {
            auto [it, inserted] = ids.try_emplace(degree_signature(h, x), static_cast<int>(ids.size()));
            h_class_[x] = it->second;
        }
        g_class_.resize(g.num_vertices());
        for (VertexId u = 0; u < g.num_vertices(); ++u) {
            auto it = ids.find(degree_signature(g, u));
            g_class_[u] = it == ids.end() ? -1 : it->second;
        }
    }

    /// Class of each vertex: equal classes are the only admissible images.
    const std::vector<int>& g_class() const { return g_class_; }
    const std::vector<int>& h_class() const { return h_class_; }

    /// Maps every vertex of `scope` (ascending), calling `emit` on each
    /// completion. Stops early when `emit` returns true; returns whether it did.
    bool run(std::vector<VertexId> scope, const std::function<bool()>& emit)
    {
        scope_ = std::move(scope);
        emit_ = &emit;
        return solve(frontier_.size());
    }

    DartMapping mapping() const { return {f_, fv_}; }

private:
    bool assign(Dart d, Dart x)
    {
        const VertexId u = g_.vertex_of(d);
        const VertexId xv = h_.vertex_of(x);
        if (g_.dart_color(d) != h_.dart_color(x))
            return false;
        if (fv_[u] == kNoVertex) {
            if (g_class_[u] != h_class_[xv])
                return false;
            place(u, xv);
        }
        else if (fv_[u] != xv) {
            return false;
        }
        for (Dart other : g_.darts_at(u))
            if (f_[other] == x)
                return false;
        f_[d] = x;
        dart_trail_.push_back(d);

        const Dart dm = g_.mate(d);
        const Dart xm = h_.mate(x);
        if (dm == d)
            return xm == x;
        if (f_[dm] != kNoDart)
            return f_[dm] == xm;
        return assign(dm, xm);
    }

    void place(VertexId u, VertexId xv)
    {
        fv_[u] = xv;
        frontier_.push_back(u);
    }

    struct Mark {
        std::size_t darts;
        std::size_t frontier;
    };

    Mark mark() const { return {dart_trail_.size(), frontier_.size()}; }

    void undo(Mark m)
    {
        while (dart_trail_.size() > m.darts) {
            f_[dart_trail_.back()] = kNoDart;
            dart_trail_.pop_back();
        }
        while (frontier_.size() > m.frontier) {
            fv_[frontier_.back()] = kNoVertex;
            frontier_.pop_back();
        }
    }

    void tick()
    {
        ++nodes_;
        if (limits_.max_nodes != 0 && nodes_ > limits_.max_nodes)
            throw ResourceLimit("exact cover search exceeded " + std::to_string(limits_.max_nodes) + " nodes");
    }

    bool solve(std::size_t start)
    {
        tick();
        for (std::size_t i = start; i < frontier_.size(); ++i) {
            const VertexId u = frontier_[i];
            for (Dart d : g_.darts_at(u)) {
                if (f_[d] != kNoDart)
                    continue;
                for (Dart x : h_.darts_at(fv_[u])) {
                    const Mark m = mark();
                    if (assign(d, x) && solve(i))
                        return true;
                    undo(m);
                }
                return false;
            }
        }

        // Frontier exhausted: the next anchor is the lowest unplaced vertex.
        auto next = std::find_if(scope_.begin(), scope_.end(),
                                 [&](VertexId v) { return fv_[v] == kNoVertex; });
        if (next == scope_.end())
            return (*emit_)();
        const VertexId a = *next;
        for (VertexId xv = 0; xv < h_.num_vertices(); ++xv) {
            if (h_class_[xv] != g_class_[a])
                continue;
            const Mark m = mark();
            place(a, xv);
            if (solve(frontier_.size() - 1))
                return true;
            undo(m);
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    SearchLimits limits_;
    std::vector<int> g_class_, h_class_;
    std::vector<Dart> f_;
    std::vector<VertexId> fv_;
    std::vector<Dart> dart_trail_;
    std::vector<VertexId> frontier_;
    std::vector<VertexId> scope_;
    const std::function<bool()>* emit_ = nullptr;
    std::uint64_t nodes_ = 0;
};

/// Cheap necessary conditions for G -> H (H connected): every vertex class
/// exists in H and each component holds k copies of every H class.
/// Vertex sets of the components of g, each ascending, ordered by their
/// smallest vertex.
std::vector<std::vector<VertexId>> component_vertices(const Graph& g)
{
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(g.num_vertices(), 0);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (seen[s])
            continue;
        std::vector<VertexId> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Dart d : g.darts_at(comp[i])) {
                const VertexId w = g.vertex_of(g.mate(d));
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Every G vertex needs an H vertex of the same degree and colour.
bool degrees_fit(const Graph& g, const Graph& h)
{
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        bool found = false;
        for (VertexId x = 0; x < h.num_vertices() && !found; ++x)
            found = h.degree(x) == g.degree(u) && h.vertex_color(x) == g.vertex_color(u);
        if (!found)
            return false;
    }
    return true;
}

bool passes_counting_filters(const Graph& h, const CoverSearch& search,
                             const std::vector<std::vector<VertexId>>& comps)
{
    const auto& gc = search.g_class();
    const auto& hc = search.h_class();
    if (std::find(gc.begin(), gc.end(), -1) != gc.end())
        return false;
    const int nh = h.num_vertices();
    std::vector<int> h_count(nh, 0);
    for (int c : hc)
        ++h_count[c];
    for (const auto& comp : comps) {
        const int n = static_cast<int>(comp.size());
        if (n % nh != 0)
            return false;
        const int k = n / nh;
        std::vector<int> count(nh, 0);
        for (VertexId u : comp)
            ++count[gc[u]];
        for (int c = 0; c < nh; ++c)
            if (count[c] != k * h_count[c])
                return false;
    }
    return true;
}

void require_connected_target(const Graph& h)
{
    if (!is_connected(h))
        throw OutOfScope("target graph must be connected; use the disconnected-target deciders");
}

}  // namespace

std::optional<DartMapping> find_cover(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    require_connected_target(h);
    if (g.num_vertices() == 0 || !degrees_fit(g, h))
        return std::nullopt;  // empty G is not surjective
    CoverSearch search(g, h, limits);
    const auto comps = component_vertices(g);
    if (!passes_counting_filters(h, search, comps))
        return std::nullopt;
    const std::function<bool()> stop = [] { return true; };
    for (const auto& comp : comps)
        if (!search.run(comp, stop))
            return std::nullopt;
    return search.mapping();
}

CoverEnumeration enumerate_covers(const Graph& g, const Graph& h, std::size_t limit)
{
    require_connected_target(h);
    CoverEnumeration out;
    if (g.num_vertices() == 0 || limit == 0) {
        out.limit_reached = limit == 0;
        return out;
    }
    if (!degrees_fit(g, h))
        return out;
    CoverSearch search(g, h, {});
    if (!passes_counting_filters(h, search, component_vertices(g)))
        return out;
    std::vector<VertexId> all(g.num_vertices());
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        all[u] = u;
    const std::function<bool()> collect = [&] {
        out.covers.push_back(search.mapping());
        if (out.covers.size() >= limit) {
            out.limit_reached = true;
            return true;
        }
        return false;
    };
    search.run(all, collect);
    return out;
}

std::vector<int> preimage_profile(const Graph& g, const Graph& h, const DartMapping& f)
{
    if (!verify_cover(g, h, f, false).empty())
        throw std::invalid_argument("preimage_profile: mapping is not a covering projection");
    std::vector<int> profile(h.num_vertices(), 0);
    for (VertexId x : f.vertex_map)
        ++profile[x];
    return profile;
}

DartMapping compose(const DartMapping& f1, const DartMapping& f2)
{
    DartMapping out;
    out.dart_map.reserve(f1.dart_map.size());
    for (Dart d : f1.dart_map)
        out.dart_map.push_back(f2.dart_map.at(d));
    for (VertexId v : f1.vertex_map)
        out.vertex_map.push_back(f2.vertex_map.at(v));
    return out;
}

}  // namespace dartcover
