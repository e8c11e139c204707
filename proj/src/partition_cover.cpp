#include "dartcover/partition_cover.hpp"

#include "dartcover/errors.hpp"
#include "dartcover/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace dartcover {

namespace {

Dart other_dart_at(const Graph& g, VertexId v, Dart d)
{
    auto ds = g.darts_at(v);
    return ds[0] == d ? ds[1] : ds[0];
}

/// F(2,0): edges alternate between the two semi-edges along every path and
/// every cycle, so cycles must be even.
bool alternate_semis(const Graph& p, Dart s0, Dart s1, std::vector<Dart>& image)
{
    const Dart s[2] = {s0, s1};
    auto walk = [&](VertexId v, Dart entry, int use) {
        // `entry` already carries an image; continue through the other dart.
        while (true) {
            const Dart x = other_dart_at(p, v, entry);
            if (image[x] != kNoDart)
                return;
            const Dart y = p.mate(x);
            image[x] = s[use];
            if (y == x)
                return;
            image[y] = s[use];
            if (p.vertex_of(y) == v)
                return;  // a loop; the final check sees equal images
            v = p.vertex_of(y);
            entry = y;
            use ^= 1;
        }
    };

    for (Dart d = 0; d < p.num_darts(); ++d) {
        if (p.mate(d) != d || image[d] != kNoDart)
            continue;
        image[d] = s[0];
        walk(p.vertex_of(d), d, 1);
    }
    for (Dart d = 0; d < p.num_darts(); ++d) {
        if (image[d] != kNoDart)
            continue;
        const Dart y = p.mate(d);
        const VertexId v = p.vertex_of(d);
        if (p.vertex_of(y) == v)
            return false;  // loop at a degree-2 vertex: cycle of length one
        image[d] = image[y] = s[0];
        walk(p.vertex_of(y), y, 1);
    }
    for (VertexId v = 0; v < p.num_vertices(); ++v) {
        auto ds = p.darts_at(v);
        if (image[ds[0]] == image[ds[1]])
            return false;
    }
    return true;
}

/// Orients every link not in `taken` along closed trails and splits the
/// resulting c-regular out/in bipartite graph into the c loops.
bool orient_and_split(const Graph& p, const std::vector<char>& taken,
                      std::span<const std::pair<Dart, Dart>> loops, std::vector<Dart>& image)
{
    const int n = p.num_vertices();
    std::vector<char> used(p.num_links(), 0);
    std::vector<std::size_t> next(n, 0);
    std::vector<BipartiteEdge> arcs;
    std::vector<std::pair<Dart, Dart>> arc_darts;  // (tail, head)

    auto next_free = [&](VertexId v) -> Dart {
        auto ds = p.darts_at(v);
        while (next[v] < ds.size()) {
            const Dart d = ds[next[v]];
            const LinkId l = p.link_of(d);
            if (!taken[l] && !used[l])
                return d;
            ++next[v];
        }
        return kNoDart;
    };

    for (VertexId start = 0; start < n; ++start) {
        for (Dart x = next_free(start); x != kNoDart; x = next_free(start)) {
            VertexId cur = start;
            // Every degree is even, so each trail closes at its start.
            while (x != kNoDart) {
                const Dart y = p.mate(x);
                used[p.link_of(x)] = 1;
                arcs.push_back({p.vertex_of(x), p.vertex_of(y)});
                arc_darts.emplace_back(x, y);
                cur = p.vertex_of(y);
                x = next_free(cur);
            }
            if (cur != start)
                return false;
        }
    }

    auto split = split_regular_bipartite(n, n, arcs, static_cast<int>(loops.size()));
    if (!split)
        return false;
    for (std::size_t i = 0; i < split->size(); ++i) {
        for (int a : (*split)[i]) {
            image[arc_darts[a].first] = loops[i].first;
            image[arc_darts[a].second] = loops[i].second;
        }
    }
    return true;
}

enum class ClassKind { Undirected, Directed, Cross };

struct ClassKey {
    ClassKind kind;
    int side;  // -1 for cross links
    Color a;   // colour at the side-0 end for cross links
    Color b;

    auto operator<=>(const ClassKey&) const = default;
};

ClassKey class_key(const Graph& g, LinkId l, const std::vector<int>& side)
{
    auto ds = g.link_darts(l);
    const Dart d0 = ds[0];
    const Dart d1 = ds.size() == 2 ? ds[1] : ds[0];
    const int s0 = side[g.vertex_of(d0)], s1 = side[g.vertex_of(d1)];
    if (s0 != s1) {
        const Dart at0 = s0 == 0 ? d0 : d1;
        const Dart at1 = s0 == 0 ? d1 : d0;
        return {ClassKind::Cross, -1, g.dart_color(at0), g.dart_color(at1)};
    }
    const auto [a, b] = link_color_set(g, l);
    return {a == b ? ClassKind::Undirected : ClassKind::Directed, s0, a, b};
}

std::string bouquet_name(int b, int c)
{
    return "F(" + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

bool factor_onto_bouquet(const Graph& piece, std::span<const Dart> semis,
                         std::span<const std::pair<Dart, Dart>> loops, std::vector<Dart>& image)
{
    const int b = static_cast<int>(semis.size());
    const int c = static_cast<int>(loops.size());
    if (!bouquet_is_polynomial(b, c))
        throw UnsupportedFamily(bouquet_name(b, c) + "-Cover is NP-complete (b>=2 and b+c>=3); use the exact search");
    image.assign(piece.num_darts(), kNoDart);
    for (VertexId v = 0; v < piece.num_vertices(); ++v)
        if (piece.degree(v) != b + 2 * c)
            return false;
    if (b == 2)
        return alternate_semis(piece, semis[0], semis[1], image);

    std::vector<char> taken(piece.num_links(), 0);
    std::vector<int> semi_count(piece.num_vertices(), 0);
    for (LinkId l = 0; l < piece.num_links(); ++l) {
        if (piece.link_kind(l) != LinkKind::SemiEdge)
            continue;
        if (b == 0)
            return false;
        const Dart d = piece.link_darts(l)[0];
        if (++semi_count[piece.vertex_of(d)] > 1)
            return false;
        image[d] = semis[0];
        taken[l] = 1;
    }
    if (b == 1) {
        // Vertices without a semi-edge need a perfect matching among themselves.
        std::vector<MatchingEdge> edges;
        std::vector<LinkId> origin;
        for (LinkId l = 0; l < piece.num_links(); ++l) {
            if (piece.link_kind(l) != LinkKind::Edge)
                continue;
            auto ds = piece.link_darts(l);
            const VertexId u = piece.vertex_of(ds[0]), v = piece.vertex_of(ds[1]);
            if (semi_count[u] == 0 && semi_count[v] == 0) {
                edges.push_back({u, v});
                origin.push_back(l);
            }
        }
        auto matched = max_general_matching(piece.num_vertices(), edges);
        for (VertexId v = 0; v < piece.num_vertices(); ++v) {
            if (semi_count[v] != 0)
                continue;
            if (matched[v] < 0)
                return false;
            const LinkId l = origin[matched[v]];
            if (!taken[l]) {
                taken[l] = 1;
                for (Dart d : piece.link_darts(l))
                    image[d] = semis[0];
            }
        }
    }
    return orient_and_split(piece, taken, loops, image);
}

ClassProfile class_profile(const Graph& g, VertexId v)
{
    ClassProfile out;
    for (Dart d : g.darts_at(v))
        out[link_color_set(g, g.link_of(d))].push_back(g.dart_color(d));
    for (auto& [key, colours] : out)
        std::sort(colours.begin(), colours.end());
    return out;
}

std::optional<DartMapping> cover_from_partition(const Graph& g, const Graph& h, const std::vector<int>& side,
                                                std::string* why)
{
    auto fail = [&](std::string reason) -> std::optional<DartMapping> {
        if (why)
            *why = std::move(reason);
        return std::nullopt;
    };
    const int nh = h.num_vertices();
    if (nh < 1 || nh > 2)
        throw OutOfScope("partition covers need a target with one or two vertices");
    if (static_cast<int>(side.size()) != g.num_vertices())
        throw std::invalid_argument("cover_from_partition: side vector has the wrong length");
    if (g.num_vertices() == 0)
        return fail("empty graph cannot map onto the target");

    std::vector<VertexId> members[2];
    std::vector<int> local(g.num_vertices());
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const int s = side[u];
        if (s < 0 || s >= nh)
            throw std::invalid_argument("cover_from_partition: side out of range");
        if (g.vertex_color(u) != h.vertex_color(s))
            return fail("vertex " + std::to_string(u) + " has the wrong vertex colour");
        local[u] = static_cast<int>(members[s].size());
        members[s].push_back(u);
    }
    for (int s = 0; s < nh; ++s)
        if (members[s].empty())
            return fail("no vertex maps to target vertex " + std::to_string(s));

    const std::vector<int> h_side = nh == 1 ? std::vector<int>{0} : std::vector<int>{0, 1};
    std::map<ClassKey, std::vector<LinkId>> g_classes, h_classes;
    std::vector<int> g_class_of(g.num_links());
    for (LinkId l = 0; l < h.num_links(); ++l)
        h_classes[class_key(h, l, h_side)].push_back(l);
    for (LinkId l = 0; l < g.num_links(); ++l)
        g_classes[class_key(g, l, side)].push_back(l);

    DartMapping f;
    f.dart_map.assign(g.num_darts(), kNoDart);
    f.vertex_map = side;

    std::map<ClassKey, int> key_ids;
    for (const auto& [key, links] : g_classes) {
        const int id = static_cast<int>(key_ids.size());
        key_ids.emplace(key, id);
        for (LinkId l : links)
            g_class_of[l] = id;
    }
    std::vector<ClassKey> keys;
    for (const auto& [key, links] : g_classes)
        keys.push_back(key);
    for (const auto& [key, links] : h_classes)
        if (!g_classes.contains(key))
            keys.push_back(key);

    static const std::vector<LinkId> none;
    for (const ClassKey& key : keys) {
        auto hit = h_classes.find(key);
        const auto& h_links = hit == h_classes.end() ? none : hit->second;
        auto git = g_classes.find(key);
        const auto& g_links = git == g_classes.end() ? none : git->second;

        if (key.kind == ClassKind::Undirected) {
            std::vector<Dart> semis;
            std::vector<std::pair<Dart, Dart>> loops;
            for (LinkId l : h_links) {
                auto ds = h.link_darts(l);
                if (ds.size() == 1)
                    semis.push_back(ds[0]);
                else
                    loops.emplace_back(ds[0], ds[1]);
            }
            const int id = git == g_classes.end() ? -1 : key_ids.at(key);
            auto piece = extract_subgraph(g, members[key.side],
                                          [&](const Graph&, LinkId l) { return g_class_of[l] == id; });
            std::vector<Dart> image;
            if (!factor_onto_bouquet(piece.graph, semis, loops, image))
                return fail("colour " + std::to_string(key.a) + " links at target vertex " +
                            std::to_string(key.side) + " do not cover " +
                            bouquet_name(static_cast<int>(semis.size()), static_cast<int>(loops.size())));
            for (Dart d = 0; d < piece.graph.num_darts(); ++d)
                f.dart_map[piece.dart_origin[d]] = image[d];
            continue;
        }

        // Directed loops and bars: a regular bipartite graph split into
        // perfect matchings, one per target link.
        std::vector<std::pair<Dart, Dart>> targets;
        for (LinkId l : h_links) {
            auto ds = h.link_darts(l);
            Dart x = ds[0], y = ds[1];
            if (key.kind == ClassKind::Directed ? h.dart_color(x) != key.a : h.vertex_of(x) != 0)
                std::swap(x, y);
            targets.emplace_back(x, y);
        }
        std::vector<BipartiteEdge> edges;
        std::vector<std::pair<Dart, Dart>> sources;
        for (LinkId l : g_links) {
            auto ds = g.link_darts(l);
            Dart x = ds[0], y = ds[1];
            if (key.kind == ClassKind::Directed ? g.dart_color(x) != key.a : side[g.vertex_of(x)] != 0)
                std::swap(x, y);
            edges.push_back({local[g.vertex_of(x)], local[g.vertex_of(y)]});
            sources.emplace_back(x, y);
        }
        const int n_left = static_cast<int>(members[key.kind == ClassKind::Directed ? key.side : 0].size());
        const int n_right = static_cast<int>(members[key.kind == ClassKind::Directed ? key.side : 1].size());
        auto split = split_regular_bipartite(n_left, n_right, edges, static_cast<int>(targets.size()));
        if (!split) {
            const std::string colours = "(" + std::to_string(key.a) + "," + std::to_string(key.b) + ")";
            if (key.kind == ClassKind::Directed)
                return fail("directed " + colours + " loops at target vertex " + std::to_string(key.side) +
                            " are not " + std::to_string(targets.size()) + "-regular");
            return fail(colours + " links between the sides are not " + std::to_string(targets.size()) +
                        "-regular");
        }
        for (std::size_t i = 0; i < split->size(); ++i) {
            for (int e : (*split)[i]) {
                f.dart_map[sources[e].first] = targets[i].first;
                f.dart_map[sources[e].second] = targets[i].second;
            }
        }
    }

    for (Dart x : f.dart_map)
        if (x == kNoDart)
            return fail("some dart has no admissible image");
    auto violations = verify_cover(g, h, f);
    if (!violations.empty())
        throw std::logic_error("partition cover failed verification: " + violations.front().detail);
    return f;
}

}  // namespace dartcover
