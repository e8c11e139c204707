#include "dartcover/dichotomy.hpp"

#include "dartcover/errors.hpp"
#include "dartcover/partition_cover.hpp"

#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace dartcover {

namespace {

std::string join_params(const std::vector<int>& ps)
{
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(ps[i]);
    }
    return out;
}

std::string colour_set_name(std::pair<Color, Color> s)
{
    if (s.first == s.second)
        return "colour " + std::to_string(s.first);
    return "colours (" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

PieceVerdict bouquet_verdict(std::string piece, int b, int c)
{
    PieceVerdict v{std::move(piece), {FamilyShape::Kind::F, {b, c}}, Verdict::P, {}};
    const std::string name = v.shape.to_string();
    if (b >= 2 && b + c >= 3) {
        v.verdict = Verdict::NPComplete;
        v.rule = name + ": a>=2 and a+b>=3, NP-complete";
    }
    else {
        v.rule = name + ": a<=1 or (a,b)=(2,0), polynomial";
    }
    return v;
}

}  // namespace

std::string FamilyShape::to_string() const
{
    switch (kind) {
    case Kind::F: return "F(" + join_params(params) + ")";
    case Kind::W: return "W(" + join_params(params) + ")";
    case Kind::WD: return "WD(" + join_params(params) + ")";
    case Kind::DirectedBouquet: return "directed-loops(" + join_params(params) + ")";
    case Kind::Other: return "other";
    }
    return "?";
}

const char* to_string(Verdict v) { return v == Verdict::P ? "P" : "NP-complete"; }

FamilyShape recognize_shape(const Graph& piece)
{
    const int n = piece.num_vertices();
    if (n > 2)
        throw OutOfScope("shape recognition needs at most two vertices");
    FamilyShape other;
    if (n == 0)
        return other;

    std::map<std::pair<Color, Color>, int> sets;
    for (LinkId l = 0; l < piece.num_links(); ++l)
        ++sets[link_color_set(piece, l)];
    if (sets.size() > 1)
        return other;
    const bool directed = !sets.empty() && sets.begin()->first.first != sets.begin()->first.second;
    const Color tail = sets.empty() ? 0 : sets.begin()->first.first;

    int semis[2] = {0, 0}, loops[2] = {0, 0}, forward = 0, backward = 0;
    for (LinkId l = 0; l < piece.num_links(); ++l) {
        auto ds = piece.link_darts(l);
        switch (piece.link_kind(l)) {
        case LinkKind::SemiEdge: ++semis[piece.vertex_of(ds[0])]; break;
        case LinkKind::Loop: ++loops[piece.vertex_of(ds[0])]; break;
        case LinkKind::Edge: {
            const Dart at0 = piece.vertex_of(ds[0]) == 0 ? ds[0] : ds[1];
            (piece.dart_color(at0) == tail ? forward : backward) += 1;
            break;
        }
        }
    }
    if (!directed) {
        if (n == 1)
            return {FamilyShape::Kind::F, {semis[0], loops[0]}};
        return {FamilyShape::Kind::W, {semis[0], loops[0], forward + backward, loops[1], semis[1]}};
    }
    if (n == 1)
        return {FamilyShape::Kind::DirectedBouquet, {loops[0]}};
    if (forward != backward)
        return other;
    return {FamilyShape::Kind::WD, {loops[0], forward, loops[1]}};
}

Classification classify(const Graph& h)
{
    require_valid(h);
    const int n = h.num_vertices();
    if (n < 1 || n > 2 || !is_connected(h))
        throw OutOfScope("classification needs a connected target with one or two vertices");

    Classification c;
    std::map<std::pair<Color, Color>, std::vector<LinkId>> sets;
    for (LinkId l = 0; l < h.num_links(); ++l)
        sets[link_color_set(h, l)].push_back(l);

    auto bouquet_pieces = [&](VertexId x, const std::string& where) {
        for (const auto& [set, links] : sets) {
            int b = 0, cl = 0, directed = 0;
            for (LinkId l : links) {
                if (h.vertex_of(h.link_darts(l)[0]) != x || h.link_kind(l) == LinkKind::Edge)
                    continue;
                if (set.first != set.second)
                    ++directed;
                else if (h.link_kind(l) == LinkKind::SemiEdge)
                    ++b;
                else
                    ++cl;
            }
            const std::string piece = colour_set_name(set) + where;
            if (set.first != set.second) {
                if (directed > 0)
                    c.pieces.push_back({piece, {FamilyShape::Kind::DirectedBouquet, {directed}}, Verdict::P,
                                        "directed loops on one vertex: always polynomial"});
            }
            else if (b + cl > 0) {
                c.pieces.push_back(bouquet_verdict(piece, b, cl));
            }
        }
    };

    if (n == 1) {
        c.branch = 1;
        c.rule_chain.push_back("one vertex: polynomial iff every monochromatic piece is");
        bouquet_pieces(0, "");
    }
    else if (h.vertex_color(0) != h.vertex_color(1) || class_profile(h, 0) != class_profile(h, 1)) {
        c.branch = 2;
        if (degree_signature(h, 0) != degree_signature(h, 1))
            c.rule_chain.push_back("two vertices, not regular: polynomial iff every piece at a vertex is");
        else
            c.rule_chain.push_back("two vertices with equal colour degrees but different per-colour-set degrees: "
                                   "vertices are told apart locally, so every piece at a vertex decides");
        bouquet_pieces(0, " at vertex " + h.vertex_name(0));
        bouquet_pieces(1, " at vertex " + h.vertex_name(1));
    }
    else {
        c.branch = 3;
        c.rule_chain.push_back("two vertices, regular: polynomial iff every H_i and H_ij piece is");
        for (const auto& [set, links] : sets) {
            const std::set<LinkId> keep(links.begin(), links.end());
            auto piece = induced_link_subgraph(h, [&](const Graph&, LinkId l) { return keep.contains(l); });
            PieceVerdict v{colour_set_name(set), recognize_shape(piece.graph), Verdict::P, {}};
            const auto& p = v.shape.params;
            const std::string name = v.shape.to_string();
            if (v.shape.kind == FamilyShape::Kind::W) {
                const int k = p[0], m = p[1], ell = p[2], pp = p[3], q = p[4];
                if (ell >= 1) {
                    const bool hard = k + 2 * m == q + 2 * pp && k + 2 * m > 0 && k + 2 * m + ell >= 3;
                    v.verdict = hard ? Verdict::NPComplete : Verdict::P;
                    v.rule = name + (hard ? ": l>=1, k+2m=q+2p>0 and k+2m+l>=3, NP-complete"
                                          : ": not (l>=1, k+2m=q+2p>0 and k+2m+l>=3), polynomial");
                }
                else {
                    const bool hard = (k >= 2 && k + 2 * m != 2) || (q >= 2 && q + 2 * pp != 2);
                    v.verdict = hard ? Verdict::NPComplete : Verdict::P;
                    v.rule = name + (hard ? ": disconnected, a component has at least two semi-edges and degree "
                                            "other than two (a>=2 and a+b>=3), NP-complete"
                                          : ": disconnected, every component has at most one semi-edge or "
                                            "degree two, polynomial");
                }
            }
            else if (v.shape.kind == FamilyShape::Kind::WD && p[0] == p[2]) {
                const int m = p[0], ell = p[1];
                const bool hard = ell >= 1 && m > 0 && m + ell >= 3;
                v.verdict = hard ? Verdict::NPComplete : Verdict::P;
                v.rule = name + (hard ? ": l>=1, m>0 and m+l>=3, NP-complete"
                                      : ": not (l>=1, m>0 and m+l>=3), polynomial");
            }
            else {
                throw OutOfScope("piece " + v.piece + " of shape " + name + " is outside the known families");
            }
            c.pieces.push_back(std::move(v));
        }
    }

    for (const auto& p : c.pieces) {
        c.rule_chain.push_back(p.piece + ": " + p.rule);
        if (p.verdict == Verdict::NPComplete)
            c.verdict = Verdict::NPComplete;
    }
    c.rule_chain.push_back(std::string("verdict: ") + to_string(c.verdict));
    return c;
}

Graph shade_vertex_colors(const Graph& g)
{
    auto pair = [](std::int64_t x, std::int64_t y) {
        const std::int64_t z = (x + y) * (x + y + 1) / 2 + y;
        if (z > std::numeric_limits<Color>::max())
            throw std::overflow_error("shaded colour does not fit");
        return static_cast<Color>(z);
    };
    std::vector<Color> dart_color(g.num_darts());
    for (Dart d = 0; d < g.num_darts(); ++d)
        dart_color[d] = pair(g.dart_color(d), g.vertex_color(g.vertex_of(d)));
    std::vector<Color> vertex_color(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0)
            vertex_color[v] = g.vertex_color(v);
    auto names = g.raw_vertex_names();
    return Graph({g.raw_vertex_of().begin(), g.raw_vertex_of().end()},
                 {g.raw_link_of().begin(), g.raw_link_of().end()}, std::move(dart_color), std::move(vertex_color),
                 {names.begin(), names.end()});
}

DeciderVerdict decide_colored(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    const Classification c = classify(h);
    if (c.verdict == Verdict::NPComplete) {
        auto f = find_cover(g, h, limits);
        if (f)
            return {true, DeciderMethod::BruteForceFallback, std::move(f), {}};
        return {false, DeciderMethod::BruteForceFallback, std::nullopt, "exhaustive search found no cover"};
    }
    if (c.branch == 1) {
        std::string why;
        auto f = cover_from_partition(g, h, std::vector<int>(g.num_vertices(), 0), &why);
        if (f)
            return {true, DeciderMethod::Partition, std::move(f), {}};
        return {false, DeciderMethod::Partition, std::nullopt, why};
    }
    if (c.branch == 2)
        return decide_two_vertex_nonregular(g, h);
    return decide_two_vertex_regular_2sat(g, h);
}

}  // namespace dartcover
