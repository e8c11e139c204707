// Fuzzing of the polynomial deciders against the exact search, shared by
// the unit tests and the acceptance run.
#pragma once

#include "oracles.hpp"

#include "dartcover/constructions.hpp"
#include "dartcover/cover.hpp"
#include "dartcover/dichotomy.hpp"
#include "dartcover/graph_io.hpp"
#include "dartcover/poly_deciders.hpp"

#include <string>

namespace fuzz {

using namespace dartcover;

struct Family {
    std::string name;
    Graph h;
    bool colored;  // false: the decider ignores colours, inputs are uncoloured
    std::function<DeciderVerdict(const Graph&)> decide;
};

/// Swaps partners of two links with matching colours, or merges two
/// same-coloured semi-edges into an edge, or splits an edge into two
/// semi-edges. Every vertex keeps its degree signature.
inline Graph mutate(const Graph& g, std::mt19937& rng)
{
    if (g.num_links() == 0)
        return g;
    std::vector<LinkId> link_of(g.raw_link_of().begin(), g.raw_link_of().end());
    std::uniform_int_distribution<int> pick(0, g.num_darts() - 1);
    const Dart a = pick(rng), c = pick(rng);
    const Dart b = g.mate(a), d = g.mate(c);
    if (a == c || g.link_of(a) == g.link_of(c))
        return g;
    LinkId next = g.num_links();
    if (a != b && c != d) {
        if (g.dart_color(b) != g.dart_color(d))
            return g;
        link_of[a] = g.link_of(a);
        link_of[d] = g.link_of(a);
        link_of[c] = g.link_of(c);
        link_of[b] = g.link_of(c);
    }
    else if (a == b && c == d) {
        if (g.dart_color(a) != g.dart_color(c))
            return g;
        link_of[c] = link_of[a];
    }
    else if (a != b && c == d) {
        // split {a,b} and keep c: only if b and a share c's colour pattern
        if (g.dart_color(a) != g.dart_color(b))
            return g;
        link_of[b] = next++;
    }
    else {
        return g;
    }
    // compact link ids
    std::map<LinkId, LinkId> remap;
    for (auto& l : link_of) {
        auto [it, fresh] = remap.emplace(l, static_cast<LinkId>(remap.size()));
        l = it->second;
    }
    return Graph(std::vector<VertexId>(g.raw_vertex_of().begin(), g.raw_vertex_of().end()), link_of,
                 std::vector<Color>(g.raw_dart_color().begin(), g.raw_dart_color().end()),
                 std::vector<Color>(g.raw_vertex_color().begin(), g.raw_vertex_color().end()));
}

inline Color max_color(const Graph& h)
{
    Color m = 0;
    for (Color c : h.raw_dart_color())
        m = std::max(m, c);
    return m;
}

/// Input with at most `max_darts` darts: a random lift of h, a mutated lift,
/// or an unrelated random multigraph.
inline Graph sample_input(const Family& f, int max_darts, std::mt19937& rng)
{
    const int nd = std::max(1, f.h.num_darts());
    const int max_fold = std::max(1, max_darts / nd);
    std::uniform_int_distribution<int> fold(1, max_fold), mode(0, 7);
    const int m = mode(rng);
    if (m <= 5) {
        Graph g = oracle::random_lift(f.h, fold(rng), rng);
        const int rounds = m <= 1 ? 0 : m - 1;
        for (int r = 0; r < rounds; ++r)
            g = mutate(g, rng);
        return g;
    }
    std::uniform_int_distribution<int> nv(1, 6);
    return oracle::random_multigraph(nv(rng), max_darts, f.colored ? max_color(f.h) + 1 : 1, rng);
}

inline std::vector<Family> families()
{
    std::vector<Family> out;
    auto one_vertex = [&](int b, int c) {
        out.push_back({"F(" + std::to_string(b) + "," + std::to_string(c) + ")", build_F(b, c), false,
                       [b, c](const Graph& g) { return decide_one_vertex(g, b, c); }});
    };
    for (int c = 1; c <= 3; ++c)
        one_vertex(0, c);
    for (int c = 0; c <= 3; ++c)
        one_vertex(1, c);
    one_vertex(2, 0);
    for (int k = 1; k <= 3; ++k)
        out.push_back({"W(0,0," + std::to_string(k) + ",0,0)", build_W(0, 0, k, 0, 0), false,
                       [k](const Graph& g) { return decide_bipartite_bars(g, k); }});

    auto colored = [&](std::string name, const std::string& text) {
        Graph h = parse_graph(text);
        out.push_back({std::move(name), h, true, [h](const Graph& g) { return decide_colored(g, h); }});
    };
    auto nonregular = [&](std::string name, const std::string& text) {
        Graph h = parse_graph(text);
        out.push_back(
            {std::move(name), h, true, [h](const Graph& g) { return decide_two_vertex_nonregular(g, h); }});
    };
    auto regular = [&](std::string name, const std::string& text) {
        Graph h = parse_graph(text);
        out.push_back(
            {std::move(name), h, true, [h](const Graph& g) { return decide_two_vertex_regular_2sat(g, h); }});
    };

    colored("two-coloured loops", "vertex v\nloop v colors=0,0\nloop v colors=1,1\n");
    colored("semi and 2-factor colours", "vertex v\nsemi v color=0\nloop v colors=1,1\nloop v colors=1,1\n");
    colored("directed loop", "vertex v\nloop v colors=0,1\n");
    colored("semi pair and directed loop", "vertex v\nsemi v color=2\nsemi v color=2\nloop v colors=0,1\n");
    nonregular("loop and bar", "vertex v\nvertex w\nloop v\nedge v w\n");
    nonregular("W(1,1,2,0,1)", "vertex v\nvertex w\nsemi v\nloop v\nedge v w\nedge v w\nsemi w\n");
    nonregular("coloured vertices", "vertex v color=1\nvertex w\nedge v w\nsemi v\nsemi w\n");
    nonregular("loop against semi-edges",
               "vertex v\nvertex w\nedge v w colors=0,0\nloop v colors=1,1\nsemi w color=1\n");
    regular("W(0,0,2,0,0)", "vertex v\nvertex w\nedge v w\nedge v w\n");
    regular("W(1,0,1,0,1)", "vertex v\nvertex w\nsemi v\nedge v w\nsemi w\n");
    regular("bars and loops in two colours",
            "vertex v\nvertex w\nedge v w\nedge v w\nloop v colors=1,1\nloop w colors=1,1\n");
    regular("bar and semis in two colours", "vertex v\nvertex w\nedge v w\nsemi v color=1\nsemi w color=1\n");
    regular("loop and semi pair across a bar",
            "vertex v\nvertex w\nedge v w colors=0,0\nloop v colors=1,1\nsemi w color=1\nsemi w color=1\n");
    regular("WD(1,1,1)", "vertex v\nvertex w\nloop v colors=0,1\nedge v w colors=0,1\nedge v w colors=1,0\n"
                         "loop w colors=0,1\n");
    regular("WD(0,2,0)", "vertex v\nvertex w\nedge v w colors=0,1\nedge v w colors=0,1\nedge v w colors=1,0\n"
                         "edge v w colors=1,0\n");
    regular("directed bar and bar", "vertex v\nvertex w\nedge v w colors=0,1\nedge v w colors=1,0\nedge v w "
                                    "colors=2,2\n");
    return out;
}

struct Outcome {
    int cases = 0;
    int yes = 0;
    int mismatches = 0;
    int bad_witnesses = 0;
    std::string first_failure;
};

/// `cases` inputs with at most `max_darts` darts; the verdict must equal
/// the exact search and every yes must carry a verified witness.
inline Outcome run(const Family& f, int cases, int max_darts, unsigned seed)
{
    std::mt19937 rng(seed);
    Outcome o;
    while (o.cases < cases) {
        const Graph g = sample_input(f, max_darts, rng);
        if (g.num_darts() > max_darts || g.num_vertices() == 0)
            continue;
        ++o.cases;
        const bool expected = find_cover(g, f.h).has_value();
        const DeciderVerdict v = f.decide(g);
        if (v.answer != expected) {
            ++o.mismatches;
            if (o.first_failure.empty())
                o.first_failure = f.name + " expected " + (expected ? "yes" : "no") + " on\n" + serialize_graph(g);
        }
        if (v.answer) {
            ++o.yes;
            if (!v.witness || !verify_cover(g, f.h, *v.witness).empty()) {
                ++o.bad_witnesses;
                if (o.first_failure.empty())
                    o.first_failure = f.name + " bad witness on\n" + serialize_graph(g);
            }
        }
    }
    return o;
}

}  // namespace fuzz
