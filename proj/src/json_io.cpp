#include "dartcover/json_io.hpp"

#include "dartcover/graph_io.hpp"

namespace dartcover {

Json witness_json(const Graph& g, const Graph& h, const DartMapping& f)
{
    std::vector<int> fibers(h.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (f.vertex_map[v] >= 0)
            ++fibers[f.vertex_map[v]];
    return Json{{"vertex_map", f.vertex_map}, {"dart_map", f.dart_map}, {"fiber_sizes", fibers}};
}

Json pattern_json(const CoveringPattern& p)
{
    Json nodes = Json::array();
    for (int i = 0; i < p.p(); ++i)
        nodes.push_back({{"id", "g" + std::to_string(i)}, {"vertices", p.g_sizes[i]}});
    for (int j = 0; j < p.q(); ++j)
        nodes.push_back({{"id", "h" + std::to_string(j)}, {"vertices", p.h_sizes[j]}});
    Json edges = Json::array();
    Json weights = Json::array();
    for (const auto& e : p.edges) {
        edges.push_back({e.i, e.j});
        weights.push_back(e.weight);
    }
    return Json{{"nodes", nodes}, {"edges", edges}, {"weights", weights}};
}

Json decision_json(const Graph& g, const Graph& h, const Decision& d)
{
    Json out{{"semantics", to_string(d.semantics)}, {"answer", d.answer}, {"sigma", d.sigma}};
    if (d.fiber_profile)
        out["fiber_profile"] = *d.fiber_profile;
    out["pattern"] = pattern_json(d.pattern);
    if (!d.reason.empty())
        out["reason"] = d.reason;
    if (d.witness)
        out["witness"] = witness_json(g, h, *d.witness);
    return out;
}

Json classification_json(const Classification& c)
{
    Json pieces = Json::array();
    for (const auto& p : c.pieces)
        pieces.push_back({{"piece", p.piece},
                          {"shape", p.shape.to_string()},
                          {"verdict", to_string(p.verdict)},
                          {"rule", p.rule}});
    return Json{{"verdict", to_string(c.verdict)},
                {"branch", c.branch},
                {"rule_chain", c.rule_chain},
                {"pieces", pieces}};
}

Json verdict_json(const Graph& g, const Graph& h, const DeciderVerdict& v)
{
    Json out{{"answer", v.answer}, {"method", to_string(v.method)}};
    if (!v.reason.empty())
        out["reason"] = v.reason;
    if (v.witness)
        out["witness"] = witness_json(g, h, *v.witness);
    return out;
}

Json stronger_json(const StrongerReport& r)
{
    const bool verified = r.outcome == StrongerReport::Outcome::VerifiedUpTo;
    Json out{{"outcome", verified ? "verified" : "counterexample"},
             {"n_max", r.n_max},
             {"graphs_generated", r.graphs_generated},
             {"covers_found", r.covers_of_a.size()}};
    if (r.counterexample) {
        out["counterexample"] = serialize_graph(*r.counterexample);
        out["order"] = r.counterexample->num_vertices();
        Json all = Json::array();
        for (const auto& g : r.minimum_counterexamples)
            all.push_back(serialize_graph(g));
        out["minimum_counterexamples"] = all;
    }
    if (r.witness_to_a)
        out["witness_to_a"] = {{"vertex_map", r.witness_to_a->vertex_map}, {"dart_map", r.witness_to_a->dart_map}};
    return out;
}

}  // namespace dartcover
