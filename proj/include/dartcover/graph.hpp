#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dartcover {

using Dart = std::int32_t;
using VertexId = std::int32_t;
using LinkId = std::int32_t;
using Color = std::int32_t;

inline constexpr Dart kNoDart = -1;
inline constexpr VertexId kNoVertex = -1;

enum class LinkKind { SemiEdge, Loop, Edge };

const char* to_string(LinkKind kind);

/// Dart-based multigraph: a dart set partitioned once into vertices and once
/// into links of one or two darts. Loops, parallel edges, semi-edges and
/// dart-free (isolated) vertices are all representable.
///
/// The constructor accepts arbitrary raw arrays so that `validate` can report
/// what is wrong with them; every other operation assumes a valid graph.
/// Graphs are immutable once built.
class Graph {
public:
    Graph() = default;

    /// `vertex_color.size()` fixes the vertex count; the link count is one
    /// past the largest link id used.
    Graph(std::vector<VertexId> vertex_of, std::vector<LinkId> link_of,
          std::vector<Color> dart_color, std::vector<Color> vertex_color,
          std::vector<std::string> vertex_names = {});

    int num_darts() const noexcept { return static_cast<int>(vertex_of_.size()); }
    int num_vertices() const noexcept { return static_cast<int>(vertex_color_.size()); }
    int num_links() const noexcept { return static_cast<int>(link_start_.size()) - 1; }

    VertexId vertex_of(Dart d) const { return vertex_of_[d]; }
    LinkId link_of(Dart d) const { return link_of_[d]; }
    Color dart_color(Dart d) const { return dart_color_[d]; }
    Color vertex_color(VertexId v) const { return vertex_color_[v]; }

    std::span<const Dart> darts_at(VertexId v) const;
    std::span<const Dart> link_darts(LinkId l) const;

    /// The other dart of d's link, or d itself when d is a semi-edge.
    Dart mate(Dart d) const { return mate_[d]; }

    LinkKind link_kind(LinkId l) const;
    int degree(VertexId v) const { return static_cast<int>(darts_at(v).size()); }

    bool has_names() const noexcept { return !vertex_names_.empty(); }
    /// Name from the source file, or the decimal vertex id.
    std::string vertex_name(VertexId v) const;

    std::span<const VertexId> raw_vertex_of() const noexcept { return vertex_of_; }
    std::span<const LinkId> raw_link_of() const noexcept { return link_of_; }
    std::span<const Color> raw_dart_color() const noexcept { return dart_color_; }
    std::span<const Color> raw_vertex_color() const noexcept { return vertex_color_; }
    std::span<const std::string> raw_vertex_names() const noexcept { return vertex_names_; }

    bool operator==(const Graph& other) const;

private:
    std::vector<VertexId> vertex_of_;
    std::vector<LinkId> link_of_;
    std::vector<Color> dart_color_;
    std::vector<Color> vertex_color_;
    std::vector<std::string> vertex_names_;

    // CSR indices derived in the constructor.
    std::vector<int> vertex_start_{0};
    std::vector<Dart> vertex_darts_;
    std::vector<int> link_start_{0};
    std::vector<Dart> link_darts_;
    std::vector<Dart> mate_;
};

/// Incremental construction; darts are numbered in creation order.
class GraphBuilder {
public:
    VertexId add_vertex(Color color = 0, std::string name = {});
    /// `edge u u` is stored as a loop.
    LinkId add_edge(VertexId u, VertexId v, Color color_u = 0, Color color_v = 0);
    LinkId add_loop(VertexId u, Color color_a = 0, Color color_b = 0);
    LinkId add_semi(VertexId u, Color color = 0);

    int num_vertices() const noexcept { return static_cast<int>(vertex_color_.size()); }

    Graph build() const;

private:
    void check_vertex(VertexId v) const;

    std::vector<VertexId> vertex_of_;
    std::vector<LinkId> link_of_;
    std::vector<Color> dart_color_;
    std::vector<Color> vertex_color_;
    std::vector<std::string> names_;
    LinkId next_link_ = 0;
};

enum class ViolationKind { PartitionViolation, LinkArityViolation, ColorViolation };

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int index;  // offending dart or link id
    std::string detail;
};

/// Checks the partition and link-arity invariants; empty means valid.
std::vector<Violation> validate(const Graph& g);

/// Throws InvalidGraph listing the first violation.
void require_valid(const Graph& g);

/// Vertex color plus the sorted multiset of incident dart colors.
struct DegreeSignature {
    Color vertex_color = 0;
    std::vector<Color> dart_colors;

    auto operator<=>(const DegreeSignature&) const = default;
};

int degree(const Graph& g, VertexId v);
DegreeSignature degree_signature(const Graph& g, VertexId v);

struct StructuralPredicates {
    bool is_simple = false;
    bool is_regular = false;
    bool is_bipartite = false;
    bool is_connected = false;
    int regular_degree = -1;  // set when is_regular
};

StructuralPredicates structural_predicates(const Graph& g);

bool is_simple(const Graph& g);
/// Any semi-edge or loop makes a graph non-bipartite.
bool is_bipartite(const Graph& g);
/// Vertex 2-colouring over normal edges, or empty when none exists.
std::vector<int> bipartition(const Graph& g);
bool is_connected(const Graph& g);

/// Graph restricted to some vertices and links, with the origin of every
/// kept vertex and dart in the parent graph.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> vertex_origin;
    std::vector<Dart> dart_origin;
};

using LinkPredicate = std::function<bool(const Graph&, LinkId)>;

/// Keeps `vertices` (in the given order) and every link that lies entirely
/// inside them and satisfies `keep`.
Subgraph extract_subgraph(const Graph& g, std::span<const VertexId> vertices,
                          const LinkPredicate& keep = {});

struct ComponentDecomposition {
    /// Ordered by smallest original vertex id.
    std::vector<Subgraph> components;
    std::vector<int> component_of_vertex;
};

ComponentDecomposition components(const Graph& g);

/// The unordered colour pair of a link ({c,c} for a semi-edge of colour c),
/// returned with first <= second.
std::pair<Color, Color> link_color_set(const Graph& g, LinkId l);

/// All vertices, plus exactly the links whose dart-colour set is {a, b}.
Subgraph induced_link_subgraph(const Graph& g, Color a, Color b);
Subgraph induced_link_subgraph(const Graph& g, const LinkPredicate& keep);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Same graph with every dart and vertex colour set to 0.
Graph strip_colors(const Graph& g);

/// Applies `color_of_dart` to every dart; vertex colours are kept.
Graph recolor_darts(const Graph& g, const std::function<Color(Dart)>& color_of_dart);

}  // namespace dartcover
