#pragma once

#include <loccode/vertex_set.hh>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loccode
{
    enum class GridFamily
    {
        Square,
        Hexagonal,
        Triangular,
        King
    };

    auto to_string(GridFamily family) -> std::string;
    auto parse_grid_family(std::string_view name) -> GridFamily;

    /// A rectangular quotient of one of the infinite grids.
    struct TorusSpec
    {
        GridFamily family = GridFamily::Square;
        int px = 0;
        int py = 0;

        /// Throws std::invalid_argument when the periods are too small to embed
        /// radius-2 balls, or odd on the hexagonal grid.
        auto validate() const -> void;

        auto vertex(long i, long j) const -> VertexId;
        auto coords(VertexId v) const -> std::pair<int, int>;

        friend auto operator==(const TorusSpec &, const TorusSpec &) -> bool = default;
    };

    enum class GraphFamily
    {
        Custom,
        Hypercube,
        Path,
        Cycle,
        CompleteBipartite,
        Figure,
        Torus
    };

    using Edge = std::pair<VertexId, VertexId>;

    struct Provenance
    {
        GraphFamily family = GraphFamily::Custom;
        std::optional<TorusSpec> torus;
        int dimension = 0; // hypercube only
    };

    /// Immutable finite simple graph on vertices 0..n-1.
    class Graph
    {
        public:
            Graph(std::size_t n, const std::vector<Edge> & edges, std::vector<std::string> labels = {},
                    Provenance provenance = {});

            auto size() const -> std::size_t { return _offsets.size() - 1; }
            auto edge_count() const -> std::size_t { return _targets.size() / 2; }

            auto neighbours(VertexId v) const -> std::span<const VertexId>
            {
                return {_targets.data() + _offsets[v], _targets.data() + _offsets[v + 1]};
            }

            auto degree(VertexId v) const -> std::size_t { return _offsets[v + 1] - _offsets[v]; }
            auto max_degree() const -> std::size_t;
            auto adjacent(VertexId u, VertexId v) const -> bool;

            /// Edges with u < v, in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            auto label(VertexId v) const -> std::string;
            auto has_labels() const -> bool { return ! _labels.empty(); }
            auto find_label(std::string_view label) const -> std::optional<VertexId>;

            auto provenance() const -> const Provenance & { return _provenance; }
            auto family() const -> GraphFamily { return _provenance.family; }
            auto torus() const -> const std::optional<TorusSpec> & { return _provenance.torus; }

            /// True for generators known to be vertex-transitive.
            auto vertex_transitive() const -> bool;

        private:
            std::vector<std::size_t> _offsets;
            std::vector<VertexId> _targets;
            std::vector<std::string> _labels;
            Provenance _provenance;
    };

    /// Closed r-balls of every vertex, as sorted vertex lists.
    class BallTable
    {
        public:
            BallTable(const Graph & graph, int radius);

            auto radius() const -> int { return _radius; }
            auto size() const -> std::size_t { return _offsets.size() - 1; }

            auto ball(VertexId v) const -> std::span<const VertexId>
            {
                return {_members.data() + _offsets[v], _members.data() + _offsets[v + 1]};
            }

            auto ball_set(VertexId v) const -> VertexSet;
            auto max_ball_size() const -> std::size_t;

        private:
            int _radius;
            std::vector<std::size_t> _offsets;
            std::vector<VertexId> _members;
    };

    auto hypercube(int n) -> Graph;
    auto path(int n) -> Graph;
    auto cycle(int n) -> Graph;
    auto complete_bipartite(int a, int b) -> Graph;
    auto torus(const TorusSpec & spec) -> Graph;

    enum class FigureId
    {
        Fig1,
        Fig2
    };

    /// fig1: path v1..v5 with a pendant p on v2. fig2: path v1..v4 with a
    /// pendant p on v2. Path vertices come first, the pendant is last.
    auto figure_graph(FigureId id) -> Graph;

    auto closed_ball(const Graph & graph, VertexId v, int r) -> VertexSet;

    /// Shortest-path length, or nullopt when v is unreachable from u.
    auto distance(const Graph & graph, VertexId u, VertexId v) -> std::optional<int>;

    auto is_triangle_free(const Graph & graph) -> bool;

    /// hypercube:4, path:7, cycle:9, kbipartite:2,5, torus:square:10x10,
    /// fig:1, fig:2, file:<path>
    auto graph_from_uri(std::string_view uri) -> Graph;

    auto read_graph(std::istream & in) -> Graph;
    auto write_graph(std::ostream & out, const Graph & graph) -> void;
}
