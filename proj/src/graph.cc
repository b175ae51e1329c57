#include <loccode/error.hh>
#include <loccode/graph.hh>

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace loccode
{
    namespace
    {
        auto parse_int(string_view text, const string & what) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw std::invalid_argument("bad " + what + ": '" + string(text) + "'");
            return value;
        }

        auto wrap(long x, int period) -> int
        {
            auto r = x % period;
            return static_cast<int>(r < 0 ? r + period : r);
        }

        // Offsets of the grid edge rules; the hexagonal vertical edge is added separately.
        auto grid_offsets(GridFamily family) -> vector<std::pair<int, int>>
        {
            switch (family) {
                case GridFamily::Square: return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                case GridFamily::Hexagonal: return {{1, 0}, {-1, 0}};
                case GridFamily::Triangular: return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
                case GridFamily::King: return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
            }
            throw std::logic_error("unknown grid family");
        }
    }

    auto to_string(GridFamily family) -> string
    {
        switch (family) {
            case GridFamily::Square: return "square";
            case GridFamily::Hexagonal: return "hexagonal";
            case GridFamily::Triangular: return "triangular";
            case GridFamily::King: return "king";
        }
        throw std::logic_error("unknown grid family");
    }

    auto parse_grid_family(string_view name) -> GridFamily
    {
        if (name == "square" || name == "sq")
            return GridFamily::Square;
        if (name == "hexagonal" || name == "hex")
            return GridFamily::Hexagonal;
        if (name == "triangular" || name == "tri")
            return GridFamily::Triangular;
        if (name == "king")
            return GridFamily::King;
        throw std::invalid_argument("unknown grid family '" + string(name) + "'");
    }

    auto TorusSpec::validate() const -> void
    {
        if (px < 5 || py < 5)
            throw std::invalid_argument("torus periods must be at least 5, got " + std::to_string(px) + "x" + std::to_string(py));
        if (family == GridFamily::Hexagonal && (px % 2 != 0 || py % 2 != 0))
            throw std::invalid_argument("hexagonal torus periods must both be even");
    }

    auto TorusSpec::vertex(long i, long j) const -> VertexId
    {
        return static_cast<VertexId>(wrap(i, px) * py + wrap(j, py));
    }

    auto TorusSpec::coords(VertexId v) const -> std::pair<int, int>
    {
        return {static_cast<int>(v) / py, static_cast<int>(v) % py};
    }

    Graph::Graph(std::size_t n, const vector<Edge> & edge_list, vector<string> labels, Provenance provenance) :
        _labels(std::move(labels)),
        _provenance(std::move(provenance))
    {
        if (! _labels.empty() && _labels.size() != n)
            throw std::invalid_argument("label count does not match vertex count");

        vector<vector<VertexId>> adj(n);
        for (auto [u, v] : edge_list) {
            if (u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
            adj[u].push_back(v);
            adj[v].push_back(u);
        }

        _offsets.reserve(n + 1);
        _offsets.push_back(0);
        for (auto & row : adj) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            _targets.insert(_targets.end(), row.begin(), row.end());
            _offsets.push_back(_targets.size());
        }
    }

    auto Graph::max_degree() const -> std::size_t
    {
        std::size_t result = 0;
        for (VertexId v = 0; v < size(); ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::adjacent(VertexId u, VertexId v) const -> bool
    {
        auto n = neighbours(u);
        return std::binary_search(n.begin(), n.end(), v);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(edge_count());
        for (VertexId u = 0; u < size(); ++u)
            for (auto v : neighbours(u))
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::label(VertexId v) const -> string
    {
        return _labels.empty() ? std::to_string(v) : _labels[v];
    }

    auto Graph::find_label(string_view text) const -> optional<VertexId>
    {
        for (VertexId v = 0; v < _labels.size(); ++v)
            if (_labels[v] == text)
                return v;
        return std::nullopt;
    }

    auto Graph::vertex_transitive() const -> bool
    {
        switch (_provenance.family) {
            case GraphFamily::Hypercube:
            case GraphFamily::Cycle:
            case GraphFamily::Torus:
                return true;
            default:
                return false;
        }
    }

    BallTable::BallTable(const Graph & graph, int radius) :
        _radius(radius)
    {
        if (radius < 0)
            throw std::invalid_argument("negative radius");

        auto n = graph.size();
        _offsets.reserve(n + 1);
        _offsets.push_back(0);

        vector<int> dist(n, -1);
        vector<VertexId> frontier, next, touched;
        for (VertexId v = 0; v < n; ++v) {
            touched.assign(1, v);
            dist[v] = 0;
            frontier.assign(1, v);
            for (int d = 1; d <= radius && ! frontier.empty(); ++d) {
                next.clear();
                for (auto x : frontier)
                    for (auto y : graph.neighbours(x))
                        if (dist[y] < 0) {
                            dist[y] = d;
                            next.push_back(y);
                            touched.push_back(y);
                        }
                std::swap(frontier, next);
            }
            std::sort(touched.begin(), touched.end());
            _members.insert(_members.end(), touched.begin(), touched.end());
            _offsets.push_back(_members.size());
            for (auto x : touched)
                dist[x] = -1;
        }
    }

    auto BallTable::ball_set(VertexId v) const -> VertexSet
    {
        VertexSet result(size());
        for (auto u : ball(v))
            result.insert(u);
        return result;
    }

    auto BallTable::max_ball_size() const -> std::size_t
    {
        std::size_t result = 0;
        for (std::size_t v = 0; v + 1 < _offsets.size(); ++v)
            result = std::max(result, _offsets[v + 1] - _offsets[v]);
        return result;
    }

    auto hypercube(int n) -> Graph
    {
        if (n < 1 || n > 20)
            throw std::invalid_argument("hypercube dimension must be in [1, 20]");

        auto count = VertexId{1} << n;
        vector<Edge> edges;
        edges.reserve(std::size_t(count) * n / 2);
        vector<string> labels(count);
        for (VertexId v = 0; v < count; ++v) {
            for (int b = 0; b < n; ++b) {
                auto u = v ^ (VertexId{1} << b);
                if (v < u)
                    edges.emplace_back(v, u);
            }
            string label(n, '0');
            for (int b = 0; b < n; ++b)
                if ((v >> (n - 1 - b)) & 1U)
                    label[b] = '1';
            labels[v] = std::move(label);
        }
        return Graph(count, edges, std::move(labels), {GraphFamily::Hypercube, std::nullopt, n});
    }

    auto path(int n) -> Graph
    {
        if (n < 1)
            throw std::invalid_argument("path needs at least one vertex");
        vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph(n, edges, {}, {GraphFamily::Path, std::nullopt, 0});
    }

    auto cycle(int n) -> Graph
    {
        if (n < 3)
            throw std::invalid_argument("cycle needs at least three vertices");
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, edges, {}, {GraphFamily::Cycle, std::nullopt, 0});
    }

    auto complete_bipartite(int a, int b) -> Graph
    {
        if (a < 1 || b < 1)
            throw std::invalid_argument("complete bipartite parts must be nonempty");
        vector<Edge> edges;
        vector<string> labels;
        for (int i = 0; i < a; ++i)
            labels.push_back("a" + std::to_string(i));
        for (int j = 0; j < b; ++j)
            labels.push_back("b" + std::to_string(j));
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                edges.emplace_back(i, a + j);
        return Graph(a + b, edges, std::move(labels), {GraphFamily::CompleteBipartite, std::nullopt, 0});
    }

    auto torus(const TorusSpec & spec) -> Graph
    {
        spec.validate();
        auto offsets = grid_offsets(spec.family);
        vector<Edge> edges;
        vector<string> labels(std::size_t(spec.px) * spec.py);
        for (int i = 0; i < spec.px; ++i)
            for (int j = 0; j < spec.py; ++j) {
                auto v = spec.vertex(i, j);
                labels[v] = std::to_string(i) + "," + std::to_string(j);
                for (auto [di, dj] : offsets) {
                    auto u = spec.vertex(i + di, j + dj);
                    if (v < u)
                        edges.emplace_back(v, u);
                }
                if (spec.family == GridFamily::Hexagonal && (i + j) % 2 == 0)
                    edges.emplace_back(v, spec.vertex(i, j + 1));
            }
        auto n = labels.size();
        return Graph(n, edges, std::move(labels), {GraphFamily::Torus, spec, 0});
    }

    auto figure_graph(FigureId id) -> Graph
    {
        int path_length = id == FigureId::Fig1 ? 5 : 4;
        vector<Edge> edges;
        vector<string> labels;
        for (int i = 0; i < path_length; ++i)
            labels.push_back("v" + std::to_string(i + 1));
        labels.push_back("p");
        for (int i = 0; i + 1 < path_length; ++i)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(1, path_length);
        return Graph(path_length + 1, edges, std::move(labels), {GraphFamily::Figure, std::nullopt, 0});
    }

    auto closed_ball(const Graph & graph, VertexId v, int r) -> VertexSet
    {
        if (v >= graph.size())
            throw std::out_of_range("vertex out of range");
        if (r < 0)
            throw std::invalid_argument("negative radius");

        VertexSet result(graph.size());
        result.insert(v);
        vector<VertexId> frontier{v}, next;
        for (int d = 0; d < r && ! frontier.empty(); ++d) {
            next.clear();
            for (auto x : frontier)
                for (auto y : graph.neighbours(x))
                    if (! result.contains(y)) {
                        result.insert(y);
                        next.push_back(y);
                    }
            std::swap(frontier, next);
        }
        return result;
    }

    auto distance(const Graph & graph, VertexId u, VertexId v) -> optional<int>
    {
        if (u >= graph.size() || v >= graph.size())
            throw std::out_of_range("vertex out of range");
        vector<int> dist(graph.size(), -1);
        std::deque<VertexId> queue{u};
        dist[u] = 0;
        while (! queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            if (x == v)
                return dist[x];
            for (auto y : graph.neighbours(x))
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        return std::nullopt;
    }

    auto is_triangle_free(const Graph & graph) -> bool
    {
        for (auto [u, v] : graph.edges()) {
            auto a = graph.neighbours(u), b = graph.neighbours(v);
            auto i = a.begin(), j = b.begin();
            while (i != a.end() && j != b.end()) {
                if (*i == *j)
                    return false;
                if (*i < *j)
                    ++i;
                else
                    ++j;
            }
        }
        return true;
    }

    auto graph_from_uri(string_view uri) -> Graph
    {
        auto colon = uri.find(':');
        if (colon == string_view::npos)
            throw std::invalid_argument("graph URI needs a scheme: '" + string(uri) + "'");
        auto scheme = uri.substr(0, colon);
        auto rest = uri.substr(colon + 1);

        if (scheme == "hypercube")
            return hypercube(parse_int(rest, "hypercube dimension"));
        if (scheme == "path")
            return path(parse_int(rest, "path length"));
        if (scheme == "cycle")
            return cycle(parse_int(rest, "cycle length"));
        if (scheme == "kbipartite") {
            auto comma = rest.find(',');
            if (comma == string_view::npos)
                throw std::invalid_argument("kbipartite expects a,b");
            return complete_bipartite(parse_int(rest.substr(0, comma), "part size"), parse_int(rest.substr(comma + 1), "part size"));
        }
        if (scheme == "torus") {
            auto second = rest.find(':');
            if (second == string_view::npos)
                throw std::invalid_argument("torus expects torus:<family>:<px>x<py>");
            auto dims = rest.substr(second + 1);
            auto x = dims.find('x');
            if (x == string_view::npos)
                throw std::invalid_argument("torus dimensions must look like 10x10");
            return torus({parse_grid_family(rest.substr(0, second)), parse_int(dims.substr(0, x), "period"),
                    parse_int(dims.substr(x + 1), "period")});
        }
        if (scheme == "fig") {
            if (rest == "1")
                return figure_graph(FigureId::Fig1);
            if (rest == "2")
                return figure_graph(FigureId::Fig2);
            throw std::invalid_argument("unknown figure '" + string(rest) + "'");
        }
        if (scheme == "file") {
            std::ifstream in{string(rest)};
            if (! in)
                throw std::invalid_argument("cannot open graph file '" + string(rest) + "'");
            return read_graph(in);
        }
        throw std::invalid_argument("unknown graph scheme '" + string(scheme) + "'");
    }

    auto read_graph(std::istream & in) -> Graph
    {
        string line;
        int line_no = 0;
        optional<std::pair<long, long>> header;
        vector<Edge> edges;
        std::unordered_map<VertexId, string> labels;

        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != string::npos)
                line.erase(hash);
            std::istringstream tokens(line);
            string first;
            if (! (tokens >> first))
                continue;

            if (! header) {
                long n = -1, m = -1;
                if (first != "graph" || ! (tokens >> n >> m) || n < 0 || m < 0)
                    throw ParseError("expected header 'graph <n> <m>'", line_no);
                header.emplace(n, m);
                continue;
            }

            if (first == "label") {
                long v = -1;
                string text;
                if (! (tokens >> v >> text) || v < 0 || v >= header->first)
                    throw ParseError("expected 'label <v> <string>' with v in range", line_no);
                labels[static_cast<VertexId>(v)] = text;
                continue;
            }

            long u = -1, v = -1;
            try {
                u = std::stol(first);
            }
            catch (const std::exception &) {
                throw ParseError("expected an edge 'u v', got '" + first + "'", line_no);
            }
            if (! (tokens >> v) || u < 0 || v < 0 || u >= header->first || v >= header->first)
                throw ParseError("edge endpoints must be integers in [0, n)", line_no);
            if (u == v)
                throw ParseError("self-loop", line_no);
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }

        if (! header)
            throw ParseError("missing 'graph <n> <m>' header");
        if (static_cast<long>(edges.size()) != header->second)
            throw ParseError("header declares " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));

        vector<string> label_vec;
        if (! labels.empty()) {
            label_vec.resize(header->first);
            for (VertexId v = 0; v < label_vec.size(); ++v)
                label_vec[v] = labels.contains(v) ? labels[v] : std::to_string(v);
        }
        return Graph(header->first, edges, std::move(label_vec));
    }

    auto write_graph(std::ostream & out, const Graph & graph) -> void
    {
        auto edges = graph.edges();
        out << "graph " << graph.size() << " " << edges.size() << "\n";
        for (auto [u, v] : edges)
            out << u << " " << v << "\n";
        if (graph.has_labels())
            for (VertexId v = 0; v < graph.size(); ++v)
                out << "label " << v << " " << graph.label(v) << "\n";
    }
}
