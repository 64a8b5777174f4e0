/**
 * Finite simple connected graphs with their shortest-path metric, parsers
 * for the edge-list and JSON graph formats, builtin generators, and
 * enumeration of unit-step walks.
 */
#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace maghom {

/// Index of a vertex in its graph's vertex order.
using vertex_t = std::size_t;

/// A vertex tuple (x_0, ..., x_k).
using VertexTuple = std::vector<vertex_t>;

class graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Immutable undirected graph without loops or multi-edges.
 *
 * Vertices carry opaque string labels; their index order is the total order
 * used by every orientation-sensitive construction downstream. The hop
 * metric is computed once at construction by BFS from every vertex, and
 * construction fails for disconnected input.
 */
class Graph {
public:
    using Edge = std::pair<vertex_t, vertex_t>;

    Graph() = default;

    static Graph from_edges(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& edges)
    {
        Graph g;
        g.labels_ = std::move(labels);
        for (vertex_t v = 0; v < g.labels_.size(); ++v) {
            if (!g.index_.emplace(g.labels_[v], v).second) {
                throw graph_error("duplicate vertex '" + g.labels_[v] + "'");
            }
        }
        if (g.labels_.empty()) {
            throw graph_error("graph has no vertices");
        }
        g.adjacency_.assign(g.labels_.size(), {});
        std::set<Edge> seen;
        for (const auto& [su, sv] : edges) {
            auto find = [&](const std::string& s) {
                auto it = g.index_.find(s);
                if (it == g.index_.end()) {
                    throw graph_error("edge " + su + "-" + sv + " references unknown vertex '" + s + "'");
                }
                return it->second;
            };
            vertex_t u = find(su);
            vertex_t v = find(sv);
            if (u == v) {
                throw graph_error("self-loop at vertex '" + su + "'");
            }
            Edge e = std::minmax(u, v);
            if (!seen.insert(e).second) {
                throw graph_error("duplicate edge " + su + "-" + sv);
            }
            g.edges_.push_back(e);
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        for (auto& nbrs : g.adjacency_) {
            std::sort(nbrs.begin(), nbrs.end());
        }
        g.compute_metric();
        return g;
    }

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(vertex_t v) const { return labels_.at(v); }

    vertex_t index_of(std::string_view label) const
    {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) {
            throw graph_error("unknown vertex '" + std::string(label) + "'");
        }
        return it->second;
    }

    bool has_vertex(std::string_view label) const { return index_.count(std::string(label)) != 0; }

    /// Sorted edge list, each edge as (smaller index, larger index).
    const std::vector<Edge>& edges() const { return edges_; }

    /// Neighbours in increasing vertex order.
    const std::vector<vertex_t>& neighbors(vertex_t v) const { return adjacency_.at(v); }

    unsigned distance(vertex_t u, vertex_t v) const
    {
        if (u >= num_vertices() || v >= num_vertices()) {
            throw graph_error("vertex index out of range");
        }
        return dist_[u * num_vertices() + v];
    }

    unsigned distance(std::string_view u, std::string_view v) const
    {
        return distance(index_of(u), index_of(v));
    }

    bool adjacent(vertex_t u, vertex_t v) const { return distance(u, v) == 1; }

    unsigned diameter() const
    {
        return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
    }

    /// Connected graphs are trees exactly when #E = #V - 1.
    bool is_tree() const { return num_edges() + 1 == num_vertices(); }

    std::string tuple_to_string(const VertexTuple& t) const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += label(t[i]);
        }
        return s + ")";
    }

private:
    void compute_metric()
    {
        const std::size_t n = num_vertices();
        constexpr unsigned unreached = std::numeric_limits<unsigned>::max();
        dist_.assign(n * n, unreached);
        for (vertex_t s = 0; s < n; ++s) {
            unsigned* row = &dist_[s * n];
            std::queue<vertex_t> q;
            row[s] = 0;
            q.push(s);
            while (!q.empty()) {
                vertex_t u = q.front();
                q.pop();
                for (vertex_t w : adjacency_[u]) {
                    if (row[w] == unreached) {
                        row[w] = row[u] + 1;
                        q.push(w);
                    }
                }
            }
            for (vertex_t t = 0; t < n; ++t) {
                if (row[t] == unreached) {
                    throw graph_error("graph is disconnected: no path from '" + labels_[s] + "' to '" +
                                      labels_[t] + "'");
                }
            }
        }
    }

    std::vector<std::string> labels_;
    std::map<std::string, vertex_t, std::less<>> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<vertex_t>> adjacency_;
    std::vector<unsigned> dist_;
};

/// L(x) = sum of consecutive distances.
inline unsigned tuple_length(const Graph& g, const VertexTuple& x)
{
    unsigned total = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        total += g.distance(x[i], x[i + 1]);
    }
    return total;
}

/// A tuple is a sequence when consecutive entries differ.
inline bool is_sequence(const VertexTuple& x)
{
    return std::adjacent_find(x.begin(), x.end()) == x.end();
}

/// A sequence whose every step has distance one. Vertices may repeat.
struct Walk {
    VertexTuple vertices;

    std::size_t steps() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    vertex_t front() const { return vertices.front(); }
    vertex_t back() const { return vertices.back(); }

    friend auto operator<=>(const Walk&, const Walk&) = default;
};

inline bool is_walk(const Graph& g, const VertexTuple& x)
{
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (g.distance(x[i], x[i + 1]) != 1) return false;
    }
    return !x.empty();
}

/**
 * All unit-step walks from a to b with at most max_steps steps, in
 * lexicographic order of vertex tuples (a walk precedes its extensions).
 * Branches are cut as soon as the remaining budget is below d(current, b).
 */
inline std::vector<Walk> enumerate_walks(const Graph& g, vertex_t a, vertex_t b, unsigned max_steps)
{
    std::vector<Walk> out;
    if (g.distance(a, b) > max_steps) return out;
    VertexTuple current{a};
    auto extend = [&](auto&& self, unsigned budget) -> void {
        vertex_t v = current.back();
        if (v == b) out.push_back(Walk{current});
        for (vertex_t w : g.neighbors(v)) {
            if (budget >= 1 && g.distance(w, b) <= budget - 1) {
                current.push_back(w);
                self(self, budget - 1);
                current.pop_back();
            }
        }
    };
    extend(extend, max_steps);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

/**
 * Edge-list text: one "u v" pair per line; '#' starts a comment; a line with
 * a single token declares a vertex. Vertex order is first appearance.
 */
inline Graph parse_edge_list(std::istream& in)
{
    std::vector<std::string> labels;
    std::set<std::string> known;
    std::vector<std::pair<std::string, std::string>> edges;
    auto declare = [&](const std::string& s) {
        if (known.insert(s).second) labels.push_back(s);
    };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() > 2) {
            throw graph_error("line " + std::to_string(lineno) + ": expected 'u v', got " +
                              std::to_string(tokens.size()) + " tokens");
        }
        declare(tokens[0]);
        if (tokens.size() == 2) {
            declare(tokens[1]);
            edges.emplace_back(tokens[0], tokens[1]);
        }
    }
    return Graph::from_edges(std::move(labels), edges);
}

inline Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

/// {"vertices": [...], "edges": [[u, v], ...]}; vertex order is array order.
inline Graph parse_graph_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw graph_error("structured graph must be an object with 'vertices' and 'edges'");
    }
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw graph_error("vertex identifiers must be strings");
        labels.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw graph_error("each edge must be a 2-element array of strings, got " + e.dump());
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::from_edges(std::move(labels), edges);
}

/// Structured format if the text starts with '{', edge list otherwise.
inline Graph parse_graph(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw graph_error(std::string("malformed graph JSON: ") + e.what());
        }
        return parse_graph_json(j);
    }
    return parse_edge_list(text);
}

inline nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    return {{"vertices", g.labels()}, {"edges", edges}};
}

// ---------------------------------------------------------------------------
// Generators

namespace detail {

inline std::vector<std::string> numbered_labels(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

inline Graph from_index_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& idx)
{
    auto labels = numbered_labels(n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : idx) edges.emplace_back(labels[u], labels[v]);
    return Graph::from_edges(labels, edges);
}

inline std::uint64_t parse_number(std::string_view s, std::string_view what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw graph_error("invalid " + std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

} // namespace detail

inline Graph path_graph(std::size_t n)
{
    if (n < 1) throw graph_error("path:n requires n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return detail::from_index_edges(n, e);
}

inline Graph cycle_graph(std::size_t n)
{
    if (n < 3) throw graph_error("cycle:n requires n >= 3 (smaller cycles need loops or multi-edges)");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return detail::from_index_edges(n, e);
}

inline Graph complete_graph(std::size_t n)
{
    if (n < 1) throw graph_error("complete:n requires n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return detail::from_index_edges(n, e);
}

/// n vertices: centre 0 joined to 1..n-1.
inline Graph star_graph(std::size_t n)
{
    if (n < 1) throw graph_error("star:n requires n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i < n; ++i) e.emplace_back(0, i);
    return detail::from_index_edges(n, e);
}

/// Vertex i > 0 attaches to a uniformly chosen earlier vertex.
inline Graph random_tree(std::size_t n, std::uint64_t seed)
{
    if (n < 1) throw graph_error("random-tree:n requires n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        e.emplace_back(pick(rng), i);
    }
    return detail::from_index_edges(n, e);
}

/// A random spanning tree plus each remaining pair independently with
/// probability extra_edge_probability.
inline Graph random_connected_graph(std::size_t n, std::mt19937_64& rng, double extra_edge_probability = 0.35)
{
    if (n < 1) throw graph_error("random-connected:n requires n >= 1");
    std::set<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        e.emplace(pick(rng), i);
    }
    std::bernoulli_distribution coin(extra_edge_probability);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!e.count({i, j}) && coin(rng)) e.emplace(i, j);
    return detail::from_index_edges(n, {e.begin(), e.end()});
}

/**
 * The six-vertex graph Sq2: triangles a-b-f and d-c-e joined by the square
 * b-c-e-f. The edge set is the unique one for which every walk listed for
 * the (a,a) and (a,d) components at length 4 is a unit-step walk.
 */
inline Graph sq2_graph()
{
    return Graph::from_edges({"a", "b", "c", "d", "e", "f"},
                             {{"a", "b"}, {"a", "f"}, {"b", "f"}, {"b", "c"},
                              {"f", "e"}, {"c", "e"}, {"c", "d"}, {"e", "d"}});
}

/**
 * Builtin families: path:n, cycle:n, complete:n, star:n, random-tree:n:seed,
 * random-connected:n:seed, sq2.
 */
inline Graph generate(std::string_view spec)
{
    std::vector<std::string_view> parts;
    for (std::size_t start = 0;;) {
        auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    const std::string_view family = parts[0];
    auto arity = [&](std::size_t expected) {
        if (parts.size() != expected + 1) {
            throw graph_error("generator '" + std::string(family) + "' expects " + std::to_string(expected) +
                              " argument(s): '" + std::string(spec) + "'");
        }
    };
    if (family == "sq2") {
        arity(0);
        return sq2_graph();
    }
    if (family == "path" || family == "cycle" || family == "complete" || family == "star") {
        arity(1);
        auto n = detail::parse_number(parts[1], "vertex count");
        if (family == "path") return path_graph(n);
        if (family == "cycle") return cycle_graph(n);
        if (family == "complete") return complete_graph(n);
        return star_graph(n);
    }
    if (family == "random-tree" || family == "random-connected") {
        arity(2);
        auto n = detail::parse_number(parts[1], "vertex count");
        auto seed = detail::parse_number(parts[2], "seed");
        if (family == "random-tree") return random_tree(n, seed);
        std::mt19937_64 rng(seed);
        return random_connected_graph(n, rng);
    }
    throw graph_error("unknown graph family '" + std::string(family) + "'");
}

} // namespace maghom
