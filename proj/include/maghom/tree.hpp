/**
 * Magnitude homology of trees. In a tree every sequence has a unique
 * shortest walk through its points, so MC_{*,l}(a,b) splits into one summand
 * per walk of exactly l steps, and each summand is the relative chain complex
 * of the standard simplex on positions 1..l-1 modulo the faces that miss a
 * turning point.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graph.hpp"
#include "homology.hpp"
#include "magnitude.hpp"
#include "simplicial.hpp"

namespace maghom {

class not_a_tree_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require_tree(const Graph& g)
{
    if (!g.is_tree()) {
        throw not_a_tree_error("graph is not a tree: " + std::to_string(g.num_vertices()) + " vertices, " +
                               std::to_string(g.num_edges()) + " edges");
    }
}

/// A walk of exactly l steps together with its interior turning positions.
struct TreePathComponent {
    Walk walk;
    std::vector<unsigned> turning_positions;

    std::size_t m() const { return turning_positions.size(); }
};

/// Positions 1 <= i <= steps-1 where the walk turns back: x_{i-1} = x_{i+1}.
inline std::vector<unsigned> turning_positions(const Walk& w)
{
    std::vector<unsigned> out;
    for (unsigned i = 1; i + 1 <= w.steps(); ++i)
        if (w.vertices[i - 1] == w.vertices[i + 1]) out.push_back(i);
    return out;
}

/// Positions where the triangle inequality is strict. Coincides with
/// turning_positions() on trees; differs on graphs with cycles.
inline std::vector<unsigned> strict_triangle_positions(const Graph& g, const Walk& w)
{
    std::vector<unsigned> out;
    for (unsigned i = 1; i + 1 <= w.steps(); ++i)
        if (!removal_preserves_length(g, w.vertices, i)) out.push_back(i);
    return out;
}

/**
 * One component per walk a -> b of exactly l steps. Shorter walks are dropped:
 * every subsequence of such a walk is shorter than l, so its summand is zero.
 */
inline std::vector<TreePathComponent> decompose_tree_component(const Graph& g, const ComponentKey& key)
{
    require_tree(g);
    if (key.length < 3) throw std::invalid_argument("tree decomposition needs l >= 3");
    std::vector<TreePathComponent> out;
    for (auto& w : enumerate_walks(g, key.a, key.b, key.length)) {
        if (w.steps() != key.length) continue;
        auto turns = turning_positions(w);
        out.push_back(TreePathComponent{std::move(w), std::move(turns)});
    }
    return out;
}

/// (Delta^{l-2}, Delta_x) on labels 1..l-1.
struct DeltaPair {
    unsigned length = 0;
    std::vector<unsigned> turning_positions;
    SimplicialPair<unsigned> pair;
};

inline DeltaPair build_delta_pair(const TreePathComponent& comp, unsigned length)
{
    std::vector<unsigned> all;
    for (unsigned i = 1; i < length; ++i) all.push_back(i);
    auto ambient = SimplicialComplex<unsigned>::closure({Simplex<unsigned>(all)});
    std::vector<Simplex<unsigned>> missing;
    if (!comp.turning_positions.empty()) {
        Simplex<unsigned> phi(comp.turning_positions);
        for (const auto& s : ambient.all_simplices())
            if (!s.contains(phi)) missing.push_back(s);
    }
    SimplicialComplex<unsigned> sub(missing);
    return DeltaPair{length, comp.turning_positions, SimplicialPair<unsigned>(std::move(ambient), std::move(sub))};
}

enum class DeltaHomotopy { empty, sphere, contractible };

inline std::string to_string(DeltaHomotopy h)
{
    switch (h) {
    case DeltaHomotopy::empty: return "empty";
    case DeltaHomotopy::sphere: return "sphere";
    case DeltaHomotopy::contractible: return "contractible";
    }
    return "?";
}

/// m = 0: Delta_x empty; m = l-1: boundary sphere S^{l-3}; otherwise contractible.
inline DeltaHomotopy classify_delta(const TreePathComponent& comp, unsigned length)
{
    if (comp.m() == 0) return DeltaHomotopy::empty;
    if (comp.m() + 1 == length) return DeltaHomotopy::sphere;
    return DeltaHomotopy::contractible;
}

/**
 * MH_{k,l}(a,b) of a tree from its path decomposition, k = 0..kmax: one Z in
 * degree l for each component whose Delta_x is a sphere. Degrees below 3 are
 * taken from the direct complex.
 */
inline std::vector<HomologyGroup> magnitude_homology_tree(const Graph& g, const ComponentKey& key,
                                                          std::size_t kmax)
{
    require_tree(g);
    if (key.length < 3) return magnitude_homology_direct(g, key, kmax);
    auto out = magnitude_homology_direct(g, key, std::min<std::size_t>(kmax, 2));
    out.resize(kmax + 1);
    if (kmax < 3) return out;
    std::size_t spheres = 0;
    for (const auto& comp : decompose_tree_component(g, key))
        if (classify_delta(comp, key.length) == DeltaHomotopy::sphere) ++spheres;
    if (key.length <= kmax) out[key.length].betti = spheres;
    return out;
}

/// Whole-graph MH_{k,l} of a tree for k, l >= 3: Z^{2#E} when k = l, else 0.
inline HomologyGroup tree_magnitude_closed_form(const Graph& g, unsigned length, std::size_t k)
{
    require_tree(g);
    if (length < 3 || k < 3) throw std::invalid_argument("closed form holds for k, l >= 3");
    return HomologyGroup{k == length ? 2 * g.num_edges() : 0, {}};
}

inline MagnitudeTable magnitude_homology_graph_tree(const Graph& g, unsigned length, std::size_t kmax)
{
    require_tree(g);
    return tabulate(g, length, kmax, [&](const ComponentKey& key, std::size_t km) {
        return magnitude_homology_tree(g, key, km);
    });
}

inline nlohmann::json delta_pair_to_json(const Graph& g, const TreePathComponent& comp, const DeltaPair& dp)
{
    auto label = [](unsigned p) { return p; };
    nlohmann::json walk = nlohmann::json::array();
    for (auto v : comp.walk.vertices) walk.push_back(g.label(v));
    return {{"format_version", complex_format_version},
            {"kind", "delta_pair"},
            {"l", dp.length},
            {"walk", walk},
            {"turning_positions", dp.turning_positions},
            {"class", to_string(classify_delta(comp, dp.length))},
            {"ambient", complex_to_json(dp.pair.total(), label)},
            {"sub", complex_to_json(dp.pair.sub(), label)}};
}

} // namespace maghom
