/**
 * The magnitude chain complex MC_{*,l}(a,b) built directly from vertex
 * sequences, and its homology. This is the reference computation the
 * geometric and tree methods are checked against.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "graph.hpp"
#include "homology.hpp"
#include "parallel.hpp"

namespace maghom {

/// Selects the direct summand MC_{*,length}(a,b).
struct ComponentKey {
    vertex_t a = 0;
    vertex_t b = 0;
    unsigned length = 0;

    friend auto operator<=>(const ComponentKey&, const ComponentKey&) = default;
};

inline std::string key_to_string(const Graph& g, const ComponentKey& key)
{
    return "(" + g.label(key.a) + "," + g.label(key.b) + ") l=" + std::to_string(key.length);
}

/**
 * For each degree 0..kmax, every sequence (a = x_0, ..., x_k = b) with
 * consecutive entries distinct and sum d(x_i, x_{i+1}) = length, in
 * lexicographic order. Degrees above the length are always empty.
 */
inline std::vector<std::vector<VertexTuple>> enumerate_basis(const Graph& g, const ComponentKey& key,
                                                             std::size_t kmax)
{
    const std::size_t n = g.num_vertices();
    const unsigned ell = key.length;
    std::vector<std::vector<VertexTuple>> bases(kmax + 1);

    // reach[r][v]: some sequence v -> b of length exactly r exists.
    std::vector<std::vector<char>> reach(ell + 1, std::vector<char>(n, 0));
    reach[0][key.b] = 1;
    for (unsigned r = 1; r <= ell; ++r)
        for (vertex_t v = 0; v < n; ++v)
            for (vertex_t w = 0; w < n && !reach[r][v]; ++w)
                if (w != v && g.distance(v, w) <= r && reach[r - g.distance(v, w)][w]) reach[r][v] = 1;

    if (!reach[ell][key.a]) return bases;

    VertexTuple current{key.a};
    auto extend = [&](auto&& self, unsigned remaining) -> void {
        const vertex_t v = current.back();
        const std::size_t degree = current.size() - 1;
        if (remaining == 0) {
            if (v == key.b && degree <= kmax) bases[degree].push_back(current);
            return;
        }
        if (degree >= kmax) return;
        for (vertex_t w = 0; w < n; ++w) {
            if (w == v) continue;
            unsigned step = g.distance(v, w);
            if (step > remaining || !reach[remaining - step][w]) continue;
            current.push_back(w);
            self(self, remaining - step);
            current.pop_back();
        }
    };
    extend(extend, ell);
    return bases;
}

/// True when removing x_i keeps the length: d(x_{i-1},x_{i+1}) = d(x_{i-1},x_i) + d(x_i,x_{i+1}).
inline bool removal_preserves_length(const Graph& g, const VertexTuple& x, std::size_t i)
{
    return g.distance(x[i - 1], x[i + 1]) == g.distance(x[i - 1], x[i]) + g.distance(x[i], x[i + 1]);
}

/**
 * Matrix of d = sum_{i=1}^{k-1} (-1)^i d_i from degree k to degree k-1 in the
 * enumerated bases. Degree-0 and degree-1 boundaries are zero.
 */
inline IntegerMatrix boundary_matrix(const Graph& g, const std::vector<std::vector<VertexTuple>>& bases,
                                     std::size_t k)
{
    const std::size_t cols = k < bases.size() ? bases[k].size() : 0;
    const std::size_t rows = (k >= 1 && k - 1 < bases.size()) ? bases[k - 1].size() : 0;
    IntegerMatrix d(rows, cols);
    if (k < 2) return d;
    const auto& lower = bases[k - 1];
    for (std::size_t j = 0; j < cols; ++j) {
        const auto& x = bases[k][j];
        for (std::size_t i = 1; i + 1 <= k; ++i) {
            if (!removal_preserves_length(g, x, i)) continue;
            VertexTuple face;
            face.reserve(x.size() - 1);
            face.insert(face.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
            face.insert(face.end(), x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end());
            auto it = std::lower_bound(lower.begin(), lower.end(), face);
            if (it == lower.end() || *it != face) {
                throw std::logic_error("magnitude boundary: face " + g.tuple_to_string(face) + " missing from basis");
            }
            d.add(static_cast<std::size_t>(it - lower.begin()), j, i % 2 == 0 ? 1 : -1);
        }
    }
    return d;
}

/// MC_{*,l}(a,b) in degrees 0..top_degree.
inline ChainComplex<VertexTuple> magnitude_chain_complex(const Graph& g, const ComponentKey& key,
                                                         std::size_t top_degree)
{
    ChainComplex<VertexTuple> c;
    c.bases = enumerate_basis(g, key, top_degree);
    for (std::size_t k = 0; k <= top_degree; ++k) c.boundaries.push_back(boundary_matrix(g, c.bases, k));
    return c;
}

/// MH_{k,l}(a,b) for k = 0..kmax.
inline std::vector<HomologyGroup> magnitude_homology_direct(const Graph& g, const ComponentKey& key,
                                                            std::size_t kmax)
{
    return homology_all(magnitude_chain_complex(g, key, kmax + 1), kmax);
}

/// Homology of one (a,b) summand, degrees 0..kmax.
struct ComponentHomology {
    ComponentKey key;
    std::vector<HomologyGroup> groups;
};

/**
 * MH_{*,l} of a whole graph, one row per ordered vertex pair (a-major) plus
 * totals. Total torsion is the sorted multiset union of component torsion.
 */
struct MagnitudeTable {
    unsigned length = 0;
    std::size_t kmax = 0;
    std::vector<ComponentHomology> components;
    std::vector<HomologyGroup> totals;

    const ComponentHomology& component(vertex_t a, vertex_t b) const
    {
        for (const auto& c : components)
            if (c.key.a == a && c.key.b == b) return c;
        throw std::out_of_range("no such component in table");
    }
};

inline std::vector<HomologyGroup> sum_groups(const std::vector<ComponentHomology>& rows, std::size_t kmax)
{
    std::vector<HomologyGroup> totals(kmax + 1);
    for (const auto& row : rows) {
        for (std::size_t k = 0; k <= kmax && k < row.groups.size(); ++k) {
            totals[k].betti += row.groups[k].betti;
            totals[k].torsion.insert(totals[k].torsion.end(), row.groups[k].torsion.begin(),
                                     row.groups[k].torsion.end());
        }
    }
    for (auto& t : totals) std::sort(t.torsion.begin(), t.torsion.end());
    return totals;
}

/// Runs per_component(key, kmax) over every ordered pair in parallel.
template <class PerComponent>
MagnitudeTable tabulate(const Graph& g, unsigned length, std::size_t kmax, PerComponent&& per_component)
{
    MagnitudeTable t;
    t.length = length;
    t.kmax = kmax;
    const std::size_t n = g.num_vertices();
    t.components.resize(n * n);
    parallel_for(n * n, [&](std::size_t idx) {
        ComponentKey key{idx / n, idx % n, length};
        t.components[idx] = ComponentHomology{key, per_component(key, kmax)};
    });
    t.totals = sum_groups(t.components, kmax);
    return t;
}

inline MagnitudeTable magnitude_homology_graph(const Graph& g, unsigned length, std::size_t kmax)
{
    return tabulate(g, length, kmax, [&](const ComponentKey& key, std::size_t km) {
        return magnitude_homology_direct(g, key, km);
    });
}

} // namespace maghom
