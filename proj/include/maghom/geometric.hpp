/**
 * Magnitude homology through the simplicial pair (K_l(a,b), K'_l(a,b)).
 *
 * K_l(a,b) lives on labels (vertex, position) with position in 1..l-1. A set
 * of labels is a simplex when some unit-step walk a -> b of at most l steps
 * visits each listed vertex at the listed position. K'_l(a,b) collects the
 * simplices whose sequence (a, x_{i_1}, ..., x_{i_k}, b) is shorter than l.
 * Sending a simplex to that sequence identifies C_*(K, K') with -d against
 * MC_{*+2,l}(a,b) with d, degree by degree.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graph.hpp"
#include "homology.hpp"
#include "magnitude.hpp"
#include "simplicial.hpp"

namespace maghom {

/// Raised when the chain-level identification fails; always a bug.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Ordered by position first, so simplex orientation follows sequence order.
struct PositionedVertex {
    unsigned position = 0;
    vertex_t vertex = 0;

    friend auto operator<=>(const PositionedVertex&, const PositionedVertex&) = default;
};

using PositionedSimplex = Simplex<PositionedVertex>;

struct KPair {
    ComponentKey key;
    SimplicialPair<PositionedVertex> pair;

    const SimplicialComplex<PositionedVertex>& total() const { return pair.total(); }
    const SimplicialComplex<PositionedVertex>& sub() const { return pair.sub(); }
};

/// (a, x_{i_1}, ..., x_{i_k}, b) for a simplex of K_l(a,b).
inline VertexTuple interior_sequence(const ComponentKey& key, const PositionedSimplex& s)
{
    VertexTuple t;
    t.reserve(s.size() + 2);
    t.push_back(key.a);
    for (const auto& pv : s.vertices()) t.push_back(pv.vertex);
    t.push_back(key.b);
    return t;
}

inline unsigned interior_length(const Graph& g, const ComponentKey& key, const PositionedSimplex& s)
{
    return tuple_length(g, interior_sequence(key, s));
}

inline void require_geometric_range(const ComponentKey& key)
{
    if (key.length < 3) {
        throw std::invalid_argument("geometric method needs l >= 3 (got l=" + std::to_string(key.length) +
                                    "); use the direct method");
    }
}

/**
 * Builds (K_l(a,b), K'_l(a,b)). Every walk in P_{<=l}(a,b) contributes the
 * simplex of its interior positions, walks of every length up to l included;
 * the total complex is the downward closure of those. Pairs with
 * d(a,b) > l give the empty pair.
 */
inline KPair build_k_pair(const Graph& g, const ComponentKey& key)
{
    require_geometric_range(key);
    std::vector<PositionedSimplex> generators;
    for (const auto& w : enumerate_walks(g, key.a, key.b, key.length)) {
        if (w.steps() < 2) continue;
        std::vector<PositionedVertex> labels;
        for (unsigned i = 1; i < w.steps(); ++i) labels.push_back({i, w.vertices[i]});
        generators.emplace_back(std::move(labels));
    }
    auto total = SimplicialComplex<PositionedVertex>::closure(generators);
    std::vector<PositionedSimplex> short_ones;
    for (const auto& s : total.all_simplices())
        if (interior_length(g, key, s) + 1 <= key.length) short_ones.push_back(s);
    SimplicialComplex<PositionedVertex> sub(short_ones);
    return KPair{key, SimplicialPair<PositionedVertex>(std::move(total), std::move(sub))};
}

/// correspondence[n][i] = index in MC_{n+2,l}(a,b) of the i-th relative n-simplex.
struct ChainMapCorrespondence {
    std::vector<std::vector<std::size_t>> correspondence;
};

struct ChainMapOptions {
    /// Compares against +d instead of -d; used to check that the harness notices.
    bool inject_sign_fault = false;
};

/**
 * Realizes t : (C_*(K, K'), -d) -> (MC_{*+2,l}(a,b), d) and verifies it: the
 * basis map is a bijection in every degree and the relative boundary equals
 * the negated magnitude boundary. Throws consistency_error naming the first
 * offending basis element otherwise.
 */
inline ChainMapCorrespondence chain_map_t(const Graph& g, const KPair& kp, ChainMapOptions opts = {})
{
    const auto& key = kp.key;
    auto rel = relative_chain_complex(kp.pair);
    auto mc = shift(magnitude_chain_complex(g, key, key.length), 2);
    const std::size_t degrees = std::max(rel.num_degrees(), mc.num_degrees());

    ChainMapCorrespondence out;
    out.correspondence.resize(degrees);
    for (std::size_t n = 0; n < degrees; ++n) {
        const auto& target = n < mc.bases.size() ? mc.bases[n] : std::vector<VertexTuple>{};
        std::vector<char> hit(target.size(), 0);
        for (std::size_t i = 0; i < rel.dimension(n); ++i) {
            auto seq = interior_sequence(key, rel.bases[n][i]);
            auto it = std::lower_bound(target.begin(), target.end(), seq);
            if (it == target.end() || *it != seq) {
                throw consistency_error("chain map: relative simplex " + g.tuple_to_string(seq) + " in degree " +
                                        std::to_string(n) + " has no magnitude basis element " +
                                        key_to_string(g, key));
            }
            auto idx = static_cast<std::size_t>(it - target.begin());
            if (hit[idx]++) {
                throw consistency_error("chain map: two simplices map to " + g.tuple_to_string(seq) + " " +
                                        key_to_string(g, key));
            }
            out.correspondence[n].push_back(idx);
        }
        for (std::size_t j = 0; j < target.size(); ++j) {
            if (!hit[j]) {
                throw consistency_error("chain map: magnitude sequence " + g.tuple_to_string(target[j]) +
                                        " is not hit " + key_to_string(g, key));
            }
        }
    }

    const int sign = opts.inject_sign_fault ? 1 : -1;
    for (std::size_t n = 1; n < degrees; ++n) {
        const auto& rd = rel.boundary(n);
        IntegerMatrix mapped(mc.dimension(n - 1), mc.dimension(n));
        for (std::size_t j = 0; j < rd.cols(); ++j)
            for (const auto& [i, v] : rd.column(j))
                mapped.add(out.correspondence[n - 1][i], out.correspondence[n][j], sign * v);
        if (!(mapped == mc.boundary(n))) {
            for (std::size_t j = 0; j < rd.cols(); ++j) {
                for (std::size_t i = 0; i < mapped.rows(); ++i) {
                    if (mapped.at(i, out.correspondence[n][j]) != mc.boundary(n).at(i, out.correspondence[n][j])) {
                        throw consistency_error("chain map: boundary of " +
                                                g.tuple_to_string(interior_sequence(key, rel.bases[n][j])) +
                                                " differs from the negated magnitude boundary " +
                                                key_to_string(g, key));
                    }
                }
            }
            throw consistency_error("chain map: boundary mismatch in degree " + std::to_string(n));
        }
    }
    return out;
}

/**
 * Index rigidity: a simplex whose sequence has full length l has its
 * positions fixed by its vertices, position i_s = L(a, x_{i_1}, ..., x_{i_s}).
 * Returns the first violating simplex, if any.
 */
inline std::optional<PositionedSimplex> index_rigidity_violation(const Graph& g, const KPair& kp)
{
    std::map<VertexTuple, PositionedSimplex> seen;
    for (const auto& s : kp.total().all_simplices()) {
        auto seq = interior_sequence(kp.key, s);
        if (tuple_length(g, seq) != kp.key.length) continue;
        unsigned running = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            running += g.distance(seq[i], seq[i + 1]);
            if (s.vertices()[i].position != running) return s;
        }
        auto [it, fresh] = seen.emplace(seq, s);
        if (!fresh && it->second != s) return s;
    }
    return std::nullopt;
}

/**
 * MH_{k,l}(a,b) for k = 0..kmax, l >= 3. For k >= 3 this is H_{k-2}(K, K').
 * For k = 2 it is H_0(K, K') when d(a,b) < l and reduced H_0(K) when
 * d(a,b) = l. Degrees 0 and 1 are taken from the direct complex, whose
 * bases there are tiny.
 */
inline std::vector<HomologyGroup> magnitude_homology_geometric(const Graph& g, const ComponentKey& key,
                                                               std::size_t kmax)
{
    require_geometric_range(key);
    auto out = magnitude_homology_direct(g, key, std::min<std::size_t>(kmax, 1));
    out.resize(kmax + 1);
    if (kmax < 2) return out;
    const unsigned d = g.distance(key.a, key.b);
    if (d > key.length) return out;

    auto kp = build_k_pair(g, key);
    auto rel = homology_all(relative_chain_complex(kp.pair), kmax - 2);
    out[2] = d < key.length ? rel[0] : reduced_homology_0(kp.total());
    for (std::size_t k = 3; k <= kmax; ++k) out[k] = rel[k - 2];
    return out;
}

inline MagnitudeTable magnitude_homology_graph_geometric(const Graph& g, unsigned length, std::size_t kmax)
{
    return tabulate(g, length, kmax, [&](const ComponentKey& key, std::size_t km) {
        return magnitude_homology_geometric(g, key, km);
    });
}

// ---------------------------------------------------------------------------
// Cross-validation

struct Mismatch {
    ComponentKey key;
    std::size_t degree = 0;
    HomologyGroup geometric;
    HomologyGroup direct;
    std::string reason;
};

struct CrossValidationReport {
    std::size_t components_checked = 0;
    std::optional<Mismatch> mismatch;

    bool ok() const { return !mismatch.has_value(); }
};

/**
 * For every ordered pair: the chain map must be an isomorphism with negated
 * boundary, K and K' must satisfy index rigidity, and geometric and direct
 * homology must agree in each degree 2..kmax. Stops at the first failure.
 */
inline CrossValidationReport cross_validate(const Graph& g, unsigned length, std::size_t kmax,
                                            ChainMapOptions opts = {})
{
    CrossValidationReport report;
    const std::size_t n = g.num_vertices();
    for (vertex_t a = 0; a < n; ++a) {
        for (vertex_t b = 0; b < n; ++b) {
            ComponentKey key{a, b, length};
            auto kp = build_k_pair(g, key);
            try {
                chain_map_t(g, kp, opts);
            } catch (const consistency_error& e) {
                report.mismatch = Mismatch{key, 0, {}, {}, e.what()};
                return report;
            }
            if (auto bad = index_rigidity_violation(g, kp)) {
                report.mismatch = Mismatch{key, 0, {}, {},
                                           "index rigidity fails at " + g.tuple_to_string(interior_sequence(key, *bad))};
                return report;
            }
            auto geo = magnitude_homology_geometric(g, key, kmax);
            auto dir = magnitude_homology_direct(g, key, kmax);
            for (std::size_t k = 2; k <= kmax; ++k) {
                if (geo[k] != dir[k]) {
                    report.mismatch = Mismatch{key, k, geo[k], dir[k], "homology differs"};
                    return report;
                }
            }
            ++report.components_checked;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Export

/**
 * Structured form of a pair: shared label list of (vertex, position), the
 * maximal simplices of K and K', and every simplex of K annotated with its
 * sequence length and membership in K'.
 */
inline nlohmann::json kpair_to_json(const Graph& g, const KPair& kp)
{
    auto label = [&](const PositionedVertex& pv) {
        return nlohmann::json{{"vertex", g.label(pv.vertex)}, {"position", pv.position}};
    };
    nlohmann::json j;
    j["format_version"] = complex_format_version;
    j["kind"] = "k_pair";
    j["key"] = {{"a", g.label(kp.key.a)}, {"b", g.label(kp.key.b)}, {"l", kp.key.length}};
    j["total"] = complex_to_json(kp.total(), label);
    j["sub"] = complex_to_json(kp.sub(), label);
    auto labels = kp.total().vertex_labels();
    nlohmann::json simplices = nlohmann::json::array();
    for (const auto& s : kp.total().all_simplices()) {
        nlohmann::json ids = nlohmann::json::array();
        for (const auto& pv : s.vertices())
            ids.push_back(std::lower_bound(labels.begin(), labels.end(), pv) - labels.begin());
        simplices.push_back({{"vertices", ids},
                             {"length", interior_length(g, kp.key, s)},
                             {"in_sub", kp.sub().contains(s)}});
    }
    j["simplices"] = simplices;
    return j;
}

} // namespace maghom
