/**
 * Abstract simplicial complexes over an ordered label type, subcomplex
 * pairs, and their absolute and relative integer chain complexes.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "chain_complex.hpp"

namespace maghom {

class complex_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-empty set of labels, stored in ascending order.
template <class Label>
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<Label> labels) : labels_(std::move(labels))
    {
        std::sort(labels_.begin(), labels_.end());
        if (labels_.empty()) throw complex_error("simplex must be non-empty");
        if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
            throw complex_error("simplex has repeated vertices");
        }
    }

    Simplex(std::initializer_list<Label> labels) : Simplex(std::vector<Label>(labels)) {}

    const std::vector<Label>& vertices() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    std::size_t dimension() const { return labels_.size() - 1; }

    /// The face opposite the i-th smallest vertex. Only valid when size() > 1.
    Simplex face(std::size_t i) const
    {
        Simplex f;
        f.labels_.reserve(labels_.size() - 1);
        for (std::size_t k = 0; k < labels_.size(); ++k)
            if (k != i) f.labels_.push_back(labels_[k]);
        return f;
    }

    bool contains(const Simplex& other) const
    {
        return std::includes(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end());
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.labels_ <=> b.labels_; }

private:
    std::vector<Label> labels_;
};

/**
 * A finite, explicitly materialized simplicial complex. Simplices are grouped
 * by dimension and sorted within each group; that order is the chain basis
 * order. Downward closure is enforced at construction.
 */
template <class Label>
class SimplicialComplex {
public:
    using simplex_type = Simplex<Label>;

    SimplicialComplex() = default;

    /// Takes an explicit simplex list; throws complex_error if a face is missing.
    explicit SimplicialComplex(const std::vector<simplex_type>& simplices)
    {
        insert_all(simplices);
        for (const auto& group : by_dim_) {
            for (const auto& s : group) {
                if (s.size() < 2) continue;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (!contains(s.face(i))) {
                        throw complex_error("not downward closed: a face of a " + std::to_string(s.dimension()) +
                                            "-simplex is missing");
                    }
                }
            }
        }
    }

    /// Smallest complex containing every generator.
    static SimplicialComplex closure(const std::vector<simplex_type>& generators)
    {
        std::vector<std::set<simplex_type>> groups;
        for (const auto& g : generators) {
            const auto& v = g.vertices();
            if (v.size() >= 8 * sizeof(unsigned long long)) throw complex_error("simplex too large to close");
            if (groups.size() < v.size()) groups.resize(v.size());
            if (groups[v.size() - 1].count(g)) continue;
            for (unsigned long long mask = 1; mask < (1ULL << v.size()); ++mask) {
                std::vector<Label> face;
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (mask & (1ULL << k)) face.push_back(v[k]);
                groups[face.size() - 1].insert(simplex_type(std::move(face)));
            }
        }
        SimplicialComplex c;
        for (auto& g : groups) c.by_dim_.emplace_back(g.begin(), g.end());
        return c;
    }

    bool empty() const { return by_dim_.empty(); }

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (const auto& g : by_dim_) n += g.size();
        return n;
    }

    /// n-simplices in basis order.
    const std::vector<simplex_type>& simplices(std::size_t n) const
    {
        static const std::vector<simplex_type> none;
        return n < by_dim_.size() ? by_dim_[n] : none;
    }

    std::vector<simplex_type> all_simplices() const
    {
        std::vector<simplex_type> out;
        for (const auto& g : by_dim_) out.insert(out.end(), g.begin(), g.end());
        return out;
    }

    bool contains(const simplex_type& s) const { return index_of(s).has_value(); }

    std::optional<std::size_t> index_of(const simplex_type& s) const
    {
        const auto& g = simplices(s.dimension());
        auto it = std::lower_bound(g.begin(), g.end(), s);
        if (it == g.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - g.begin());
    }

    std::vector<Label> vertex_labels() const
    {
        std::vector<Label> out;
        for (const auto& s : simplices(0)) out.push_back(s.vertices()[0]);
        return out;
    }

    /// Simplices that are not a proper face of another simplex.
    std::vector<simplex_type> maximal_simplices() const
    {
        std::vector<simplex_type> out;
        for (std::size_t n = 0; n < by_dim_.size(); ++n) {
            for (const auto& s : by_dim_[n]) {
                bool maximal = true;
                if (n + 1 < by_dim_.size()) {
                    for (const auto& t : by_dim_[n + 1])
                        if (t.contains(s)) {
                            maximal = false;
                            break;
                        }
                }
                if (maximal) out.push_back(s);
            }
        }
        return out;
    }

    bool is_subcomplex_of(const SimplicialComplex& other) const
    {
        for (const auto& g : by_dim_)
            for (const auto& s : g)
                if (!other.contains(s)) return false;
        return true;
    }

    /// Recheck of the class invariant, for audits.
    bool is_downward_closed() const
    {
        for (const auto& g : by_dim_)
            for (const auto& s : g)
                if (s.size() > 1)
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (!contains(s.face(i))) return false;
        return true;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    void insert_all(const std::vector<simplex_type>& simplices)
    {
        std::vector<std::set<simplex_type>> groups;
        for (const auto& s : simplices) {
            if (groups.size() < s.size()) groups.resize(s.size());
            groups[s.size() - 1].insert(s);
        }
        for (auto& g : groups) by_dim_.emplace_back(g.begin(), g.end());
    }

    std::vector<std::vector<simplex_type>> by_dim_;
};

/// A complex together with a subcomplex.
template <class Label>
class SimplicialPair {
public:
    SimplicialPair() = default;

    SimplicialPair(SimplicialComplex<Label> total, SimplicialComplex<Label> sub)
        : total_(std::move(total)), sub_(std::move(sub))
    {
        if (!sub_.is_subcomplex_of(total_)) throw complex_error("pair: subcomplex is not contained in the complex");
    }

    const SimplicialComplex<Label>& total() const { return total_; }
    const SimplicialComplex<Label>& sub() const { return sub_; }

    /// n-simplices of total not in sub, in basis order.
    std::vector<Simplex<Label>> relative_simplices(std::size_t n) const
    {
        std::vector<Simplex<Label>> out;
        for (const auto& s : total_.simplices(n))
            if (!sub_.contains(s)) out.push_back(s);
        return out;
    }

private:
    SimplicialComplex<Label> total_;
    SimplicialComplex<Label> sub_;
};

namespace detail {

template <class Label, class KeepFace>
ChainComplex<Simplex<Label>> simplicial_chains(std::vector<std::vector<Simplex<Label>>> bases, KeepFace keep)
{
    ChainComplex<Simplex<Label>> c;
    c.bases = std::move(bases);
    for (std::size_t n = 0; n < c.bases.size(); ++n) {
        if (n == 0) {
            c.boundaries.emplace_back(0, c.bases[0].size());
            continue;
        }
        const auto& lower = c.bases[n - 1];
        IntegerMatrix d(lower.size(), c.bases[n].size());
        for (std::size_t j = 0; j < c.bases[n].size(); ++j) {
            const auto& s = c.bases[n][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto f = s.face(i);
                if (!keep(f)) continue;
                auto it = std::lower_bound(lower.begin(), lower.end(), f);
                if (it == lower.end() || *it != f) throw std::logic_error("face missing from chain basis");
                d.add(static_cast<std::size_t>(it - lower.begin()), j, i % 2 == 0 ? 1 : -1);
            }
        }
        c.boundaries.push_back(std::move(d));
    }
    return c;
}

} // namespace detail

/// C_*(S) with d{s_0..s_n} = sum (-1)^i {s_0..^s_i..s_n}, labels ascending.
template <class Label>
ChainComplex<Simplex<Label>> chain_complex(const SimplicialComplex<Label>& s)
{
    std::vector<std::vector<Simplex<Label>>> bases;
    for (int n = 0; n <= s.dimension(); ++n) bases.push_back(s.simplices(n));
    return detail::simplicial_chains<Label>(std::move(bases), [](const auto&) { return true; });
}

/// C_*(K, K') built on the quotient basis K \ K'; faces in K' are dropped.
template <class Label>
ChainComplex<Simplex<Label>> relative_chain_complex(const SimplicialPair<Label>& pair)
{
    std::vector<std::vector<Simplex<Label>>> bases;
    for (int n = 0; n <= pair.total().dimension(); ++n) bases.push_back(pair.relative_simplices(n));
    return detail::simplicial_chains<Label>(std::move(bases),
                                            [&](const Simplex<Label>& f) { return !pair.sub().contains(f); });
}

// ---------------------------------------------------------------------------
// Export

inline constexpr int complex_format_version = 1;

/**
 * {"format_version", "labels", "maximal_simplices", ["simplices"]}. Simplices
 * are written as arrays of indices into "labels".
 */
template <class Label, class LabelToJson>
nlohmann::json complex_to_json(const SimplicialComplex<Label>& s, LabelToJson&& label_json, bool full = false)
{
    auto labels = s.vertex_labels();
    auto index = [&](const Label& l) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    auto encode = [&](const Simplex<Label>& x) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& l : x.vertices()) a.push_back(index(l));
        return a;
    };
    nlohmann::json j;
    j["format_version"] = complex_format_version;
    j["labels"] = nlohmann::json::array();
    for (const auto& l : labels) j["labels"].push_back(label_json(l));
    j["maximal_simplices"] = nlohmann::json::array();
    for (const auto& m : s.maximal_simplices()) j["maximal_simplices"].push_back(encode(m));
    if (full) {
        j["simplices"] = nlohmann::json::array();
        for (const auto& x : s.all_simplices()) j["simplices"].push_back(encode(x));
    }
    return j;
}

/**
 * OFF export for complexes of dimension <= 3. Vertex coordinates come from a
 * layered layout: x = layer(label), y = rank within the layer, z = 0.
 * Maximal edges and triangles are written as 2- and 3-gons; tetrahedra as
 * their four triangles.
 */
template <class Label, class LayerOf>
void write_off(std::ostream& out, const SimplicialComplex<Label>& s, LayerOf&& layer_of)
{
    if (s.dimension() > 3) throw complex_error("OFF export supports dimension <= 3");
    auto labels = s.vertex_labels();
    std::map<int, int> layer_fill;
    std::vector<std::pair<int, int>> coords;
    for (const auto& l : labels) {
        int layer = layer_of(l);
        coords.emplace_back(layer, layer_fill[layer]++);
    }
    auto index = [&](const Label& l) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    std::vector<std::vector<std::size_t>> faces;
    for (const auto& m : s.maximal_simplices()) {
        if (m.size() < 2) continue;
        std::vector<std::size_t> ids;
        for (const auto& l : m.vertices()) ids.push_back(index(l));
        if (m.size() <= 3) {
            faces.push_back(ids);
        } else {
            for (std::size_t skip = 0; skip < 4; ++skip) {
                std::vector<std::size_t> tri;
                for (std::size_t k = 0; k < 4; ++k)
                    if (k != skip) tri.push_back(ids[k]);
                faces.push_back(tri);
            }
        }
    }
    out << "OFF\n" << labels.size() << ' ' << faces.size() << " 0\n";
    for (auto [x, y] : coords) out << x << ' ' << y << " 0\n";
    for (const auto& f : faces) {
        out << f.size();
        for (auto i : f) out << ' ' << i;
        out << '\n';
    }
}

} // namespace maghom
