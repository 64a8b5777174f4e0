/**
 * Integer homology of chain complexes: free rank plus torsion invariant
 * factors, read off Smith normal forms of the boundary maps.
 */
#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "chain_complex.hpp"
#include "simplicial.hpp"
#include "smith.hpp"

namespace maghom {

/// Z^betti + Z/t_1 + ... + Z/t_r with 1 < t_1 | t_2 | ... | t_r.
struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }

    std::string to_string() const
    {
        if (is_zero()) return "0";
        std::string s;
        if (betti) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
        for (const auto& t : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.str();
        }
        return s;
    }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/**
 * H_n for every degree 0..max_degree. Needs the Smith form of each boundary
 * d_0..d_{max_degree+1}; each is computed once.
 *
 * betti_n = dim C_n - rank d_n - rank d_{n+1}; torsion_n = factors of
 * d_{n+1} above 1.
 */
template <class Cell>
std::vector<HomologyGroup> homology_all(const ChainComplex<Cell>& c, std::size_t max_degree)
{
    std::vector<SmithForm> snf;
    snf.reserve(max_degree + 2);
    for (std::size_t n = 0; n <= max_degree + 1; ++n) snf.push_back(smith_normal_form(c.boundary(n)));
    std::vector<HomologyGroup> out(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        out[n].betti = c.dimension(n) - snf[n].rank() - snf[n + 1].rank();
        for (const auto& d : snf[n + 1].diagonal)
            if (d > 1) out[n].torsion.push_back(d);
    }
    return out;
}

template <class Cell>
HomologyGroup homology(const ChainComplex<Cell>& c, std::size_t n)
{
    HomologyGroup h;
    auto lower = smith_normal_form(c.boundary(n));
    auto upper = smith_normal_form(c.boundary(n + 1));
    h.betti = c.dimension(n) - lower.rank() - upper.rank();
    for (const auto& d : upper.diagonal)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

/**
 * Reduced H_0: (number of connected components) - 1. The empty complex is
 * given the value 0 here rather than the augmented-complex value Z.
 */
template <class Label>
HomologyGroup reduced_homology_0(const SimplicialComplex<Label>& s)
{
    const auto& verts = s.simplices(0);
    if (verts.empty()) return {};
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = verts.size();
    for (const auto& e : s.simplices(1)) {
        auto a = find(*s.index_of(Simplex<Label>{e.vertices()[0]}));
        auto b = find(*s.index_of(Simplex<Label>{e.vertices()[1]}));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return HomologyGroup{components - 1, {}};
}

} // namespace maghom
