#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace maghom {

/**
 * Finite graded free abelian group with integer boundary maps.
 *
 * bases[n] is the ordered basis of C_n. boundaries[n] is the matrix of
 * d_n : C_n -> C_{n-1}, of shape dim C_{n-1} x dim C_n, with d_0 the zero map
 * to the trivial group (shape 0 x dim C_0). Degrees past the stored range are
 * zero.
 */
template <class Cell>
struct ChainComplex {
    std::vector<std::vector<Cell>> bases;
    std::vector<IntegerMatrix> boundaries;

    std::size_t num_degrees() const { return bases.size(); }

    std::size_t dimension(std::size_t n) const { return n < bases.size() ? bases[n].size() : 0; }

    IntegerMatrix boundary(std::size_t n) const
    {
        if (n < boundaries.size()) return boundaries[n];
        return IntegerMatrix(n == 0 ? 0 : dimension(n - 1), dimension(n));
    }

    /// Checks shapes against the bases; throws std::logic_error on mismatch.
    void validate_shapes() const
    {
        if (boundaries.size() != bases.size()) {
            throw std::logic_error("chain complex: " + std::to_string(bases.size()) + " bases but " +
                                   std::to_string(boundaries.size()) + " boundary maps");
        }
        for (std::size_t n = 0; n < bases.size(); ++n) {
            const auto& d = boundaries[n];
            std::size_t expect_rows = n == 0 ? 0 : bases[n - 1].size();
            if (d.rows() != expect_rows || d.cols() != bases[n].size()) {
                throw std::logic_error("chain complex: boundary " + std::to_string(n) + " has shape " + d.shape());
            }
        }
    }

    /// First degree n with d_n * d_{n+1} != 0, if any.
    std::optional<std::size_t> square_zero_violation() const
    {
        for (std::size_t n = 1; n + 1 < boundaries.size(); ++n) {
            if (!(boundaries[n] * boundaries[n + 1]).is_zero()) return n;
        }
        return std::nullopt;
    }

    long long euler_characteristic() const
    {
        long long chi = 0;
        for (std::size_t n = 0; n < bases.size(); ++n)
            chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(bases[n].size());
        return chi;
    }
};

/**
 * C_{*+N}: degree i of the result is degree i+N of the input. Degrees that
 * would fall below zero are dropped, and the new d_0 is the zero map.
 */
template <class Cell>
ChainComplex<Cell> shift(const ChainComplex<Cell>& c, std::size_t n)
{
    ChainComplex<Cell> out;
    for (std::size_t i = n; i < c.bases.size(); ++i) {
        out.bases.push_back(c.bases[i]);
        if (i == n) {
            out.boundaries.emplace_back(0, c.bases[i].size());
        } else {
            out.boundaries.push_back(c.boundaries[i]);
        }
    }
    return out;
}

} // namespace maghom
