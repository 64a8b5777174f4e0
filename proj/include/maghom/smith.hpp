/**
 * Smith normal form over the integers.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace maghom {

/**
 * Invariant factors d_1 | d_2 | ... | d_r of a matrix A, and optionally
 * unimodular U, V with A = U * D * V where D carries the factors on its
 * leading diagonal.
 */
struct SmithForm {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> diagonal;
    std::optional<IntegerMatrix> U;
    std::optional<IntegerMatrix> V;

    std::size_t rank() const { return diagonal.size(); }

    IntegerMatrix D() const
    {
        IntegerMatrix d(rows, cols);
        for (std::size_t k = 0; k < diagonal.size(); ++k) d.add(k, k, diagonal[k]);
        return d;
    }
};

namespace detail {

// Row-sparse working copy used by the reduction.
class SmithWorkspace {
public:
    using Row = std::vector<std::pair<std::size_t, BigInt>>;

    SmithWorkspace(const IntegerMatrix& a, bool track)
        : rows_(a.rows()), row_active_(a.rows(), 1), col_active_(a.cols(), 1), track_(track)
    {
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (const auto& [i, v] : a.column(j)) rows_[i].emplace_back(j, v);
        if (track_) {
            u_ = dense_identity(a.rows());
            v_ = dense_identity(a.cols());
        }
    }

    SmithForm run()
    {
        SmithForm out;
        out.rows = rows_.size();
        out.cols = col_active_.size();
        std::vector<std::size_t> pivot_rows, pivot_cols;

        while (auto pivot = find_pivot()) {
            auto [r, c] = *pivot;
            if (!isolate(r, c)) continue;
            if (auto offender = non_multiple_row(r, c)) {
                // Pull the offending row into the pivot row; the next column
                // sweep then leaves a remainder smaller than the pivot.
                add_row(r, *offender, 1);
                if (!isolate(r, c)) continue;
            }
            BigInt p = entry(r, c);
            if (p < 0) negate_row(r);
            out.diagonal.push_back(abs(p));
            pivot_rows.push_back(r);
            pivot_cols.push_back(c);
            row_active_[r] = 0;
            col_active_[c] = 0;
        }

        if (track_) {
            auto rowperm = complete_permutation(pivot_rows, rows_.size());
            auto colperm = complete_permutation(pivot_cols, col_active_.size());
            IntegerMatrix U(rows_.size(), rows_.size());
            for (std::size_t k = 0; k < rowperm.size(); ++k)
                for (std::size_t i = 0; i < rows_.size(); ++i) U.add(i, k, u_[i][rowperm[k]]);
            IntegerMatrix V(col_active_.size(), col_active_.size());
            for (std::size_t k = 0; k < colperm.size(); ++k)
                for (std::size_t j = 0; j < col_active_.size(); ++j) V.add(k, j, v_[colperm[k]][j]);
            out.U = std::move(U);
            out.V = std::move(V);
        }
        return out;
    }

private:
    static std::vector<std::vector<BigInt>> dense_identity(std::size_t n)
    {
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    }

    static std::vector<std::size_t> complete_permutation(const std::vector<std::size_t>& lead, std::size_t n)
    {
        std::vector<std::size_t> perm = lead;
        std::vector<char> used(n, 0);
        for (auto i : lead) used[i] = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i]) perm.push_back(i);
        return perm;
    }

    // Minimal |entry| over the active block; ties go to the smallest row,
    // then the smallest column.
    std::optional<std::pair<std::size_t, std::size_t>> find_pivot() const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        BigInt best_abs = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!row_active_[i]) continue;
            for (const auto& [j, v] : rows_[i]) {
                BigInt a = abs(v);
                if (!best || a < best_abs) {
                    best = {i, j};
                    best_abs = a;
                    if (best_abs == 1) return best;
                }
            }
        }
        return best;
    }

    BigInt entry(std::size_t i, std::size_t j) const
    {
        const auto& row = rows_[i];
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        return (it != row.end() && it->first == j) ? it->second : BigInt(0);
    }

    // row_i += q * row_r
    void add_row(std::size_t i, std::size_t r, const BigInt& q)
    {
        Row merged;
        const Row& a = rows_[i];
        const Row& b = rows_[r];
        merged.reserve(a.size() + b.size());
        std::size_t x = 0, y = 0;
        while (x < a.size() || y < b.size()) {
            if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
                merged.push_back(a[x++]);
            } else if (x == a.size() || b[y].first < a[x].first) {
                merged.emplace_back(b[y].first, q * b[y].second);
                ++y;
            } else {
                BigInt v = a[x].second + q * b[y].second;
                if (v != 0) merged.emplace_back(a[x].first, std::move(v));
                ++x;
                ++y;
            }
        }
        rows_[i] = std::move(merged);
        if (track_) {
            // A = U W V stays invariant: U <- U E^{-1}.
            for (auto& urow : u_) urow[r] -= q * urow[i];
        }
    }

    void negate_row(std::size_t r)
    {
        for (auto& e : rows_[r]) e.second = -e.second;
        if (track_)
            for (auto& urow : u_) urow[r] = -urow[r];
    }

    // Clears column c below/above the pivot and row r beside it. Returns
    // false when a nonzero remainder appeared, i.e. a smaller pivot exists.
    bool isolate(std::size_t r, std::size_t c)
    {
        const BigInt p = entry(r, c);
        bool clean = true;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || !row_active_[i]) continue;
            BigInt v = entry(i, c);
            if (v == 0) continue;
            BigInt q = v / p;
            if (q != 0) add_row(i, r, -q);
            if (v - q * p != 0) clean = false;
        }
        if (!clean) return false;

        // Column c now holds only the pivot, so col_j -= q col_c touches row r alone.
        Row& row = rows_[r];
        Row kept;
        for (auto& [j, v] : row) {
            if (j == c) {
                kept.emplace_back(j, v);
                continue;
            }
            BigInt q = v / p;
            BigInt rem = v - q * p;
            if (track_ && q != 0) {
                for (std::size_t k = 0; k < v_[c].size(); ++k) v_[c][k] += q * v_[j][k];
            }
            if (rem != 0) {
                kept.emplace_back(j, rem);
                clean = false;
            }
        }
        row = std::move(kept);
        return clean;
    }

    std::optional<std::size_t> non_multiple_row(std::size_t r, std::size_t c) const
    {
        const BigInt p = abs(entry(r, c));
        if (p == 1) return std::nullopt;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || !row_active_[i]) continue;
            for (const auto& [j, v] : rows_[i])
                if (v % p != 0) return i;
        }
        return std::nullopt;
    }

    std::vector<Row> rows_;
    std::vector<char> row_active_;
    std::vector<char> col_active_;
    bool track_;
    std::vector<std::vector<BigInt>> u_;
    std::vector<std::vector<BigInt>> v_;
};

} // namespace detail

/**
 * Smith normal form by sparse unimodular elimination. The pivot is always an
 * active entry of least absolute value (ties: smallest row, then column), and
 * a pivot is only accepted once it divides every remaining entry, so the
 * diagonal comes out as a divisibility chain without post-processing.
 */
inline SmithForm smith_normal_form(const IntegerMatrix& a, bool with_transforms = false)
{
    return detail::SmithWorkspace(a, with_transforms).run();
}

} // namespace maghom
