// Independent reference computations used only by the tests. None of these
// route through the code paths they are used to check.
#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <maghom/graph.hpp>
#include <maghom/matrix.hpp>

namespace maghom::oracle {

/// All-pairs hop distances by Floyd-Warshall over the edge list.
inline std::vector<std::vector<unsigned>> floyd_warshall(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    const unsigned inf = std::numeric_limits<unsigned>::max() / 4;
    std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

/// sum_{k <= max_steps} (A^k)_{ab} for the adjacency matrix A.
inline std::uint64_t walk_count(const Graph& g, vertex_t a, vertex_t b, unsigned max_steps)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::uint64_t> row(n, 0);  // row a of A^k
    row[a] = 1;
    std::uint64_t total = row[b];
    for (unsigned k = 1; k <= max_steps; ++k) {
        std::vector<std::uint64_t> next(n, 0);
        for (auto [u, v] : g.edges()) {
            next[v] += row[u];
            next[u] += row[v];
        }
        row = std::move(next);
        total += row[b];
    }
    return total;
}

/// Every (k+1)-tuple in V^{k+1} from a to b with distinct neighbours and
/// length exactly ell, by odometer enumeration in lexicographic order.
inline std::vector<VertexTuple> brute_force_sequences(const Graph& g, vertex_t a, vertex_t b, unsigned ell,
                                                     std::size_t k)
{
    const auto d = floyd_warshall(g);
    const std::size_t n = g.num_vertices();
    std::vector<VertexTuple> out;
    VertexTuple x(k + 1, 0);
    while (true) {
        bool ok = x.front() == a && x.back() == b;
        unsigned len = 0;
        for (std::size_t i = 0; ok && i < k; ++i) {
            if (x[i] == x[i + 1]) ok = false;
            len += d[x[i]][x[i + 1]];
        }
        if (ok && len == ell) out.push_back(x);
        std::size_t pos = k + 1;
        while (pos > 0) {
            --pos;
            if (++x[pos] < n) break;
            x[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

/// Rank over Q by fraction-free (Bareiss) elimination on a dense copy.
inline std::size_t rational_rank(const IntegerMatrix& m)
{
    auto a = m.to_dense();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

/// Rank over Z/p.
inline std::size_t rank_mod_p(const IntegerMatrix& m, long long p)
{
    std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols(), 0));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.column(j)) a[i][j] = static_cast<long long>(((v % p) + p) % p);
    auto inverse = [p](long long x) {
        long long r = 1, e = p - 2;
        for (x %= p; e; e >>= 1, x = x * x % p)
            if (e & 1) r = r * x % p;
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        long long inv = inverse(a[rank][c]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            long long f = a[i][c] * inv % p;
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline BigInt gcd_of_entries(const IntegerMatrix& m)
{
    BigInt g = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j)) g = boost::multiprecision::gcd(g, e.second);
    return g;
}

} // namespace maghom::oracle
