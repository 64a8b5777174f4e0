/**
 * Sparse matrices over the integers with arbitrary-precision entries.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace maghom {

using BigInt = boost::multiprecision::cpp_int;

/**
 * rows x cols matrix stored column-wise; each column is a list of
 * (row, value) pairs sorted by row with no explicit zeros.
 */
class IntegerMatrix {
public:
    using Entry = std::pair<std::size_t, BigInt>;
    using Column = std::vector<Entry>;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static IntegerMatrix identity(std::size_t n)
    {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, 1);
        return m;
    }

    static IntegerMatrix from_dense(const std::vector<std::vector<BigInt>>& dense)
    {
        const std::size_t r = dense.size();
        const std::size_t c = r ? dense[0].size() : 0;
        IntegerMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (dense[i].size() != c) throw std::invalid_argument("ragged dense matrix");
            for (std::size_t j = 0; j < c; ++j)
                if (dense[i][j] != 0) m.columns_[j].emplace_back(i, dense[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    const Column& column(std::size_t j) const { return columns_.at(j); }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    BigInt at(std::size_t i, std::size_t j) const
    {
        check(i, j);
        const auto& col = columns_[j];
        auto it = std::lower_bound(col.begin(), col.end(), i,
                                   [](const Entry& e, std::size_t r) { return e.first < r; });
        return (it != col.end() && it->first == i) ? it->second : BigInt(0);
    }

    /// entry(i, j) += value
    void add(std::size_t i, std::size_t j, const BigInt& value)
    {
        check(i, j);
        if (value == 0) return;
        auto& col = columns_[j];
        auto it = std::lower_bound(col.begin(), col.end(), i,
                                   [](const Entry& e, std::size_t r) { return e.first < r; });
        if (it != col.end() && it->first == i) {
            it->second += value;
            if (it->second == 0) col.erase(it);
        } else {
            col.insert(it, Entry(i, value));
        }
    }

    void set(std::size_t i, std::size_t j, const BigInt& value)
    {
        add(i, j, value - at(i, j));
    }

    std::vector<std::vector<BigInt>> to_dense() const
    {
        std::vector<std::vector<BigInt>> d(rows_, std::vector<BigInt>(cols(), 0));
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& [i, v] : columns_[j]) d[i][j] = v;
        return d;
    }

    bool is_zero() const
    {
        return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
    }

    IntegerMatrix operator-() const
    {
        IntegerMatrix m = *this;
        for (auto& c : m.columns_)
            for (auto& e : c) e.second = -e.second;
        return m;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
    {
        if (a.cols() != b.rows()) {
            throw std::invalid_argument("matrix product dimension mismatch: " + a.shape() + " * " + b.shape());
        }
        IntegerMatrix out(a.rows(), b.cols());
        std::vector<BigInt> acc(a.rows());
        std::vector<char> touched(a.rows(), 0);
        std::vector<std::size_t> rows_touched;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            rows_touched.clear();
            for (const auto& [k, bv] : b.columns_[j]) {
                for (const auto& [i, av] : a.columns_[k]) {
                    if (!touched[i]) {
                        touched[i] = 1;
                        acc[i] = 0;
                        rows_touched.push_back(i);
                    }
                    acc[i] += av * bv;
                }
            }
            std::sort(rows_touched.begin(), rows_touched.end());
            for (std::size_t i : rows_touched) {
                touched[i] = 0;
                if (acc[i] != 0) out.columns_[j].emplace_back(i, acc[i]);
            }
        }
        return out;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
    {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols()); }

    /// Debug dump: "rows cols" header, then row-major entries.
    void write_text(std::ostream& out) const
    {
        out << rows_ << ' ' << cols() << '\n';
        for (const auto& row : to_dense()) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << '\n';
        }
    }

    static IntegerMatrix read_text(std::istream& in)
    {
        std::size_t r = 0, c = 0;
        if (!(in >> r >> c)) throw std::invalid_argument("matrix text: missing dimensions header");
        IntegerMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                std::string tok;
                if (!(in >> tok)) throw std::invalid_argument("matrix text: too few entries");
                m.add(i, j, BigInt(tok));
            }
        return m;
    }

private:
    void check(std::size_t i, std::size_t j) const
    {
        if (i >= rows_ || j >= cols()) {
            throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside " + shape());
        }
    }

    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

} // namespace maghom
