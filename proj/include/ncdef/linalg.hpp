#pragma once

#include "ncdef/rational.hpp"

#include <optional>
#include <vector>

namespace ncdef {

using QVec = std::vector<Rational>;

inline bool is_zero_vec(const QVec& v)
{
    for (auto& x : v)
        if (x != 0)
            return false;
    return true;
}

// Dense exact matrix over Q. Deterministic eliminations only: pivots are
// always chosen as the first usable row/column in index order, so every
// kernel basis, solution and residue is canonical.
struct QMatrix {
    size_t rows = 0, cols = 0;
    std::vector<QVec> a;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r, QVec(c, Rational(0))) {}

    Rational& at(size_t r, size_t c) { return a[r][c]; }
    const Rational& at(size_t r, size_t c) const { return a[r][c]; }
};

// Row echelon basis of a subspace of Q^n, kept fully reduced with pivot
// columns in increasing order. insert() is idempotent on dependent vectors.
struct EchelonBasis {
    size_t n = 0;
    std::vector<QVec> rows;     // reduced rows, unit pivots
    std::vector<size_t> pivots; // pivot column of each row

    explicit EchelonBasis(size_t n_ = 0) : n(n_) {}

    size_t dim() const { return rows.size(); }

    // Residue of v modulo the span; canonical representative.
    QVec reduce(QVec v) const
    {
        for (size_t i = 0; i < rows.size(); ++i) {
            const Rational& c = v[pivots[i]];
            if (c != 0) {
                Rational f = c;
                for (size_t j = 0; j < n; ++j)
                    v[j] -= f * rows[i][j];
            }
        }
        return v;
    }

    // Returns true if v enlarged the span.
    bool insert(QVec v)
    {
        v = reduce(std::move(v));
        size_t p = 0;
        while (p < n && v[p] == 0)
            ++p;
        if (p == n)
            return false;
        Rational inv = v[p];
        for (auto& x : v)
            x /= inv;
        // back-substitute into existing rows, keep rows sorted by pivot
        for (size_t i = 0; i < rows.size(); ++i) {
            Rational c = rows[i][p];
            if (c != 0)
                for (size_t j = 0; j < n; ++j)
                    rows[i][j] -= c * v[j];
        }
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p)
            ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, p);
        return true;
    }

    bool contains(const QVec& v) const { return is_zero_vec(reduce(v)); }
};

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref(QMatrix& m)
{
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t pr = r;
        while (pr < m.rows && m.a[pr][c] == 0)
            ++pr;
        if (pr == m.rows)
            continue;
        std::swap(m.a[pr], m.a[r]);
        Rational inv = m.a[r][c];
        for (auto& x : m.a[r])
            x /= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.a[i][c] == 0)
                continue;
            Rational f = m.a[i][c];
            for (size_t j = 0; j < m.cols; ++j)
                m.a[i][j] -= f * m.a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(QMatrix m) { return rref(m).size(); }

// Kernel basis of A (as column vectors x with A x = 0), canonical: one
// basis vector per free column, free coordinate set to 1.
inline std::vector<QVec> kernel_basis(QMatrix m)
{
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<QVec> ker;
    for (size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c])
            continue;
        QVec v(m.cols, Rational(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m.a[i][c];
        ker.push_back(std::move(v));
    }
    return ker;
}

// Solves A x = b; returns the canonical particular solution (free
// variables zero) or nullopt when inconsistent.
inline std::optional<QVec> solve(const QMatrix& a, const QVec& b)
{
    QMatrix m(a.rows, a.cols + 1);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j)
            m.a[i][j] = a.a[i][j];
        m.a[i][a.cols] = b[i];
    }
    auto pivots = rref(m);
    if (!pivots.empty() && pivots.back() == a.cols)
        return std::nullopt;
    QVec x(a.cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = m.a[i][a.cols];
    return x;
}

}  // namespace ncdef
