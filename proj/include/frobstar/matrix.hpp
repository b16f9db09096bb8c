#pragma once

#include <vector>

#include "polynomial.hpp"

namespace frobstar {

// Dense matrix of polynomials over one ring.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Polynomial> entries;

    PolyMatrix() = default;
    PolyMatrix(const RingPtr& ring, int r, int c)
        : rows(r), cols(c), entries(static_cast<size_t>(r) * c, Polynomial::zero(ring)) {}

    const RingPtr& ring() const { return entries.front().ring(); }

    Polynomial& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Polynomial& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    static PolyMatrix identity(const RingPtr& ring, int n) {
        PolyMatrix m(ring, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, 1);
        return m;
    }

    PolyMatrix transposed() const {
        PolyMatrix t(ring(), cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // Top-left square block of size n.
    PolyMatrix block(int n) const {
        PolyMatrix b(ring(), n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b.at(i, j) = at(i, j);
        return b;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols != b.rows) throw rank_mismatch("matrix product dimension mismatch");
        PolyMatrix r(a.ring(), a.rows, b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const {
        if (static_cast<int>(v.size()) != cols) throw rank_mismatch("matrix-vector dimension mismatch");
        std::vector<Polynomial> r(rows, Polynomial::zero(ring()));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

// Entrywise p^e-th power.
inline PolyMatrix bracket_power_matrix(const PolyMatrix& m, int e) {
    PolyMatrix r = m;
    for (auto& f : r.entries) f = f.bracket_power(e);
    return r;
}

namespace detail {

inline Polynomial det_cofactor(const PolyMatrix& m, std::vector<int> cols) {
    const RingPtr& ring = m.ring();
    int n = static_cast<int>(cols.size());
    int row = m.rows - n;
    if (n == 1) return m.at(row, cols[0]);
    Polynomial acc = Polynomial::zero(ring);
    for (int k = 0; k < n; ++k) {
        if (m.at(row, cols[k]).is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != k) rest.push_back(cols[j]);
        Polynomial sub = det_cofactor(m, rest);
        Polynomial term = m.at(row, cols[k]) * sub;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Fraction-free Bareiss elimination; exact divisions stay in the ring.
inline Polynomial det_bareiss(PolyMatrix m) {
    const RingPtr& ring = m.ring();
    int n = m.rows;
    Polynomial prev = Polynomial::constant(ring, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { pivot = i; break; }
            if (pivot < 0) return Polynomial::zero(ring);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                auto q = num.divide_exact(prev);
                if (!q) throw std::logic_error("Bareiss: exact division failed");
                m.at(i, j) = *q;
            }
        prev = m.at(k, k);
    }
    Polynomial d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

}  // namespace detail

inline Polynomial determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows == 0) throw std::invalid_argument("determinant of an empty matrix");
    if (m.rows <= 4) {
        std::vector<int> cols(m.cols);
        for (int j = 0; j < m.cols; ++j) cols[j] = j;
        return detail::det_cofactor(m, cols);
    }
    return detail::det_bareiss(m);
}

// Adjugate via signed cofactors; A * adj(A) = det(A) * I.
inline PolyMatrix adjugate(const PolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("adjugate of a non-square matrix");
    int n = m.rows;
    const RingPtr& ring = m.ring();
    PolyMatrix adj(ring, n, n);
    if (n == 1) {
        adj.at(0, 0) = Polynomial::constant(ring, 1);
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyMatrix minor(ring, n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Polynomial cof = determinant(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(j, i) = cof;  // transposed placement
        }
    return adj;
}

}  // namespace frobstar
