#pragma once

// Exact dense matrix and subspace algebra over GF(q).
//
// Subspaces are kept in a canonical form: the unique reduced row-echelon basis
// of the row space.  Two Subspace values are equal iff their basis matrices
// are entrywise equal, and a fixed total order on subspaces (pivot pattern
// first, then free entries) doubles as the enumeration order, so every
// subspace has a stable position among the k-subspaces of GF(q)^m.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace schubcode {

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Fe> a;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Fe& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    Fe at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    std::vector<Fe> row(int r) const {
        return {a.begin() + static_cast<std::size_t>(r) * cols,
                a.begin() + static_cast<std::size_t>(r + 1) * cols};
    }

    bool operator==(const Matrix&) const = default;
};

struct RrefResult {
    Matrix mat;
    int rank = 0;
    std::vector<int> pivots;  // strictly increasing column indices
};

inline RrefResult rref(Matrix m, const Field& f) {
    RrefResult res;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
        Fe s = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Fe t = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = std::move(m);
    return res;
}

struct Subspace {
    int ambient = 0;
    int dim = 0;
    Matrix basis;             // dim x ambient, reduced row-echelon form
    std::vector<int> pivots;  // leading columns, strictly increasing

    bool operator==(const Subspace&) const = default;
};

/// Canonical subspace spanning the rows of m (zero rows dropped).
inline Subspace subspace_from_rows(const Matrix& m, const Field& f) {
    RrefResult r = rref(m, f);
    Subspace s;
    s.ambient = m.cols;
    s.dim = r.rank;
    s.pivots = r.pivots;
    s.basis = Matrix(r.rank, m.cols);
    std::copy(r.mat.a.begin(), r.mat.a.begin() + static_cast<std::size_t>(r.rank) * m.cols,
              s.basis.a.begin());
    return s;
}

inline Subspace zero_subspace(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(0, ambient);
    return s;
}

inline Subspace full_space(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.dim = ambient;
    s.basis = Matrix(ambient, ambient);
    for (int i = 0; i < ambient; ++i) {
        s.basis.at(i, i) = 1;
        s.pivots.push_back(i);
    }
    return s;
}

inline Subspace span_of_vector(const std::vector<Fe>& v, const Field& f) {
    Matrix m(1, static_cast<int>(v.size()));
    m.a = v;
    return subspace_from_rows(m, f);
}

/// Reduce v against the RREF basis of s; the remainder is zero iff v lies in s.
inline std::vector<Fe> reduce_against(const Subspace& s, std::vector<Fe> v, const Field& f) {
    for (int i = 0; i < s.dim; ++i) {
        Fe c = v[s.pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < s.ambient; ++j)
            v[j] = f.sub(v[j], f.mul(c, s.basis.at(i, j)));
    }
    return v;
}

inline bool contains_vector(const Subspace& s, const std::vector<Fe>& v, const Field& f) {
    auto r = reduce_against(s, v, f);
    return std::all_of(r.begin(), r.end(), [](Fe x) { return x == 0; });
}

inline bool subspace_leq(const Subspace& u, const Subspace& w, const Field& f) {
    if (u.ambient != w.ambient)
        throw std::invalid_argument("subspace_leq: ambient dimension mismatch");
    for (int i = 0; i < u.dim; ++i)
        if (!contains_vector(w, u.basis.row(i), f)) return false;
    return true;
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& w, const Field& f) {
    if (u.ambient != w.ambient)
        throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
    Matrix m(u.dim + w.dim, u.ambient);
    std::copy(u.basis.a.begin(), u.basis.a.end(), m.a.begin());
    std::copy(w.basis.a.begin(), w.basis.a.end(),
              m.a.begin() + static_cast<std::size_t>(u.dim) * u.ambient);
    return subspace_from_rows(m, f);
}

/// Zassenhaus: row-reduce [u|u; w|0]; rows whose left half vanished carry a
/// basis of the intersection in their right half.
inline Subspace subspace_intersection(const Subspace& u, const Subspace& w, const Field& f) {
    if (u.ambient != w.ambient)
        throw std::invalid_argument("subspace_intersection: ambient dimension mismatch");
    int m = u.ambient;
    Matrix z(u.dim + w.dim, 2 * m);
    for (int i = 0; i < u.dim; ++i)
        for (int j = 0; j < m; ++j) {
            z.at(i, j) = u.basis.at(i, j);
            z.at(i, m + j) = u.basis.at(i, j);
        }
    for (int i = 0; i < w.dim; ++i)
        for (int j = 0; j < m; ++j) z.at(u.dim + i, j) = w.basis.at(i, j);
    RrefResult r = rref(std::move(z), f);
    std::vector<Fe> rows;
    int count = 0;
    for (int i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < m && left_zero; ++j) left_zero = r.mat.at(i, j) == 0;
        if (!left_zero) continue;
        for (int j = 0; j < m; ++j) rows.push_back(r.mat.at(i, m + j));
        ++count;
    }
    Matrix b(count, m);
    b.a = std::move(rows);
    return subspace_from_rows(b, f);
}

inline int dim_intersection(const Subspace& u, const Subspace& w, const Field& f) {
    // dim(U+W) + dim(U cap W) = dim U + dim W
    Subspace s = subspace_sum(u, w, f);
    return u.dim + w.dim - s.dim;
}

/// Total order on equal-dimension subspaces: pivot pattern lexicographically,
/// then free entries read row-major as base-q digits (first free position most
/// significant).  Matches the order of enumerate_subspaces.
inline bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.pivots != b.pivots) return a.pivots < b.pivots;
    return a.basis.a < b.basis.a;
}

struct SubspaceLess {
    bool operator()(const Subspace& a, const Subspace& b) const { return subspace_less(a, b); }
};

namespace detail {

// Row-major free positions of a RREF pivot pattern: (i, j) with j > pivots[i]
// and j not itself a pivot column.
inline std::vector<std::pair<int, int>> free_positions(const std::vector<int>& pivots, int m) {
    std::vector<bool> is_pivot(m, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::pair<int, int>> pos;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (int j = pivots[i] + 1; j < m; ++j)
            if (!is_pivot[j]) pos.emplace_back(static_cast<int>(i), j);
    return pos;
}

inline bool next_combination(std::vector<int>& c, int m) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < m - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// All k-subspaces of GF(q)^m, each exactly once, in the canonical order
/// (lexicographic pivot patterns, then free entries as base-q digits).
inline std::vector<Subspace> enumerate_subspaces(int m, int k, const Field& f) {
    if (k < 0 || k > m) throw std::invalid_argument("enumerate_subspaces: need 0 <= k <= m");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(zero_subspace(m));
        return out;
    }
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    std::uint64_t q = f.q();
    do {
        auto free = detail::free_positions(piv, m);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            Subspace s;
            s.ambient = m;
            s.dim = k;
            s.pivots = piv;
            s.basis = Matrix(k, m);
            for (int i = 0; i < k; ++i) s.basis.at(i, piv[i]) = 1;
            std::uint64_t rem = code;
            for (std::size_t t = free.size(); t-- > 0;) {
                s.basis.at(free[t].first, free[t].second) = static_cast<Fe>(rem % q);
                rem /= q;
            }
            out.push_back(std::move(s));
        }
    } while (detail::next_combination(piv, m));
    return out;
}

/// Position of s in the enumerate_subspaces(m, k) order, computed directly
/// from the pivot pattern and free entries.
inline std::size_t canonical_position(const Subspace& s, const Field& f) {
    int m = s.ambient, k = s.dim;
    if (k == 0) return 0;
    std::uint64_t q = f.q();
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    std::size_t pos = 0;
    do {
        auto free = detail::free_positions(piv, m);
        if (piv == s.pivots) {
            std::uint64_t code = 0;
            for (auto [i, j] : free) code = code * q + s.basis.at(i, j);
            return pos + code;
        }
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) total *= q;
        pos += total;
    } while (detail::next_combination(piv, m));
    throw std::logic_error("canonical_position: pivot pattern not found");
}

/// All vectors of s (coefficient sweep over the basis), q^dim of them,
/// starting with the zero vector.
inline std::vector<std::vector<Fe>> vectors_of(const Subspace& s, const Field& f) {
    std::uint64_t q = f.q(), total = 1;
    for (int i = 0; i < s.dim; ++i) total *= q;
    std::vector<std::vector<Fe>> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Fe> v(s.ambient, 0);
        std::uint64_t rem = code;
        for (int i = 0; i < s.dim; ++i) {
            Fe c = static_cast<Fe>(rem % q);
            rem /= q;
            if (c != 0)
                for (int j = 0; j < s.ambient; ++j)
                    v[j] = f.add(v[j], f.mul(c, s.basis.at(i, j)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// k-dimensional subspaces of s, canonical in the ambient space.
inline std::vector<Subspace> subspaces_of(const Subspace& s, int k, const Field& f) {
    std::vector<Subspace> out;
    for (const Subspace& c : enumerate_subspaces(s.dim, k, f)) {
        Matrix rows(k, s.ambient);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < s.ambient; ++j) {
                Fe acc = 0;
                for (int t = 0; t < s.dim; ++t)
                    acc = f.add(acc, f.mul(c.basis.at(i, t), s.basis.at(t, j)));
                rows.at(i, j) = acc;
            }
        out.push_back(subspace_from_rows(rows, f));
    }
    std::sort(out.begin(), out.end(), SubspaceLess{});
    return out;
}

/// (dim+1)-dimensional subspaces of `inside` containing s, in canonical order.
inline std::vector<Subspace> superspaces_within(const Subspace& s, const Subspace& inside,
                                                const Field& f) {
    std::vector<Subspace> out;
    for (const auto& v : vectors_of(inside, f)) {
        if (contains_vector(s, v, f)) continue;
        Matrix m(s.dim + 1, s.ambient);
        std::copy(s.basis.a.begin(), s.basis.a.end(), m.a.begin());
        std::copy(v.begin(), v.end(), m.a.begin() + static_cast<std::size_t>(s.dim) * s.ambient);
        out.push_back(subspace_from_rows(m, f));
    }
    std::sort(out.begin(), out.end(), SubspaceLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<Subspace> superspaces_of(const Subspace& s, const Field& f) {
    return superspaces_within(s, full_space(s.ambient), f);
}

/// Basis of the right kernel {x : m x = 0}; one vector per free column, in
/// increasing free-column order.
inline std::vector<std::vector<Fe>> kernel_basis(const Matrix& m, const Field& f) {
    RrefResult r = rref(m, f);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Fe>> out;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Fe> x(m.cols, 0);
        x[j] = 1;
        for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = f.neg(r.mat.at(i, j));
        out.push_back(std::move(x));
    }
    return out;
}

/// First nonzero dependence among the given vectors (as a coefficient tuple),
/// or nullopt if they are independent.  Deterministic: the kernel basis vector
/// of the first free column of the stacked column matrix.
inline std::optional<std::vector<Fe>> solve_dependence(const std::vector<std::vector<Fe>>& vecs,
                                                       const Field& f) {
    if (vecs.empty()) return std::nullopt;
    int len = static_cast<int>(vecs[0].size());
    int s = static_cast<int>(vecs.size());
    Matrix m(len, s);
    for (int j = 0; j < s; ++j) {
        if (static_cast<int>(vecs[j].size()) != len)
            throw std::invalid_argument("solve_dependence: vector length mismatch");
        for (int i = 0; i < len; ++i) m.at(i, j) = vecs[j][i];
    }
    auto ker = kernel_basis(m, f);
    if (ker.empty()) return std::nullopt;
    return ker.front();
}

}  // namespace schubcode
