#pragma once

// Schubert varieties inside the Grassmannian: membership against a partial
// flag, enumeration in the ambient canonical order, parameter formulas for the
// associated codes, and the classification of lines contained in the variety.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "grassmann.hpp"

namespace schubcode {

/// A partial flag A_1 < A_2 < ... < A_l with dim A_i = alpha_i (alpha values
/// are dimensions, 1 <= alpha_1 < ... < alpha_l <= m).
struct Flag {
    std::vector<int> alpha;
    std::vector<Subspace> spaces;

    int l() const { return static_cast<int>(alpha.size()); }
    int m() const { return spaces.empty() ? 0 : spaces.front().ambient; }
};

inline void validate_alpha(const std::vector<int>& alpha, int m) {
    if (alpha.empty()) throw std::invalid_argument("alpha must be nonempty");
    int prev = 0;
    for (int a : alpha) {
        if (a <= prev || a > m)
            throw std::invalid_argument("alpha must be strictly increasing within 1..m");
        prev = a;
    }
}

inline bool is_trivial_alpha(const std::vector<int>& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != static_cast<int>(i) + 1) return false;
    return true;
}

/// The coordinate flag: A_i spanned by the first alpha_i unit vectors.
inline Flag standard_flag(const std::vector<int>& alpha, int m, const Field& f) {
    validate_alpha(alpha, m);
    Flag fl;
    fl.alpha = alpha;
    for (int a : alpha) {
        Matrix b(a, m);
        for (int i = 0; i < a; ++i) b.at(i, i) = 1;
        fl.spaces.push_back(subspace_from_rows(b, f));
    }
    return fl;
}

/// dim(P cap A_i) >= i for every flag step.
inline bool schubert_contains(const Flag& fl, const Subspace& p, const Field& f) {
    for (int i = 0; i < fl.l(); ++i)
        if (dim_intersection(p, fl.spaces[i], f) < i + 1) return false;
    return true;
}

/// delta(alpha) = sum (alpha_i - i), the dimension of the Schubert variety.
inline int schubert_delta(const std::vector<int>& alpha) {
    int d = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) d += alpha[i] - static_cast<int>(i) - 1;
    return d;
}

struct SchubertParams {
    Big n, k, d;
    int delta = 0;
};

namespace detail {

/// Exact integer determinant (Bareiss fraction-free elimination).
inline Big int_det(std::vector<std::vector<Big>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Big prev = 1;
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        if (m[c][c] == 0) {
            int pr = -1;
            for (int i = c + 1; i < n; ++i)
                if (m[i][c] != 0) { pr = i; break; }
            if (pr < 0) return 0;
            std::swap(m[c], m[pr]);
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i)
            for (int j = c + 1; j < n; ++j) {
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            }
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace detail

/// Length, dimension and minimum distance of the Schubert code:
///   n = sum over beta <= alpha of q^delta(beta)
///   k = det( binom(alpha_j - j + 1, i - j + 1) )
///   d = q^delta(alpha)
inline SchubertParams schubert_params(const std::vector<int>& alpha, int l, int m,
                                      const Field& f) {
    if (static_cast<int>(alpha.size()) != l)
        throw std::invalid_argument("schubert_params: alpha length must equal l");
    validate_alpha(alpha, m);
    SchubertParams sp;
    sp.delta = schubert_delta(alpha);
    sp.d = big_pow(f.q(), sp.delta);
    sp.n = 0;
    for (const IndexTuple& t : index_tuples(l, m)) {
        std::vector<int> beta(l);
        for (int i = 0; i < l; ++i) beta[i] = t[i] + 1;  // tuples of dimensions
        bool le = true;
        for (int i = 0; i < l; ++i) le = le && beta[i] <= alpha[i];
        if (le) sp.n += big_pow(f.q(), schubert_delta(beta));
    }
    std::vector<std::vector<Big>> mat(l, std::vector<Big>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) mat[i - 1][j - 1] = binomial(alpha[j - 1] - j + 1, i - j + 1);
    sp.k = detail::int_det(std::move(mat));
    return sp;
}

/// The points of the Schubert variety in ambient canonical order, with their
/// ambient coordinate positions retained.
struct SchubertIndex {
    Flag flag;
    std::vector<Subspace> points;
    std::vector<std::size_t> ambient_positions;  // increasing

    static SchubertIndex build(const Flag& fl, const GrassmannIndex& g, const Field& f) {
        SchubertIndex s;
        s.flag = fl;
        for (std::size_t i = 0; i < g.points.size(); ++i) {
            if (schubert_contains(fl, g.points[i], f)) {
                s.points.push_back(g.points[i]);
                s.ambient_positions.push_back(i);
            }
        }
        return s;
    }

    std::size_t size() const { return points.size(); }

    /// Coordinate position of p inside the variety; throws if p is not in it.
    std::size_t position_of(const Subspace& p, const Field& f) const {
        std::size_t ap = canonical_position(p, f);
        auto it = std::lower_bound(ambient_positions.begin(), ambient_positions.end(), ap);
        if (it == ambient_positions.end() || *it != ap)
            throw std::invalid_argument("position_of: point not in the Schubert variety");
        return static_cast<std::size_t>(it - ambient_positions.begin());
    }

    bool contains(const Subspace& p, const Field& f) const {
        return schubert_contains(flag, p, f);
    }
};

/// Line classification: L(core, hull) lies inside the Schubert variety iff
/// hull <= A_l and, for every flag step i (1-based),
///   dim(core cap A_i) >= i-1,  dim(hull cap A_i) >= i,  and
///   dim(core cap A_i) >= i  or  dim(hull cap A_i) >= i+1.
inline bool is_line_in_schubert(const Flag& fl, const Line& ln, const Field& f) {
    if (!subspace_leq(ln.hull, fl.spaces.back(), f)) return false;
    for (int i = 1; i <= fl.l(); ++i) {
        const Subspace& a = fl.spaces[i - 1];
        int du = dim_intersection(ln.core, a, f);
        int dw = dim_intersection(ln.hull, a, f);
        if (du < i - 1 || dw < i) return false;
        if (du == i - 1 && dw < i + 1) return false;
    }
    return true;
}

/// All lines through p that stay inside the Schubert variety.
inline std::vector<Line> lines_through_point_in_schubert(const Flag& fl, const Subspace& p,
                                                         const Field& f) {
    if (!schubert_contains(fl, p, f))
        throw std::invalid_argument("lines_through_point_in_schubert: point not in the variety");
    std::vector<Line> out;
    for (const Line& ln : lines_through(p, f))
        if (is_line_in_schubert(fl, ln, f)) out.push_back(ln);
    return out;
}

}  // namespace schubcode
