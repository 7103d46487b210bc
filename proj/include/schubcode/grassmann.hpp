#pragma once

// The Grassmannian of l-dimensional subspaces of GF(q)^m as an indexed point
// set: Pluecker coordinates, injection distance, discs, and lines.
//
// A line is the set of l-subspaces squeezed between a common (l-1)-dimensional
// core and a common (l+1)-dimensional hull; it always carries exactly q+1
// points and maps to a projective line under the Pluecker embedding.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"

namespace schubcode {

using IndexTuple = std::vector<int>;  // strictly increasing column indices, 0-based

/// All l-element column tuples over {0..m-1} in lexicographic order; this is
/// the coordinate order of Pluecker vectors.
inline std::vector<IndexTuple> index_tuples(int l, int m) {
    std::vector<IndexTuple> out;
    if (l < 0 || l > m) return out;
    IndexTuple t(l);
    for (int i = 0; i < l; ++i) t[i] = i;
    if (l == 0) {
        out.push_back(t);
        return out;
    }
    out.push_back(t);
    while (detail::next_combination(t, m)) out.push_back(t);
    return out;
}

/// Determinant of a small square matrix over GF(q) by Gaussian elimination.
inline Fe det(Matrix m, const Field& f) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    Fe d = 1;
    for (int c = 0; c < m.cols; ++c) {
        int pr = -1;
        for (int i = c; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) return 0;
        if (pr != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(c, j), m.at(pr, j));
            d = f.neg(d);
        }
        d = f.mul(d, m.at(c, c));
        Fe s = f.inv(m.at(c, c));
        for (int i = c + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Fe t = f.mul(m.at(i, c), s);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(c, j)));
        }
    }
    return d;
}

/// Raw Pluecker coordinates of P: the l x l minors of its canonical basis
/// matrix, one per index tuple, unnormalized.
inline std::vector<Fe> plucker_raw(const Subspace& p, const Field& f) {
    int l = p.dim, m = p.ambient;
    std::vector<Fe> out;
    for (const IndexTuple& t : index_tuples(l, m)) {
        Matrix sub(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) sub.at(i, j) = p.basis.at(i, t[j]);
        out.push_back(det(std::move(sub), f));
    }
    return out;
}

struct PluckerVector {
    std::vector<Fe> coords;  // normalized: first nonzero coordinate is 1
    bool operator==(const PluckerVector&) const = default;
};

/// Pluecker embedding of an l-subspace, normalized so projective equality is
/// plain vector equality.
inline PluckerVector plucker(const Subspace& p, const Field& f) {
    if (p.dim == 0) throw std::invalid_argument("plucker: zero-dimensional subspace");
    PluckerVector v{plucker_raw(p, f)};
    for (Fe c : v.coords)
        if (c != 0) {
            Fe s = f.inv(c);
            for (Fe& x : v.coords) x = f.mul(x, s);
            return v;
        }
    throw std::logic_error("plucker: vanishing coordinate vector");
}

/// Injection distance dist(P, Q) = l - dim(P cap Q).
inline int injection_distance(const Subspace& p, const Subspace& q, const Field& f) {
    if (p.dim != q.dim || p.ambient != q.ambient)
        throw std::invalid_argument("injection_distance: incompatible subspaces");
    return p.dim - dim_intersection(p, q, f);
}

/// Q within distance i of P; empty disc for i < 0, everything for i >= l.
inline bool disc_contains(const Subspace& p, const Subspace& q, int i, const Field& f) {
    if (i < 0) return false;
    if (i >= p.dim) return true;
    return injection_distance(p, q, f) <= i;
}

struct Line {
    Subspace core;  // dimension l-1, contained in every point
    Subspace hull;  // dimension l+1, containing every point

    bool operator==(const Line&) const = default;
};

struct LineLess {
    bool operator()(const Line& a, const Line& b) const {
        if (!(a.core == b.core)) return subspace_less(a.core, b.core);
        return subspace_less(a.hull, b.hull);
    }
};

/// The q+1 points of a line, in canonical subspace order.
inline std::vector<Subspace> line_points(const Line& ln, const Field& f) {
    std::set<Subspace, SubspaceLess> pts;
    for (const auto& v : vectors_of(ln.hull, f)) {
        if (contains_vector(ln.core, v, f)) continue;
        Matrix m(ln.core.dim + 1, ln.core.ambient);
        std::copy(ln.core.basis.a.begin(), ln.core.basis.a.end(), m.a.begin());
        std::copy(v.begin(), v.end(),
                  m.a.begin() + static_cast<std::size_t>(ln.core.dim) * ln.core.ambient);
        pts.insert(subspace_from_rows(m, f));
    }
    return {pts.begin(), pts.end()};
}

/// The unique line through two points at injection distance 1, if any.
inline std::optional<Line> line_through_two(const Subspace& p, const Subspace& q,
                                            const Field& f) {
    if (p.dim != q.dim || p.ambient != q.ambient)
        throw std::invalid_argument("line_through_two: incompatible subspaces");
    if (injection_distance(p, q, f) != 1) return std::nullopt;
    return Line{subspace_intersection(p, q, f), subspace_sum(p, q, f)};
}

/// All lines through P: each pairing of a hyperplane of P with an extension
/// of P by one dimension.  Ordered by (core, hull) canonical order.
inline std::vector<Line> lines_through(const Subspace& p, const Field& f) {
    std::vector<Line> out;
    for (const Subspace& core : subspaces_of(p, p.dim - 1, f))
        for (const Subspace& hull : superspaces_of(p, f)) out.push_back(Line{core, hull});
    return out;
}

/// Points of the line at distance <= i from P.
inline std::vector<Subspace> line_disc_intersection(const Line& ln, const Subspace& p, int i,
                                                    const Field& f) {
    std::vector<Subspace> out;
    for (const Subspace& t : line_points(ln, f))
        if (disc_contains(p, t, i, f)) out.push_back(t);
    return out;
}

/// The points of G_l(m) in canonical order with O(1)-ish position lookup.
struct GrassmannIndex {
    int l = 0, m = 0;
    std::vector<Subspace> points;

    static GrassmannIndex build(int l, int m, const Field& f) {
        GrassmannIndex g;
        g.l = l;
        g.m = m;
        g.points = enumerate_subspaces(m, l, f);
        return g;
    }

    std::size_t size() const { return points.size(); }

    std::size_t position_of(const Subspace& p, const Field& f) const {
        return canonical_position(p, f);
    }
};

}  // namespace schubcode
