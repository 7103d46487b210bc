#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "schubcode/grassmann.hpp"

using namespace schubcode;

namespace {

Subspace sp(std::initializer_list<std::initializer_list<Fe>> rows, const Field& f) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (Fe v : row) m.at(r, c++) = v;
        ++r;
    }
    return subspace_from_rows(m, f);
}

}  // namespace

TEST(IndexTuples, LexOrderAndCount) {
    auto ts = index_tuples(2, 4);
    ASSERT_EQ(ts.size(), 6u);
    EXPECT_EQ(ts.front(), (IndexTuple{0, 1}));
    EXPECT_EQ(ts[1], (IndexTuple{0, 2}));
    EXPECT_EQ(ts.back(), (IndexTuple{2, 3}));
}

TEST(Plucker, CoordinateSubspaceHitsOneMinor) {
    Field f2(2);
    Subspace p = sp({{1, 0, 0, 0}, {0, 1, 0, 0}}, f2);
    auto v = plucker(p, f2).coords;
    ASSERT_EQ(v.size(), 6u);
    EXPECT_EQ(v[0], 1u);  // tuple (0,1)
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_EQ(v[i], 0u);
}

TEST(Plucker, HandExpandedMinors) {
    Field f2(2);
    Subspace p = sp({{1, 0, 0, 1}, {0, 1, 1, 0}}, f2);
    auto v = plucker(p, f2).coords;
    // tuples in lex order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
    EXPECT_EQ(v, (std::vector<Fe>{1, 1, 0, 0, 1, 1}));
}

TEST(Plucker, BasisChangeInvariance) {
    Field f3(3);
    Subspace p = sp({{1, 0, 2, 1}, {0, 1, 1, 2}}, f3);
    Matrix other(2, 4);
    // 2*row0 + row1, row1  spans the same plane
    for (int j = 0; j < 4; ++j) {
        other.at(0, j) = f3.add(f3.mul(2, p.basis.at(0, j)), p.basis.at(1, j));
        other.at(1, j) = p.basis.at(1, j);
    }
    EXPECT_EQ(plucker(p, f3), plucker(subspace_from_rows(other, f3), f3));
}

TEST(InjectionDistance, MetricAxiomsExhaustive) {
    Field f2(2);
    auto g = GrassmannIndex::build(2, 4, f2);
    const std::size_t n = g.points.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i][j] = injection_distance(g.points[i], g.points[j], f2);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(d[i][i], 0);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(d[i][j], d[j][i]);
            EXPECT_EQ(d[i][j] == 0, g.points[i] == g.points[j]);
            for (std::size_t t = 0; t < n; ++t)
                EXPECT_LE(d[i][t], d[i][j] + d[j][t]);
        }
    }
}

TEST(Discs, Conventions) {
    Field f2(2);
    Subspace p = sp({{1, 0, 0, 0}, {0, 1, 0, 0}}, f2);
    Subspace q = sp({{0, 0, 1, 0}, {0, 0, 0, 1}}, f2);
    EXPECT_TRUE(disc_contains(p, p, 0, f2));
    EXPECT_FALSE(disc_contains(p, q, -1, f2));
    EXPECT_FALSE(disc_contains(p, q, 1, f2));
    EXPECT_TRUE(disc_contains(p, q, 2, f2));
    EXPECT_TRUE(disc_contains(p, q, 5, f2));
}

TEST(Lines, PointsCountAndMembership) {
    Field f2(2);
    Line ln{sp({{1, 0, 0, 0}}, f2), sp({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, f2)};
    auto pts = line_points(ln, f2);
    ASSERT_EQ(pts.size(), 3u);  // q+1
    for (const auto& p : pts) {
        EXPECT_TRUE(subspace_leq(ln.core, p, f2));
        EXPECT_TRUE(subspace_leq(p, ln.hull, f2));
        EXPECT_EQ(p.dim, 2);
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        EXPECT_TRUE(subspace_less(pts[i], pts[i + 1]));

    // projective line: l = 1, core = 0
    Line pl{zero_subspace(3), sp({{1, 0, 0}, {0, 1, 0}}, f2)};
    EXPECT_EQ(line_points(pl, f2).size(), 3u);

    Field f3(3);
    Line l3{sp({{1, 0, 0, 0}}, f3), sp({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, f3)};
    EXPECT_EQ(line_points(l3, f3).size(), 4u);
}

TEST(Lines, ThroughTwoPoints) {
    Field f2(2);
    Subspace p = sp({{1, 0, 0, 0}, {0, 1, 0, 0}}, f2);
    Subspace q1 = sp({{1, 0, 0, 0}, {0, 0, 1, 0}}, f2);  // dist 1
    Subspace q2 = sp({{0, 0, 1, 0}, {0, 0, 0, 1}}, f2);  // dist 2
    auto ln = line_through_two(p, q1, f2);
    ASSERT_TRUE(ln.has_value());
    auto pts = line_points(*ln, f2);
    EXPECT_NE(std::find(pts.begin(), pts.end(), p), pts.end());
    EXPECT_NE(std::find(pts.begin(), pts.end(), q1), pts.end());
    EXPECT_FALSE(line_through_two(p, p, f2).has_value());
    EXPECT_FALSE(line_through_two(p, q2, f2).has_value());
}

TEST(Lines, ThroughPointCounts) {
    Field f2(2);
    Subspace p = sp({{1, 0, 0, 0}, {0, 1, 0, 0}}, f2);
    auto lns = lines_through(p, f2);
    EXPECT_EQ(lns.size(), 9u);  // [2 1]_2 * [2 1]_2
    for (const auto& ln : lns) {
        EXPECT_TRUE(subspace_leq(ln.core, p, f2));
        EXPECT_TRUE(subspace_leq(p, ln.hull, f2));
    }
    // exhaustive cross-check: all (core, hull) pairs around p
    std::size_t direct = 0;
    for (const auto& c : enumerate_subspaces(4, 1, f2))
        for (const auto& h : enumerate_subspaces(4, 3, f2))
            if (subspace_leq(c, p, f2) && subspace_leq(p, h, f2)) ++direct;
    EXPECT_EQ(direct, lns.size());

    // l = 1: hyperplane count through a projective point
    Field f3(3);
    Subspace pt = sp({{1, 2, 0}}, f3);
    EXPECT_EQ(Big(lines_through(pt, f3).size()), gaussian_binomial(2, 1, 3));

    // m = l: no room for a hull
    Subspace whole = full_space(2);
    EXPECT_TRUE(lines_through(whole, f2).empty());
}

TEST(Lines, CollinearTriplesAreDependent) {
    Field f2(2);
    for (const Line& ln : oracle::all_lines(2, 4, f2)) {
        auto pts = line_points(ln, f2);
        ASSERT_EQ(pts.size(), 3u);
        auto dep = solve_dependence({plucker(pts[0], f2).coords, plucker(pts[1], f2).coords,
                                     plucker(pts[2], f2).coords},
                                    f2);
        ASSERT_TRUE(dep.has_value());
        for (Fe c : *dep) EXPECT_NE(c, 0u);
    }
}

TEST(LineDisc, SpecExamples) {
    Field f2(2);
    Subspace p = sp({{1, 0, 0, 0}, {0, 1, 0, 0}}, f2);
    // a line through p meets the radius-1 disc in all q+1 points
    for (const Line& ln : lines_through(p, f2))
        EXPECT_EQ(line_disc_intersection(ln, p, 1, f2).size(), 3u);
}

// Exhaustive scan of the line/disc theorems on G_2(4) over GF(2): for every
// center p, every q at distance i, every line through q.
TEST(LineDisc, TheoremsExhaustiveSmall) {
    Field f2(2);
    auto g = GrassmannIndex::build(2, 4, f2);
    for (const Subspace& p : g.points) {
        for (const Subspace& q : g.points) {
            int i = injection_distance(p, q, f2);
            Subspace pq = subspace_intersection(p, q, f2);
            Subspace ps = subspace_sum(p, q, f2);
            for (const Line& ln : lines_through(q, f2)) {
                std::size_t at_i = line_disc_intersection(ln, p, i, f2).size();
                std::size_t at_im1 = line_disc_intersection(ln, p, i - 1, f2).size();
                bool core_cond = subspace_leq(pq, ln.core, f2);
                bool hull_cond = subspace_leq(ln.hull, ps, f2);
                // |L cap disc_i| >= 2  iff  core or hull condition
                EXPECT_EQ(at_i >= 2, core_cond || hull_cond);
                // |L cap disc_i| = 1  iff  neither condition
                EXPECT_EQ(at_i == 1, !core_cond && !hull_cond);
                // smaller radii: empty at i-2, at most one at i-1,
                // exactly one iff both conditions
                EXPECT_EQ(line_disc_intersection(ln, p, i - 2, f2).size(), 0u);
                EXPECT_LE(at_im1, 1u);
                EXPECT_EQ(at_im1 == 1, core_cond && hull_cond);
            }
        }
        // dichotomy: every line meets the disc in <= 1 point or lies inside
        for (const Line& ln : oracle::all_lines(2, 4, f2)) {
            for (int radius = 1; radius <= 2; ++radius) {
                std::size_t cnt = line_disc_intersection(ln, p, radius, f2).size();
                EXPECT_TRUE(cnt <= 1 || cnt == 3)
                    << "radius " << radius << " intersection " << cnt;
            }
        }
    }
}

// Two points of a line jointly within distance i of some q force the whole
// line into q's disc.
TEST(LineDisc, JointDiscMembershipPropagates) {
    Field f2(2);
    auto g = GrassmannIndex::build(2, 4, f2);
    for (const Line& ln : oracle::all_lines(2, 4, f2)) {
        auto pts = line_points(ln, f2);
        for (const Subspace& q : g.points)
            for (int i = 1; i <= 2; ++i)
                for (std::size_t a = 0; a < pts.size(); ++a)
                    for (std::size_t b = a + 1; b < pts.size(); ++b) {
                        if (!disc_contains(pts[a], q, i, f2) ||
                            !disc_contains(pts[b], q, i, f2))
                            continue;
                        for (const Subspace& r : pts)
                            EXPECT_TRUE(disc_contains(r, q, i, f2));
                    }
    }
}

TEST(GrassmannIndexLookup, PositionsAreConsistent) {
    Field f3(3);
    auto g = GrassmannIndex::build(2, 4, f3);
    EXPECT_EQ(Big(g.size()), gaussian_binomial(4, 2, 3));
    for (std::size_t i = 0; i < g.size(); i += 7)
        EXPECT_EQ(g.position_of(g.points[i], f3), i);
}
