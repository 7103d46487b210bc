#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "schubcode/code.hpp"

using namespace schubcode;

TEST(GrassmannCode, SimplexBaseCase) {
    Code c = Code::build({2, 1, 3, std::nullopt});
    EXPECT_EQ(c.k(), 3u);
    EXPECT_EQ(c.n(), 7u);
    EXPECT_EQ(min_distance_bruteforce(c.gen, c.field), 4);  // 2^{1*(3-1)}
}

TEST(GrassmannCode, TwoFourBinary) {
    Code c = Code::build({2, 2, 4, std::nullopt});
    EXPECT_EQ(c.k(), 6u);
    EXPECT_EQ(c.n(), 35u);
    EXPECT_EQ(rref(c.gen.mat, c.field).rank, 6);
    EXPECT_EQ(min_distance_bruteforce(c.gen, c.field), 16);  // 2^{2*2}
    for (int col = 0; col < c.gen.mat.cols; ++col) {
        bool nonzero = false;
        for (int r = 0; r < c.gen.mat.rows; ++r) nonzero = nonzero || c.gen.mat.at(r, col) != 0;
        EXPECT_TRUE(nonzero);
    }
}

TEST(SchubertCode, TwoFourBinary) {
    Code c = Code::build({2, 2, 4, std::vector<int>{2, 4}});
    EXPECT_EQ(c.k(), 5u);
    EXPECT_EQ(c.n(), 19u);
    EXPECT_EQ(rref(c.gen.mat, c.field).rank, 5);
    EXPECT_EQ(min_distance_bruteforce(c.gen, c.field), 8);  // 2^{m+a1-3}
}

TEST(SchubertCode, ThreeFiveBinary) {
    Code c = Code::build({2, 2, 5, std::vector<int>{3, 5}});
    EXPECT_EQ(c.k(), 9u);
    EXPECT_EQ(c.n(), 91u);
}

TEST(SchubertCode, TopAlphaEqualsGrassmannRowSpace) {
    Code g = Code::build({2, 2, 4, std::nullopt});
    Code s = Code::build({2, 2, 4, std::vector<int>{3, 4}});
    EXPECT_EQ(s.n(), g.n());
    EXPECT_EQ(rref(s.gen.mat, s.field).mat, rref(g.gen.mat, g.field).mat);
}

TEST(SchubertCode, TrivialAlphaRejected) {
    EXPECT_THROW(Code::build({2, 2, 4, std::vector<int>{1, 2}}), std::invalid_argument);
}

TEST(Weight3Checks, OnEveryLineInOmega) {
    Code c = Code::build({2, 2, 4, std::vector<int>{2, 4}});
    const Field& f = c.field;
    const Flag& fl = c.schub->flag;
    std::size_t lines_seen = 0;
    for (const Line& ln : oracle::all_lines(2, 4, f)) {
        if (!is_line_in_schubert(fl, ln, f)) continue;
        ++lines_seen;
        auto pts = line_points(ln, f);
        ParityCheck w = weight3_check(pts[0], pts[1], pts[2], c);
        EXPECT_EQ(w.weight(), 3u);
        for (const auto& [pos, coef] : w.support) EXPECT_EQ(coef, 1u);  // binary field
        EXPECT_TRUE(check_annihilates(w, c.gen.mat, f));
    }
    EXPECT_GT(lines_seen, 0u);
}

TEST(Weight3Checks, NonCollinearTripleRejected) {
    Code c = Code::build({2, 2, 4, std::vector<int>{2, 4}});
    const auto& pts = c.points();
    // find a pair at distance 2 inside the variety
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (injection_distance(pts[i], pts[j], c.field) != 2) continue;
            EXPECT_THROW(weight3_check(pts[i], pts[j], pts[0], c), std::invalid_argument);
            return;
        }
    FAIL() << "no distance-2 pair found";
}

TEST(Weight3Checks, NonBinaryCoefficientsAnnihilate) {
    Code c = Code::build({3, 2, 4, std::vector<int>{2, 4}});
    const Field& f = c.field;
    const Flag& fl = c.schub->flag;
    for (const Line& ln : oracle::all_lines(2, 4, f)) {
        if (!is_line_in_schubert(fl, ln, f)) continue;
        auto pts = line_points(ln, f);
        ASSERT_EQ(pts.size(), 4u);
        // any three of the four points
        ParityCheck w = weight3_check(pts[0], pts[2], pts[3], c);
        EXPECT_TRUE(check_annihilates(w, c.gen.mat, f));
        break;
    }
}

TEST(DualDistance, IsThreeForTheseCodes) {
    Code s = Code::build({2, 2, 4, std::vector<int>{2, 4}});
    EXPECT_TRUE(dual_min_distance_is_three(s.gen, s.field));
    Code g = Code::build({2, 2, 4, std::nullopt});
    EXPECT_TRUE(dual_min_distance_is_three(g.gen, g.field));

    GeneratorMatrix id;
    id.mat = Matrix(2, 2);
    id.mat.at(0, 0) = 1;
    id.mat.at(1, 1) = 1;
    Field f2(2);
    EXPECT_FALSE(dual_min_distance_is_three(id, f2));
}

// Weight-3 dual supports are exactly the collinear triples inside the variety
// (both inclusions, by exhaustive triple scan).
TEST(DualSupports, MatchCollinearTriples) {
    Code c = Code::build({2, 2, 4, std::vector<int>{2, 4}});
    const Field& f = c.field;
    const auto& pts = c.points();
    std::set<std::vector<std::size_t>> dependent, collinear;
    std::vector<std::vector<Fe>> cols(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        cols[i].resize(c.k());
        for (std::size_t r = 0; r < c.k(); ++r)
            cols[i][r] = c.gen.mat.at(static_cast<int>(r), static_cast<int>(i));
    }
    std::size_t triples = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t t = j + 1; t < pts.size(); ++t) {
                ++triples;
                if (solve_dependence({cols[i], cols[j], cols[t]}, f))
                    dependent.insert({i, j, t});
                auto ln = line_through_two(pts[i], pts[j], f);
                if (ln) {
                    auto lp = line_points(*ln, f);
                    if (std::find(lp.begin(), lp.end(), pts[t]) != lp.end())
                        collinear.insert({i, j, t});
                }
            }
    EXPECT_EQ(triples, 969u);  // C(19,3)
    EXPECT_EQ(dependent, collinear);
    EXPECT_FALSE(dependent.empty());
}

TEST(BruteForce, GuardTriggers) {
    GeneratorMatrix gen;
    gen.mat = Matrix(30, 4);
    Field f2(2);
    EXPECT_THROW(min_distance_bruteforce(gen, f2), std::invalid_argument);
}

TEST(GeneratorFile, RoundTripsBitExactly) {
    for (auto alpha : {std::optional<std::vector<int>>{}, std::optional<std::vector<int>>{{2, 4}}}) {
        Code c = Code::build({2, 2, 4, alpha});
        GeneratorFile gf = generator_file_of(c);
        std::string text = generator_to_text(gf);
        GeneratorFile back = parse_generator_text(text);
        EXPECT_EQ(back.q, gf.q);
        EXPECT_EQ(back.m, gf.m);
        EXPECT_EQ(back.l, gf.l);
        EXPECT_EQ(back.alpha, gf.alpha);
        EXPECT_EQ(back.mat, gf.mat);
        EXPECT_EQ(generator_to_text(back), text);
    }
}

TEST(GeneratorFile, ParseErrorsCarryLineNumbers) {
    EXPECT_THROW(parse_generator_text(""), std::runtime_error);
    EXPECT_THROW(parse_generator_text("2 4 2\n"), std::runtime_error);
    try {
        parse_generator_text("2 4 2\n1 3\n0 0 7\n");
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(Encode, MatchesGeneratorRows) {
    Code c = Code::build({2, 2, 4, std::vector<int>{2, 4}});
    std::vector<Fe> msg(c.k(), 0);
    msg[2] = 1;
    EXPECT_EQ(c.encode(msg), c.gen.mat.row(2));
    EXPECT_THROW(c.encode({1, 0}), std::invalid_argument);
}
