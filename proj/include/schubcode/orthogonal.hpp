#pragma once

// Orthogonal parity-check families for Schubert codes with l = 2 and
// alpha = (a1, m), a1 >= 2.
//
// For a center point P the set J(P) stacks two tiers of dual codewords, all
// scaled to coefficient 1 at P and pairwise support-disjoint elsewhere:
//
//   * weight-3 checks: one per point pair on each line through P inside the
//     variety (the non-P points of a line are paired consecutively in
//     canonical order; the odd leftover point is dropped),
//   * weight-5 checks: sums w + s1*w1 + s2*w2 of a weight-3 base check with
//     anchors Q1, Q2 and weight-3 checks around Q1 and Q2 on "shell" lines,
//     scaled so Q1 and Q2 cancel.  The four surviving non-P points sit at
//     injection distance exactly 2 from P.
//
// Shell lines through an anchor are chosen level by level along a full flag
// through P so that distinct checks never meet outside P.  A line through Q
// qualifies at level i when every point besides Q leaves the radius-1 disc of
// every point on the lower-level base lines; concretely its core must differ
// from the base-line core and its hull must escape the level-i flag space
// (plus the variety constraint when P is not inside A_1).

#include <map>
#include <stdexcept>
#include <vector>

#include "code.hpp"

namespace schubcode {

/// A full flag through the center point driving the level decomposition:
/// chain[d] has dimension d (d = 2..m), chain[2] = P, chain[m] = V.  The axis
/// is the 1-dimensional core shared by all base lines.
struct CenteredFlag {
    Subspace center;
    bool center_in_a1 = false;
    int a1 = 0;
    Subspace a1_space;
    Subspace axis;
    std::vector<Subspace> chain;  // indexed by dimension; entries < 2 unused

    const Subspace& level(int dim) const { return chain[dim]; }
};

/// Deterministic flag through P per case.  Inside A_1 the chain climbs
/// through A_1 first (reaching it at dimension a1); otherwise the chain
/// absorbs A_1 one canonical direction at a time, reaching P + A_1 at
/// dimension a1 + 1.
inline CenteredFlag build_flag(const Subspace& p, const Flag& flag, const Field& f) {
    if (flag.l() != 2) throw std::invalid_argument("build_flag: requires l = 2");
    if (flag.alpha[1] != flag.m())
        throw std::invalid_argument("build_flag: requires alpha_2 = m");
    if (flag.alpha[0] < 2)
        throw std::invalid_argument("build_flag: requires alpha_1 >= 2");
    if (!schubert_contains(flag, p, f))
        throw std::invalid_argument("build_flag: center not in the Schubert variety");

    const Subspace& a1s = flag.spaces[0];
    int m = p.ambient;
    CenteredFlag cf;
    cf.center = p;
    cf.a1 = flag.alpha[0];
    cf.a1_space = a1s;
    cf.center_in_a1 = subspace_leq(p, a1s, f);
    cf.chain.assign(m + 1, Subspace{});
    cf.chain[2] = p;

    auto extend_by_first = [&](const Subspace& cur, const std::vector<std::vector<Fe>>& cands) {
        for (const auto& v : cands) {
            if (contains_vector(cur, v, f)) continue;
            Matrix b(cur.dim + 1, m);
            std::copy(cur.basis.a.begin(), cur.basis.a.end(), b.a.begin());
            std::copy(v.begin(), v.end(), b.a.begin() + static_cast<std::size_t>(cur.dim) * m);
            return subspace_from_rows(b, f);
        }
        throw std::logic_error("build_flag: no extension vector available");
    };
    std::vector<std::vector<Fe>> a1_rows, unit_rows;
    for (int i = 0; i < a1s.dim; ++i) a1_rows.push_back(a1s.basis.row(i));
    for (int i = 0; i < m; ++i) {
        std::vector<Fe> e(m, 0);
        e[i] = 1;
        unit_rows.push_back(std::move(e));
    }

    if (cf.center_in_a1) {
        cf.axis = span_of_vector(p.basis.row(0), f);
        for (int d = 3; d <= m; ++d)
            cf.chain[d] = extend_by_first(cf.chain[d - 1], d <= cf.a1 ? a1_rows : unit_rows);
        if (!(cf.chain[cf.a1] == a1s))
            throw std::logic_error("build_flag: chain missed A_1");
    } else {
        Subspace u0 = subspace_intersection(p, a1s, f);
        int off_row = contains_vector(a1s, p.basis.row(0), f) ? 1 : 0;
        cf.axis = span_of_vector(p.basis.row(off_row), f);
        // extension directions of A_1 beyond u0, in canonical basis order
        std::vector<std::vector<Fe>> ext;
        Subspace grown = u0;
        for (const auto& v : a1_rows) {
            if (contains_vector(grown, v, f)) continue;
            grown = extend_by_first(grown, {v});
            ext.push_back(v);
        }
        for (int d = 3; d <= std::min(cf.a1 + 1, m); ++d)
            cf.chain[d] = extend_by_first(cf.chain[d - 1], {ext[d - 3]});
        for (int d = cf.a1 + 2; d <= m; ++d)
            cf.chain[d] = extend_by_first(cf.chain[d - 1], unit_rows);
    }
    return cf;
}

/// Consecutive pairs of the non-center points of a line through the center,
/// in canonical point order; floor(q/2) pairs, odd leftover dropped.
inline std::vector<std::pair<Subspace, Subspace>> anchor_pairs_on_line(const Subspace& center,
                                                                       const Line& ln,
                                                                       const Field& f) {
    std::vector<Subspace> rest;
    for (const Subspace& t : line_points(ln, f))
        if (!(t == center)) rest.push_back(t);
    std::vector<std::pair<Subspace, Subspace>> pairs;
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2) pairs.emplace_back(rest[i], rest[i + 1]);
    return pairs;
}

inline ParityCheck normalize_at(ParityCheck w, std::size_t pos, const Field& f) {
    Fe c = w.coeff_at(pos);
    if (c == 0) throw std::logic_error("normalize_at: position not in support");
    Fe s = f.inv(c);
    for (auto& [p, v] : w.support) v = f.mul(v, s);
    return w;
}

/// The floor(q/2) weight-3 checks living on one line through the center,
/// scaled to coefficient 1 at the center.
inline std::vector<ParityCheck> paired_checks_on_line(const Subspace& center, const Line& ln,
                                                      const Code& code) {
    std::vector<ParityCheck> out;
    std::size_t center_pos = code.position_of(center);
    for (const auto& [a, b] : anchor_pairs_on_line(center, ln, code.field))
        out.push_back(normalize_at(weight3_check(center, a, b, code), center_pos, code.field));
    return out;
}

struct OrthogonalCheckSet {
    std::size_t center = 0;               // coordinate position of P
    std::vector<ParityCheck> weight3;     // supports inside the radius-1 disc
    std::vector<ParityCheck> weight5;     // supports reaching the radius-2 shell

    std::size_t size() const { return weight3.size() + weight5.size(); }

    std::vector<const ParityCheck*> all() const {
        std::vector<const ParityCheck*> v;
        for (const auto& w : weight3) v.push_back(&w);
        for (const auto& w : weight5) v.push_back(&w);
        return v;
    }
};

/// Tier-one set: one bundle of paired weight-3 checks per line through P
/// inside the variety.
inline OrthogonalCheckSet weight3_checks_at(const Subspace& p, const Code& code) {
    if (!code.schub) throw std::invalid_argument("weight3_checks_at: Schubert code required");
    OrthogonalCheckSet set;
    set.center = code.position_of(p);
    for (const Line& ln : lines_through_point_in_schubert(code.schub->flag, p, code.field))
        for (ParityCheck& w : paired_checks_on_line(p, ln, code)) set.weight3.push_back(std::move(w));
    return set;
}

/// Base lines of a level: hulls between the center and chain[level] that
/// escape chain[level-1], each paired with the axis core.
inline std::vector<Subspace> base_hulls_at_level(const CenteredFlag& cf, int level,
                                                 const Field& f) {
    std::vector<Subspace> out;
    for (const Subspace& h : superspaces_within(cf.center, cf.level(level), f))
        if (!subspace_leq(h, cf.level(level - 1), f)) out.push_back(h);
    return out;
}

/// Shell lines at a level for a center inside A_1: lines through the anchor
/// whose core differs from the axis and whose hull escapes chain[level].
/// Every point of every such line lies in the variety, and the line meets the
/// center's radius-1 disc exactly in the anchor.
inline std::vector<Line> shell_lines_central(const CenteredFlag& cf, int level,
                                             const Subspace& base_hull, const Subspace& anchor,
                                             const Field& f) {
    if (!cf.center_in_a1) throw std::invalid_argument("shell_lines_central: center outside A_1");
    if (level < 3 || level > cf.a1)
        throw std::invalid_argument("shell_lines_central: level out of range");
    if (!subspace_leq(base_hull, cf.level(level), f) ||
        subspace_leq(base_hull, cf.level(level - 1), f) ||
        !subspace_leq(cf.center, base_hull, f) || anchor == cf.center ||
        !subspace_leq(anchor, base_hull, f) || !subspace_leq(cf.axis, anchor, f))
        throw std::invalid_argument("shell_lines_central: invalid base line or anchor");
    std::vector<Line> out;
    for (const Subspace& u : subspaces_of(anchor, 1, f)) {
        if (u == cf.axis) continue;
        for (const Subspace& w : superspaces_of(anchor, f))
            if (!subspace_leq(w, cf.level(level), f)) out.push_back(Line{u, w});
    }
    return out;
}

/// Shell lines at a level for a center outside A_1.  Two sub-families keep
/// the lines inside the variety: core = anchor cap A_1 with any escaping
/// hull, or any other non-axis core with a hull inside chain[a1+1] = P + A_1.
inline std::vector<Line> shell_lines_offset(const CenteredFlag& cf, int level,
                                            const Subspace& base_hull, const Subspace& anchor,
                                            const Field& f) {
    if (cf.center_in_a1) throw std::invalid_argument("shell_lines_offset: center inside A_1");
    if (level < 3 || level > cf.a1 + 1)
        throw std::invalid_argument("shell_lines_offset: level out of range");
    if (!subspace_leq(base_hull, cf.level(level), f) ||
        subspace_leq(base_hull, cf.level(level - 1), f) ||
        !subspace_leq(cf.center, base_hull, f) || anchor == cf.center ||
        !subspace_leq(anchor, base_hull, f) || !subspace_leq(cf.axis, anchor, f))
        throw std::invalid_argument("shell_lines_offset: invalid base line or anchor");
    Subspace u0 = subspace_intersection(anchor, cf.a1_space, f);
    std::vector<Line> out;
    for (const Subspace& w : superspaces_of(anchor, f))
        if (!subspace_leq(w, cf.level(level), f)) out.push_back(Line{u0, w});
    for (const Subspace& u : subspaces_of(anchor, 1, f)) {
        if (u == u0 || u == cf.axis) continue;
        for (const Subspace& w : superspaces_within(anchor, cf.level(cf.a1 + 1), f))
            if (!subspace_leq(w, cf.level(level), f)) out.push_back(Line{u, w});
    }
    return out;
}

/// w + s1*w1 + s2*w2 with the scalings that cancel the two anchors; the
/// result has weight exactly 5 and coefficient 1 at the center.
inline ParityCheck combine_weight5(const ParityCheck& base, std::size_t center_pos,
                                   const Subspace& anchor1, const Line& shell1,
                                   const Subspace& anchor2, const Line& shell2,
                                   std::size_t pair_index, const Code& code) {
    const Field& f = code.field;
    ParityCheck w1 = paired_checks_on_line(anchor1, shell1, code).at(pair_index);
    ParityCheck w2 = paired_checks_on_line(anchor2, shell2, code).at(pair_index);
    std::size_t pos1 = code.position_of(anchor1), pos2 = code.position_of(anchor2);
    Fe s1 = f.neg(base.coeff_at(pos1));  // w1 is 1 at its anchor
    Fe s2 = f.neg(base.coeff_at(pos2));
    std::map<std::size_t, Fe> acc;
    for (const auto& [p, c] : base.support) acc[p] = f.add(acc[p], c);
    for (const auto& [p, c] : w1.support) acc[p] = f.add(acc[p], f.mul(s1, c));
    for (const auto& [p, c] : w2.support) acc[p] = f.add(acc[p], f.mul(s2, c));
    ParityCheck out;
    for (const auto& [p, c] : acc)
        if (c != 0) out.support.emplace_back(p, c);
    if (out.weight() != 5)
        throw std::logic_error("degenerate weight-5 combination");
    return normalize_at(std::move(out), center_pos, f);
}

namespace detail {

inline std::vector<ParityCheck> weight5_tier(const Subspace& p, const CenteredFlag& cf,
                                             const Code& code) {
    const Field& f = code.field;
    std::size_t center_pos = code.position_of(p);
    int top = cf.center_in_a1 ? cf.a1 : cf.a1 + 1;
    std::vector<ParityCheck> out;
    for (int level = 3; level <= top; ++level) {
        for (const Subspace& hull : base_hulls_at_level(cf, level, f)) {
            Line base_line{cf.axis, hull};
            for (const auto& [q1, q2] : anchor_pairs_on_line(p, base_line, f)) {
                ParityCheck base =
                    normalize_at(weight3_check(p, q1, q2, code), center_pos, f);
                auto fam1 = cf.center_in_a1 ? shell_lines_central(cf, level, hull, q1, f)
                                            : shell_lines_offset(cf, level, hull, q1, f);
                auto fam2 = cf.center_in_a1 ? shell_lines_central(cf, level, hull, q2, f)
                                            : shell_lines_offset(cf, level, hull, q2, f);
                if (fam1.size() != fam2.size())
                    throw std::logic_error("shell line families of unequal size");
                std::size_t pairs = f.q() / 2;
                for (std::size_t j = 0; j < fam1.size(); ++j)
                    for (std::size_t k = 0; k < pairs; ++k)
                        out.push_back(combine_weight5(base, center_pos, q1, fam1[j], q2,
                                                      fam2[j], k, code));
            }
        }
    }
    return out;
}

}  // namespace detail

/// Tier-two set for a center inside A_1 (levels 3..a1; empty when a1 = 2).
inline std::vector<ParityCheck> weight5_checks_central(const Subspace& p, const CenteredFlag& cf,
                                                       const Code& code) {
    if (!cf.center_in_a1)
        throw std::invalid_argument("weight5_checks_central: center outside A_1");
    return detail::weight5_tier(p, cf, code);
}

/// Tier-two set for a center outside A_1 (levels 3..a1+1).
inline std::vector<ParityCheck> weight5_checks_offset(const Subspace& p, const CenteredFlag& cf,
                                                      const Code& code) {
    if (cf.center_in_a1)
        throw std::invalid_argument("weight5_checks_offset: center inside A_1");
    return detail::weight5_tier(p, cf, code);
}

/// The full orthogonal set J(P): both tiers, coefficient 1 at P everywhere.
inline OrthogonalCheckSet orthogonal_checks_at(const Subspace& p, const Code& code) {
    OrthogonalCheckSet set = weight3_checks_at(p, code);
    CenteredFlag cf = build_flag(p, code.schub->flag, code.field);
    set.weight5 = detail::weight5_tier(p, cf, code);
    return set;
}

// --- count formulas ----------------------------------------------------------

namespace detail {

inline Big gb1(int j, std::uint32_t q) { return j >= 1 ? gaussian_binomial(j, 1, q) : Big(0); }

inline Big exact_div(const Big& num, const Big& den, const char* what) {
    if (den == 0 || num % den != 0) throw std::logic_error(std::string("inexact division in ") + what);
    return num / den;
}

}  // namespace detail

/// Expected |weight-3 tier| per case: floor(q/2) times the number of lines
/// through the center inside the variety.
inline Big weight3_count(std::uint32_t q, int m, int a1, bool center_in_a1) {
    using detail::gb1;
    Big lines = center_in_a1 ? gb1(2, q) * gb1(m - 2, q)
                             : Big(q) * gb1(a1 - 1, q) + gb1(m - 2, q);
    return Big(q / 2) * lines;
}

/// Per-level weight-5 count |I_level|.
inline Big weight5_level_count(std::uint32_t q, int m, int a1, int level, bool center_in_a1) {
    using detail::gb1;
    Big half2 = Big(q / 2) * (q / 2);
    Big base_lines = gb1(level - 2, q) - gb1(level - 3, q);
    if (center_in_a1) {
        if (level < 3 || level > a1) return 0;
        return half2 * base_lines * (gb1(2, q) - 1) * (gb1(m - 2, q) - gb1(level - 2, q));
    }
    if (level < 3 || level > a1 + 1) return 0;
    Big shell = (gb1(m - 2, q) - gb1(level - 2, q)) +
                Big(q - 1) * (gb1(a1 - 1, q) - gb1(level - 2, q));
    return half2 * base_lines * shell;
}

/// Expected |weight-5 tier|: the level sums.
inline Big weight5_count(std::uint32_t q, int m, int a1, bool center_in_a1) {
    Big total = 0;
    int top = center_in_a1 ? a1 : a1 + 1;
    for (int level = 3; level <= top; ++level)
        total += weight5_level_count(q, m, a1, level, center_in_a1);
    return total;
}

/// Corrected closed form of the central weight-5 count (equal to the level
/// sum; verified against constructions in the test suite).
inline Big weight5_closed_central(std::uint32_t q, int m, int a1) {
    using detail::exact_div;
    using detail::gb1;
    Big half2 = Big(q / 2) * (q / 2);
    Big inner = big_pow(q, m - 2) * (gb1(a1 - 1, q) - 1) -
                exact_div(big_pow(q, 2 * a1 - 2) - big_pow(q, 2), Big(q) * q - 1,
                          "weight5_closed_central");
    return exact_div(half2 * inner, Big(q) - 1, "weight5_closed_central");
}

/// The guaranteed orthogonal-set size J of the decoder (the smaller,
/// outside-A_1 case): weight-5 closed form plus the weight-3 line count.
inline Big orthogonal_count_bound(std::uint32_t q, int m, int a1) {
    using detail::exact_div;
    using detail::gb1;
    if (a1 < 2 || a1 > m - 1)
        throw std::invalid_argument("orthogonal_count_bound: requires 2 <= alpha_1 <= m-1");
    Big half = q / 2;
    Big b = gb1(a1 - 1, q);
    Big a = big_pow(q, m - 2) + (Big(q) - 1) * big_pow(q, a1 - 1);
    Big c = exact_div(Big(q) * q * (big_pow(q, 2 * a1 - 2) - 1), Big(q) * q - 1,
                      "orthogonal_count_bound");
    Big tier2 = exact_div(half * half * (a * b - c), Big(q) - 1, "orthogonal_count_bound");
    return tier2 + half * (Big(q) * b + gb1(m - 2, q));
}

using BigRational = boost::multiprecision::cpp_rational;

/// Closed forms as printed in the source theorems' statements.  They disagree
/// with the level sums (and with the constructions); verification reports the
/// discrepancy as a warning, never a failure.
inline BigRational weight5_closed_central_printed(std::uint32_t q, int m, int a1) {
    using detail::gb1;
    BigRational half2 = BigRational(q / 2) * (q / 2);
    BigRational inner = BigRational(big_pow(q, m - 2) * gb1(a1 - 1, q)) -
                        BigRational(big_pow(q, 2 * a1 - 2) - 1, Big(q) * q - 1);
    return half2 * inner / (BigRational(q) - 1);
}

inline BigRational weight5_closed_offset_printed(std::uint32_t q, int m, int a1) {
    using detail::gb1;
    BigRational half2 = BigRational(q / 2) * (q / 2);
    BigRational first =
        BigRational((big_pow(q, m - 2) + big_pow(q, a1 - 1)) * gb1(a1 - 1, q));
    BigRational second =
        BigRational(Big(q) * q) * BigRational(big_pow(q, 2 * a1 - 4) - 1, Big(q) * q - 1);
    return half2 * (first - second);
}

// --- check-set file format ---------------------------------------------------
//
//   header:  q m l alpha1 alpha2 centercount
//   per center:  "P <pos> <count>"  then one line per check:
//       "w <pos1>:<coef1> ... <posw>:<coefw>"
//   with the center's entry first (coefficient 1) and the remaining positions
//   ascending.  Positions are 0-based coordinate indices.

struct CheckSetFile {
    std::uint32_t q = 0;
    int m = 0, l = 0;
    std::vector<int> alpha;
    std::vector<OrthogonalCheckSet> sets;
};

inline std::string check_sets_to_text(const CheckSetFile& cs) {
    std::ostringstream os;
    os << cs.q << ' ' << cs.m << ' ' << cs.l;
    for (int a : cs.alpha) os << ' ' << a;
    os << ' ' << cs.sets.size() << '\n';
    for (const auto& set : cs.sets) {
        os << "P " << set.center << ' ' << set.size() << '\n';
        auto emit = [&](const ParityCheck& w) {
            os << w.weight();
            os << ' ' << set.center << ':' << w.coeff_at(set.center);
            for (const auto& [p, c] : w.support)
                if (p != set.center) os << ' ' << p << ':' << c;
            os << '\n';
        };
        for (const auto& w : set.weight3) emit(w);
        for (const auto& w : set.weight5) emit(w);
    }
    return os.str();
}

inline CheckSetFile parse_check_sets_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("check-set file: " + msg + " (line " + std::to_string(lineno) +
                                 ")");
    };
    CheckSetFile cs;
    ++lineno;
    if (!std::getline(is, line)) fail("missing header");
    {
        std::istringstream h(line);
        std::size_t centers = 0;
        if (!(h >> cs.q >> cs.m >> cs.l)) fail("bad header");
        cs.alpha.resize(cs.l);
        for (int i = 0; i < cs.l; ++i)
            if (!(h >> cs.alpha[i])) fail("bad alpha in header");
        if (!(h >> centers)) fail("bad center count in header");
        cs.sets.resize(centers);
    }
    for (auto& set : cs.sets) {
        ++lineno;
        if (!std::getline(is, line)) fail("missing center line");
        std::istringstream c(line);
        std::string tag;
        std::size_t count = 0;
        if (!(c >> tag >> set.center >> count) || tag != "P") fail("bad center line");
        for (std::size_t i = 0; i < count; ++i) {
            ++lineno;
            if (!std::getline(is, line)) fail("missing check line");
            std::istringstream w(line);
            std::size_t weight = 0;
            if (!(w >> weight) || weight == 0) fail("bad check weight");
            ParityCheck pc;
            for (std::size_t j = 0; j < weight; ++j) {
                std::string pair;
                if (!(w >> pair)) fail("missing support entry");
                auto colon = pair.find(':');
                if (colon == std::string::npos) fail("bad support entry");
                std::size_t pos = std::stoull(pair.substr(0, colon));
                unsigned long coef = std::stoul(pair.substr(colon + 1));
                if (coef == 0 || coef >= cs.q) fail("bad coefficient");
                pc.support.emplace_back(pos, static_cast<Fe>(coef));
            }
            if (pc.support.empty() || pc.support.front().first != set.center ||
                pc.support.front().second != 1)
                fail("check must start with the center at coefficient 1");
            std::sort(pc.support.begin(), pc.support.end());
            (pc.weight() == 3 ? set.weight3 : set.weight5).push_back(std::move(pc));
        }
    }
    return cs;
}

}  // namespace schubcode
