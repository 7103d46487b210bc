#pragma once

// Grassmann and Schubert codes as explicit generator matrices.
//
// Columns are the raw minor vectors of the canonical point bases (one column
// per point, in index order).  For a Schubert code the Grassmann rows are
// punctured to the variety's columns and can become dependent; the generator
// keeps the lexicographically first maximal independent subset of minor rows,
// which preserves the row space and the row labels.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert.hpp"

namespace schubcode {

struct CodeSpec {
    std::uint32_t q = 2;
    int l = 2, m = 4;
    std::optional<std::vector<int>> alpha;  // absent: full Grassmann code
};

struct GeneratorMatrix {
    Matrix mat;                         // k x n, full row rank
    std::vector<IndexTuple> row_labels; // minor labels of the retained rows
};

/// Sparse dual codeword: (coordinate position, nonzero coefficient) pairs with
/// strictly increasing positions.
struct ParityCheck {
    std::vector<std::pair<std::size_t, Fe>> support;

    std::size_t weight() const { return support.size(); }

    Fe coeff_at(std::size_t pos) const {
        for (const auto& [p, c] : support)
            if (p == pos) return c;
        return 0;
    }

    bool operator==(const ParityCheck&) const = default;
};

inline bool check_annihilates(const ParityCheck& w, const Matrix& gen, const Field& f) {
    for (int r = 0; r < gen.rows; ++r) {
        Fe acc = 0;
        for (const auto& [pos, c] : w.support)
            acc = f.add(acc, f.mul(c, gen.at(r, static_cast<int>(pos))));
        if (acc != 0) return false;
    }
    return true;
}

/// Generator of the Grassmann code: one row per minor label, one column per
/// Grassmannian point.  All C(m, l) rows are independent.
inline GeneratorMatrix grassmann_generator(const GrassmannIndex& g, const Field& f) {
    auto labels = index_tuples(g.l, g.m);
    GeneratorMatrix gen;
    gen.row_labels = labels;
    gen.mat = Matrix(static_cast<int>(labels.size()), static_cast<int>(g.points.size()));
    for (std::size_t c = 0; c < g.points.size(); ++c) {
        auto col = plucker_raw(g.points[c], f);
        for (std::size_t r = 0; r < labels.size(); ++r)
            gen.mat.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
    }
    if (rref(gen.mat, f).rank != gen.mat.rows)
        throw std::logic_error("grassmann_generator: rank defect");
    return gen;
}

/// Generator of the Schubert code: Grassmann rows punctured to the variety's
/// columns, reduced to a maximal independent row subset.
inline GeneratorMatrix schubert_generator(const SchubertIndex& si, const Field& f) {
    if (is_trivial_alpha(si.flag.alpha))
        throw std::invalid_argument("trivial Schubert code");
    int l = si.flag.l();
    int m = si.flag.m();
    auto labels = index_tuples(l, m);
    Matrix full(static_cast<int>(labels.size()), static_cast<int>(si.points.size()));
    for (std::size_t c = 0; c < si.points.size(); ++c) {
        auto col = plucker_raw(si.points[c], f);
        for (std::size_t r = 0; r < labels.size(); ++r)
            full.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
    }
    // greedy independent row selection in label order
    GeneratorMatrix gen;
    Matrix acc(0, full.cols);
    for (std::size_t r = 0; r < labels.size(); ++r) {
        Matrix trial(acc.rows + 1, full.cols);
        trial.a = acc.a;
        trial.a.insert(trial.a.end(), full.a.begin() + r * full.cols,
                       full.a.begin() + (r + 1) * full.cols);
        if (rref(trial, f).rank == trial.rows) {
            acc = std::move(trial);
            gen.row_labels.push_back(labels[r]);
        }
    }
    gen.mat = std::move(acc);
    return gen;
}

/// A constructed code: the point index, the generator, and position lookup.
class Code {
public:
    CodeSpec spec;
    Field field;
    GrassmannIndex grass;
    std::optional<SchubertIndex> schub;
    GeneratorMatrix gen;

    static Code build(const CodeSpec& spec) {
        Field f(spec.q);
        Code c{spec, f, GrassmannIndex::build(spec.l, spec.m, f), std::nullopt, {}};
        if (spec.alpha) {
            if (is_trivial_alpha(*spec.alpha))
                throw std::invalid_argument("trivial Schubert code");
            Flag fl = standard_flag(*spec.alpha, spec.m, f);
            c.schub = SchubertIndex::build(fl, c.grass, f);
            c.gen = schubert_generator(*c.schub, f);
        } else {
            c.gen = grassmann_generator(c.grass, f);
        }
        return c;
    }

    std::size_t n() const { return static_cast<std::size_t>(gen.mat.cols); }
    std::size_t k() const { return static_cast<std::size_t>(gen.mat.rows); }

    const std::vector<Subspace>& points() const {
        return schub ? schub->points : grass.points;
    }

    std::size_t position_of(const Subspace& p) const {
        return schub ? schub->position_of(p, field) : grass.position_of(p, field);
    }

    std::vector<Fe> encode(const std::vector<Fe>& msg) const {
        if (msg.size() != k()) throw std::invalid_argument("encode: message length mismatch");
        std::vector<Fe> word(n(), 0);
        for (std::size_t r = 0; r < k(); ++r) {
            if (msg[r] == 0) continue;
            for (std::size_t c = 0; c < n(); ++c)
                word[c] = field.add(word[c],
                                    field.mul(msg[r], gen.mat.at(static_cast<int>(r),
                                                                 static_cast<int>(c))));
        }
        return word;
    }
};

/// The weight-3 dual codeword supported on a collinear point triple: the
/// unique (up to scale) dependence of the three Pluecker columns.
inline ParityCheck weight3_check(const Subspace& p, const Subspace& q, const Subspace& r,
                                 const Code& code) {
    const Field& f = code.field;
    auto ln = line_through_two(p, q, f);
    if (!ln || p == q || q == r || p == r)
        throw std::invalid_argument("points not collinear");
    auto pts = line_points(*ln, f);
    if (std::find(pts.begin(), pts.end(), r) == pts.end())
        throw std::invalid_argument("points not collinear");
    auto dep = solve_dependence({plucker_raw(p, f), plucker_raw(q, f), plucker_raw(r, f)}, f);
    if (!dep || (*dep)[0] == 0 || (*dep)[1] == 0 || (*dep)[2] == 0)
        throw std::logic_error("weight3_check: degenerate column dependence");
    std::vector<std::pair<std::size_t, Fe>> sup = {{code.position_of(p), (*dep)[0]},
                                                   {code.position_of(q), (*dep)[1]},
                                                   {code.position_of(r), (*dep)[2]}};
    std::sort(sup.begin(), sup.end());
    ParityCheck w{std::move(sup)};
    if (!check_annihilates(w, code.gen.mat, f))
        throw std::logic_error("weight3_check: does not annihilate the generator");
    return w;
}

/// Minimum Hamming weight over all nonzero codewords, by exhaustive message
/// enumeration.  Guarded: refuses q^k > 2^24.
inline long min_distance_bruteforce(const GeneratorMatrix& gen, const Field& f) {
    int k = gen.mat.rows, n = gen.mat.cols;
    double size = 1;
    for (int i = 0; i < k; ++i) size *= f.q();
    if (size > double(1 << 24))
        throw std::invalid_argument("min_distance_bruteforce: q^k exceeds 2^24 guard");
    long best = n + 1;
    std::vector<Fe> word(n, 0);
    // depth-first over message digits, adding one row multiple per level
    auto rec = [&](auto&& self, int row, bool nonzero) -> void {
        if (row == k) {
            if (!nonzero) return;
            long w = 0;
            for (Fe x : word)
                if (x != 0) ++w;
            best = std::min(best, w);
            return;
        }
        self(self, row + 1, nonzero);  // digit 0
        std::vector<Fe> saved = word;
        for (Fe d = 1; d < f.q(); ++d) {
            for (int c = 0; c < n; ++c)
                word[c] = f.add(saved[c], f.mul(d, gen.mat.at(row, c)));
            self(self, row + 1, true);
        }
        word = std::move(saved);
    };
    rec(rec, 0, false);
    return best;
}

/// True iff the dual code has minimum distance exactly three: no zero column,
/// no proportional column pair, and some dependent column triple.
inline bool dual_min_distance_is_three(const GeneratorMatrix& gen, const Field& f) {
    int k = gen.mat.rows, n = gen.mat.cols;
    std::vector<std::vector<Fe>> cols(n, std::vector<Fe>(k));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < k; ++r) cols[c][r] = gen.mat.at(r, c);
    std::vector<std::vector<Fe>> normed(n);
    for (int c = 0; c < n; ++c) {
        auto v = cols[c];
        Fe lead = 0;
        for (Fe x : v)
            if (x != 0) { lead = x; break; }
        if (lead == 0) return false;  // zero column: weight-1 dual word
        Fe s = f.inv(lead);
        for (Fe& x : v) x = f.mul(x, s);
        normed[c] = std::move(v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (normed[i] == normed[j]) return false;  // weight-2 dual word
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int t = j + 1; t < n; ++t)
                if (solve_dependence({cols[i], cols[j], cols[t]}, f)) return true;
    return false;
}

// --- generator matrix file format -------------------------------------------
//
//   line 1:  q m l [alpha_1 ... alpha_l]
//   line 2:  k n
//   then k lines of n space-separated field element indices.
//
// Coordinate order is the canonical point order; files round-trip bit-exactly.

struct GeneratorFile {
    std::uint32_t q = 0;
    int m = 0, l = 0;
    std::optional<std::vector<int>> alpha;
    Matrix mat;
};

inline std::string generator_to_text(const GeneratorFile& gf) {
    std::ostringstream os;
    os << gf.q << ' ' << gf.m << ' ' << gf.l;
    if (gf.alpha)
        for (int a : *gf.alpha) os << ' ' << a;
    os << '\n' << gf.mat.rows << ' ' << gf.mat.cols << '\n';
    for (int r = 0; r < gf.mat.rows; ++r) {
        for (int c = 0; c < gf.mat.cols; ++c) {
            if (c) os << ' ';
            os << gf.mat.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

inline GeneratorFile generator_file_of(const Code& code) {
    return GeneratorFile{code.spec.q, code.spec.m, code.spec.l, code.spec.alpha, code.gen.mat};
}

inline GeneratorFile parse_generator_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("generator file: missing header (line 1)");
    std::istringstream h(line);
    GeneratorFile gf;
    if (!(h >> gf.q >> gf.m >> gf.l)) throw std::runtime_error("generator file: bad header (line 1)");
    std::vector<int> alpha;
    int a;
    while (h >> a) alpha.push_back(a);
    if (!alpha.empty()) {
        if (static_cast<int>(alpha.size()) != gf.l)
            throw std::runtime_error("generator file: alpha length mismatch (line 1)");
        gf.alpha = alpha;
    }
    if (!std::getline(is, line)) throw std::runtime_error("generator file: missing sizes (line 2)");
    std::istringstream s(line);
    int k = 0, n = 0;
    if (!(s >> k >> n) || k < 0 || n <= 0)
        throw std::runtime_error("generator file: bad sizes (line 2)");
    gf.mat = Matrix(k, n);
    for (int r = 0; r < k; ++r) {
        if (!std::getline(is, line))
            throw std::runtime_error("generator file: missing row (line " + std::to_string(3 + r) + ")");
        std::istringstream rs(line);
        for (int c = 0; c < n; ++c) {
            long long v;
            if (!(rs >> v) || v < 0 || v >= static_cast<long long>(gf.q))
                throw std::runtime_error("generator file: bad entry (line " + std::to_string(3 + r) + ")");
            gf.mat.at(r, c) = static_cast<Fe>(v);
        }
    }
    return gf;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace schubcode
