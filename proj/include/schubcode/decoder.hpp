#pragma once

// One-step majority-logic decoding driven by per-coordinate orthogonal check
// sets.  Each check is scaled to coefficient 1 at its center, so its syndrome
// equals the center's error value plus a contribution from at most one other
// erroneous coordinate.  A nonzero estimate needs a strict majority
// (floor(J/2) + 1 of the J votes); with at most floor(J/2) errors in the
// received word that threshold is reachable only by the true error value.

#include <map>
#include <stdexcept>
#include <vector>

#include "orthogonal.hpp"

namespace schubcode {

struct DecoderTable {
    Field field;
    Matrix gen;                               // k x n generator
    std::vector<OrthogonalCheckSet> sets;     // sets[i] centered at coordinate i
    std::vector<std::vector<Fe>> dual_basis;  // kernel of gen, for membership
    std::size_t j_min = 0;                    // smallest set size over coordinates
    std::size_t t_max = 0;                    // guaranteed correction radius floor(j_min/2)

    std::size_t n() const { return static_cast<std::size_t>(gen.cols); }

    /// Build the table for a Schubert code: one orthogonal set per coordinate.
    static DecoderTable build(const Code& code) {
        std::vector<OrthogonalCheckSet> sets;
        sets.reserve(code.n());
        for (const Subspace& p : code.points()) sets.push_back(orthogonal_checks_at(p, code));
        return assemble(code.gen.mat, code.field, std::move(sets));
    }

    /// Assemble from parts (e.g. files); validates coverage and annihilation.
    static DecoderTable assemble(Matrix gen, const Field& field,
                                 std::vector<OrthogonalCheckSet> sets) {
        if (sets.size() != static_cast<std::size_t>(gen.cols))
            throw std::invalid_argument("decoder table: need one check set per coordinate");
        std::sort(sets.begin(), sets.end(),
                  [](const auto& a, const auto& b) { return a.center < b.center; });
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (sets[i].center != i)
                throw std::invalid_argument("decoder table: check sets do not cover coordinates");
            for (const ParityCheck* w : sets[i].all()) {
                if (w->coeff_at(i) != 1)
                    throw std::invalid_argument("decoder table: check not normalized at center");
                if (!check_annihilates(*w, gen, field))
                    throw std::invalid_argument("decoder table: check does not annihilate generator");
            }
        }
        DecoderTable t{field, std::move(gen), std::move(sets), {}, 0, 0};
        t.dual_basis = kernel_basis(t.gen, field);
        t.j_min = t.sets.empty() ? 0 : t.sets.front().size();
        for (const auto& s : t.sets) t.j_min = std::min(t.j_min, s.size());
        t.t_max = t.j_min / 2;
        return t;
    }
};

/// Majority vote at one coordinate: the nonzero syndrome value reaching a
/// strict majority of the set's checks, otherwise 0.
inline Fe estimate_error_at(std::size_t pos, const std::vector<Fe>& received,
                            const OrthogonalCheckSet& set, const Field& f,
                            std::map<Fe, int>* tally_out = nullptr) {
    if (set.center != pos)
        throw std::invalid_argument("estimate_error_at: set not centered at position");
    std::map<Fe, int> tally;
    for (const ParityCheck* w : set.all()) {
        Fe s = 0;
        for (const auto& [p, c] : w->support) s = f.add(s, f.mul(c, received[p]));
        ++tally[s];
    }
    Fe value = 0;
    int threshold = static_cast<int>(set.size() / 2) + 1;
    for (const auto& [v, count] : tally)
        if (v != 0 && count >= threshold) value = v;
    if (tally_out) *tally_out = std::move(tally);
    return value;
}

struct DecodeResult {
    std::vector<Fe> corrected;
    std::vector<Fe> estimate;
    std::vector<std::map<Fe, int>> tallies;  // per-coordinate vote tallies
    bool success = false;                    // corrected word is in the code
};

inline DecodeResult decode(const std::vector<Fe>& received, const DecoderTable& table) {
    if (received.size() != table.n())
        throw std::invalid_argument("decode: received word length mismatch");
    const Field& f = table.field;
    DecodeResult res;
    res.estimate.resize(table.n());
    res.tallies.resize(table.n());
    for (std::size_t i = 0; i < table.n(); ++i)
        res.estimate[i] = estimate_error_at(i, received, table.sets[i], f, &res.tallies[i]);
    res.corrected.resize(table.n());
    for (std::size_t i = 0; i < table.n(); ++i)
        res.corrected[i] = f.sub(received[i], res.estimate[i]);
    res.success = true;
    for (const auto& h : table.dual_basis) {
        Fe s = 0;
        for (std::size_t c = 0; c < table.n(); ++c)
            s = f.add(s, f.mul(h[c], res.corrected[c]));
        if (s != 0) {
            res.success = false;
            break;
        }
    }
    return res;
}

// --- word file format: one word per line, space-separated element indices ---

inline std::string words_to_text(const std::vector<std::vector<Fe>>& words) {
    std::ostringstream os;
    for (const auto& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ' ';
            os << w[i];
        }
        os << '\n';
    }
    return os.str();
}

inline std::vector<std::vector<Fe>> parse_words_text(const std::string& text, std::size_t n,
                                                     std::uint32_t q) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<Fe>> words;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<Fe> w;
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= static_cast<long long>(q))
                throw std::runtime_error("word file: element out of range (line " +
                                         std::to_string(lineno) + ")");
            w.push_back(static_cast<Fe>(v));
        }
        if (w.size() != n)
            throw std::runtime_error("word file: expected " + std::to_string(n) +
                                     " entries (line " + std::to_string(lineno) + ")");
        words.push_back(std::move(w));
    }
    return words;
}

}  // namespace schubcode
