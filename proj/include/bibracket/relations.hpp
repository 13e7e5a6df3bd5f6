#ifndef BIBRACKET_RELATIONS_HPP
#define BIBRACKET_RELATIONS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bibracket/linalg.hpp"
#include "bibracket/products.hpp"

namespace bibracket {

enum class Family { shuffle, stuffle, plain, bi };

inline Family parse_family(const std::string& s) {
    if (s == "sh") return Family::shuffle;
    if (s == "ast") return Family::stuffle;
    if (s == "plain") return Family::plain;
    if (s == "bi") return Family::bi;
    throw std::invalid_argument("unknown family: " + s);
}

// z-words of given weight with s_1 > 1, lexicographic in the index sequence.
inline std::vector<ZWord> admissible_zwords(int k) {
    std::vector<ZWord> out;
    if (k < 2) return out;
    ZWord cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) { out.push_back(cur); return; }
        int lo = cur.empty() ? 2 : 1;
        for (int s = lo; s <= rest; ++s) {
            cur.push_back(s);
            self(self, rest - s);
            cur.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

// all z-words of weight k (s_j >= min_s)
inline std::vector<ZWord> zwords_of_weight(int k, int min_s = 1) {
    std::vector<ZWord> out;
    ZWord cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        for (int s = min_s; s <= rest; ++s) {
            cur.push_back(s);
            self(self, rest - s);
            cur.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

// bi-words of total weight k with s_1 > 1 or l == 0, bounded lower weight
inline std::vector<BiWord> biwords_of_weight(int k, int max_lower) {
    std::vector<BiWord> out;
    BiWord cur;
    auto rec = [&](auto&& self, int rest, int lower_left) -> void {
        if (rest == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        for (int s = cur.empty() ? 2 : 1; s <= rest; ++s)
            for (int r = 0; r <= std::min(rest - s, lower_left); ++r) {
                cur.push_back({s, r});
                self(self, rest - s - r, lower_left - r);
                cur.pop_back();
            }
    };
    rec(rec, k, max_lower);
    return out;
}

struct Generator {
    std::string label;
    BiLinComb comb;
};

// All generators of the family with total weight exactly k; weight 0 is the
// constant 1 for every family.
inline std::vector<Generator> generators_of_weight(Family fam, int k, int max_lower = 2) {
    std::vector<Generator> out;
    if (k == 0) {
        out.push_back({"1", BiLinComb::unit()});
        return out;
    }
    if (fam == Family::bi) {
        for (const auto& w : biwords_of_weight(k, max_lower))
            out.push_back({print_word(w), BiLinComb(w)});
        return out;
    }
    for (const auto& s : admissible_zwords(k)) {
        BiWord w = from_zword(s);
        switch (fam) {
            case Family::shuffle: out.push_back({print_word(w) + "^sh", shuffle_bracket(s)}); break;
            case Family::stuffle: out.push_back({print_word(w) + "^*", stuffle_bracket(s)}); break;
            default: out.push_back({print_word(w), BiLinComb(w)}); break;
        }
    }
    return out;
}

namespace detail {

inline std::vector<Rational> series_row(Evaluator& ev, const BiLinComb& c) {
    QSeries s = ev.lincomb(c);
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(s.precision()) + 1);
    for (int n = 0; n <= s.precision(); ++n) row.push_back(s.coeff(n));
    return row;
}

} // namespace detail

// Rank of the series-coefficient matrix of all family generators of weight
// <= k, at precision N. Lower bound for the dimension of the filtered space.
inline int filtered_rank(Family fam, int k, Evaluator& ev) {
    CoeffMatrix M;
    for (int w = 0; w <= k; ++w)
        for (const auto& g : generators_of_weight(fam, w))
            M.add_row(g.label, detail::series_row(ev, g.comb));
    return rank_kernel(M).rank;
}

struct GradedDim {
    int k = 0;
    int dim = 0;    // rank(<=k) - rank(<=k-1) at precision N
    int precision = 0;
    bool stable = false; // unchanged when recomputed at N+16
};

// Graded dimension lower bound with the N / N+16 stabilization protocol.
inline GradedDim graded_dim(Family fam, int k, int N) {
    if (N < 4 * k)
        throw std::invalid_argument("precision too small: need N >= 4k (got N=" +
                                    std::to_string(N) + ", k=" + std::to_string(k) + ")");
    GradedDim out;
    out.k = k;
    out.precision = N;
    Evaluator ev(N), ev2(N + 16);
    int d1 = filtered_rank(fam, k, ev) - (k > 0 ? filtered_rank(fam, k - 1, ev) : 0);
    int d2 = filtered_rank(fam, k, ev2) - (k > 0 ? filtered_rank(fam, k - 1, ev2) : 0);
    out.dim = d2; // the higher precision can only be sharper
    out.stable = (d1 == d2);
    return out;
}

// One pass over k = 0..kmax sharing the evaluator caches.
inline std::vector<GradedDim> dims_table(Family fam, int kmax, int N) {
    if (N < 4 * kmax)
        throw std::invalid_argument("precision too small: need N >= 4*max-weight (got N=" +
                                    std::to_string(N) + ", k=" + std::to_string(kmax) + ")");
    Evaluator ev(N), ev2(N + 16);
    std::vector<GradedDim> out;
    int prev1 = 0, prev2 = 0;
    for (int k = 0; k <= kmax; ++k) {
        int r1 = filtered_rank(fam, k, ev);
        int r2 = filtered_rank(fam, k, ev2);
        GradedDim g;
        g.k = k;
        g.precision = N;
        g.dim = r2 - prev2;
        g.stable = (r1 - prev1 == r2 - prev2);
        out.push_back(g);
        prev1 = r1;
        prev2 = r2;
    }
    return out;
}

// ------------------------------------------------------------------
// double-shuffle relation counts (word level, exact)

enum class DsVariant { eds, fds, rds };

inline DsVariant parse_ds_variant(const std::string& s) {
    if (s == "eds") return DsVariant::eds;
    if (s == "fds") return DsVariant::fds;
    if (s == "rds") return DsVariant::rds;
    throw std::invalid_argument("unknown ds variant: " + s);
}

// dim of < ds(u,v) : |u|+|v| = k > with u,v in the variant's word ranges
// (admissible means s_1 >= 2). reversed=true runs the fully mirrored
// convention: words admissible at the other end, shuffled in the mirrored
// letter encoding. The span dimension is the same either way, which the
// tests assert on small weights.
inline int ds_counts(int k, DsVariant variant, bool reversed = false) {
    if (k < 1) throw std::invalid_argument("ds_counts needs k >= 1");
    auto range_u = [&](int w) {
        if (variant == DsVariant::rds) return zwords_of_weight(w, 2);
        if (!reversed) return admissible_zwords(w);
        std::vector<ZWord> out; // mirrored admissibility: last letter >= 2
        for (const auto& z : zwords_of_weight(w, 1))
            if (z.back() >= 2) out.push_back(z);
        return out;
    };
    auto range_v = [&](int w) {
        std::vector<ZWord> out = range_u(w);
        if (variant == DsVariant::eds && w == 1) out.push_back(ZWord{1}); // y
        return out;
    };
    std::map<ZWord, size_t> col;
    std::vector<std::vector<Rational>> rows;
    auto add = [&](const ZLinComb& rel) {
        std::vector<Rational> row;
        for (const auto& [w, c] : rel.terms()) {
            auto [it, fresh] = col.try_emplace(w, col.size());
            if (it->second >= row.size()) row.resize(it->second + 1);
            row[it->second] = c;
        }
        if (!row.empty()) rows.push_back(std::move(row));
    };
    for (int wu = 1; wu < k; ++wu)
        for (const auto& u : range_u(wu))
            for (const auto& v : range_v(k - wu))
                add(reversed ? ds_reversed(u, v) : ds(u, v));
    CoeffMatrix M;
    size_t C = col.size();
    for (auto& r : rows) {
        r.resize(C);
        M.add_row("", std::move(r));
    }
    return rank_kernel(M).rank;
}

// ------------------------------------------------------------------
// integer sequences

// d'_0..d'_4 = 1,0,1,2,3 then d'_k = 2 d'_{k-2} + 2 d'_{k-3}
inline std::vector<long> dprime_sequence(int kmax) {
    std::vector<long> d{1, 0, 1, 2, 3};
    for (int k = 5; k <= kmax; ++k)
        d.push_back(2 * d[static_cast<size_t>(k) - 2] + 2 * d[static_cast<size_t>(k) - 3]);
    d.resize(static_cast<size_t>(kmax) + 1);
    return d;
}

// coefficients of 1/(1-X^2-X^3): d_k = d_{k-2} + d_{k-3}
inline std::vector<long> d_sequence(int kmax) {
    std::vector<long> d{1, 0, 1, 1};
    for (int k = 4; k <= kmax; ++k)
        d.push_back(d[static_cast<size_t>(k) - 2] + d[static_cast<size_t>(k) - 3]);
    d.resize(static_cast<size_t>(kmax) + 1);
    return d;
}

// number of admissible words of weight k: 2^{k-2} for k > 1
inline long gen_count(int k) {
    if (k <= 1) return 0;
    return 1L << (k - 2);
}

// ------------------------------------------------------------------
// relation discovery with built-in self-audit

struct RelationReport {
    int weight = 0;
    int precision = 0;
    std::vector<std::string> labels;
    int rank = 0;
    std::vector<std::vector<Rational>> kernel;
    bool audited = false; // every kernel vector re-evaluates to the 0 series
    bool stable = false;  // kernel dimension unchanged at N+16
};

// Kernel of the evaluation map on plain brackets of weight <= k (the
// filtered space: exact relations between brackets mix weights).
inline RelationReport find_relations(int k, int N) {
    RelationReport rep;
    rep.weight = k;
    rep.precision = N;
    std::vector<Generator> gens;
    for (int w = 0; w <= k; ++w)
        for (const auto& g : generators_of_weight(Family::plain, w)) gens.push_back(g);
    Evaluator ev(N), ev2(N + 16);
    CoeffMatrix M, M2;
    for (const auto& g : gens) {
        rep.labels.push_back(g.label);
        M.add_row(g.label, detail::series_row(ev, g.comb));
        M2.add_row(g.label, detail::series_row(ev2, g.comb));
    }
    RankKernel rk = rank_kernel(M), rk2 = rank_kernel(M2);
    rep.rank = rk.rank;
    rep.kernel = rk.kernel;
    rep.stable = (rk.kernel.size() == rk2.kernel.size());
    rep.audited = true;
    for (const auto& v : rep.kernel) {
        BiLinComb c;
        for (size_t i = 0; i < gens.size(); ++i)
            if (v[i] != 0) c += v[i] * gens[i].comb;
        if (!ev2.lincomb(c).is_zero()) rep.audited = false;
    }
    return rep;
}

struct Expressed {
    bool independent = true;
    std::vector<std::pair<std::string, Rational>> combination;
};

// Write a target bi-bracket combination in terms of the given generators,
// checked against the series at precision N (and re-verified at N+16).
inline Expressed express_in_basis(const BiLinComb& target, const std::vector<Generator>& gens,
                                  int N) {
    Evaluator ev(N + 16);
    CoeffMatrix M;
    for (const auto& g : gens) M.add_row(g.label, detail::series_row(ev, g.comb));
    ExpressResult res = express_in_rows(M, detail::series_row(ev, target));
    Expressed out;
    if (res.independent) return out;
    out.independent = false;
    for (size_t i = 0; i < gens.size(); ++i)
        if (res.coeffs[i] != 0) out.combination.push_back({gens[i].label, res.coeffs[i]});
    return out;
}

} // namespace bibracket

#endif
