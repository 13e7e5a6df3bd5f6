#ifndef BIBRACKET_PRODUCTS_HPP
#define BIBRACKET_PRODUCTS_HPP

#include <functional>
#include <map>
#include <mutex>

#include "bibracket/eval.hpp"
#include "bibracket/multipoly.hpp"
#include "bibracket/partition.hpp"
#include "bibracket/quasi_shuffle.hpp"

namespace bibracket {

// Stuffle product of bi-brackets: eval(stuffle_mul(u,v)) = eval(u)*eval(v).
inline BiLinComb stuffle_mul(const BiWord& u, const BiWord& v) {
    return quasi_shuffle(u, v, diamonds::boxcircle);
}
inline BiLinComb stuffle_mul(const BiLinComb& u, const BiLinComb& v) {
    return quasi_shuffle(u, v, diamonds::boxcircle);
}

// Shuffle product of bi-brackets: P(P(u) boxast P(v)). Evaluates to the
// same series product, giving the linear double-shuffle relations.
inline BiLinComb shuffle_mul(const BiWord& u, const BiWord& v) {
    return partition_map(stuffle_mul(partition_map(u), partition_map(v)));
}
inline BiLinComb shuffle_mul(const BiLinComb& u, const BiLinComb& v) {
    return partition_map(stuffle_mul(partition_map(u), partition_map(v)));
}

// [s_1,...,s_l]^* = exp_boxast(log_*(z_{s_1}...z_{s_l})), embedded via
// z_s -> z_{s,0}. The boxcircle product preserves lower weight zero, so the
// result stays in the bracket subalgebra.
inline BiLinComb stuffle_bracket(const ZWord& s) {
    BiWord w = from_zword(s);
    return hoffman_exp(hoffman_log(w, diamonds::zsum_bi), diamonds::boxcircle);
}
inline BiLinComb stuffle_bracket(const ZLinComb& c) {
    BiLinComb out;
    for (const auto& [w, q] : c.terms()) out += q * stuffle_bracket(w);
    return out;
}

namespace detail {

// D_{Y_j,e} = prod_{k=1}^{e-1} ((1/k)(d_{m-j+1} - d_{m-j+2}) - 1) as a
// polynomial in m commuting derivative symbols (d_{m+1} = 0).
inline MultiPoly d_operator(int j, int e, int m, int cap) {
    MultiPoly op = MultiPoly::constant(1, m, cap);
    int a = m - j;     // zero-based index of d_{m-j+1}
    int b = m - j + 1; // zero-based index of d_{m-j+2}
    for (int k = 1; k <= e - 1; ++k) {
        MultiPoly factor = MultiPoly::variable(a, m, cap);
        if (b < m) factor = factor - MultiPoly::variable(b, m, cap);
        factor = rat(1, k) * factor - MultiPoly::constant(1, m, cap);
        op = op * factor;
    }
    return op;
}

} // namespace detail

// [s_1,...,s_l]^sh, symbolically reduced to bi-brackets. For a composition
// (i_1,...,i_m) of l with partial sums c_j, the surviving X-positions are
// p_j = l+1-c_{m+1-j}; every position outside {p_j} forces s = 1. The
// derivative-operator product expands into monomials, and a monomial
// prod d_t^{a_t} picks the bi-bracket with lower indices a and a factor
// prod a_t!.
inline BiLinComb shuffle_bracket(const ZWord& s) {
    int l = static_cast<int>(s.size());
    if (l == 0) return BiLinComb::unit();
    BiLinComb out;
    int cap = 0;
    for (int si : s) cap += si;
    for (const auto& comp : compositions(l)) {
        int m = static_cast<int>(comp.size());
        std::vector<int> c(static_cast<size_t>(m) + 1, 0);
        for (int j = 1; j <= m; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + comp[static_cast<size_t>(j) - 1];
        std::vector<int> pos(static_cast<size_t>(m));
        for (int j = 1; j <= m; ++j) pos[static_cast<size_t>(j) - 1] = l + 1 - c[static_cast<size_t>(m + 1 - j)];
        // positions not hit by the composition only contribute for s = 1
        std::vector<bool> hit(static_cast<size_t>(l) + 1, false);
        for (int p : pos) hit[static_cast<size_t>(p)] = true;
        bool ok = true;
        for (int t = 1; t <= l; ++t)
            if (!hit[static_cast<size_t>(t)] && s[static_cast<size_t>(t) - 1] != 1) { ok = false; break; }
        if (!ok) continue;

        Rational pre = 1;
        for (int i : comp) pre /= Rational(factorial(static_cast<unsigned long>(i)));

        MultiPoly op = MultiPoly::constant(1, m, cap);
        for (int j = 1; j <= m; ++j) op = op * detail::d_operator(j, comp[static_cast<size_t>(j) - 1], m, cap);

        for (const auto& [expo, coeff] : op.terms()) {
            Rational c2 = pre * coeff;
            BiWord w;
            for (int j = 0; j < m; ++j) {
                c2 *= Rational(factorial(static_cast<unsigned long>(expo[static_cast<size_t>(j)])));
                w.push_back({s[static_cast<size_t>(pos[static_cast<size_t>(j)]) - 1], expo[static_cast<size_t>(j)]});
            }
            out.add(w, c2);
        }
    }
    return out;
}

// Numeric route for the same coefficient: evaluate the composition sum of
// tri-brackets directly and extract the X-monomial, with no symbolic
// reduction. Cross-checks shuffle_bracket term by term as a series.
inline QSeries shuffle_bracket_numeric(const ZWord& s, Evaluator& ev) {
    int l = static_cast<int>(s.size());
    if (l == 0) return QSeries::constant(1, ev.precision());
    QSeries out(ev.precision());
    int degree = 0;
    for (int si : s) degree += si - 1;
    int cap = std::max(degree, 1); // workspaces need room even when degree 0
    MultiPoly::Expo target;
    for (int si : s) target.push_back(si - 1);

    for (const auto& comp : compositions(l)) {
        int m = static_cast<int>(comp.size());
        std::vector<int> c(static_cast<size_t>(m) + 1, 0);
        for (int j = 1; j <= m; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + comp[static_cast<size_t>(j) - 1];
        Rational pre = 1;
        for (int i : comp) pre /= Rational(factorial(static_cast<unsigned long>(i)));

        // Y_j = X_{l+1-c_j} - X_{l+1-c_{j-1}}  (X_{l+1} = 0)
        std::vector<MultiPoly> Y;
        for (int j = 1; j <= m; ++j) {
            MultiPoly y = MultiPoly::variable(l - c[static_cast<size_t>(j)], l, cap);
            int drop = l - c[static_cast<size_t>(j) - 1]; // l+1-c_{j-1}, zero-based
            if (drop < l) y = y - MultiPoly::variable(drop, l, cap);
            Y.push_back(y);
        }

        std::vector<std::vector<int>> rhos;
        detail::weak_compositions(degree, m, rhos);
        for (const auto& rho : rhos) {
            MultiPoly poly = MultiPoly::constant(1, l, cap);
            for (int j = 0; j < m; ++j) poly = poly * Y[static_cast<size_t>(j)].pow(rho[static_cast<size_t>(j)]);
            Rational coeff = poly.coeff(target);
            if (coeff == 0) continue;
            TriIndex t;
            t.s.assign(static_cast<size_t>(m), 1);
            t.r = rho;
            t.e = comp;
            out += (pre * coeff) * ev.tribracket(t);
        }
    }
    return out;
}

// Construction of a new stuffle homomorphism from a family of them:
// F_w(M) = sum over splittings w_1...w_k = w and 0 < m_1 < ... < m_k < M
// of prod f_{w_i}(m_i).
template <class Value>
Value construction_F(const std::function<Value(const ZWord&, int)>& f, const ZWord& w, int M,
                     const Value& zero, const Value& one) {
    if (w.empty()) return (M >= 1) ? one : zero;
    Value total = zero;
    int l = static_cast<int>(w.size());
    // choose a splitting of w into k nonempty blocks, then the m-chain
    std::vector<int> cuts; // block lengths
    auto rec = [&](auto&& self, int done) -> void {
        if (done == l) {
            int k = static_cast<int>(cuts.size());
            std::vector<int> ms(static_cast<size_t>(k));
            auto chain = [&](auto&& self2, int idx, int lo) -> void {
                if (idx == k) {
                    Value prod = one;
                    int at = 0;
                    for (int i = 0; i < k; ++i) {
                        ZWord blk(w.begin() + at, w.begin() + at + cuts[static_cast<size_t>(i)]);
                        at += cuts[static_cast<size_t>(i)];
                        prod = prod * f(blk, ms[static_cast<size_t>(i)]);
                    }
                    total += prod;
                    return;
                }
                for (int m = lo; m < M - (k - 1 - idx); ++m) {
                    ms[static_cast<size_t>(idx)] = m;
                    self2(self2, idx + 1, m + 1);
                }
            };
            chain(chain, 0, 1);
            return;
        }
        for (int len = 1; done + len <= l; ++len) {
            cuts.push_back(len);
            self(self, done + len);
            cuts.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

// The built-in test family: f_w(m) = eval*(w)(q^m), where eval* sends a
// z-word to the series of its stuffle bracket. Substitution q -> q^m is a
// ring endomorphism, so each member is a stuffle homomorphism.
inline std::function<QSeries(const ZWord&, int)> stuffle_series_family(Evaluator& ev) {
    return [&ev](const ZWord& w, int m) {
        return substitute_power(ev.lincomb(stuffle_bracket(w)), m);
    };
}

inline QSeries construction_F_series(const std::function<QSeries(const ZWord&, int)>& f,
                                     const ZWord& w, int M, int prec) {
    return construction_F<QSeries>(f, w, M, QSeries(prec), QSeries::constant(1, prec));
}

} // namespace bibracket

#endif
