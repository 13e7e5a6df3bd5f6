#ifndef BIBRACKET_EVAL_HPP
#define BIBRACKET_EVAL_HPP

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bibracket/arith.hpp"
#include "bibracket/qseries.hpp"
#include "bibracket/words.hpp"

namespace bibracket {

// Index of the generalized (tri-bracket) series: exponents e_j >= 1 on the
// kernel factors; e == 1 componentwise reduces to a plain bi-word.
struct TriIndex {
    std::vector<int> s;
    std::vector<int> r;
    std::vector<int> e;
};

// Numeric evaluation of bi-brackets and tri-brackets at a fixed precision.
// The word cache makes repeated evaluation of the same word free; it is
// guarded so independent words can be evaluated concurrently.
class Evaluator {
public:
    explicit Evaluator(int precision) : prec_(precision) {}

    int precision() const { return prec_; }

    // Direct enumeration of P_l(n): u_1 > ... > u_l > 0, v_j >= 1,
    // sum u_j v_j = n, summing prod u^r v^{s-1} / (r!(s-1)!). This is the
    // provenance oracle; it shares no code with the fast path.
    QSeries bibracket_oracle(const BiWord& w) const {
        if (w.empty()) return QSeries::constant(1, prec_);
        std::vector<Integer> acc(static_cast<size_t>(prec_) + 1, Integer(0));
        oracle_rec(w, 0, prec_ + 1, 0, Integer(1), acc);
        QSeries out(prec_);
        Integer denom(1);
        for (const auto& a : w)
            denom *= factorial(static_cast<unsigned long>(a.r)) *
                     factorial(static_cast<unsigned long>(a.s - 1));
        for (int n = 0; n <= prec_; ++n) out.coeff(n) = rat(acc[static_cast<size_t>(n)], denom);
        return out;
    }

    // Fast path: nested sum over u_l < ... < u_1 with a rolling state.
    // cum[u][n] holds the suffix value summed over all choices with largest
    // index <= u.
    QSeries bibracket(const BiWord& w) {
        {
            std::lock_guard<std::mutex> lock(mtx_);
            auto it = cache_.find(w);
            if (it != cache_.end()) return it->second;
        }
        QSeries result = nested_sum(
            w.size(), [&](size_t j) { return std::tuple(w[j].s, w[j].r, 1); });
        std::lock_guard<std::mutex> lock(mtx_);
        cache_.emplace(w, result);
        return result;
    }

    QSeries lincomb(const BiLinComb& c) {
        QSeries out(prec_);
        for (const auto& [w, q] : c.terms()) out += q * bibracket(w);
        return out;
    }

    // Generalized series: the inner kernel at exponent e uses
    // L_u(X)^e = sum_{v>=e} C(v-1,e-1) e^{vX} q^{uv}.
    QSeries tribracket(const TriIndex& t) {
        size_t l = t.s.size();
        if (t.r.size() != l || t.e.size() != l)
            throw std::invalid_argument("tri-index sequences differ in length");
        for (size_t j = 0; j < l; ++j)
            if (t.s[j] < 1 || t.r[j] < 0 || t.e[j] < 1)
                throw std::invalid_argument("tri-index out of range");
        if (l == 0) return QSeries::constant(1, prec_);
        return nested_sum(l, [&](size_t j) { return std::tuple(t.s[j], t.r[j], t.e[j]); });
    }

private:
    void oracle_rec(const BiWord& w, size_t j, int u_bound, int used, const Integer& prod,
                    std::vector<Integer>& acc) const {
        size_t l = w.size();
        // remaining letters each need at least u*v >= (l-j) terms; cheap bound
        for (int u = static_cast<int>(l - j); u < u_bound; ++u) {
            if (used + u > prec_) break;
            Integer up;
            mpz_ui_pow_ui(up.get_mpz_t(), static_cast<unsigned long>(u),
                          static_cast<unsigned long>(w[j].r));
            for (int v = 1; used + u * v <= prec_; ++v) {
                Integer vp;
                mpz_ui_pow_ui(vp.get_mpz_t(), static_cast<unsigned long>(v),
                              static_cast<unsigned long>(w[j].s - 1));
                Integer p = prod * up * vp;
                int total = used + u * v;
                if (j + 1 == l) acc[static_cast<size_t>(total)] += p;
                else oracle_rec(w, j + 1, u, total, p, acc);
            }
        }
    }

    template <class LetterAt>
    QSeries nested_sum(size_t l, LetterAt&& at) const {
        int N = prec_;
        // cum[u][n], u = 0..N; level l+1 is the constant 1
        std::vector<std::vector<Rational>> cum(static_cast<size_t>(N) + 1,
                                               std::vector<Rational>(static_cast<size_t>(N) + 1));
        for (int u = 0; u <= N; ++u) cum[static_cast<size_t>(u)][0] = 1;
        for (size_t jj = l; jj-- > 0;) {
            auto [s, r, e] = at(jj);
            std::vector<std::vector<Rational>> next(
                static_cast<size_t>(N) + 1, std::vector<Rational>(static_cast<size_t>(N) + 1));
            Rational sfac = rat(Integer(1), factorial(static_cast<unsigned long>(s - 1)));
            Rational rfac = rat(Integer(1), factorial(static_cast<unsigned long>(r)));
            for (int u = 1; u <= N; ++u) {
                auto& row = next[static_cast<size_t>(u)];
                row = next[static_cast<size_t>(u) - 1];
                Integer up;
                mpz_ui_pow_ui(up.get_mpz_t(), static_cast<unsigned long>(u),
                              static_cast<unsigned long>(r));
                Rational outer = rfac * Rational(up);
                const auto& prev = cum[static_cast<size_t>(u) - 1];
                for (int v = e; u * v <= N; ++v) {
                    Integer vp;
                    mpz_ui_pow_ui(vp.get_mpz_t(), static_cast<unsigned long>(v),
                                  static_cast<unsigned long>(s - 1));
                    Rational b = outer * sfac * Rational(vp) *
                                 binomial(v - 1, e - 1);
                    if (b == 0) continue;
                    for (int n = 0; u * v + n <= N; ++n) {
                        if (prev[static_cast<size_t>(n)] == 0) continue;
                        row[static_cast<size_t>(u * v + n)] += b * prev[static_cast<size_t>(n)];
                    }
                }
            }
            cum = std::move(next);
        }
        QSeries out(N);
        for (int n = 0; n <= N; ++n) out.coeff(n) = cum[static_cast<size_t>(N)][static_cast<size_t>(n)];
        return out;
    }

    int prec_;
    std::map<BiWord, QSeries> cache_;
    mutable std::mutex mtx_;
};

// Symbolic q->1 limit index of Remark-type: for s_1 > r_1+1 and
// s_j >= r_j+1 (j >= 2) the limit is (1/prod r_j!) * zeta(s-r). Returns the
// prefactor and the MZV index; no numeric zeta evaluation.
inline std::pair<Rational, std::vector<int>> z_limit_index(const BiWord& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no limit index");
    for (size_t j = 0; j < w.size(); ++j) {
        bool ok = (j == 0) ? (w[j].s > w[j].r + 1) : (w[j].s >= w[j].r + 1);
        if (!ok) throw std::domain_error("limit not covered by the stated index range");
    }
    Rational pre = 1;
    std::vector<int> idx;
    for (const auto& a : w) {
        pre /= Rational(factorial(static_cast<unsigned long>(a.r)));
        idx.push_back(a.s - a.r);
    }
    return {pre, idx};
}

} // namespace bibracket

#endif
