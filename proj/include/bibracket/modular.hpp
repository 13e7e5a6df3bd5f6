#ifndef BIBRACKET_MODULAR_HPP
#define BIBRACKET_MODULAR_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bibracket/eval.hpp"
#include "bibracket/products.hpp"

namespace bibracket {

// A (quasi-)modular form carried both symbolically (rational constant plus
// a bracket combination) and as a numeric q-expansion.
struct QModForm {
    int weight = 0;
    Rational constant;
    BiLinComb brackets;
    QSeries series;

    QModForm(int k, const Rational& c, const BiLinComb& b, Evaluator& ev)
        : weight(k), constant(c), brackets(b),
          series(QSeries::constant(c, ev.precision()) + ev.lincomb(b)) {}
};

// G~_k = beta_k + [k] with beta_{2n} = -(1/2) B_{2n}/(2n)!.
inline Rational eisenstein_constant(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("Eisenstein weight must be even, >= 2");
    return rat(-1, 2) * bernoulli(static_cast<unsigned>(k)) /
           Rational(factorial(static_cast<unsigned long>(k)));
}

inline QModForm eisenstein(int k, Evaluator& ev) {
    return QModForm(k, eisenstein_constant(k), BiLinComb(BiWord{{k, 0}}), ev);
}

// Delta = q prod_{n>=1} (1-q^n)^24, truncated.
inline QSeries delta_series(int N) {
    QSeries prod = QSeries::constant(1, N);
    for (int n = 1; n <= N; ++n) {
        QSeries factor = QSeries::constant(1, N);
        factor.coeff(n) = -1;
        for (int e = 0; e < 24; ++e) prod = prod * factor;
    }
    QSeries q(N);
    if (N >= 1) q.coeff(1) = 1;
    return prod * q;
}

// n-th Rankin-Cohen bracket of two forms of weights k and l:
// (f,g)_n = sum_{a+b=n} (-1)^a C(k+n-1,b) C(l+n-1,a) d_q^a f d_q^b g.
inline QSeries rankin_cohen(const QModForm& f, const QModForm& g, int n) {
    if (n < 0) throw std::invalid_argument("Rankin-Cohen index must be >= 0");
    QSeries out(std::min(f.series.precision(), g.series.precision()));
    QSeries fa = f.series;
    std::vector<QSeries> gb{g.series};
    for (int b = 1; b <= n; ++b) gb.push_back(dq_series(gb.back()));
    for (int a = 0; a <= n; ++a) {
        int b = n - a;
        Rational c = binomial(f.weight + n - 1, b) * binomial(g.weight + n - 1, a);
        if (a % 2 == 1) c = -c;
        out += c * (fa * gb[static_cast<size_t>(b)]);
        if (a < n) fa = dq_series(fa);
    }
    return out;
}

// C^{2n}_{k,l} = beta_k mb{l+n}{n} + (-1)^n beta_l mb{k+n}{n}
//             + sum_{a+b=n} (-1)^a mb{k+a}{a} mb{l+b}{b}.
// Cusp form of weight k+l+2n for even k,l >= 4 and n >= 1.
inline QSeries cusp_bracket_C(int k, int l, int n, Evaluator& ev) {
    if (k < 4 || l < 4 || k % 2 || l % 2 || n < 1)
        throw std::invalid_argument("cusp bracket needs even k,l >= 4 and n >= 1");
    QSeries out = eisenstein_constant(k) * ev.bibracket({{l + n, n}}) +
                  rat(n % 2 ? -1 : 1) * eisenstein_constant(l) * ev.bibracket({{k + n, n}});
    for (int a = 0; a <= n; ++a) {
        int b = n - a;
        Rational c = (a % 2) ? -1 : 1;
        out += c * (ev.bibracket({{k + a, a}}) * ev.bibracket({{l + b, b}}));
    }
    return out;
}

// Executable checks for the quasi-modular and cusp-form identities.
struct SuiteResult {
    std::string name;
    bool passed;
};

inline std::vector<SuiteResult> modular_suite(int N) {
    Evaluator ev(N);
    std::vector<SuiteResult> out;
    auto check = [&](const std::string& name, bool ok) { out.push_back({name, ok}); };

    QModForm G2 = eisenstein(2, ev), G4 = eisenstein(4, ev), G6 = eisenstein(6, ev),
             G8 = eisenstein(8, ev);

    check("G4^2 = 7/6 G8", G4.series * G4.series == rat(7, 6) * G8.series);
    check("d_q G2 = 5 G4 - 2 G2^2",
          dq_series(G2.series) == rat(5) * G4.series - rat(2) * (G2.series * G2.series));
    check("d_q G4 = 14 G6 - 8 G2 G4",
          dq_series(G4.series) == rat(14) * G6.series - rat(8) * (G2.series * G4.series));
    check("d_q G6 = 120/7 G4^2 - 12 G2 G6",
          dq_series(G6.series) ==
              rat(120, 7) * (G4.series * G4.series) - rat(12) * (G2.series * G6.series));

    // weight 8: [8] = 1/40 [4] - 1/252 [2] + 12 [4,4], numerically
    check("[8] = 1/40 [4] - 1/252 [2] + 12 [4,4]",
          ev.bibracket({{8, 0}}) == rat(1, 40) * ev.bibracket({{4, 0}}) -
                                        rat(1, 252) * ev.bibracket({{2, 0}}) +
                                        rat(12) * ev.bibracket({{4, 0}, {4, 0}}));

    // the same relation from the word-level double-shuffle certificate
    {
        auto dsdiff = [](const BiWord& u, const BiWord& v) {
            return stuffle_mul(u, v) - shuffle_mul(u, v);
        };
        BiLinComb cert = rat(-4) * dsdiff({{3, 0}}, {{5, 0}}) + rat(3) * dsdiff({{4, 0}}, {{4, 0}});
        BiLinComb rel;
        rel.add({{4, 0}}, rat(1, 40));
        rel.add({{2, 0}}, rat(-1, 252));
        rel.add({{4, 0}, {4, 0}}, rat(12));
        rel.add({{8, 0}}, rat(-1));
        check("weight-8 via -4 ds([3],[5]) + 3 ds([4],[4])", cert == rel);
    }

    QSeries delta = delta_series(N);
    Rational f5 = Rational(factorial(5)), f7 = Rational(factorial(7));
    check("Delta = 12 * 5!^2 * C^4_{4,4}", delta == rat(12) * f5 * f5 * cusp_bracket_C(4, 4, 2, ev));
    check("Delta = 5! * 7! * C^2_{4,6}", delta == f5 * f7 * cusp_bracket_C(4, 6, 1, ev));
    {
        // (G4,G4)_2 = gamma^2_{4,4} C^4_{4,4} with gamma = (5!/3!)^2
        Rational gamma = rat(20) * rat(20);
        check("(G4,G4)_2 = gamma^2_{4,4} C^4_{4,4}",
              rankin_cohen(G4, G4, 2) == gamma * cusp_bracket_C(4, 4, 2, ev));
    }

    // weight-12 bi-bracket relation from dim S_12 = 1
    {
        QSeries m51 = ev.bibracket({{5, 1}}), m62 = ev.bibracket({{6, 2}}),
                m71 = ev.bibracket({{7, 1}});
        QSeries b4 = ev.bibracket({{4, 0}}), b6 = ev.bibracket({{6, 0}});
        QSeries lhs = rat(7) * (m51 * b6) - rat(7) * (b4 * m71) + rat(4) * (b4 * m62) -
                      rat(2) * (m51 * m51);
        QSeries rhs = rat(7, 1440) * m71 - rat(1, 360) * m62 + rat(1, 8640) * m51;
        check("weight-12 cusp relation between bi-brackets", lhs == rhs);
    }
    return out;
}

} // namespace bibracket

#endif
