#ifndef BIBRACKET_QUASI_SHUFFLE_HPP
#define BIBRACKET_QUASI_SHUFFLE_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "bibracket/arith.hpp"
#include "bibracket/words.hpp"

namespace bibracket {

// A diamond (commutative associative letter product) maps two letters to a
// linear combination of letters.
template <class L>
using LetterComb = std::vector<std::pair<L, Rational>>;

namespace diamonds {

// diamond == 0: the plain (index-)shuffle.
template <class L>
inline LetterComb<L> zero(const L&, const L&) { return {}; }

// Stuffle on the single-index alphabet: z_a <> z_b = z_{a+b}.
inline LetterComb<int> zsum(const int& a, const int& b) { return {{a + b, 1}}; }

// Stuffle on bi-letters embedded via z_s -> z_{s,0}; index sums add.
inline LetterComb<BiLetter> zsum_bi(const BiLetter& a, const BiLetter& b) {
    return {{{a.s + b.s, a.r + b.r}, 1}};
}

// The bi-bracket letter product: multiplication of the length-one series
// expressed through Bernoulli coefficients
//   lambda^j_{a,b} = (-1)^{b-1} C(a+b-j-1, a-j) B_{a+b-j} / (a+b-j)!.
inline Rational lambda(int j, int a, int b) {
    int m = a + b - j;
    return rat((b - 1) % 2 == 0 ? 1 : -1) * binomial(a + b - j - 1, a - j) *
           bernoulli(static_cast<unsigned>(m)) / Rational(factorial(static_cast<unsigned long>(m)));
}

inline LetterComb<BiLetter> boxcircle(const BiLetter& x, const BiLetter& y) {
    int rr = x.r + y.r;
    Rational pre = binomial(x.r + y.r, x.r);
    LetterComb<BiLetter> out;
    auto push = [&](int s, const Rational& c) {
        if (c == 0) return;
        for (auto& [l, v] : out)
            if (l.s == s && l.r == rr) { v += c; return; }
        out.push_back({{s, rr}, c});
    };
    for (int j = 1; j <= x.s; ++j) push(j, pre * lambda(j, x.s, y.s));
    for (int j = 1; j <= y.s; ++j) push(j, pre * lambda(j, y.s, x.s));
    push(x.s + y.s, pre);
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.second == 0; }),
              out.end());
    return out;
}

} // namespace diamonds

template <class L>
LinComb<std::vector<L>> prepend(const L& a, const LinComb<std::vector<L>>& c) {
    LinComb<std::vector<L>> out;
    for (const auto& [w, q] : c.terms()) {
        std::vector<L> nw;
        nw.reserve(w.size() + 1);
        nw.push_back(a);
        nw.insert(nw.end(), w.begin(), w.end());
        out.add(nw, q);
    }
    return out;
}

// Hoffman's recursion aw <> bv = a(w<>bv) + b(aw<>v) + (a<>b)(w<>v),
// for any commutative associative diamond.
template <class L, class Diamond>
LinComb<std::vector<L>> quasi_shuffle(const std::vector<L>& u, const std::vector<L>& v,
                                      Diamond&& diamond) {
    using C = LinComb<std::vector<L>>;
    if (u.empty()) return C(v);
    if (v.empty()) return C(u);
    std::vector<L> uw(u.begin() + 1, u.end());
    std::vector<L> vw(v.begin() + 1, v.end());
    C out = prepend(u[0], quasi_shuffle(uw, v, diamond));
    out += prepend(v[0], quasi_shuffle(u, vw, diamond));
    for (const auto& [c, q] : diamond(u[0], v[0]))
        out += q * prepend(c, quasi_shuffle(uw, vw, diamond));
    return out;
}

// Bilinear extension.
template <class L, class Diamond>
LinComb<std::vector<L>> quasi_shuffle(const LinComb<std::vector<L>>& a,
                                      const LinComb<std::vector<L>>& b, Diamond&& diamond) {
    LinComb<std::vector<L>> out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            out += (cu * cv) * quasi_shuffle(u, v, diamond);
    return out;
}

inline BiLinComb stuffle_shuffle_engine_boxast(const BiWord& u, const BiWord& v) {
    return quasi_shuffle(u, v, diamonds::boxcircle);
}

// Letter-level shuffle over the two-letter alphabet {x,y}.
inline XYLinComb xy_shuffle(const XYWord& u, const XYWord& v) {
    XYLinComb out;
    if (u.empty()) { out.add(v, 1); return out; }
    if (v.empty()) { out.add(u, 1); return out; }
    XYLinComb left = xy_shuffle(u.substr(1), v);
    for (const auto& [w, c] : left.terms()) out.add(u[0] + w, c);
    XYLinComb right = xy_shuffle(u, v.substr(1));
    for (const auto& [w, c] : right.terms()) out.add(v[0] + w, c);
    return out;
}

// All l+1 splittings w = uv, the deconcatenation coproduct.
template <class L>
std::vector<std::pair<std::vector<L>, std::vector<L>>> deconcat_coproduct(const std::vector<L>& w) {
    std::vector<std::pair<std::vector<L>, std::vector<L>>> out;
    for (size_t i = 0; i <= w.size(); ++i)
        out.push_back({std::vector<L>(w.begin(), w.begin() + i),
                       std::vector<L>(w.begin() + i, w.end())});
    return out;
}

namespace detail {

template <class T>
void compositions_of(int n, std::vector<std::vector<T>>& out) {
    // all ordered compositions of n into positive parts
    std::vector<T> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) { out.push_back(cur); return; }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(static_cast<T>(p));
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
}

} // namespace detail

inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    detail::compositions_of<int>(n, out);
    return out;
}

// (i_1,...,i_m){w}: group consecutive letters of w into blocks of the given
// sizes, multiplying each block down with the diamond.
template <class L, class Diamond>
LinComb<std::vector<L>> group_word(const std::vector<L>& w, const std::vector<int>& comp,
                                   Diamond&& diamond) {
    using C = LinComb<std::vector<L>>;
    std::vector<LetterComb<L>> blocks;
    size_t pos = 0;
    for (int len : comp) {
        LetterComb<L> acc{{w[pos], Rational(1)}};
        for (int t = 1; t < len; ++t) {
            LetterComb<L> next;
            for (const auto& [a, ca] : acc)
                for (const auto& [b, cb] : diamond(a, w[pos + static_cast<size_t>(t)])) {
                    bool merged = false;
                    for (auto& [l, v] : next)
                        if (l == b) { v += ca * cb; merged = true; break; }
                    if (!merged) next.push_back({b, ca * cb});
                }
            acc = std::move(next);
        }
        pos += static_cast<size_t>(len);
        blocks.push_back(std::move(acc));
    }
    C out = C::unit();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        C next;
        for (const auto& [l, c] : *it) next += c * prepend(l, out);
        out = next;
    }
    return out;
}

// Hoffman's exp: sum over compositions with coefficient 1/prod i_j!.
template <class L, class Diamond>
LinComb<std::vector<L>> hoffman_exp(const std::vector<L>& w, Diamond&& diamond) {
    using C = LinComb<std::vector<L>>;
    if (w.empty()) return C::unit();
    C out;
    for (const auto& comp : compositions(static_cast<int>(w.size()))) {
        Rational c = 1;
        for (int i : comp) c /= Rational(factorial(static_cast<unsigned long>(i)));
        out += c * group_word(w, comp, diamond);
    }
    return out;
}

// Hoffman's log: coefficient (-1)^{l-m}/prod i_j.
template <class L, class Diamond>
LinComb<std::vector<L>> hoffman_log(const std::vector<L>& w, Diamond&& diamond) {
    using C = LinComb<std::vector<L>>;
    if (w.empty()) return C::unit();
    int l = static_cast<int>(w.size());
    C out;
    for (const auto& comp : compositions(l)) {
        int m = static_cast<int>(comp.size());
        Rational c = ((l - m) % 2 == 0) ? 1 : -1;
        for (int i : comp) c /= rat(i);
        out += c * group_word(w, comp, diamond);
    }
    return out;
}

template <class L, class Diamond>
LinComb<std::vector<L>> hoffman_exp(const LinComb<std::vector<L>>& a, Diamond&& diamond) {
    LinComb<std::vector<L>> out;
    for (const auto& [w, c] : a.terms()) out += c * hoffman_exp(w, diamond);
    return out;
}
template <class L, class Diamond>
LinComb<std::vector<L>> hoffman_log(const LinComb<std::vector<L>>& a, Diamond&& diamond) {
    LinComb<std::vector<L>> out;
    for (const auto& [w, c] : a.terms()) out += c * hoffman_log(w, diamond);
    return out;
}

// ds(u,v) = u sh v - u * v on the y-ended subalgebra, in the z-letter basis.
inline ZLinComb ds(const ZWord& u, const ZWord& v) {
    ZLinComb out;
    XYLinComb sh = xy_shuffle(zword_to_xy(u), zword_to_xy(v));
    for (const auto& [w, c] : sh.terms())
        out.add(xy_to_zword(w), c);
    out -= quasi_shuffle(u, v, diamonds::zsum);
    return out;
}

// The same difference computed in the mirrored encoding z_j = y x^{j-1}
// (words start with y, admissibility sits on the last letter). Equals the
// letter-reversal of ds(rev u, rev v), but is implemented independently as
// a cross-check of the convention bookkeeping.
inline ZLinComb ds_reversed(const ZWord& u, const ZWord& v) {
    auto enc = [](const ZWord& z) {
        XYWord w;
        for (int s : z) {
            w += 'y';
            w += std::string(static_cast<size_t>(s) - 1, 'x');
        }
        return w;
    };
    auto dec = [](const XYWord& w) {
        if (!w.empty() && w.front() != 'y')
            throw std::invalid_argument("mirrored xy-word does not start with y");
        ZWord z;
        for (char c : w) {
            if (c == 'y') z.push_back(1);
            else ++z.back();
        }
        return z;
    };
    ZLinComb out;
    XYLinComb sh = xy_shuffle(enc(u), enc(v));
    for (const auto& [w, c] : sh.terms()) out.add(dec(w), c);
    out -= quasi_shuffle(u, v, diamonds::zsum);
    return out;
}

} // namespace bibracket

#endif
