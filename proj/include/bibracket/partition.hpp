#ifndef BIBRACKET_PARTITION_HPP
#define BIBRACKET_PARTITION_HPP

#include <map>
#include <mutex>

#include "bibracket/multipoly.hpp"
#include "bibracket/words.hpp"

namespace bibracket {

namespace detail {

// Ordered tuples of nonnegative integers of fixed length with given sum.
inline void weak_compositions(int total, int parts, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int left) -> void {
        if (left == 0) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int p = 0; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, total, parts);
}

} // namespace detail

// The conjugation-of-partitions map P at word level. For a word with
// indices (s,r) of length l the image is the linear combination of words
// (s',r') with sum s' = sum r + l, sum r' = sum s - l, and coefficient
//   [prod Y_i^{r_i}] prod_i (Y_1+...+Y_{l+1-i})^{s'_i-1}
// * [prod X_i^{s_i-1}] prod_i B_i^{r'_i},
// where B_1 = X_l and B_i = X_{l+1-i} - X_{l+2-i}. P is a weight- and
// length-preserving involution and eval(P(w)) = eval(w).
inline BiLinComb partition_map(const BiWord& w) {
    static std::map<BiWord, BiLinComb> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
    }
    int l = static_cast<int>(w.size());
    BiLinComb out;
    if (l == 0) {
        out = BiLinComb::unit();
    } else if (l == 1) {
        out = BiLinComb(BiWord{{w[0].r + 1, w[0].s - 1}});
    } else {
        int cap = weight(w);
        int sum_s_new = lower_weight(w) + l;
        int sum_r_new = upper_weight(w) - l;

        // target monomial exponents
        MultiPoly::Expo y_target, x_target;
        for (const auto& a : w) { y_target.push_back(a.r); x_target.push_back(a.s - 1); }

        std::vector<std::vector<int>> s_parts, r_parts;
        detail::weak_compositions(sum_s_new - l, l, s_parts); // s'_i - 1
        detail::weak_compositions(sum_r_new, l, r_parts);

        // X-side factors B_i, shared across candidates
        std::vector<MultiPoly> B;
        for (int i = 1; i <= l; ++i) {
            MultiPoly b = MultiPoly::variable(l - i, l, cap); // X_{l+1-i}
            if (i > 1) b = b - MultiPoly::variable(l - i + 1, l, cap);
            B.push_back(b);
        }
        // Y-side factors A_i = Y_1 + ... + Y_{l+1-i}
        std::vector<MultiPoly> A;
        for (int i = 1; i <= l; ++i) {
            MultiPoly a = MultiPoly::constant(0, l, cap);
            for (int t = 0; t <= l - i; ++t) a = a + MultiPoly::variable(t, l, cap);
            A.push_back(a);
        }

        // the X- and Y-sides factor, so collect nonzero coefficients of each
        // side independently and combine
        std::vector<std::pair<const std::vector<int>*, Rational>> ycoeffs, xcoeffs;
        for (const auto& sp : s_parts) {
            MultiPoly ypoly = MultiPoly::constant(1, l, cap);
            for (int i = 0; i < l; ++i) ypoly = ypoly * A[static_cast<size_t>(i)].pow(sp[static_cast<size_t>(i)]);
            Rational c = ypoly.coeff(y_target);
            if (c != 0) ycoeffs.push_back({&sp, c});
        }
        for (const auto& rp : r_parts) {
            MultiPoly xpoly = MultiPoly::constant(1, l, cap);
            for (int i = 0; i < l; ++i) xpoly = xpoly * B[static_cast<size_t>(i)].pow(rp[static_cast<size_t>(i)]);
            Rational c = xpoly.coeff(x_target);
            if (c != 0) xcoeffs.push_back({&rp, c});
        }
        for (const auto& [sp, yc] : ycoeffs)
            for (const auto& [rp, xc] : xcoeffs) {
                BiWord nw;
                for (int i = 0; i < l; ++i)
                    nw.push_back({(*sp)[static_cast<size_t>(i)] + 1, (*rp)[static_cast<size_t>(i)]});
                out.add(nw, yc * xc);
            }
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(w, out);
    return out;
}

inline BiLinComb partition_map(const BiLinComb& c) {
    BiLinComb out;
    for (const auto& [w, q] : c.terms()) out += q * partition_map(w);
    return out;
}

// d_q at word level: sum_j s_j (r_j+1) * (s_j -> s_j+1, r_j -> r_j+1).
inline BiLinComb dq_word(const BiWord& w) {
    BiLinComb out;
    for (size_t j = 0; j < w.size(); ++j) {
        BiWord nw = w;
        nw[j].s += 1;
        nw[j].r += 1;
        out.add(nw, rat(w[j].s) * rat(w[j].r + 1));
    }
    return out;
}

inline BiLinComb dq_word(const BiLinComb& c) {
    BiLinComb out;
    for (const auto& [w, q] : c.terms()) out += q * dq_word(w);
    return out;
}

} // namespace bibracket

#endif
