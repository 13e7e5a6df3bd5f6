#ifndef BIBRACKET_MULTIPOLY_HPP
#define BIBRACKET_MULTIPOLY_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bibracket/rational.hpp"

namespace bibracket {

// Dense-exponent-vector multivariate polynomial with a hard total-degree
// cap. Exceeding the cap throws logic_error: the expansion workspaces are
// sized by the weight of the word being transformed, so an overflow is a
// bug, not user input.
class MultiPoly {
public:
    using Expo = std::vector<int>;

    MultiPoly(int nvars, int degree_cap) : nvars_(nvars), cap_(degree_cap) {}

    static MultiPoly constant(const Rational& c, int nvars, int cap) {
        MultiPoly p(nvars, cap);
        if (c != 0) p.terms_[Expo(static_cast<size_t>(nvars), 0)] = c;
        return p;
    }
    static MultiPoly variable(int i, int nvars, int cap) {
        MultiPoly p(nvars, cap);
        if (cap < 1) throw std::logic_error("MultiPoly degree cap exceeded");
        Expo e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        p.terms_[e] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        if (std::accumulate(e.begin(), e.end(), 0) > cap_)
            throw std::logic_error("MultiPoly degree cap exceeded");
        auto it = terms_.find(e);
        if (it == terms_.end()) terms_.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) {
        MultiPoly out(a.nvars_, a.cap_);
        if (c == 0) return out;
        for (const auto& [e, v] : a.terms_) out.terms_[e] = c * v;
        return out;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out(a.nvars_, a.cap_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    MultiPoly pow(int k) const {
        MultiPoly out = constant(1, nvars_, cap_);
        for (int i = 0; i < k; ++i) out = out * (*this);
        return out;
    }

private:
    int nvars_;
    int cap_;
    std::map<Expo, Rational> terms_;
};

} // namespace bibracket

#endif
