#ifndef BIBRACKET_WORDS_HPP
#define BIBRACKET_WORDS_HPP

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bibracket/rational.hpp"

namespace bibracket {

// Letter z_{s,r} of the bi-alphabet: s >= 1 upper index, r >= 0 lower index.
struct BiLetter {
    int s = 1;
    int r = 0;
    auto operator<=>(const BiLetter&) const = default;
};

// A word in the bi-alphabet; the empty word is the algebra unit.
using BiWord = std::vector<BiLetter>;

// A word in the single-index alphabet z_1, z_2, ...; embeds into the
// bi-alphabet as z_s -> z_{s,0}.
using ZWord = std::vector<int>;

inline BiWord from_zword(const ZWord& z) {
    BiWord w;
    w.reserve(z.size());
    for (int s : z) w.push_back({s, 0});
    return w;
}

inline ZWord to_zword(const BiWord& w) {
    ZWord z;
    z.reserve(w.size());
    for (const auto& a : w) {
        if (a.r != 0) throw std::invalid_argument("word has nonzero lower index");
        z.push_back(a.s);
    }
    return z;
}

inline int weight(const BiWord& w) {
    int k = 0;
    for (const auto& a : w) k += a.s + a.r;
    return k;
}
inline int upper_weight(const BiWord& w) {
    int k = 0;
    for (const auto& a : w) k += a.s;
    return k;
}
inline int lower_weight(const BiWord& w) {
    int k = 0;
    for (const auto& a : w) k += a.r;
    return k;
}

// Word over {x,y}; z_j is encoded as x^{j-1} y.
using XYWord = std::string;

inline XYWord zword_to_xy(const ZWord& z) {
    XYWord w;
    for (int s : z) {
        if (s < 1) throw std::invalid_argument("z-index must be positive");
        w += std::string(static_cast<size_t>(s) - 1, 'x');
        w += 'y';
    }
    return w;
}

inline ZWord xy_to_zword(const XYWord& w) {
    if (!w.empty() && w.back() != 'y')
        throw std::invalid_argument("xy-word does not end in y");
    ZWord z;
    int run = 0;
    for (char c : w) {
        if (c == 'x') ++run;
        else if (c == 'y') { z.push_back(run + 1); run = 0; }
        else throw std::invalid_argument("xy-word has a letter other than x,y");
    }
    return z;
}

// Finite Q-linear combination of words, with canonical map storage
// (no zero coefficients, lexicographic word order).
template <class W>
class LinComb {
public:
    using Term = std::pair<const W, Rational>;

    LinComb() = default;
    explicit LinComb(const W& w) { terms_[w] = 1; }
    LinComb(const W& w, const Rational& c) { if (c != 0) terms_[w] = c; }

    static LinComb unit() { return LinComb(W{}); }

    const std::map<W, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coeff(const W& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const W& w, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) terms_.emplace(w, c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    std::map<W, Rational> terms_;
};

using BiLinComb = LinComb<BiWord>;
using ZLinComb = LinComb<ZWord>;
using XYLinComb = LinComb<XYWord>;

// ---------------------------------------------------------------------
// Word syntax: "[s1,...,sl | r1,...,rl]", r-list omitted when all zero.
// A linear combination is a signed sum of "c * word" terms.
// ---------------------------------------------------------------------

inline std::string print_word(const BiWord& w) {
    if (w.empty()) return "[]";
    std::string out = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i].s);
    }
    if (lower_weight(w) > 0) {
        out += " | ";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(w[i].r);
        }
    }
    out += "]";
    return out;
}

namespace detail {
inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty index in word");
        size_t b = tok.find_last_not_of(" \t");
        out.push_back(std::stoi(tok.substr(a, b - a + 1)));
    }
    return out;
}
} // namespace detail

inline BiWord parse_word(const std::string& text) {
    size_t open = text.find('[');
    size_t close = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("word must be bracketed: " + text);
    std::string body = text.substr(open + 1, close - open - 1);
    {
        size_t a = body.find_first_not_of(" \t");
        if (a == std::string::npos) return {};
    }
    size_t bar = body.find('|');
    std::vector<int> ss = detail::parse_int_list(bar == std::string::npos ? body : body.substr(0, bar));
    std::vector<int> rs(ss.size(), 0);
    if (bar != std::string::npos) {
        rs = detail::parse_int_list(body.substr(bar + 1));
        if (rs.size() != ss.size())
            throw std::invalid_argument("upper and lower index lists differ in length");
    }
    BiWord w;
    for (size_t i = 0; i < ss.size(); ++i) {
        if (ss[i] < 1 || rs[i] < 0)
            throw std::invalid_argument("indices require s >= 1, r >= 0");
        w.push_back({ss[i], rs[i]});
    }
    return w;
}

inline std::string print_lincomb(const BiLinComb& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, q] : c.terms()) {
        Rational a = q;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out += to_string(a) + " * ";
        out += print_word(w);
    }
    return out;
}

// Parses a "+/- c/d * [..]" sum; coefficients optional (default 1).
inline BiLinComb parse_lincomb(const std::string& text) {
    BiLinComb out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) return out;
    if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        Rational sign = 1;
        if (text[i] == '+') { ++i; }
        else if (text[i] == '-') { sign = -1; ++i; }
        else if (!first) throw std::invalid_argument("expected +/- between terms");
        skip_ws();
        Rational coeff = 1;
        if (text[i] != '[') {
            size_t j = i;
            while (j < text.size() && text[j] != '*' && text[j] != '[') ++j;
            if (j == text.size()) throw std::invalid_argument("term missing a word");
            std::string num = text.substr(i, j - i);
            size_t a = num.find_first_not_of(" \t");
            size_t b = num.find_last_not_of(" \t");
            coeff = parse_rational(num.substr(a, b - a + 1));
            i = (text[j] == '*') ? j + 1 : j;
            skip_ws();
        }
        size_t close = text.find(']', i);
        if (text[i] != '[' || close == std::string::npos)
            throw std::invalid_argument("term missing a word");
        out.add(parse_word(text.substr(i, close - i + 1)), sign * coeff);
        i = close + 1;
        skip_ws();
        first = false;
    }
    return out;
}

} // namespace bibracket

#endif
