#ifndef BIBRACKET_QSERIES_HPP
#define BIBRACKET_QSERIES_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bibracket/rational.hpp"

namespace bibracket {

// Truncated formal power series in q with exact rational coefficients.
// Coefficients are stored for q^0..q^N; binary operations truncate at the
// smaller of the two precisions.
class QSeries {
public:
    explicit QSeries(int precision) : coeffs_(static_cast<size_t>(precision) + 1) {
        if (precision < 0) throw std::invalid_argument("negative precision");
    }

    static QSeries constant(const Rational& c, int precision) {
        QSeries s(precision);
        s.coeffs_[0] = c;
        return s;
    }

    int precision() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int n) const {
        if (n < 0 || n > precision()) throw std::out_of_range("coefficient index");
        return coeffs_[static_cast<size_t>(n)];
    }
    Rational& coeff(int n) {
        if (n < 0 || n > precision()) throw std::out_of_range("coefficient index");
        return coeffs_[static_cast<size_t>(n)];
    }

    QSeries truncate(int prec) const {
        QSeries out(std::min(prec, precision()));
        for (int n = 0; n <= out.precision(); ++n) out.coeffs_[n] = coeffs_[n];
        return out;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries out(std::min(a.precision(), b.precision()));
        for (int n = 0; n <= out.precision(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return out;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        QSeries out(std::min(a.precision(), b.precision()));
        for (int n = 0; n <= out.precision(); ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return out;
    }
    friend QSeries operator-(const QSeries& a) {
        QSeries out(a.precision());
        for (int n = 0; n <= out.precision(); ++n) out.coeffs_[n] = -a.coeffs_[n];
        return out;
    }
    // Cauchy product truncated at the common precision.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries out(std::min(a.precision(), b.precision()));
        for (int i = 0; i <= out.precision(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (int j = 0; i + j <= out.precision(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }
    friend QSeries operator*(const Rational& c, const QSeries& a) {
        QSeries out(a.precision());
        for (int n = 0; n <= out.precision(); ++n) out.coeffs_[n] = c * a.coeffs_[n];
        return out;
    }
    friend QSeries operator*(const QSeries& a, const Rational& c) { return c * a; }

    QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
    QSeries& operator-=(const QSeries& b) { return *this = *this - b; }

    // Equality up to the common precision.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        int p = std::min(a.precision(), b.precision());
        for (int n = 0; n <= p; ++n)
            if (a.coeffs_[n] != b.coeffs_[n]) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        bool first = true;
        for (int n = 0; n <= precision(); ++n) {
            if (coeffs_[n] == 0) continue;
            Rational c = coeffs_[n];
            if (first) {
                if (c < 0) { out += "-"; c = -c; }
            } else {
                out += (c < 0) ? " - " : " + ";
                if (c < 0) c = -c;
            }
            first = false;
            std::string cs = to_string(c);
            if (n == 0) out += cs;
            else {
                if (cs != "1") out += cs + "*";
                out += "q";
                if (n > 1) out += "^" + std::to_string(n);
            }
        }
        if (first) out = "0";
        out += " + O(q^" + std::to_string(precision() + 1) + ")";
        return out;
    }

private:
    std::vector<Rational> coeffs_;
};

// q -> q^m, a ring endomorphism of the truncated series ring.
inline QSeries substitute_power(const QSeries& f, int m) {
    if (m < 1) throw std::invalid_argument("substitute_power requires m >= 1");
    QSeries out(f.precision());
    for (int n = 0; n <= f.precision() / m; ++n) out.coeff(n * m) = f.coeff(n);
    return out;
}

// d_q = q d/dq, a derivation of the series ring.
inline QSeries dq_series(const QSeries& f) {
    QSeries out(f.precision());
    for (int n = 1; n <= f.precision(); ++n) out.coeff(n) = rat(n) * f.coeff(n);
    return out;
}

} // namespace bibracket

#endif
