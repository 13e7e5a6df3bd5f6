#ifndef BIBRACKET_ARITH_HPP
#define BIBRACKET_ARITH_HPP

#include <mutex>
#include <vector>

#include "bibracket/rational.hpp"

namespace bibracket {

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Generalized binomial coefficient as a rational; 0 for k < 0 and for
// k > n when n >= 0.
inline Rational binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    Rational b = 1;
    for (long i = 0; i < k; ++i) b *= rat(n - i, i + 1);
    return b;
}

// Bernoulli numbers with the convention X/(e^X-1) = sum B_n/n! X^n,
// so B_1 = -1/2. Computed by the standard recurrence
//   B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k
// and cached; the cache is guarded for concurrent callers.
inline Rational bernoulli(unsigned k) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= k) {
        unsigned n = static_cast<unsigned>(cache.size());
        Rational sum = 0;
        for (unsigned j = 0; j < n; ++j)
            sum += binomial(static_cast<long>(n) + 1, static_cast<long>(j)) * cache[j];
        cache.push_back(-sum / rat(static_cast<long>(n) + 1));
    }
    return cache[k];
}

} // namespace bibracket

#endif
