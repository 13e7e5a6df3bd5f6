#ifndef BIBRACKET_LINALG_HPP
#define BIBRACKET_LINALG_HPP

#include <string>
#include <vector>

#include "bibracket/rational.hpp"

namespace bibracket {

// Rows are generators (labelled), columns are coefficient indices. All
// rank/kernel questions are about rational combinations of the rows.
struct CoeffMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> rows;

    void add_row(std::string label, std::vector<Rational> row) {
        labels.push_back(std::move(label));
        rows.push_back(std::move(row));
    }
    size_t nrows() const { return rows.size(); }
    size_t ncols() const { return rows.empty() ? 0 : rows[0].size(); }
};

struct RankKernel {
    int rank = 0;
    // vectors v with sum_i v[i] * row_i = 0, one per dependent row
    std::vector<std::vector<Rational>> kernel;
};

// Fraction-free Bareiss elimination on the transpose (unknowns = row
// coefficients), first-nonzero pivoting, exact kernel by back-substitution.
inline RankKernel rank_kernel(const CoeffMatrix& M) {
    size_t R = M.nrows(), C = M.ncols();
    RankKernel out;
    if (R == 0) return out;

    // A = M^T scaled to integers row-wise (scaling never changes the kernel)
    std::vector<std::vector<Integer>> A(C, std::vector<Integer>(R));
    for (size_t i = 0; i < C; ++i) {
        Integer lcm(1);
        for (size_t j = 0; j < R; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), M.rows[j][i].get_den().get_mpz_t());
        for (size_t j = 0; j < R; ++j) {
            Rational v = M.rows[j][i] * Rational(lcm);
            A[i][j] = v.get_num();
        }
    }

    std::vector<size_t> pivot_row_of; // per pivot step, the row used
    std::vector<size_t> pivot_col;    // per pivot step, the column (unknown)
    std::vector<bool> used(C, false);
    Integer prev(1);
    for (size_t c = 0; c < R; ++c) {
        size_t pr = C;
        for (size_t i = 0; i < C; ++i)
            if (!used[i] && A[i][c] != 0) { pr = i; break; }
        if (pr == C) continue;
        used[pr] = true;
        // every remaining row is updated, including zero-multiplier rows:
        // the pivot/prev rescaling is what keeps later divisions exact
        for (size_t i = 0; i < C; ++i) {
            if (used[i]) continue;
            for (size_t j = c + 1; j < R; ++j) {
                Integer num = A[pr][c] * A[i][j] - A[i][c] * A[pr][j];
                mpz_divexact(A[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            A[i][c] = 0;
        }
        prev = A[pr][c];
        pivot_row_of.push_back(pr);
        pivot_col.push_back(c);
    }
    out.rank = static_cast<int>(pivot_col.size());

    // free unknowns -> kernel basis, solving the triangular system upward
    std::vector<bool> is_pivot(R, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t f = 0; f < R; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(R);
        v[f] = 1;
        for (size_t t = pivot_col.size(); t-- > 0;) {
            size_t c = pivot_col[t], r = pivot_row_of[t];
            if (c > f) continue; // unknowns beyond f are zero in this vector
            Rational s = 0;
            for (size_t j = c + 1; j <= f; ++j)
                if (v[j] != 0) s += Rational(A[r][j]) * v[j];
            v[c] = -s / Rational(A[r][c]);
        }
        // clear denominators for readable reports
        Integer lcm(1);
        for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        for (auto& x : v) x *= Rational(lcm);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

struct ExpressResult {
    bool independent = true;
    std::vector<Rational> coeffs; // target = sum coeffs[i] * generator_i
};

// Solve target = sum c_i g_i from the coefficient rows; "independent" when
// the target is not in the span.
inline ExpressResult express_in_rows(const CoeffMatrix& generators,
                                     const std::vector<Rational>& target) {
    CoeffMatrix M = generators;
    M.add_row("target", target);
    RankKernel rk = rank_kernel(M);
    size_t R = generators.nrows();
    ExpressResult res;
    for (const auto& v : rk.kernel) {
        if (v[R] == 0) continue;
        res.independent = false;
        res.coeffs.assign(R, Rational(0));
        for (size_t i = 0; i < R; ++i) res.coeffs[i] = -v[i] / v[R];
        break;
    }
    return res;
}

} // namespace bibracket

#endif
