#include <catch2/catch_amalgamated.hpp>

#include "bibracket/eval.hpp"
#include "bibracket/partition.hpp"

using namespace bibracket;

namespace {

// all bi-words of total weight exactly k (s_j >= 1, r_j >= 0, no
// admissibility restriction)
std::vector<BiWord> all_biwords(int k) {
    std::vector<BiWord> out;
    BiWord cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        for (int s = 1; s <= rest; ++s)
            for (int r = 0; s + r <= rest; ++r) {
                cur.push_back({s, r});
                self(self, rest - s - r);
                cur.pop_back();
            }
    };
    rec(rec, k);
    return out;
}

} // namespace

TEST_CASE("divisor-sum and partition-count series") {
    Evaluator ev(12);
    SECTION("[1] counts divisors") {
        QSeries s = ev.bibracket({{1, 0}});
        // sigma_0(n) for n = 1..12
        int expected[] = {1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6};
        for (int n = 1; n <= 12; ++n) CHECK(s.coeff(n) == rat(expected[n - 1]));
    }
    SECTION("[2] is the weighted divisor sum sigma_1") {
        QSeries s = ev.bibracket({{2, 0}});
        int expected[] = {1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28};
        for (int n = 1; n <= 12; ++n) CHECK(s.coeff(n) == rat(expected[n - 1]));
    }
    SECTION("sum over [1^l] generates all partitions") {
        QSeries total(12);
        for (int l = 1; l <= 12; ++l)
            total += ev.bibracket(BiWord(static_cast<size_t>(l), BiLetter{1, 0}));
        int partitions[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
        for (int n = 1; n <= 12; ++n) CHECK(total.coeff(n) == rat(partitions[n - 1]));
    }
    SECTION("empty word is the unit") {
        CHECK(ev.bibracket({}) == QSeries::constant(1, 12));
    }
}

TEST_CASE("fast path agrees with the enumeration oracle") {
    Evaluator ev(20);
    SECTION("selected words, exact to full precision") {
        for (const BiWord& w :
             {BiWord{{1, 0}}, BiWord{{2, 1}}, BiWord{{3, 0}, {1, 2}}, BiWord{{1, 1}, {1, 1}},
              BiWord{{2, 0}, {2, 0}, {1, 0}}, BiWord{{4, 2}}, BiWord{{1, 3}, {2, 0}, {1, 1}}}) {
            QSeries fast = ev.bibracket(w);
            QSeries oracle = ev.bibracket_oracle(w);
            INFO("word " << print_word(w));
            CHECK(fast == oracle);
        }
    }
    SECTION("sweep of all bi-words of weight <= 5") {
        for (int k = 1; k <= 5; ++k)
            for (const BiWord& w : all_biwords(k)) {
                INFO("word " << print_word(w));
                CHECK(ev.bibracket(w) == ev.bibracket_oracle(w));
            }
    }
}

TEST_CASE("tri-brackets generalize bi-brackets") {
    Evaluator ev(16);
    SECTION("e = 1 componentwise reduces to the bi-bracket") {
        TriIndex t{{2, 1}, {0, 1}, {1, 1}};
        CHECK(ev.tribracket(t) == ev.bibracket({{2, 0}, {1, 1}}));
    }
    SECTION("kernel exponent 2 in length one") {
        // sum_{v>=2} (v-1) q^{uv}: coefficient of q^n is sum_{uv=n, v>=2} (v-1)
        TriIndex t{{1}, {0}, {2}};
        QSeries s = ev.tribracket(t);
        CHECK(s.coeff(1) == 0);
        CHECK(s.coeff(2) == rat(1));  // v=2,u=1
        CHECK(s.coeff(6) == rat(1 + 2 + 5)); // v=2,3,6
    }
    SECTION("index validation") {
        CHECK_THROWS_AS(ev.tribracket(TriIndex{{2}, {0, 1}, {1}}), std::invalid_argument);
        CHECK_THROWS_AS(ev.tribracket(TriIndex{{2}, {0}, {0}}), std::invalid_argument);
    }
}

TEST_CASE("q->1 limit index") {
    auto [pre, idx] = z_limit_index(BiWord{{4, 1}, {3, 2}});
    CHECK(pre == rat(1, 2));
    CHECK(idx == std::vector<int>{3, 1});
    CHECK_THROWS_AS(z_limit_index(BiWord{{2, 1}}), std::domain_error);
    CHECK_THROWS_AS(z_limit_index(BiWord{}), std::invalid_argument);
}

TEST_CASE("partition relation examples, term for term") {
    SECTION("length-two displays") {
        CHECK(partition_map(BiWord{{1, 1}, {1, 1}}) ==
              parse_lincomb("[2,2] + 2 * [3,1]"));
        CHECK(partition_map(BiWord{{3, 0}, {3, 0}}) ==
              parse_lincomb("6 * [1,1 | 0,4] - 3 * [1,1 | 1,3] + [1,1 | 2,2]"));
        CHECK(partition_map(BiWord{{2, 1}, {2, 1}}) ==
              parse_lincomb("-2 * [2,2 | 0,2] + [2,2 | 1,1] - 4 * [3,1 | 0,2] + 2 * [3,1 | 1,1]"));
        CHECK(partition_map(BiWord{{1, 2}, {2, 3}}) ==
              parse_lincomb("-[4,3 | 0,1] + [4,3 | 1,0] - 4 * [5,2 | 0,1] + 4 * [5,2 | 1,0]"
                            " - 10 * [6,1 | 0,1] + 10 * [6,1 | 1,0]"));
    }
    SECTION("[2,2] rewritten through conjugation") {
        CHECK(partition_map(BiWord{{2, 0}, {2, 0}}) ==
              parse_lincomb("[1,1 | 1,1] - 2 * [1,1 | 0,2]"));
    }
    SECTION("length one swaps s-1 and r") {
        CHECK(partition_map(BiWord{{1, 1}}) == BiLinComb(BiWord{{2, 0}}));
        CHECK(partition_map(BiWord{{5, 2}}) == BiLinComb(BiWord{{3, 4}}));
    }
    SECTION("all-ones family identity") {
        for (int n = 1; n <= 4; ++n)
            for (int j = 1; j <= n; ++j) {
                BiWord w(static_cast<size_t>(n), BiLetter{1, 0});
                w[static_cast<size_t>(j) - 1].r = 1;
                BiLinComb rhs;
                for (int k = 1; k <= n - j + 1; ++k) {
                    BiWord b(static_cast<size_t>(n), BiLetter{1, 0});
                    b[static_cast<size_t>(k) - 1].s = 2;
                    rhs.add(b, 1);
                }
                INFO("n=" << n << " j=" << j);
                CHECK(partition_map(w) == rhs);
            }
    }
}

TEST_CASE("partition map is an eval-preserving involution") {
    Evaluator ev(24);
    for (int k = 1; k <= 5; ++k)
        for (const BiWord& w : all_biwords(k)) {
            INFO("word " << print_word(w));
            CHECK(partition_map(partition_map(w)) == BiLinComb(w));
            CHECK(ev.lincomb(partition_map(w)) == ev.bibracket(w));
        }
}

TEST_CASE("d_q at word level matches d_q of the series") {
    Evaluator ev(20);
    for (const BiWord& w : {BiWord{{1, 0}}, BiWord{{2, 0}}, BiWord{{2, 1}},
                            BiWord{{2, 0}, {1, 0}}, BiWord{{3, 1}, {1, 2}}}) {
        INFO("word " << print_word(w));
        CHECK(ev.lincomb(dq_word(w)) == dq_series(ev.bibracket(w)));
    }
}
