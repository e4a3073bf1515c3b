#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mcq/exact.hpp"

using namespace mcq;

namespace {

QPoly q(int e, long c = 1) { return QPoly::monomial(e, c); }

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("q-integers and factorials") {
    CHECK(q_int(0) == QPoly(0));
    CHECK(q_int(1) == QPoly(1));
    CHECK(q_int(3) == q(0) + q(1) + q(2));
    CHECK(q_factorial(0) == QPoly(1));
    CHECK(q_factorial(3) == q(0) + q(1, 2) + q(2, 2) + q(3));
    CHECK(q_multinomial({1, 1, 1}) == q_factorial(3));
}

TEST_CASE("q-binomial oracle values") {
    CHECK(q_binomial(4, 2) == q(0) + q(1) + q(2, 2) + q(3) + q(4));
    for (int n = 0; n <= 10; ++n) CHECK(q_binomial(n, 0) == QPoly(1));
}

TEST_CASE("q-binomial symmetry, q=1, Pascal recurrence") {
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
            CHECK(q_binomial(n, k).eval_one() == Int(binom(n, k)));
            if (k >= 1 && k < n)
                CHECK(q_binomial(n, k) ==
                      q_binomial(n - 1, k - 1) + q(k) * q_binomial(n - 1, k));
        }
}

TEST_CASE("polynomial string forms") {
    CHECK((q(0) + q(1, 2) + q(3)).str() == "1+2q+q^3");
    QPoly zero;
    CHECK(zero.str() == "0");
    LaurentQT f = LaurentQT(1) + LaurentQT::monomial(1, q(0, 2) + q(1)) + LaurentQT::monomial(2);
    CHECK(f.str() == "1+(2+q)t+t^2");
}

TEST_CASE("exact division") {
    QPoly a = (q(1) + 1) * (q(2) + q(1) + 1);
    CHECK(a.divide_exact(q(1) + 1) == q(2) + q(1) + 1);
    CHECK_THROWS_AS((q(2) + 1).divide_exact(q(1) + 1), identity_error);
}

TEST_CASE("QFrac canonical reduction") {
    QFrac a(q(2) - 1, q(1) - 1);
    CHECK(a == QFrac(q(1) + 1));
    QFrac b(QPoly(0) - q(1) - 1, QPoly(0) - 1);
    CHECK(b == QFrac(q(1) + 1));
    CHECK(QFrac(1) / QFrac(q_factorial(2)) + QFrac(0) == QFrac(QPoly(1), q(1) + 1));
}

TEST_CASE("determinant oracle values") {
    // 1x1 [1/[2]_q!] = 1/(1+q)
    QFrac inv2(QPoly(1), q_factorial(2));
    CHECK(det_qfrac({{inv2}}) == inv2);
    // 2x2 [[1/[2]!, 1],[1/[3]!, 1]] = 1/[2]! - 1/[3]!
    QFrac inv3(QPoly(1), q_factorial(3));
    CHECK(det_qfrac({{inv2, QFrac(1)}, {inv3, QFrac(1)}}) == inv2 - inv3);
    // identity 3x3
    std::vector<std::vector<QFrac>> id(3, std::vector<QFrac>(3, QFrac(0)));
    for (int i = 0; i < 3; ++i) id[i][i] = QFrac(1);
    CHECK(det_qfrac(id) == QFrac(1));
    // empty matrix is the empty product
    CHECK(det_qfrac({}) == QFrac(1));
}

TEST_CASE("LaurentQT ring axioms on randomized triples") {
    std::mt19937 rng(20240817);
    auto rnd = [&] {
        LaurentQT f;
        std::uniform_int_distribution<int> te(-2, 3), qe(0, 3), c(-4, 4);
        for (int i = 0; i < 4; ++i) f += LaurentQT::monomial(te(rng), q(qe(rng), c(rng)));
        return f;
    };
    for (int trial = 0; trial < 50; ++trial) {
        LaurentQT a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("Laurent reversal and palindromicity") {
    LaurentQT f = LaurentQT(1) + LaurentQT::monomial(1, q(0, 4)) + LaurentQT::monomial(2);
    CHECK(f.palindromic_t(2));
    CHECK(!f.palindromic_t(3));
    CHECK(f.reverse_t(3) == f.shift_t(1));
    CHECK(f.eval_t_minus_one() == q(0, -2));
    CHECK(f.eval_t1_q1() == 6);
}

TEST_CASE("QPoly reversal") {
    QPoly p = q(0, 2) + q(1, 3);
    CHECK(p.reverse(1) == q(0, 3) + q(1, 2));
    CHECK(p.reverse(2) == q(1, 3) + q(2, 2));
}
