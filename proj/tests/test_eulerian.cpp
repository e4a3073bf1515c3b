#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mcq/errors.hpp"
#include "mcq/eulerian.hpp"
#include "mcq/permstat.hpp"

using namespace mcq;

namespace {

Subset mk(std::initializer_list<int> xs) { return list_to_subset(std::vector<int>(xs)); }

QSymElem F(Subset s, int n) { return f_basis(s, n); }

LaurentQT tpow(int e, long c = 1) { return LaurentQT::monomial(e, QPoly(c)); }

QSymElem reverse_t_all(const QSymElem& x, int d) {
    QSymElem out;
    for (const auto& [deg, terms] : x.graded())
        for (const auto& [s, c] : terms) out.add_term(deg, s, c.reverse_t(d));
    return out;
}

}  // namespace

TEST_CASE("Q family oracle values") {
    CHECK(Q(0) == QSymElem(1));
    CHECK(Q(2) == F(0, 2).scaled(tpow(0) + tpow(1)));
    CHECK(Q0(3) == F(0, 3).scaled(tpow(1) + tpow(2)));
    CHECK(Q0(1).is_zero());
    CHECK(Q_njk(3, 1, 1) == F(0, 3) + F(mk({1}), 3) + F(mk({2}), 3));
}

TEST_CASE("Qtilde oracle values and route agreement") {
    CHECK(Qtilde(1) == F(0, 1).scaled(tpow(0) + tpow(1)));
    CHECK(Qtilde(2) == F(0, 2).scaled(tpow(0) + tpow(1, 2) + tpow(2)) + F(mk({1}), 2).scaled(tpow(1)));
    for (int n = 1; n <= 7; ++n) CHECK_NOTHROW(Qtilde(n));
    CHECK(Qtilde_njk(2, 1, 0) == F(0, 2));
}

TEST_CASE("refined Qtilde slices recombine") {
    for (int n = 1; n <= 5; ++n) {
        QSymElem total;
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k)
                total += Qtilde_njk(n, j, k).scaled(
                    LaurentQT::monomial(j, QPoly::monomial(k)));
        CHECK(total == Qtilde_refined(n));
    }
}

TEST_CASE("Qtilde fix2-zero slice equals shifted Q slice") {
    for (int n = 1; n <= 6; ++n)
        for (int j = 1; j <= n; ++j) {
            QSymElem qnj;  // Q_{n,j-1} = exc = j-1 slice over all fix counts
            for (int k = 0; k <= n; ++k) qnj += Q_njk(n, j - 1, k);
            CHECK(Qtilde_njk(n, j, 0) == qnj);
        }
}

TEST_CASE("palindromicity of Q_njk") {
    for (int n = 0; n <= 7; ++n)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k + j <= n; ++k) CHECK(Q_njk(n, j, k) == Q_njk(n, n - k - j, k));
}

TEST_CASE("extraction lemmas") {
    for (int n = 0; n <= 7; ++n)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                CHECK(Q_njk(n, j, k) == h_complete(k) * Q_njk(n - k, j, 0));
                if (n >= 1 && n - k >= 1)
                    CHECK(Qtilde_njk(n, j, k) == h_complete(k) * Qtilde_njk(n - k, j, 0));
            }
}

TEST_CASE("Qtilde is t-palindromic of degree n") {
    for (int n = 1; n <= 7; ++n) {
        QSymElem qt = Qtilde(n);
        CHECK(reverse_t_all(qt, n) == qt);
    }
}

TEST_CASE("Q recurrence") {
    for (int n = 0; n <= 7; ++n) {
        QSymElem rhs = h_complete(n);
        for (int j = 0; j <= n - 2; ++j) {
            LaurentQT geom;
            for (int e = 1; e <= n - j - 1; ++e) geom += tpow(e);
            rhs += (h_complete(n - j) * Q(j)).scaled(geom);
        }
        CHECK(rhs == Q(n));
    }
}

TEST_CASE("Q_njk slices are symmetric functions") {
    for (int n = 0; n <= 6; ++n)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) CHECK(is_symmetric(Q_njk(n, j, k)));
}

TEST_CASE("generating function check") {
    CHECK(gf_check(0));
    CHECK(gf_check(2));
    CHECK(gf_check(6));
    CHECK_THROWS_AS(gf_check(series_guard() + 1), resource_error);
}

TEST_CASE("difference formulas") {
    CHECK(delta_chow(3, 1) == h_complete(3).scaled(tpow(1)));
    CHECK(delta_chow(3, 2) ==
          F(0, 3).scaled(tpow(1) + tpow(2)) + (F(mk({1}), 3) + F(mk({2}), 3)).scaled(tpow(1)));
    CHECK(delta_aug(2, 1) == F(0, 2).scaled(tpow(1) + tpow(2)) + F(mk({1}), 2).scaled(tpow(1)));
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r <= n - 1; ++r) {
            CHECK_NOTHROW(delta_chow(n, r));
            CHECK_NOTHROW(delta_aug(n, r));
        }
}
