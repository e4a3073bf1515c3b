#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "mcq/chowfy.hpp"
#include "mcq/errors.hpp"
#include "mcq/eulerian.hpp"
#include "mcq/permstat.hpp"

using namespace mcq;

namespace {

LaurentQT at_q1(const LaurentQT& f) {
    LaurentQT out;
    for (const auto& [e, c] : f.coeffs()) out += LaurentQT::monomial(e, QPoly(c.eval_one()));
    return out;
}

std::map<int, int> degree_counts(const std::vector<FYMonomial>& basis) {
    std::map<int, int> out;
    for (const auto& m : basis) out[m.degree()]++;
    return out;
}

LaurentQT tpow(int e, long c = 1) { return LaurentQT::monomial(e, QPoly(c)); }

}  // namespace

TEST_CASE("uniform matroid construction") {
    auto u23 = uniform_matroid(2, 3);
    CHECK(u23.rank() == 2);
    CHECK(u23.flats().size() == 5);
    CHECK(u23.rank_of(0) == 0);
    CHECK(u23.rank_of(0b001) == 1);
    CHECK(u23.rank_of(0b111) == 2);
    CHECK(uniform_matroid(1, 3).flats().size() == 2);
    CHECK(uniform_matroid(3, 3).flats().size() == 8);
    CHECK_THROWS(uniform_matroid(4, 3));
}

TEST_CASE("flats file validation") {
    CHECK(from_flats_json(R"({"ground":3,"flats":[[],[1],[2],[3],[1,2,3]]})").rank() == 2);
    CHECK_THROWS_AS(from_flats_json(R"({"ground":3,"flats":[[],[1],[1,2,3]]})"), validation_error);
    CHECK_THROWS_AS(from_flats_json(R"({"ground":3,"flats":[[],[1],[2],[3]]})"), validation_error);
    CHECK_THROWS_AS(from_flats_json(R"({"ground":3,"flats":[[1],[2],[3],[1,2,3]]})"),
                    validation_error);
    CHECK_THROWS_AS(from_flats_json(R"({"ground":3,"flats":[[],[1],[1],[2],[3],[1,2,3]]})"),
                    validation_error);
    CHECK_THROWS_AS(from_flats_json("not json"), validation_error);
}

TEST_CASE("FY basis oracle counts") {
    CHECK(degree_counts(fy_basis(uniform_matroid(3, 3), false)) ==
          std::map<int, int>{{0, 1}, {1, 4}, {2, 1}});
    CHECK(degree_counts(fy_basis(uniform_matroid(2, 3), true)) ==
          std::map<int, int>{{0, 1}, {1, 4}, {2, 1}});
    for (int n = 1; n <= 5; ++n) {
        auto b = fy_basis(uniform_matroid(1, n), false);
        REQUIRE(b.size() == 1);
        CHECK(b[0].chain.empty());
    }
}

TEST_CASE("Hilbert series oracle values") {
    CHECK(hilb(uniform_matroid(3, 3), false) == tpow(0) + tpow(1, 4) + tpow(2));
    CHECK(hilb(uniform_matroid(2, 3), true) == tpow(0) + tpow(1, 4) + tpow(2));
    CHECK(hilb(uniform_matroid(1, 4), false) == LaurentQT(1));
}

TEST_CASE("Hilbert palindromicity") {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            auto m = uniform_matroid(r, n);
            CHECK(hilb(m, false).palindromic_t(r - 1));
            CHECK(hilb(m, true).palindromic_t(r));
        }
}

TEST_CASE("q-uniform Hilbert series") {
    CHECK(hilb_q_uniform(3, 3, false) ==
          LaurentQT(1) + LaurentQT::monomial(1, QPoly(2) + QPoly::monomial(1) + QPoly::monomial(2)) +
              LaurentQT::monomial(2));
    CHECK(hilb_q_uniform(2, 2, false) == tpow(0) + tpow(1));
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r) {
            CHECK(at_q1(hilb_q_uniform(r, n, false)) == hilb(uniform_matroid(r, n), false));
            CHECK(at_q1(hilb_q_uniform(r, n, true)) == hilb(uniform_matroid(r, n), true));
        }
}

TEST_CASE("graded Frobenius oracle values") {
    CHECK(grfrob_uniform(3, 3, false) == Q(3));
    CHECK(grfrob_uniform(2, 3, false) == h_complete(3).scaled(tpow(0) + tpow(1)));
    CHECK(grfrob_uniform(2, 2, true) == Qtilde(2));
}

TEST_CASE("specialization bridge") {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r)
            for (bool aug : {false, true})
                CHECK(ps_normalized(grfrob_uniform(r, n, aug), n) == hilb_q_uniform(r, n, aug));
}

TEST_CASE("refined Frobenius equals Eulerian slices") {
    CHECK(grfrob_refined(3, 1, 1, false) == Q_njk(3, 1, 1));
    for (int n = 1; n <= 4; ++n) CHECK(grfrob_refined(n, 0, n, false) == f_basis(0, n));
    CHECK(grfrob_refined(2, 1, 0, true) == Qtilde_njk(2, 1, 0));
    for (int n = 1; n <= 5; ++n)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k)
                for (bool aug : {false, true}) CHECK_NOTHROW(grfrob_refined(n, j, k, aug));
}

TEST_CASE("Charney-Davis quantities") {
    CHECK(cd(uniform_matroid(3, 3), false) == 2);
    CHECK(cd(uniform_matroid(2, 3), true) == 2);
    for (int n = 2; n <= 6; ++n) CHECK(cd(uniform_matroid(2, n), false) == 0);
}
