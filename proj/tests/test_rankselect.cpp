#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mcq/chowfy.hpp"
#include "mcq/errors.hpp"
#include "mcq/rankselect.hpp"

using namespace mcq;

namespace {

uint32_t mk(std::initializer_list<int> xs) { return list_to_subset(std::vector<int>(xs)); }

const char* kLine3 =
    R"({"ground":4,"flats":[[],[1],[2],[3],[4],[1,2,3],[1,4],[2,4],[3,4],[1,2,3,4]]})";
const char* kDoubled = R"({"ground":4,"flats":[[],[1,2],[3],[4],[1,2,3,4]]})";

std::vector<int> identity_perm(int n) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    return g;
}

}  // namespace

TEST_CASE("flag vectors on the Boolean lattice") {
    auto b3 = uniform_matroid(3, 3);
    CHECK(flag_f(b3, mk({1, 2})) == 6);
    CHECK(flag_h(b3, mk({1, 2})) == 1);
    CHECK(flag_f(b3, 0) == 1);
    CHECK(flag_h(b3, 0) == 1);
    CHECK(flag_f(b3, mk({1})) == 3);
    CHECK(flag_h(b3, mk({1})) == 2);
}

TEST_CASE("alpha/beta for the Boolean lattice") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(alpha_boolean(0, n) == h_complete(n));
        CHECK(beta_boolean(0, n) == h_complete(n));
    }
    CHECK(beta_boolean(mk({2}), 3) == f_basis(mk({1}), 3) + f_basis(mk({2}), 3));
    CHECK(beta_boolean(mk({1, 2}), 3) == f_basis(mk({1, 2}), 3));
    for (int n = 1; n <= 7; ++n)
        for (uint32_t s = 0; s < (1u << (n - 1)); ++s) CHECK_NOTHROW(beta_boolean(s, n));
}

TEST_CASE("Moebius consistency and flag_h nonnegativity") {
    auto check_matroid = [](const MatroidFlats& m) {
        uint32_t all = m.rank() >= 1 ? (1u << (m.rank() - 1)) - 1 : 0;
        for (uint32_t s = 0; s <= all; ++s) {
            Int sum = 0;
            for (uint32_t t = s;; t = (t - 1) & s) {
                sum += flag_h(m, t);
                if (t == 0) break;
            }
            CHECK(sum == flag_f(m, s));
            CHECK(flag_h(m, s) >= 0);
        }
    };
    check_matroid(uniform_matroid(3, 4));
    check_matroid(uniform_matroid(4, 4));
    check_matroid(from_flats_json(kLine3));
    check_matroid(from_flats_json(kDoubled));
}

TEST_CASE("fixed chain counts") {
    auto b3 = uniform_matroid(3, 3);
    auto swap12 = parse_cycles("(1 2)", 3);
    auto rot = parse_cycles("(1 2 3)", 3);
    CHECK(fixed_chain_count(b3, identity_perm(3), mk({2})) == flag_f(b3, mk({2})));
    CHECK(fixed_chain_count(b3, swap12, mk({2})) == 1);
    CHECK(fixed_chain_count(b3, rot, mk({1})) == 0);
    CHECK_THROWS_AS(fixed_chain_count(from_flats_json(kDoubled), parse_cycles("(1 3)", 4), 0),
                    validation_error);
}

TEST_CASE("cd_character oracle values") {
    auto b3 = uniform_matroid(3, 3);
    CHECK(cd_character(b3, identity_perm(3), false) == -2);
    CHECK(cd_character(b3, parse_cycles("(1 2)", 3), false) == 0);
    CHECK(cd_character(uniform_matroid(2, 3), identity_perm(3), true) == -2);
}

TEST_CASE("cd_character equals Hilbert series at t=-1 for g=identity") {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r)
            for (bool aug : {false, true}) {
                auto m = uniform_matroid(r, n);
                CHECK(cd_character(m, identity_perm(n), aug) ==
                      hilb(m, aug).eval_t_minus_one().coeff(0));
            }
}

TEST_CASE("cd_character identities over group elements") {
    std::mt19937 rng(424242);
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            auto m = uniform_matroid(r, n);
            std::vector<std::vector<int>> gens;
            auto swap12 = identity_perm(n);
            std::swap(swap12[0], swap12[1]);
            gens.push_back(swap12);
            std::vector<int> cyc(n);
            for (int i = 0; i < n; ++i) cyc[i] = i % n + 1 == n ? 1 : i + 2;
            gens.push_back(cyc);
            for (int trial = 0; trial < 10; ++trial) {
                auto g = identity_perm(n);
                std::shuffle(g.begin(), g.end(), rng);
                gens.push_back(g);
            }
            for (const auto& g : gens)
                for (bool aug : {false, true}) CHECK_NOTHROW(cd_character(m, g, aug));
        }
}

TEST_CASE("cd_character identities on file-ingested matroids") {
    auto line3 = from_flats_json(kLine3);
    CHECK(line3.rank() == 3);
    for (const char* cyc : {"", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)", "(2 3)"}) {
        auto g = parse_cycles(cyc, 4);
        for (bool aug : {false, true}) CHECK_NOTHROW(cd_character(line3, g, aug));
    }
    auto doubled = from_flats_json(kDoubled);
    CHECK(doubled.rank() == 2);
    for (const char* cyc : {"", "(1 2)", "(3 4)", "(1 2)(3 4)"}) {
        auto g = parse_cycles(cyc, 4);
        for (bool aug : {false, true}) CHECK_NOTHROW(cd_character(doubled, g, aug));
    }
}
