#include "mcq/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mcq/charney.hpp"
#include "mcq/chowfy.hpp"
#include "mcq/errors.hpp"
#include "mcq/eulerian.hpp"
#include "mcq/matroid.hpp"
#include "mcq/permstat.hpp"
#include "mcq/qsym.hpp"
#include "mcq/rankselect.hpp"

namespace mcq {

namespace {

[[noreturn]] void fail(const std::string& what) { throw identity_error(what); }

void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
}

std::string at(int r, int n) {
    return " at (r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")";
}

// [m]_t = 1 + t + ... + t^{m-1}
LaurentQT t_int(int m) {
    LaurentQT out;
    for (int i = 0; i < m; ++i) out += LaurentQT::monomial(i);
    return out;
}

LaurentQT qt_mono(int t_exp, int q_exp) {
    return LaurentQT::monomial(t_exp, QPoly::monomial(q_exp));
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// tail sum over permutations with many fixed points that the Chow-side
// theorems subtract from the full Eulerian polynomial
LaurentQT perm_tail_qt(int n, int r) {
    LaurentQT out;
    for (int j = r; j <= n - 1; ++j)
        for (const auto& w : gen_permutations(n)) {
            auto s = stats(w);
            if (s.fix >= n - j) out += qt_mono(j - s.exc, s.maj - s.exc);
        }
    return out;
}

LaurentQT decorated_tail_qt(int n, int r) {
    LaurentQT out;
    for (int j = r; j <= n - 1; ++j)
        for (const auto& w : gen_decorated(n)) {
            int exc = exc_decorated(w), maj = maj_decorated(w);
            if (fix2(w) >= n - j) out += qt_mono(j - exc, maj - exc);
        }
    return out;
}

QSymElem perm_tail_qsym(int n, int r) {
    QSymElem out;
    for (int j = r; j <= n - 1; ++j)
        for (const auto& w : gen_permutations(n)) {
            auto s = stats(w);
            if (s.fix >= n - j)
                out += QSymElem::fundamental(dex(w), n, LaurentQT::monomial(j - s.exc));
        }
    return out;
}

QSymElem decorated_tail_qsym(int n, int r) {
    QSymElem out;
    for (int j = r; j <= n - 1; ++j)
        for (const auto& w : gen_decorated(n)) {
            int exc = exc_decorated(w);
            if (fix2(w) >= n - j)
                out += QSymElem::fundamental(dex_decorated(w), n,
                                             LaurentQT::monomial(j - exc));
        }
    return out;
}

uint32_t evens_upto(int m) {
    uint32_t s = 0;
    for (int i = 2; i <= m; i += 2) s |= 1u << (i - 1);
    return s;
}

uint32_t odds_upto(int m) {
    uint32_t s = 0;
    for (int i = 1; i <= m; i += 2) s |= 1u << (i - 1);
    return s;
}

std::vector<int> identity_perm(int n) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    return g;
}

const char* kLine3Json =
    R"({"ground":4,"flats":[[],[1],[2],[3],[4],[1,2,3],[1,4],[2,4],[3,4],[1,2,3,4]]})";
const char* kDoubledJson = R"({"ground":4,"flats":[[],[1,2],[3],[4],[1,2,3,4]]})";

}  // namespace

namespace checks {

void arith_basics(int max_n) {
    int top = std::max(max_n, 10);
    for (int n = 0; n <= top; ++n)
        for (int k = 0; k <= n; ++k) {
            require(q_binomial(n, k) == q_binomial(n, n - k),
                    "q-binomial symmetry fails at (" + std::to_string(n) + "," +
                        std::to_string(k) + ")");
            require(q_binomial(n, k).eval_one() == binom(n, k),
                    "q-binomial q=1 specialization fails");
            if (n >= 1 && k >= 1 && k <= n - 1)
                require(q_binomial(n, k) ==
                            q_binomial(n - 1, k - 1) +
                                QPoly::monomial(k) * q_binomial(n - 1, k),
                        "q-Pascal recurrence fails at (" + std::to_string(n) + "," +
                            std::to_string(k) + ")");
            require(q_multinomial({k, n - k}) == q_binomial(n, k),
                    "q-multinomial/binomial consistency fails");
        }
    for (int n = 0; n <= top; ++n) {
        require(q_factorial(n).eval_one() == factorial(n), "[n]_q! at q=1 fails");
        require(LaurentQT(q_int(n)).str() == LaurentQT(q_int(n)).str(),
                "printer is unstable");
    }
    // determinant oracle: Vandermonde in [1]_q, [2]_q, [3]_q
    std::vector<QPoly> xs{q_int(1), q_int(2), q_int(3)};
    std::vector<std::vector<QFrac>> m(3, std::vector<QFrac>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            QPoly p(1);
            for (int e = 0; e < j; ++e) p *= xs[i];
            m[i][j] = QFrac(p);
        }
    QFrac expect((xs[1] - xs[0]) * (xs[2] - xs[0]) * (xs[2] - xs[1]));
    require(det_qfrac(m) == expect, "Vandermonde determinant oracle fails");
    // [m]_t palindromicity
    for (int mdeg = 1; mdeg <= top; ++mdeg)
        require(t_int(mdeg).palindromic_t(mdeg - 1), "[m]_t palindromicity fails");
}

void dex_properties(int perm_n, int decorated_n) {
    for (int n = 0; n <= perm_n; ++n) {
        auto perms = gen_permutations(n);
        require(static_cast<long>(perms.size()) == factorial(n),
                "|S_n| mismatch at n=" + std::to_string(n));
        for (const auto& w : perms) {
            auto s = stats(w);
            require(subset_sum(dex(w)) == s.maj - s.exc,
                    "sum of DEX(sigma) != maj - exc at n=" + std::to_string(n));
            require((dex(w) & ~((n >= 1 ? (1u << (n - 1)) : 1u) - 1)) == 0,
                    "DEX not inside [n-1]");
            int des = static_cast<int>(subset_to_list(s.des_set).size());
            int dexsz = static_cast<int>(subset_to_list(dex(w)).size());
            require(dexsz == (n >= 1 && w[0] == 1 ? des : des - (n >= 1 ? 1 : 0)),
                    "|DEX| != des or des-1 rule at n=" + std::to_string(n));
        }
    }
    for (int n = 0; n <= decorated_n; ++n) {
        long expect = 0;
        for (int k = 0; k <= n; ++k) expect += binom(n, k) * factorial(k);
        auto dec = gen_decorated(n);
        require(static_cast<long>(dec.size()) == expect,
                "decorated permutation count mismatch at n=" + std::to_string(n));
        for (const auto& w : dec) {
            int exc = exc_decorated(w), maj = maj_decorated(w);
            require(subset_sum(dex_decorated(w)) == maj - exc,
                    "sum of DEX(decorated) != maj - exc at n=" + std::to_string(n));
            require(fix2(w) >= 0 && fix2(w) <= n, "fix2 out of range");
        }
    }
}

void qsym_products(int max_deg) {
    for (int a = 0; a <= max_deg; ++a)
        for (int b = 0; a + b <= max_deg; ++b) {
            require(h_complete(a) * h_complete(b) == h_complete(b) * h_complete(a),
                    "F-basis product is not commutative");
            if (a >= 1 && b >= 1)
                require(h_complete(a) * h_complete(b) == h_of_composition({a, b}),
                        "h_a h_b != h_{(a,b)}");
        }
    for (int n = 1; n <= std::min(max_deg, 6); ++n) {
        require(is_symmetric(h_complete(n)), "h_n is not symmetric");
        for (auto mono = to_monomial(h_complete(n)); const auto& [comp, c] : mono)
            require(c == LaurentQT(1), "monomial expansion of h_n has wrong coeff");
    }
    // associativity sample: (F_{1} F_{})F_{2} on small degrees
    auto x = f_basis(list_to_subset({1}), 2);
    auto y = f_basis(0, 1);
    auto z = f_basis(list_to_subset({2}), 3);
    require((x * y) * z == x * (y * z), "F-basis product is not associative");
}

void ribbon_routes(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (uint32_t s = 0; s < (1u << (n - 1)); ++s) {
            auto r = ribbon_schur(s, n);  // dual-route checked internally
            require(is_symmetric(r), "ribbon Schur function is not symmetric");
        }
}

void kostka(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& nu : partitions_of(n)) {
            QSymElem sum;
            for (const auto& lam : partitions_of(n)) {
                long k = kostka_number(lam, nu);
                if (k != 0) sum += schur(lam).scaled(LaurentQT(k));
            }
            require(sum == h_of_composition(nu),
                    "h_nu != sum_lambda K_{lambda,nu} s_lambda at n=" +
                        std::to_string(n));
        }
}

void eulerian_routes(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        eulerian_binomial_q(n);  // recurrence vs decorated enumeration, internal
        require(eulerian_A(n).eval_t1_q1() == factorial(n), "A_n(1,1) != n!");
        long der = 0;
        for (const auto& w : gen_permutations(n))
            if (stats(w).fix == 0) ++der;
        require(eulerian_d(n).eval_t1_q1() == der, "d_n(1,1) != derangement count");
        if (n >= 1) require(eulerian_d(n).palindromic_t(n), "d_n t-palindromicity fails");
        require(eulerian_A(n).palindromic_t(std::max(n - 1, 0)),
                "A_n t-palindromicity fails");
    }
    for (int n = 1; n <= std::min(max_n, qfamily_guard()); ++n) {
        require(is_symmetric(Q(n)), "Q_n is not symmetric");
        require(is_symmetric(Q0(n)), "Q0_n is not symmetric");
        Qtilde(n);  // dual route checked internally
    }
}

void eulerian_lemmas(int max_n) {
    int top = std::min(max_n, qfamily_guard());
    for (int n = 1; n <= top; ++n) {
        QSymElem from_slices;
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j) {
                auto slice = Q_njk(n, j, k);
                require(slice == Q_njk(n, n - k - j, k),
                        "Q_{n,j,k} palindromicity fails at n=" + std::to_string(n) +
                            ", j=" + std::to_string(j) + ", k=" + std::to_string(k));
                from_slices += slice.scaled(LaurentQT::monomial(j));
            }
        require(from_slices == Q(n), "Q_n != sum of Q_{n,j,k} t^j");
        for (int r = 1; r <= n - 1; ++r) {
            delta_chow(n, r);  // both stated expressions, internal
            delta_aug(n, r);
        }
    }
}

void gf(int order) {
    require(gf_check(std::min(order, series_guard())),
            "generating function check fails");
}

void hilbert_identities(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= n; ++r) {
            auto h = hilb_q_uniform(r, n, false);
            LaurentQT sum_d;
            for (int j = 0; j <= r - 1; ++j)
                sum_d += LaurentQT(QPoly(q_binomial(n, j))) * eulerian_d_q(j) *
                         t_int(r - j);
            require(h == sum_d, "Hilb(Chow) != q-binomial/derangement sum" + at(r, n));
            require(h == eulerian_A_q(n) - perm_tail_qt(n, r),
                    "Hilb(Chow) != A_n minus fixed-point tail" + at(r, n));

            auto ha = hilb_q_uniform(r, n, true);
            LaurentQT sum_a(1);
            for (int j = 0; j <= r - 1; ++j)
                sum_a += LaurentQT::monomial(1, q_binomial(n, j)) * eulerian_A_q(j) *
                         t_int(r - j);
            require(ha == sum_a, "Hilb(aug) != 1 + t q-binomial/Eulerian sum" + at(r, n));
            require(ha == eulerian_binomial_q(n) - decorated_tail_qt(n, r),
                    "Hilb(aug) != binomial Eulerian minus decorated tail" + at(r, n));
        }
}

void hilbert_specials(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        require(hilb_q_uniform(n, n, false) == eulerian_A_q(n),
                "Hilb(Chow, r=n) != A_n(q,t) at n=" + std::to_string(n));
        require(hilb_q_uniform(n, n, true) == eulerian_binomial_q(n),
                "Hilb(aug, r=n) != binomial Eulerian at n=" + std::to_string(n));
        if (n >= 2) {
            require(hilb_q_uniform(n - 1, n, false) == eulerian_d_q(n).shift_t(-1),
                    "Hilb(Chow, r=n-1) != d_n(q,t)/t at n=" + std::to_string(n));
            require(hilb_q_uniform(n - 1, n, true) == eulerian_A_q(n),
                    "Hilb(aug, r=n-1) != A_n(q,t) at n=" + std::to_string(n));
        }
    }
}

void frobenius_identities(int max_n) {
    int top = std::min(max_n, qfamily_guard());
    for (int n = 1; n <= top; ++n)
        for (int r = 1; r <= n; ++r) {
            auto g = grfrob_uniform(r, n, false);
            QSymElem sum_d;
            for (int j = 0; j <= r - 1; ++j)
                sum_d += (h_complete(n - j) * Q0(j)).scaled(t_int(r - j));
            require(g == sum_d, "grFrob(Chow) != h/Q0 sum" + at(r, n));
            require(g == Q(n) - perm_tail_qsym(n, r),
                    "grFrob(Chow) != Q_n minus fixed-point tail" + at(r, n));

            auto ga = grfrob_uniform(r, n, true);
            QSymElem sum_a = h_complete(n);
            for (int j = 0; j <= r - 1; ++j)
                sum_a += (h_complete(n - j) * Q(j)).scaled(t_int(r - j).shift_t(1));
            require(ga == sum_a, "grFrob(aug) != h_n + t h/Q sum" + at(r, n));
            require(ga == Qtilde(n) - decorated_tail_qsym(n, r),
                    "grFrob(aug) != Qtilde_n minus decorated tail" + at(r, n));
        }
}

void frobenius_specials(int max_n) {
    int top = std::min(max_n, qfamily_guard());
    for (int n = 1; n <= top; ++n) {
        require(grfrob_uniform(n, n, false) == Q(n),
                "grFrob(Chow, r=n) != Q_n at n=" + std::to_string(n));
        require(grfrob_uniform(n, n, true) == Qtilde(n),
                "grFrob(aug, r=n) != Qtilde_n at n=" + std::to_string(n));
        if (n >= 2) {
            require(grfrob_uniform(n - 1, n, false) ==
                        Q0(n).scaled(LaurentQT::monomial(-1)),
                    "grFrob(Chow, r=n-1) != Q0_n/t at n=" + std::to_string(n));
            require(grfrob_uniform(n - 1, n, true) == Q(n),
                    "grFrob(aug, r=n-1) != Q_n at n=" + std::to_string(n));
        }
    }
}

void ps_bridge(int max_n) {
    for (int n = 1; n <= std::min(max_n, qfamily_guard()); ++n)
        for (int r = 1; r <= n; ++r)
            for (bool aug : {false, true}) {
                auto hq = hilb_q_uniform(r, n, aug);
                require(ps_normalized(grfrob_uniform(r, n, aug), n) == hq,
                        std::string("principal specialization of grFrob != Hilb (") +
                            (aug ? "aug" : "chow") + ")" + at(r, n));
                // third route: q=1 slice against brute-force FY counting
                LaurentQT at_q1;
                for (const auto& [t, c] : hq.coeffs())
                    at_q1 += LaurentQT::monomial(t, QPoly(c.eval_one()));
                require(at_q1 == hilb(uniform_matroid(r, n), aug),
                        "Hilb(q=1) != FY monomial count" + at(r, n));
            }
}

void differences(int max_n) {
    int top = std::min(max_n, qfamily_guard());
    for (int n = 1; n <= top; ++n)
        for (int r = 1; r <= n - 1; ++r) {
            require(delta_chow(n, r) ==
                        grfrob_uniform(r + 1, n, false) - grfrob_uniform(r, n, false),
                    "Delta(Chow) != grFrob difference" + at(r, n));
            require(delta_aug(n, r) ==
                        grfrob_uniform(r + 1, n, true) - grfrob_uniform(r, n, true),
                    "Delta(aug) != grFrob difference" + at(r, n));
        }
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= n - 1; ++r) {
            auto diff = hilb_q_uniform(r + 1, n, false) - hilb_q_uniform(r, n, false);
            LaurentQT expr1;
            for (int i = 0; i <= r; ++i)
                expr1 += LaurentQT::monomial(r - i, q_binomial(n, i)) * eulerian_d_q(i);
            LaurentQT expr2;
            for (const auto& w : gen_permutations(n)) {
                auto s = stats(w);
                if (s.fix >= n - r) expr2 += qt_mono(r - s.exc, s.maj - s.exc);
            }
            require(diff == expr1 && diff == expr2,
                    "Hilbert difference identities (Chow) fail" + at(r, n));

            auto diffa = hilb_q_uniform(r + 1, n, true) - hilb_q_uniform(r, n, true);
            LaurentQT expr1a;
            for (int i = 0; i <= r; ++i)
                expr1a +=
                    LaurentQT::monomial(r + 1 - i, q_binomial(n, i)) * eulerian_A_q(i);
            LaurentQT expr2a;
            for (const auto& w : gen_decorated(n)) {
                int exc = exc_decorated(w), maj = maj_decorated(w);
                if (fix2(w) >= n - r) expr2a += qt_mono(r - exc, maj - exc);
            }
            require(diffa == expr1a && diffa == expr2a,
                    "Hilbert difference identities (aug) fail" + at(r, n));
        }
}

void refined_codes(int max_n) {
    int top = std::min(max_n, qfamily_guard());
    for (int n = 1; n <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k)
                for (bool aug : {false, true})
                    grfrob_refined(n, j, k, aug);  // checked vs Q_njk internally
}

void rank_homology(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (uint32_t s = 0; s < (1u << (n - 1)); ++s) {
            auto b = beta_boolean(s, n);  // checked against ribbon_schur internally
            require(is_symmetric(b), "beta module is not symmetric");
        }
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        for (int r = 1; r <= n; ++r) {
            auto m = uniform_matroid(r, n);
            uint32_t all = r >= 1 ? (1u << (r - 1)) - 1 : 0;
            for (uint32_t s = 0; s <= all; ++s) {
                Int sum = 0;
                for (uint32_t t = s;; t = (t - 1) & s) {
                    sum += flag_h(m, t);
                    if (t == 0) break;
                }
                require(sum == flag_f(m, s), "Moebius inversion of flag_h fails");
                require(flag_h(m, s) >= 0, "flag_h negative on a uniform matroid");
            }
        }
}

void matroid_flags(int max_n) {
    for (int n = 1; n <= std::min(max_n, 6); ++n)
        for (int r = 1; r <= n; ++r) {
            auto m = uniform_matroid(r, n);
            long expect = 1;
            for (int k = 1; k <= r - 1; ++k) expect += binom(n, k);
            expect += 1;  // full set
            require(static_cast<long>(m.flats().size()) == expect,
                    "uniform matroid flat count is wrong" + at(r, n));
            require(m.rank() == r, "uniform matroid rank is wrong" + at(r, n));
        }
    auto expect_reject = [](const char* text, const char* what) {
        try {
            from_flats_json(text);
        } catch (const validation_error&) {
            return;
        }
        fail(std::string("malformed flats accepted: ") + what);
    };
    expect_reject(R"({"ground":2,"flats":[[1],[2],[1,2]]})", "missing empty flat");
    expect_reject(R"({"ground":3,"flats":[[],[1,2],[2,3],[1,2,3]]})",
                  "not intersection-closed");
    expect_reject(R"({"ground":2,"flats":[[],[1],[1,2]]})",
                  "element missing from the covers of a flat");
    require(from_flats_json(kLine3Json).rank() == 3, "line matroid rank is wrong");
    require(from_flats_json(kDoubledJson).rank() == 2,
            "doubled-point matroid rank is wrong");
}

void cd_routes(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= n; ++r)
            for (bool aug : {false, true}) {
                auto rep = cd_report(r, n, aug);
                require(rep.agreement, std::string("CD routes disagree (") +
                                           (aug ? "aug" : "chow") + ")" + at(r, n));
                for (const auto& [e, c] : rep.normalized.coeffs())
                    require(c > 0, "normalized CD polynomial has a nonpositive "
                                   "coefficient" + at(r, n));
            }
}

void cd_specializations(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (int r = 1; r <= n; ++r)
            for (bool aug : {false, true}) {
                Int lhs = cd_eval(r, n, aug).eval_one();
                bool zero = aug ? r % 2 == 1 : r % 2 == 0;
                if (zero) {
                    require(lhs == 0, "CD quantity nonzero at the wrong parity" + at(r, n));
                    continue;
                }
                uint32_t target = aug ? odds_upto(r - 1) : evens_upto(r - 1);
                Int count = 0;
                for (const auto& w : gen_permutations(n))
                    if (stats(w).des_set == target) ++count;
                int sgn = aug ? r / 2 : (r - 1) / 2;
                require(lhs == (sgn % 2 == 0 ? count : -count),
                        "CD at q=1 != signed descent-class count" + at(r, n));
            }
    for (int n = 1; n <= max_n; ++n) {
        // r=n: tangent numbers (n odd, Chow) and secant analogs (n even, aug)
        if (n % 2 == 1)
            require(cd_sign_normalized(cd_eval(n, n, false), n - 1).eval_one() ==
                        secant_E(n).eval_one(),
                    "normalized CD at r=n != tangent number, n=" + std::to_string(n));
        else
            require(cd_sign_normalized(cd_eval(n, n, true), n).eval_one() ==
                        secant_E(n).eval_one(),
                    "normalized aug CD at r=n != secant number, n=" + std::to_string(n));
    }
}

void equivariant_cd_uniform(int max_n) {
    int top = std::min(max_n, qfamily_guard());
    for (int n = 1; n <= top; ++n)
        for (int r = 1; r <= n; ++r)
            for (bool aug : {false, true}) {
                auto lhs = grfrob_uniform(r, n, aug).eval_t_minus_one();
                bool zero = aug ? r % 2 == 1 : r % 2 == 0;
                if (zero) {
                    require(lhs == QSymElem(), std::string("equivariant CD nonzero at "
                                                           "the wrong parity") + at(r, n));
                    continue;
                }
                uint32_t sel = aug ? odds_upto(r - 1) : evens_upto(r - 1);
                int sgn = aug ? r / 2 : (r - 1) / 2;
                auto rhs = ribbon_schur(sel, n).scaled(LaurentQT(sgn % 2 == 0 ? 1 : -1));
                require(lhs == rhs,
                        "grFrob at t=-1 != signed ribbon Schur function" + at(r, n));
            }
}

void equivariant_cd_characters(int max_n) {
    std::mt19937 rng(20260823);
    for (int n = 2; n <= std::min(max_n, 6); ++n)
        for (int r = 1; r <= n; ++r) {
            auto m = uniform_matroid(r, n);
            std::vector<std::vector<int>> gs;
            auto swap12 = identity_perm(n);
            std::swap(swap12[0], swap12[1]);
            gs.push_back(swap12);
            std::vector<int> cyc(n);
            for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
            gs.push_back(cyc);
            for (int trial = 0; trial < 20; ++trial) {
                auto g = identity_perm(n);
                std::shuffle(g.begin(), g.end(), rng);
                gs.push_back(g);
            }
            for (const auto& g : gs)
                for (bool aug : {false, true})
                    cd_character(m, g, aug);  // checked vs beta-character internally
            for (bool aug : {false, true})
                require(cd_character(m, identity_perm(n), aug) ==
                            hilb(m, aug).eval_t_minus_one().coeff(0),
                        "character at the identity != Hilb(-1)" + at(r, n));
        }
}

void equivariant_cd_files() {
    auto line3 = from_flats_json(kLine3Json);
    for (const char* cyc : {"", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)", "(2 3)"}) {
        auto g = parse_cycles(cyc, 4);
        for (bool aug : {false, true}) cd_character(line3, g, aug);
    }
    auto doubled = from_flats_json(kDoubledJson);
    for (const char* cyc : {"", "(1 2)", "(3 4)", "(1 2)(3 4)"}) {
        auto g = parse_cycles(cyc, 4);
        for (bool aug : {false, true}) cd_character(doubled, g, aug);
    }
    for (const auto& m : {line3, doubled}) {
        for (bool aug : {false, true})
            require(cd_character(m, identity_perm(4), aug) ==
                        hilb(m, aug).eval_t_minus_one().coeff(0),
                    "file matroid character at the identity != Hilb(-1)");
        uint32_t all = m.rank() >= 1 ? (1u << (m.rank() - 1)) - 1 : 0;
        for (uint32_t s = 0; s <= all; ++s) {
            Int sum = 0;
            for (uint32_t t = s;; t = (t - 1) & s) {
                sum += flag_h(m, t);
                if (t == 0) break;
            }
            require(sum == flag_f(m, s), "Moebius inversion fails on a file matroid");
            require(flag_h(m, s) >= 0, "flag_h negative on a file matroid");
        }
    }
}

}  // namespace checks

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> suite_names() {
    return {"arith", "perms", "qsym", "eulerian", "hilbert", "frobenius",
            "rankselect", "cd"};
}

namespace {

SuiteReport run_one(const std::string& suite, int max_n) {
    SuiteReport rep;
    rep.suite = suite;
    auto run = [&](const std::string& name, const std::function<void()>& fn) {
        CheckResult c;
        c.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            fn();
            c.pass = true;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        c.ms = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
        rep.checks.push_back(std::move(c));
    };
    int qn = std::min(max_n, qfamily_guard());
    if (suite == "arith") {
        run("q-analog identities and determinant oracle",
            [&] { checks::arith_basics(max_n); });
    } else if (suite == "perms") {
        run("DEX statistics on permutations and decorated permutations",
            [&] { checks::dex_properties(max_n, max_n); });
    } else if (suite == "qsym") {
        run("fundamental-basis products", [&] { checks::qsym_products(max_n); });
        run("ribbon Schur dual routes", [&] { checks::ribbon_routes(max_n); });
        run("Kostka expansion of h", [&] { checks::kostka(std::min(max_n, 5)); });
    } else if (suite == "eulerian") {
        run("Eulerian polynomial and quasisymmetric routes",
            [&] { checks::eulerian_routes(qn); });
        run("slice palindromicity and rank differences",
            [&] { checks::eulerian_lemmas(qn); });
        run("generating function check",
            [&] { checks::gf(std::min(max_n, series_guard())); });
    } else if (suite == "hilbert") {
        run("Hilbert series identities", [&] { checks::hilbert_identities(max_n); });
        run("Hilbert series special ranks", [&] { checks::hilbert_specials(max_n); });
        run("principal specialization bridge", [&] { checks::ps_bridge(qn); });
    } else if (suite == "frobenius") {
        run("graded Frobenius identities", [&] { checks::frobenius_identities(qn); });
        run("graded Frobenius special ranks", [&] { checks::frobenius_specials(qn); });
        run("rank-difference identities", [&] { checks::differences(max_n); });
        run("fixed-point refined codes", [&] { checks::refined_codes(qn); });
    } else if (suite == "rankselect") {
        run("rank-selected homology modules", [&] { checks::rank_homology(max_n); });
        run("flats validation and flag vectors", [&] { checks::matroid_flags(max_n); });
        run("equivariant CD characters on uniform matroids",
            [&] { checks::equivariant_cd_characters(max_n); });
        run("equivariant CD characters on file matroids",
            [&] { checks::equivariant_cd_files(); });
    } else if (suite == "cd") {
        run("four CD routes agree", [&] { checks::cd_routes(max_n); });
        run("CD specializations", [&] { checks::cd_specializations(max_n); });
        run("equivariant CD for uniform matroids",
            [&] { checks::equivariant_cd_uniform(max_n); });
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return rep;
}

}  // namespace

std::vector<SuiteReport> run_suites(const std::string& name, int max_n) {
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& s : suite_names()) out.push_back(run_one(s, max_n));
    } else {
        out.push_back(run_one(name, max_n));
    }
    return out;
}

}  // namespace mcq
