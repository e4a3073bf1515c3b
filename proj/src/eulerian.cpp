#include "mcq/eulerian.hpp"

#include <algorithm>
#include <cstdlib>

#include "mcq/errors.hpp"
#include "mcq/permstat.hpp"

namespace mcq {

namespace {

int env_guard(int def) {
    if (const char* s = std::getenv("MCQ_MAX_N")) {
        int v = std::atoi(s);
        if (v > 0) return std::max(def, v);
    }
    return def;
}

void check_qfamily(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > qfamily_guard())
        throw resource_error("Q-family guard exceeded (n=" + std::to_string(n) +
                             ", guard=" + std::to_string(qfamily_guard()) + ")");
}

}  // namespace

int qfamily_guard() { return env_guard(8); }
int series_guard() { return env_guard(6); }

QSymElem Q(int n) {
    check_qfamily(n);
    QSymElem out;
    for (const auto& w : gen_permutations(n)) {
        auto s = stats(w);
        out.add_term(n, dex(w), LaurentQT::monomial(s.exc));
    }
    return out;
}

QSymElem Q0(int n) {
    check_qfamily(n);
    QSymElem out;
    for (const auto& w : gen_derangements(n)) {
        auto s = stats(w);
        out.add_term(n, dex(w), LaurentQT::monomial(s.exc));
    }
    return out;
}

QSymElem Q_njk(int n, int j, int k) {
    check_qfamily(n);
    QSymElem out;
    for (const auto& w : gen_permutations(n)) {
        auto s = stats(w);
        if (s.exc == j && s.fix == k) out.add_term(n, dex(w), LaurentQT(1));
    }
    return out;
}

QSymElem Qtilde(int n) {
    check_qfamily(n);
    if (n < 1) throw std::invalid_argument("Qtilde requires n >= 1");
    // defining route: h_n + t * sum_{j=1}^{n} h_{n-j} Q_j
    QSymElem def = h_complete(n);
    for (int j = 1; j <= n; ++j)
        def += (h_complete(n - j) * Q(j)).scaled(LaurentQT::monomial(1));
    // decorated-permutation route
    QSymElem dir;
    for (const auto& w : gen_decorated(n))
        dir.add_term(n, dex_decorated(w), LaurentQT::monomial(exc_decorated(w) + 1));
    if (def != dir)
        throw identity_error("binomial Eulerian quasisymmetric function: defining and "
                             "decorated routes disagree at n=" + std::to_string(n));
    return def;
}

QSymElem Qtilde_refined(int n) {
    check_qfamily(n);
    QSymElem out;
    for (const auto& w : gen_decorated(n))
        out.add_term(n, dex_decorated(w),
                     LaurentQT::monomial(exc_decorated(w) + 1, QPoly::monomial(fix2(w))));
    return out;
}

QSymElem Qtilde_njk(int n, int j, int k) {
    check_qfamily(n);
    QSymElem out;
    for (const auto& w : gen_decorated(n))
        if (exc_decorated(w) + 1 == j && fix2(w) == k)
            out.add_term(n, dex_decorated(w), LaurentQT(1));
    return out;
}

namespace {

// Truncated power series in z whose z^n coefficient is a polynomial in the
// commuting generators h_1, h_2, ... (monomials stored as sorted-descending
// partitions) with LaurentQT coefficients.
struct HSeries {
    int order = 0;
    std::vector<std::map<std::vector<int>, LaurentQT>> c;  // index = z-exponent

    explicit HSeries(int N) : order(N), c(N + 1) {}

    void add(int zexp, std::vector<int> mono, const LaurentQT& v) {
        if (zexp > order || v.is_zero()) return;
        std::sort(mono.begin(), mono.end(), std::greater<int>());
        auto& slot = c[zexp][mono];
        slot += v;
        if (slot.is_zero()) c[zexp].erase(mono);
    }

    HSeries mul(const HSeries& o) const {
        HSeries out(order);
        for (int i = 0; i <= order; ++i)
            for (const auto& [ma, va] : c[i])
                for (int j = 0; i + j <= order; ++j)
                    for (const auto& [mb, vb] : o.c[j]) {
                        std::vector<int> m = ma;
                        m.insert(m.end(), mb.begin(), mb.end());
                        out.add(i + j, std::move(m), va * vb);
                    }
        return out;
    }
};

// geometric inverse of (1 - u) where u has no constant term
HSeries geom_inverse(const HSeries& u) {
    HSeries out(u.order);
    out.add(0, {}, LaurentQT(1));
    HSeries pw = u;
    for (int k = 1; k <= u.order; ++k) {
        for (int i = 0; i <= u.order; ++i)
            for (const auto& [m, v] : pw.c[i]) out.add(i, m, v);
        if (k < u.order) pw = pw.mul(u);
    }
    return out;
}

QSymElem coeff_to_qsym(const std::map<std::vector<int>, LaurentQT>& coeff) {
    QSymElem out;
    for (const auto& [m, v] : coeff) out += h_of_composition(m).scaled(v);
    return out;
}

}  // namespace

bool gf_check(int N) {
    if (N < 0) throw std::invalid_argument("order must be nonnegative");
    if (N > series_guard())
        throw resource_error("series order guard exceeded (N=" + std::to_string(N) +
                             ", guard=" + std::to_string(series_guard()) + ")");
    // (1-t)H(z)/(H(tz)-tH(z)) = H(z) * (1 - t*sum_{n>=2} h_n [n-1]_t z^n)^{-1},
    // after dividing the (1-t) factor out of the denominator symbolically.
    HSeries u(N);
    for (int n = 2; n <= N; ++n) {
        LaurentQT geom;  // t * (1 + t + ... + t^{n-2})
        for (int e = 1; e <= n - 1; ++e) geom += LaurentQT::monomial(e);
        u.add(n, {n}, geom);
    }
    HSeries inv = geom_inverse(u);

    HSeries h(N), hr(N);
    h.add(0, {}, LaurentQT(1));
    hr.add(0, {}, LaurentQT(1));
    for (int n = 1; n <= N; ++n) {
        h.add(n, {n}, LaurentQT(1));
        hr.add(n, {n}, LaurentQT::monomial(0, QPoly::monomial(n)));  // h_n r^n
    }

    HSeries plain = h.mul(inv);
    for (int n = 0; n <= N; ++n)
        if (coeff_to_qsym(plain.c[n]) != Q(n)) return false;

    // fixed-point refinement: H(rz) in the numerator tracks fix with r (in the
    // q slot), matching sum_{j,k} Q_njk t^j r^k
    HSeries refined = hr.mul(inv);
    for (int n = 0; n <= N; ++n) {
        QSymElem expect;
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k)
                expect += Q_njk(n, j, k).scaled(LaurentQT::monomial(j, QPoly::monomial(k)));
        if (coeff_to_qsym(refined.c[n]) != expect) return false;
    }
    return true;
}

QSymElem delta_chow(int n, int r) {
    check_qfamily(n);
    if (r < 1 || r > n - 1) throw std::invalid_argument("delta requires 1 <= r <= n-1");
    QSymElem a;
    for (int i = 0; i <= r; ++i)
        a += (h_complete(n - r + i) * Q0(r - i)).scaled(LaurentQT::monomial(i));
    QSymElem b;
    for (const auto& w : gen_permutations(n)) {
        auto s = stats(w);
        if (s.fix >= n - r) b.add_term(n, dex(w), LaurentQT::monomial(r - s.exc));
    }
    if (a != b) throw identity_error("difference formula (Chow): expressions disagree");
    return a;
}

QSymElem delta_aug(int n, int r) {
    check_qfamily(n);
    if (r < 1 || r > n - 1) throw std::invalid_argument("delta requires 1 <= r <= n-1");
    QSymElem a;
    for (int j = 0; j <= r; ++j)
        a += (h_complete(n - j) * Q(j)).scaled(LaurentQT::monomial(r - j + 1));
    QSymElem b;
    for (const auto& w : gen_decorated(n)) {
        if (fix2(w) < n - r) continue;
        b.add_term(n, dex_decorated(w), LaurentQT::monomial(r - exc_decorated(w)));
    }
    if (a != b) throw identity_error("difference formula (augmented): expressions disagree");
    return a;
}

}  // namespace mcq
