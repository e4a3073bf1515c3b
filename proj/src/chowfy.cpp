#include "mcq/chowfy.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "mcq/errors.hpp"
#include "mcq/eulerian.hpp"

namespace mcq {

namespace {

// t + t^2 + ... + t^cap; zero when cap <= 0
LaurentQT exp_range(int cap) {
    LaurentQT out;
    for (int e = 1; e <= cap; ++e) out += LaurentQT::monomial(e);
    return out;
}

std::vector<int> exponent_caps(const std::vector<int>& ranks, bool augmented) {
    std::vector<int> caps;
    for (size_t i = 0; i < ranks.size(); ++i) {
        if (i == 0)
            caps.push_back(augmented ? ranks[0] : ranks[0] - 1);
        else
            caps.push_back(ranks[i] - ranks[i - 1] - 1);
    }
    return caps;
}

LaurentQT caps_poly(const std::vector<int>& caps) {
    LaurentQT out(1);
    for (int c : caps) out *= exp_range(c);
    return out;
}

void chains_rec(const MatroidFlats& m, std::vector<Flat>& chain,
                const std::function<void(const std::vector<Flat>&)>& visit) {
    visit(chain);
    Flat last = chain.empty() ? 0 : chain.back();
    for (Flat g : m.flats()) {
        if (g == 0 || g == last || (g & last) != last) continue;
        chain.push_back(g);
        chains_rec(m, chain, visit);
        chain.pop_back();
    }
}

void for_each_chain(const MatroidFlats& m,
                    const std::function<void(const std::vector<Flat>&)>& visit) {
    std::vector<Flat> chain;
    chains_rec(m, chain, visit);
}

// composition of n from a strictly increasing size sequence (zeros dropped)
std::vector<int> size_composition(const std::vector<int>& sizes, int n) {
    std::vector<int> nu;
    int prev = 0;
    for (int s : sizes) {
        if (s - prev > 0) nu.push_back(s - prev);
        prev = s;
    }
    if (n - prev > 0) nu.push_back(n - prev);
    return nu;
}

}  // namespace

int FYMonomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

LaurentQT chain_exponent_poly(const MatroidFlats& m, const std::vector<Flat>& chain,
                              bool augmented) {
    std::vector<int> ranks;
    for (Flat f : chain) ranks.push_back(m.rank_of(f));
    return caps_poly(exponent_caps(ranks, augmented));
}

std::vector<FYMonomial> fy_basis(const MatroidFlats& m, bool augmented) {
    std::vector<FYMonomial> out;
    for_each_chain(m, [&](const std::vector<Flat>& chain) {
        std::vector<int> ranks;
        for (Flat f : chain) ranks.push_back(m.rank_of(f));
        auto caps = exponent_caps(ranks, augmented);
        if (std::any_of(caps.begin(), caps.end(), [](int c) { return c < 1; })) return;
        std::vector<int> exps(caps.size(), 1);
        while (true) {
            out.push_back({chain, exps});
            size_t i = 0;
            while (i < exps.size() && exps[i] == caps[i]) exps[i++] = 1;
            if (i == exps.size()) break;
            ++exps[i];
        }
    });
    std::stable_sort(out.begin(), out.end(), [](const FYMonomial& a, const FYMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.chain != b.chain) return a.chain < b.chain;
        return a.exps < b.exps;
    });
    return out;
}

LaurentQT hilb(const MatroidFlats& m, bool augmented) {
    LaurentQT out;
    for_each_chain(m, [&](const std::vector<Flat>& chain) {
        out += chain_exponent_poly(m, chain, augmented);
    });
    return out;
}

namespace {

// Iterate over rank sequences of chains in a (q-)uniform matroid U_{r,n}:
// proper-flat ranks 0 < d_1 < ... < d_l <= r-1 plus an optional top of rank r.
// visit(dims, with_top).
void for_each_rank_seq(int r, const std::function<void(const std::vector<int>&, bool)>& visit) {
    int proper = r - 1;
    for (uint32_t mask = 0; mask < (1u << proper); ++mask) {
        std::vector<int> dims;
        for (int d = 1; d <= proper; ++d)
            if (mask & (1u << (d - 1))) dims.push_back(d);
        visit(dims, false);
        visit(dims, true);
    }
}

std::vector<int> with_top_ranks(std::vector<int> dims, bool top, int r) {
    if (top) dims.push_back(r);
    return dims;
}

}  // namespace

LaurentQT hilb_q_uniform(int r, int n, bool augmented) {
    if (r < 1 || r > n) throw std::invalid_argument("hilb_q_uniform needs 1 <= r <= n");
    LaurentQT out;
    for_each_rank_seq(r, [&](const std::vector<int>& dims, bool top) {
        auto poly = caps_poly(exponent_caps(with_top_ranks(dims, top, r), augmented));
        if (poly.is_zero()) return;
        // Gaussian flag count for subspaces of the given dimensions in F_q^n
        QPoly count = q_multinomial(size_composition(dims, n));
        for (const auto& [e, c] : poly.coeffs()) out += LaurentQT::monomial(e, c * count);
    });
    return out;
}

QSymElem grfrob_uniform(int r, int n, bool augmented) {
    if (r < 1 || r > n) throw std::invalid_argument("grfrob_uniform needs 1 <= r <= n");
    QSymElem out;
    for_each_rank_seq(r, [&](const std::vector<int>& dims, bool top) {
        auto poly = caps_poly(exponent_caps(with_top_ranks(dims, top, r), augmented));
        if (poly.is_zero()) return;
        out += h_of_composition(size_composition(dims, n)).scaled(poly);
    });
    return out;
}

QSymElem grfrob_refined(int n, int j, int k, bool augmented) {
    if (n < 1 || j < 0 || k < 0 || k > n)
        throw std::invalid_argument("grfrob_refined needs n >= 1, j >= 0, 0 <= k <= n");
    // Boolean matroid B_n: flats are all subsets, rank = size. Sum over size
    // sequences whose top flat has complement size k.
    QSymElem out;
    int top_size = n - k;
    // strictly increasing size sequences ending at top_size (empty iff k = n)
    std::vector<std::vector<int>> seqs;
    if (top_size == 0) {
        seqs.push_back({});
    } else {
        for (uint32_t mask = 0; mask < (1u << (top_size - 1)); ++mask) {
            std::vector<int> sizes;
            for (int s = 1; s < top_size; ++s)
                if (mask & (1u << (s - 1))) sizes.push_back(s);
            sizes.push_back(top_size);
            seqs.push_back(std::move(sizes));
        }
    }
    for (const auto& sizes : seqs) {
        auto poly = caps_poly(exponent_caps(sizes, augmented));
        QPoly coeff = poly.coeff(j);  // scalar multiplicity of degree j
        if (coeff.is_zero()) continue;
        out += h_of_composition(size_composition(sizes, n))
                   .scaled(LaurentQT::monomial(0, coeff));
    }
    QSymElem expect = augmented ? Qtilde_njk(n, j, k) : Q_njk(n, j, k);
    if (out != expect)
        throw identity_error("refined Frobenius of B_" + std::to_string(n) + " (j=" +
                             std::to_string(j) + ", k=" + std::to_string(k) +
                             ") disagrees with the Eulerian quasisymmetric slice");
    return out;
}

QPoly cd_sign_normalized(const QPoly& raw_at_minus_one, int hilbert_degree) {
    return (hilbert_degree / 2) % 2 == 0 ? raw_at_minus_one : -raw_at_minus_one;
}

Int cd(const MatroidFlats& m, bool augmented) {
    QPoly raw = hilb(m, augmented).eval_t_minus_one();
    int deg = augmented ? m.rank() : m.rank() - 1;
    return cd_sign_normalized(raw, deg).coeff(0);
}

}  // namespace mcq
