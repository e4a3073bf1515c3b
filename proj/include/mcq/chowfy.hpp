#pragma once

#include "mcq/exact.hpp"
#include "mcq/matroid.hpp"
#include "mcq/qsym.hpp"

namespace mcq {

/// A standard monomial of the (augmented) Chow ring: a strictly increasing
/// chain of flats with exponents inside the admissible rank-gap ranges.
struct FYMonomial {
    std::vector<Flat> chain;
    std::vector<int> exps;
    int degree() const;
    bool operator==(const FYMonomial&) const = default;
};

/// All FY monomials, sorted by degree (then chain/exponents).
std::vector<FYMonomial> fy_basis(const MatroidFlats& m, bool augmented);

/// Generating polynomial of the admissible exponent vectors on one chain
/// (listed in increasing order, empty set excluded).
LaurentQT chain_exponent_poly(const MatroidFlats& m, const std::vector<Flat>& chain,
                              bool augmented);

/// Hilbert series of the (augmented) Chow ring by FY counting; q-free.
LaurentQT hilb(const MatroidFlats& m, bool augmented);

/// Hilbert series for the q-uniform matroid U_{r,n}(q) by Gaussian flag
/// counting over dimension sequences; q stays symbolic.
LaurentQT hilb_q_uniform(int r, int n, bool augmented);

/// Graded Frobenius series for uniform matroids by orbit counting over
/// size sequences of proper flats.
QSymElem grfrob_uniform(int r, int n, bool augmented);

/// Frobenius characteristic of the span of degree-j FY monomials of the
/// Boolean matroid B_n whose top flat has complement size k; checked against
/// Q_njk (Chow) or Qtilde_njk (augmented), identity_error on mismatch.
QSymElem grfrob_refined(int n, int j, int k, bool augmented);

/// Charney-Davis quantity: Hilbert series at t=-1 with the sign
/// (-1)^{floor(deg/2)} where deg = r-1 (Chow) or r (augmented).
Int cd(const MatroidFlats& m, bool augmented);
QPoly cd_sign_normalized(const QPoly& raw_at_minus_one, int hilbert_degree);

}  // namespace mcq
