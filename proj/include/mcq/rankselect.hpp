#pragma once

#include "mcq/matroid.hpp"
#include "mcq/qsym.hpp"

namespace mcq {

/// Number of maximal chains of the rank-selected subposet of the lattice of
/// flats; S is a bitmask subset of [rank-1].
Int flag_f(const MatroidFlats& m, uint32_t s);
/// Moebius inversion of flag_f over subsets of S.
Int flag_h(const MatroidFlats& m, uint32_t s);

/// Permutation-module forms for the Boolean lattice B_n. beta_boolean is
/// checked against ribbon_schur; identity_error on mismatch.
QSymElem alpha_boolean(uint32_t s, int n);
QSymElem beta_boolean(uint32_t s, int n);

/// Maximal chains of the rank-selected subposet fixed elementwise (each flat
/// stabilized setwise) by the ground-set permutation g (one-line, 1-based).
Int fixed_chain_count(const MatroidFlats& m, const std::vector<int>& g, uint32_t s);

/// Equivariant Charney-Davis character value at g: the alternating sum over
/// degrees of the number of g-fixed FY monomials. Verified against the
/// rank-selected beta-character with the parity/sign rules; identity_error on
/// mismatch.
Int cd_character(const MatroidFlats& m, const std::vector<int>& g, bool augmented);

}  // namespace mcq
