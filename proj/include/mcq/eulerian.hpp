#pragma once

#include "mcq/qsym.hpp"

namespace mcq {

// Guards (MCQ_MAX_N overrides): Q family n <= 8, series order N <= 6.
int qfamily_guard();
int series_guard();

/// Eulerian quasisymmetric functions: Q(n) = sum over S_n of F_{DEX} t^exc,
/// Q0 over derangements, Q_njk the (exc=j, fix=k) slice without t.
QSymElem Q(int n);
QSymElem Q0(int n);
QSymElem Q_njk(int n, int j, int k);

/// Binomial Eulerian quasisymmetric function, computed both as
/// h_n + t*sum_j h_{n-j} Q(j) and by decorated-permutation enumeration;
/// identity_error if the routes disagree.
QSymElem Qtilde(int n);
/// Decorated enumeration refined by fix2; the marker r rides in the q slot
/// (these elements are otherwise q-free).
QSymElem Qtilde_refined(int n);
/// The (t^j, r^k) slice of Qtilde_refined: sum over exc+1 = j, fix2 = k.
QSymElem Qtilde_njk(int n, int j, int k);

/// Series check of the closed generating function for Q_n and its H(rz)
/// fixed-point refinement against Q_njk, to order N.
bool gf_check(int N);

/// Rank-difference quasisymmetric functions, each computed from both stated
/// expressions; identity_error on disagreement.
QSymElem delta_chow(int n, int r);
QSymElem delta_aug(int n, int r);

}  // namespace mcq
