#pragma once

#include <string>

#include "mcq/exact.hpp"

namespace mcq {

/// inv-generating polynomials over reverse alternating / alternating
/// permutations of [n]; the reversal relation E*_n(q) = q^C(n,2) E_n(1/q) is
/// asserted, identity_error on failure.
QPoly secant_E(int n);       // reverse alternating: s1 < s2 > s3 < ...
QPoly secant_Estar(int n);   // alternating:         s1 > s2 < s3 > ...

/// Four routes to Hilb(A(U_{r,n}(q)), -1) (Chow) or the augmented analog.
/// All return the raw (-1)-evaluation, including its sign.
QPoly cd_eval(int r, int n, bool augmented);         // Hilbert series at t=-1
QPoly cd_descents(int r, int n, bool augmented);     // signed descent-class sum
QPoly cd_secant(int r, int n, bool augmented);       // alternating q-binomial sums
QPoly cd_determinant(int r, int n, bool augmented);  // determinant formulas

struct CDReport {
    int r = 0, n = 0;
    bool augmented = false;
    QPoly eval, descents, secant, determinant;  // raw values per route
    QPoly normalized;                           // with the (-1)^{floor(deg/2)} sign
    bool agreement = false;
};

CDReport cd_report(int r, int n, bool augmented);

}  // namespace mcq
