#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcq/exact.hpp"

namespace mcq {

/// One-line word of a permutation of [n]; values are 1-based.
using Permutation = std::vector<int>;

/// One-line word of a decorated permutation: letters in {0,...,n}, where the
/// letters at nonzero positions form a bijection of that position set. The
/// all-zero word is the empty decorated permutation.
using DecoratedPermutation = std::vector<int>;

struct PermStats {
    int exc = 0;
    uint32_t des_set = 0;  // bit i-1 set iff i is a descent
    int maj = 0;
    int inv = 0;
    int fix = 0;
};

// Resource guards (overridable through MCQ_MAX_N, see guards.cpp).
int perm_guard();       // default 12
int decorated_guard();  // default 10

std::vector<Permutation> gen_permutations(int n);
std::vector<Permutation> gen_derangements(int n);
std::vector<DecoratedPermutation> gen_decorated(int n);
std::vector<Permutation> gen_reverse_alternating(int n);  // n even; s1<s2>s3<...
std::vector<Permutation> gen_alternating(int n);          // n odd;  s1>s2<s3>...

PermStats stats(const Permutation& sigma);

/// Descent set of the barred word (excedance letters barred, barred letters
/// ordered before unbarred ones), as a bitmask over [n-1].
uint32_t dex(const Permutation& sigma);

uint32_t dex_decorated(const DecoratedPermutation& sigma);
int exc_decorated(const DecoratedPermutation& sigma);  // -1 for the all-zero word
int maj_decorated(const DecoratedPermutation& sigma);  // -1 for the all-zero word
int fix2(const DecoratedPermutation& sigma);           // number of zero letters

std::string decorated_str(const DecoratedPermutation& sigma);

// Eulerian polynomial families; the q-free versions are the q=1 slices.
LaurentQT eulerian_A(int n);
LaurentQT eulerian_d(int n);
LaurentQT eulerian_binomial(int n);
LaurentQT eulerian_A_q(int n);
LaurentQT eulerian_d_q(int n);
/// Computed both from the q-binomial recurrence and by direct enumeration of
/// decorated permutations; throws identity_error if the two disagree.
LaurentQT eulerian_binomial_q(int n);

}  // namespace mcq
