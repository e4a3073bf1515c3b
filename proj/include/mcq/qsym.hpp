#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcq/exact.hpp"

namespace mcq {

/// Subsets of [n-1] are bitmasks: bit i-1 represents the element i.
using Subset = uint32_t;

std::vector<int> subset_to_list(Subset s);
Subset list_to_subset(const std::vector<int>& xs);
int subset_sum(Subset s);  // sum of elements

/// Composition of n determined by a descent subset S of [n-1].
std::vector<int> composition_of(Subset s, int n);
Subset descent_set_of_composition(const std::vector<int>& comp);

/// Graded quasisymmetric function in the fundamental basis: for each degree n
/// a map from descent subsets of [n-1] to Laurent coefficients in t (and q).
class QSymElem {
  public:
    QSymElem() = default;
    QSymElem(long c);  // NOLINT(google-explicit-constructor)
    static QSymElem fundamental(Subset s, int degree, LaurentQT coeff = LaurentQT(1));

    bool is_zero() const { return graded_.empty(); }
    const std::map<int, std::map<Subset, LaurentQT>>& graded() const { return graded_; }
    LaurentQT coeff(int degree, Subset s) const;
    bool homogeneous(int* degree_out = nullptr) const;

    QSymElem& operator+=(const QSymElem& o);
    QSymElem& operator-=(const QSymElem& o);
    friend QSymElem operator+(QSymElem a, const QSymElem& b) { return a += b; }
    friend QSymElem operator-(QSymElem a, const QSymElem& b) { return a -= b; }
    friend QSymElem operator*(const QSymElem& a, const QSymElem& b);
    QSymElem& operator*=(const QSymElem& o) { return *this = *this * o; }
    bool operator==(const QSymElem& o) const = default;

    /// Scale every coefficient by a Laurent factor (e.g. t^k or a q-polynomial).
    QSymElem scaled(const LaurentQT& f) const;
    /// Substitute t := -1 in every coefficient.
    QSymElem eval_t_minus_one() const;

    void add_term(int degree, Subset s, const LaurentQT& c);
    std::string latex() const;

  private:
    std::map<int, std::map<Subset, LaurentQT>> graded_;
};

QSymElem f_basis(Subset s, int n);
QSymElem h_complete(int n);
QSymElem h_of_composition(const std::vector<int>& comp);
QSymElem schur(const std::vector<int>& partition);
/// Ribbon Schur function computed both from standard Young tableaux of the
/// ribbon shape and by inclusion-exclusion over h's; throws identity_error if
/// the two routes disagree.
QSymElem ribbon_schur(Subset r, int n);

std::map<std::vector<int>, LaurentQT> to_monomial(const QSymElem& x);
bool is_symmetric(const QSymElem& x);

/// Kostka number: semistandard tableaux of shape lambda and content nu.
long kostka_number(const std::vector<int>& lambda, const std::vector<int>& nu);

/// Normalized stable principal specialization of a homogeneous element:
/// sum over subsets of coeff_S * q^(sum of S).
LaurentQT ps_normalized(const QSymElem& x, int degree);

}  // namespace mcq
