#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mcq/errors.hpp"

namespace mcq {

using Int = boost::multiprecision::cpp_int;

/// Polynomial in q with integer coefficients and nonnegative exponents.
/// The zero polynomial is the empty map; no zero coefficients are stored.
class QPoly {
  public:
    QPoly() = default;
    QPoly(long c);           // NOLINT(google-explicit-constructor)
    explicit QPoly(Int c);
    static QPoly monomial(int exp, Int c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int degree() const;  // -1 for the zero polynomial
    const std::map<int, Int>& coeffs() const { return coeffs_; }
    Int coeff(int exp) const;
    Int leading_coeff() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    QPoly operator-() const;
    bool operator==(const QPoly& o) const = default;
    auto operator<=>(const QPoly& o) const { return coeffs_ <=> o.coeffs_; }

    /// Exact division; throws identity_error if the division leaves a remainder.
    QPoly divide_exact(const QPoly& d) const;

    Int content() const;  // gcd of coefficients, carries the leading sign
    QPoly primitive_part() const;

    Int eval_int(const Int& q) const;
    Int eval_one() const { return eval_int(1); }
    /// Reverse coefficients within degree d: q^d * p(1/q). Requires degree() <= d.
    QPoly reverse(int d) const;

    void set(int exp, Int c);  // assigns, dropping zeros
    std::string str() const;   // e.g. "1+2q+q^3"

  private:
    std::map<int, Int> coeffs_;
};

/// GCD in Z[q], primitive with positive leading coefficient.
QPoly poly_gcd(QPoly a, QPoly b);

/// Laurent polynomial in t whose coefficients are QPoly.
class LaurentQT {
  public:
    LaurentQT() = default;
    LaurentQT(long c);  // NOLINT(google-explicit-constructor)
    explicit LaurentQT(const QPoly& c);
    static LaurentQT monomial(int t_exp, QPoly c = QPoly(1));

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, QPoly>& coeffs() const { return coeffs_; }
    QPoly coeff(int t_exp) const;
    int min_t() const;  // 0 for zero
    int max_t() const;

    LaurentQT& operator+=(const LaurentQT& o);
    LaurentQT& operator-=(const LaurentQT& o);
    friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
    friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
    friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
    LaurentQT& operator*=(const LaurentQT& o) { return *this = *this * o; }
    LaurentQT operator-() const;
    bool operator==(const LaurentQT& o) const = default;
    auto operator<=>(const LaurentQT& o) const { return coeffs_ <=> o.coeffs_; }

    QPoly eval_t(const QPoly& t) const;    // substitute a q-polynomial for t
    QPoly eval_t_minus_one() const;        // t = -1
    LaurentQT shift_t(int k) const;        // multiply by t^k
    /// t^d * f(1/t): reverses the t-exponents within [0, d].
    LaurentQT reverse_t(int d) const;
    bool palindromic_t(int d) const;       // f == reverse_t(d)
    Int eval_t1_q1() const;

    void set(int t_exp, QPoly c);
    std::string str() const;  // e.g. "1+(2+q)t+t^2"

  private:
    std::map<int, QPoly> coeffs_;
};

/// Fraction of two q-polynomials, reduced and sign-normalized so the
/// denominator has a positive leading coefficient. Equal fractions compare
/// equal componentwise.
class QFrac {
  public:
    QFrac() : num_(0), den_(1) {}
    QFrac(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    QFrac(QPoly num, QPoly den);
    explicit QFrac(QPoly num) : num_(std::move(num)), den_(1) {}

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend QFrac operator+(const QFrac& a, const QFrac& b);
    friend QFrac operator-(const QFrac& a, const QFrac& b);
    friend QFrac operator*(const QFrac& a, const QFrac& b);
    friend QFrac operator/(const QFrac& a, const QFrac& b);
    QFrac operator-() const;
    bool operator==(const QFrac& o) const = default;

  private:
    void reduce();
    QPoly num_, den_;
};

// q-analogs
QPoly q_int(int n);                                   // [n]_q
QPoly q_factorial(int n);                             // [n]_q!
QPoly q_binomial(int n, int k);                       // exact division in Z[q]
QPoly q_multinomial(const std::vector<int>& parts);   // [n]_q!/prod [p]_q!

/// Exact determinant over the fraction field of Z[q] by Gaussian elimination.
/// The matrix is row-major, size x size; size 0 yields 1 (empty product).
QFrac det_qfrac(std::vector<std::vector<QFrac>> m);

}  // namespace mcq
