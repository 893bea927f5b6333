#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specfock {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer Laurent polynomial in q, stored sparsely by exponent.
///
/// No stored coefficient is ever zero, so the zero polynomial is the
/// empty map and structural equality is value equality.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants promote
  LaurentPoly(const Integer& c);  // NOLINT

  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
  static LaurentPoly q() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Integer coeff(int exponent) const;
  /// Smallest/largest exponent with a nonzero coefficient; throws on zero.
  int min_exponent() const;
  int max_exponent() const;
  std::size_t term_count() const { return terms_.size(); }
  /// True iff the polynomial is c*q^k for a single term.
  bool is_monomial() const { return terms_.size() == 1; }
  /// True iff every exponent is strictly positive (i.e. the value lies in qZ[q]).
  bool in_positive_part() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& c);

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;

  /// Exact quotient in Z[q, q^-1], or nullopt if `divisor` does not divide.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& divisor) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text form: ascending exponents, e.g. "-q^-2 + 3 + 2*q^3".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int exponent, const Integer& c);
  TermMap terms_;
};

/// Gaussian integer [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
LaurentPoly gauss(int n);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
LaurentPoly gauss_factorial(int n);
/// Symmetric quantum integer q^{1-n} + q^{3-n} + ... + q^{n-1}.
LaurentPoly balanced_gauss(int n);
/// Product of balanced_gauss(1..n).
LaurentPoly balanced_factorial(int n);
/// The l-th cyclotomic polynomial, by exact division of q^l - 1.
const LaurentPoly& cyclotomic(int l);
/// Multiplicity of the l-th cyclotomic polynomial as a factor.
int cyclo_valuation(const LaurentPoly& p, int l);
/// q -> q^-1.
LaurentPoly bar(const LaurentPoly& p);

struct BarSplit {
  LaurentPoly gamma;  // bar-invariant part
  LaurentPoly rest;   // only strictly positive exponents
};
BarSplit bar_symmetric_split(const LaurentPoly& c);

Rational evaluate(const LaurentPoly& p, const Rational& q);

/// Exact rational power r^k, k of either sign (r != 0 when k < 0).
Rational rational_pow(const Rational& r, int k);
/// The q-integer [k]_q at a specialised q, for any integer k:
/// (q^k - 1)/(q - 1), with value k at q = 1.
Rational q_integer(int k, const Rational& q);

/// Formal signed ratio  sign * q^qpower * prod [n_i]_q / prod [d_j]_q.
///
/// Numerator and denominator are multisets of positive integers kept sorted;
/// common entries cancel on construction. Nothing is ever expanded to a
/// quotient of polynomials.
class GaussRatio {
 public:
  GaussRatio() = default;
  GaussRatio(std::vector<int> numerator, std::vector<int> denominator, int sign = 1, int qpower = 0);

  static GaussRatio one() { return {}; }

  int sign() const { return sign_; }
  int qpower() const { return qpower_; }
  const std::vector<int>& numerator() const { return num_; }
  const std::vector<int>& denominator() const { return den_; }

  GaussRatio& operator*=(const GaussRatio& other);
  GaussRatio& operator/=(const GaussRatio& other);
  friend GaussRatio operator*(GaussRatio a, const GaussRatio& b) { return a *= b; }
  friend GaussRatio operator/(GaussRatio a, const GaussRatio& b) { return a /= b; }
  friend bool operator==(const GaussRatio&, const GaussRatio&) = default;

  /// Value at q = 1: sign * prod(num) / prod(den).
  Rational value_at_one() const;
  Rational evaluate(const Rational& q) const;
  /// Numerator and denominator expanded as polynomials (signs and q-power on the numerator).
  std::pair<LaurentPoly, LaurentPoly> expand() const;

  std::string to_string() const;

 private:
  void normalise();
  int sign_ = 1;
  int qpower_ = 0;
  std::vector<int> num_;
  std::vector<int> den_;
};

/// #{numerator entries divisible by l} - #{denominator entries divisible by l}.
int cyclo_valuation(const GaussRatio& r, int l);

/// Ordinary p-adic valuation of a nonzero integer.
int padic_valuation(long long n, int p);

}  // namespace specfock
