#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qvt/bigint.hpp"

namespace qvt {

/// Univariate polynomial in the formal variable q with exact integer
/// coefficients, stored ascending by degree in canonical form (no trailing
/// zero coefficient; the zero polynomial has no coefficients at all).
/// Immutable value type: every operation returns a fresh polynomial.
class QPoly {
 public:
  QPoly() = default;  // the zero polynomial
  explicit QPoly(Int constant);

  /// Builds from ascending coefficients, trimming trailing zeros.
  static QPoly from_coefficients(std::vector<Int> coefficients);

  /// coefficient * q^degree
  static QPoly monomial(Int coefficient, int degree);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^k (zero outside the stored range, k may be any int).
  Int coefficient(int k) const;

  const std::vector<Int>& coefficients() const { return coeffs_; }

  QPoly operator+(const QPoly& rhs) const;
  QPoly operator-(const QPoly& rhs) const;
  QPoly operator*(const QPoly& rhs) const;
  bool operator==(const QPoly& rhs) const = default;

  /// Multiplication by q^k, k >= 0.
  QPoly shifted(int k) const;

  /// Scalar multiple.
  QPoly scaled(const Int& factor) const;

  /// Sum of coefficients, i.e. the value at q = 1.
  Int value_at_one() const;

  /// Horner evaluation in complex double arithmetic.
  std::complex<double> evaluate(std::complex<double> q) const;

  /// Ascending-degree text form, e.g. "1 + q + 2q^2 + q^3 + q^4".
  /// Zero terms are omitted, unit coefficients drop the "1", exponent 1
  /// drops the "^1"; the zero polynomial renders as "0".
  std::string to_string() const;

  /// Coefficients rendered as decimal strings ascending by degree
  /// (machine form; strings so arbitrarily large values survive JSON).
  std::vector<std::string> coefficient_strings() const;

 private:
  std::vector<Int> coeffs_;
};

/// A polynomial reduced modulo q^n - 1: exactly n coefficients for
/// q^0 .. q^(n-1). Two residues compare equal only when both the modulus
/// and every coefficient agree.
class ResiduePoly {
 public:
  ResiduePoly(int modulus, std::vector<Int> coefficients);

  int modulus() const { return modulus_; }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  Int coefficient(int k) const { return coeffs_.at(static_cast<size_t>(k)); }

  bool operator==(const ResiduePoly& rhs) const = default;

  /// The residue as a plain polynomial of degree < modulus.
  QPoly to_qpoly() const;

  std::string to_string() const { return to_qpoly().to_string(); }
  std::vector<std::string> coefficient_strings() const;

 private:
  int modulus_;
  std::vector<Int> coeffs_;
};

/// [i] = 1 + q + ... + q^(i-1). Throws for i < 1.
QPoly q_integer(int i);

/// [i]! = [i][i-1]...[1], with [0]! = 1. Throws for i < 0.
QPoly q_factorial(int i);

/// Gaussian binomial [i over j]: [i]!/([j]![i-j]!) for i >= j >= 0 and the
/// zero polynomial otherwise. Computed by exact polynomial long division;
/// a nonzero remainder is an arithmetic fault and raises integrity_error.
QPoly q_binomial(int i, int j);

/// Folds every exponent e onto e mod n. Throws for n < 1.
ResiduePoly reduce_mod(const QPoly& p, int n);

/// Value of p at e^(2*pi*i*k/d). Throws for d < 1.
std::complex<double> eval_at_root_of_unity(const QPoly& p, int d, long long k);

/// Value of [alpha+beta over beta] at a primitive d-th root of unity, for
/// d dividing alpha+beta: binomial((alpha+beta)/d, beta/d) when d divides
/// gcd(alpha, beta), zero otherwise. Throws when d does not divide
/// alpha+beta (the hypothesis of the identity).
Int q_binomial_limit_at_primitive_root(int alpha, int beta, int d);

/// Brute-force oracle for the lattice-path identity: enumerates all
/// binomial(i, j) paths from (0,0) to (j, i-j) and accumulates q^S(p),
/// where S(p) counts the unit squares of the j x (i-j) rectangle strictly
/// north-west of the path. Equals q_binomial(i, j) by the identity the
/// oracle exists to check. Throws for j < 0 or j > i.
QPoly lattice_path_weight_distribution(int i, int j);

}  // namespace qvt
