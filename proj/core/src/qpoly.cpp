#include "qvt/qpoly.hpp"

#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qvt/errors.hpp"
#include "qvt/numtheory.hpp"

namespace qvt {

namespace {

void trim(std::vector<Int>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

// Long division of num by den, requiring an exact integer quotient.
// Every divisor this library produces is monic ([i] and all its products),
// but the per-step divisibility check keeps the routine total: any inexact
// step means the caller's algebra is wrong, not the input.
QPoly divide_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Int> rem = num.coefficients();
  const std::vector<Int>& d = den.coefficients();
  const int dn = den.degree();
  const Int& lead = d.back();
  if (num.degree() < dn) {
    if (!num.is_zero()) throw integrity_error("polynomial division left a remainder");
    return QPoly{};
  }
  std::vector<Int> quot(static_cast<size_t>(num.degree() - dn) + 1);
  for (int k = num.degree() - dn; k >= 0; --k) {
    Int& top = rem[static_cast<size_t>(k + dn)];
    if (top % lead != 0) throw integrity_error("polynomial division left a remainder");
    Int f = top / lead;
    if (f != 0) {
      for (int i = 0; i <= dn; ++i) {
        rem[static_cast<size_t>(k + i)] -= f * d[static_cast<size_t>(i)];
      }
    }
    quot[static_cast<size_t>(k)] = std::move(f);
  }
  for (const Int& c : rem) {
    if (c != 0) throw integrity_error("polynomial division left a remainder");
  }
  return QPoly::from_coefficients(std::move(quot));
}

}  // namespace

QPoly::QPoly(Int constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly QPoly::from_coefficients(std::vector<Int> coefficients) {
  QPoly p;
  p.coeffs_ = std::move(coefficients);
  trim(p.coeffs_);
  return p;
}

QPoly QPoly::monomial(Int coefficient, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (coefficient == 0) return QPoly{};
  std::vector<Int> coeffs(static_cast<size_t>(degree) + 1);
  coeffs.back() = std::move(coefficient);
  return from_coefficients(std::move(coeffs));
}

Int QPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

QPoly QPoly::operator+(const QPoly& rhs) const {
  std::vector<Int> sum(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) sum[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) sum[i] += rhs.coeffs_[i];
  return from_coefficients(std::move(sum));
}

QPoly QPoly::operator-(const QPoly& rhs) const {
  std::vector<Int> diff(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) diff[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) diff[i] -= rhs.coeffs_[i];
  return from_coefficients(std::move(diff));
}

QPoly QPoly::operator*(const QPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return QPoly{};
  std::vector<Int> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return from_coefficients(std::move(prod));
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  if (is_zero()) return QPoly{};
  std::vector<Int> coeffs(static_cast<size_t>(k));
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return from_coefficients(std::move(coeffs));
}

QPoly QPoly::scaled(const Int& factor) const {
  std::vector<Int> coeffs = coeffs_;
  for (Int& c : coeffs) c *= factor;
  return from_coefficients(std::move(coeffs));
}

Int QPoly::value_at_one() const {
  Int sum = 0;
  for (const Int& c : coeffs_) sum += c;
  return sum;
}

std::complex<double> QPoly::evaluate(std::complex<double> q) const {
  std::complex<double> value = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value = value * q + std::complex<double>(it->convert_to<double>(), 0.0);
  }
  return value;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << "q";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::vector<std::string> QPoly::coefficient_strings() const {
  std::vector<std::string> strings;
  strings.reserve(coeffs_.size());
  for (const Int& c : coeffs_) strings.push_back(c.str());
  return strings;
}

ResiduePoly::ResiduePoly(int modulus, std::vector<Int> coefficients)
    : modulus_(modulus), coeffs_(std::move(coefficients)) {
  if (modulus_ < 1) throw std::invalid_argument("residue modulus must be >= 1");
  if (coeffs_.size() != static_cast<size_t>(modulus_)) {
    throw std::invalid_argument("residue needs exactly modulus coefficients");
  }
}

QPoly ResiduePoly::to_qpoly() const {
  return QPoly::from_coefficients(coeffs_);
}

std::vector<std::string> ResiduePoly::coefficient_strings() const {
  std::vector<std::string> strings;
  strings.reserve(coeffs_.size());
  for (const Int& c : coeffs_) strings.push_back(c.str());
  return strings;
}

QPoly q_integer(int i) {
  if (i < 1) throw std::invalid_argument("q_integer requires i >= 1");
  return QPoly::from_coefficients(std::vector<Int>(static_cast<size_t>(i), 1));
}

QPoly q_factorial(int i) {
  if (i < 0) throw std::invalid_argument("q_factorial requires i >= 0");
  QPoly product{Int(1)};
  for (int k = 2; k <= i; ++k) {
    product = product * q_integer(k);
  }
  return product;
}

QPoly q_binomial(int i, int j) {
  if (i < 0 || j < 0 || j > i) return QPoly{};
  QPoly quotient = divide_exact(q_factorial(i), q_factorial(j) * q_factorial(i - j));
  if (quotient.degree() != j * (i - j)) {
    throw integrity_error("q_binomial degree mismatch");
  }
  return quotient;
}

ResiduePoly reduce_mod(const QPoly& p, int n) {
  if (n < 1) throw std::invalid_argument("reduce_mod requires n >= 1");
  std::vector<Int> folded(static_cast<size_t>(n));
  const std::vector<Int>& coeffs = p.coefficients();
  for (size_t e = 0; e < coeffs.size(); ++e) {
    folded[e % static_cast<size_t>(n)] += coeffs[e];
  }
  return ResiduePoly(n, std::move(folded));
}

std::complex<double> eval_at_root_of_unity(const QPoly& p, int d, long long k) {
  if (d < 1) throw std::invalid_argument("root order d must be >= 1");
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(d);
  return p.evaluate(std::polar(1.0, angle));
}

Int q_binomial_limit_at_primitive_root(int alpha, int beta, int d) {
  if (alpha < 1 || beta < 1) {
    throw std::invalid_argument("alpha and beta must be >= 1");
  }
  if (d < 1 || (alpha + beta) % d != 0) {
    throw std::invalid_argument("d must divide alpha + beta");
  }
  if (std::gcd(alpha, beta) % d != 0) return 0;
  return binomial((alpha + beta) / d, beta / d);
}

QPoly lattice_path_weight_distribution(int i, int j) {
  if (i < 0 || j < 0 || j > i) {
    throw std::invalid_argument("need 0 <= j <= i");
  }
  // A path is a word of i steps, j of them East. S(p) equals the number of
  // (East, North) pairs in which the East step comes first: an East step at
  // height h has (i - j) - h squares above it in its column.
  std::vector<Int> weights(static_cast<size_t>(j * (i - j)) + 1);
  const int north_total = i - j;
  // Depth-first over step sequences, tracking easts placed and norths seen.
  struct Frame {
    int step, easts, weight;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.step == i) {
      weights[static_cast<size_t>(f.weight)] += 1;
      continue;
    }
    const int norths = f.step - f.easts;
    if (f.easts < j) {
      // East step: every North step still to come lies above it.
      stack.push_back({f.step + 1, f.easts + 1, f.weight + (north_total - norths)});
    }
    if (norths < north_total) {
      stack.push_back({f.step + 1, f.easts, f.weight});
    }
  }
  return QPoly::from_coefficients(std::move(weights));
}

}  // namespace qvt
