#include "qvt/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qvt {

namespace {

void require_positive(long long n, const char* fn) {
  if (n < 1) {
    throw std::invalid_argument(std::string(fn) + " requires n >= 1, got " +
                                std::to_string(n));
  }
}

// Trial division; inputs stay at desk scale (a total word length of a
// few dozen in the closed forms, 10^4 in the property tests).
std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> factors;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

}  // namespace

std::vector<long long> divisors(long long n) {
  require_positive(n, "divisors");
  std::vector<long long> result;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      result.push_back(d);
      if (d != n / d) result.push_back(n / d);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

long long gcd(long long a, long long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("gcd requires a, b >= 0");
  return std::gcd(a, b);
}

int mobius(long long n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long long euler_phi(long long n) {
  require_positive(n, "euler_phi");
  long long phi = n;
  for (const auto& [p, e] : factorize(n)) {
    phi -= phi / p;
  }
  return phi;
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is binomial(n-k+i, i) after this step
  }
  return result;
}

}  // namespace qvt
