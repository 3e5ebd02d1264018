#pragma once

#include <vector>

#include "qvt/bigint.hpp"

namespace qvt {

/// All divisors of n in strictly increasing order; first element 1, last n.
/// Throws std::invalid_argument for n < 1.
std::vector<long long> divisors(long long n);

/// gcd with the convention gcd(a, 0) = a and gcd(0, 0) = 0.
long long gcd(long long a, long long b);

/// Moebius function: 1 at n = 1, 0 if n has a squared prime factor,
/// (-1)^k for a product of k distinct primes. Throws for n < 1.
int mobius(long long n);

/// Euler totient: the count of k in [1, n] coprime to n. Throws for n < 1.
long long euler_phi(long long n);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
Int binomial(long long n, long long k);

}  // namespace qvt
