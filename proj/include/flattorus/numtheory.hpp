#pragma once

#include "flattorus/rational.hpp"

#include <cstdint>
#include <vector>

namespace flattorus {

/// n together with its prime factorization; primes strictly increasing.
struct FactoredInteger {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> prime_factors;
};

/// Trial division; fine for the denominators this project sees (<= ~1e6).
FactoredInteger factorize(std::uint64_t n);

/// Euler's totient via the product formula. Rejects n == 0.
std::uint64_t euler_phi(std::uint64_t n);

/// {j in 1..n/m-1 : gcd(j, n/m) == 1}. Requires m | n; empty for n/m == 1.
std::vector<std::uint64_t> coprime_residues(std::uint64_t n, std::uint64_t m);

/// Principal character mod n: 1 iff gcd(l, n) == 1.
int principal_character(std::uint64_t n, long long l);

/// prod over primes p | n of (1 - 1/p^2); the rational factor r with
/// sum_{gcd(l,n)=1} 1/l^2 = r * pi^2/6.
Rational l_chi0_coefficient(std::uint64_t n);

/// prod over primes p | n of (1 + 1/p)^{-1}.
Rational inv_one_plus_inv_p_product(std::uint64_t n);

/// Truncated sum_{l=1}^{terms} chi0(l)/l^2; tail is below 1/terms.
double partial_l_sum(std::uint64_t n, std::uint64_t terms);

}  // namespace flattorus
