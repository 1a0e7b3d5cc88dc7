#include "flattorus/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace flattorus {

FactoredInteger factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    FactoredInteger f;
    f.n = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            f.prime_factors.emplace_back(p, e);
        }
    }
    if (m > 1) f.prime_factors.emplace_back(m, 1);
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n).prime_factors) {
        phi -= phi / p;
        (void)e;
    }
    return phi;
}

std::vector<std::uint64_t> coprime_residues(std::uint64_t n, std::uint64_t m) {
    if (n == 0 || m == 0 || n % m != 0)
        throw std::invalid_argument("coprime_residues: m must divide n");
    std::uint64_t q = n / m;
    std::vector<std::uint64_t> out;
    for (std::uint64_t j = 1; j < q; ++j)
        if (std::gcd(j, q) == 1) out.push_back(j);
    return out;
}

int principal_character(std::uint64_t n, long long l) {
    if (n == 0) throw std::invalid_argument("principal_character: n must be positive");
    std::uint64_t r = static_cast<std::uint64_t>(l >= 0 ? l : -l) % n;
    return std::gcd(r, n) == 1 ? 1 : 0;
}

Rational l_chi0_coefficient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("l_chi0_coefficient: n must be positive");
    Rational r(1);
    for (const auto& [p, e] : factorize(n).prime_factors) {
        (void)e;
        BigInt p2 = BigInt(p) * p;
        r *= Rational(p2 - 1, p2);
    }
    return r;
}

Rational inv_one_plus_inv_p_product(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("inv_one_plus_inv_p_product: n must be positive");
    Rational r(1);
    for (const auto& [p, e] : factorize(n).prime_factors) {
        (void)e;
        r *= Rational(BigInt(p), BigInt(p) + 1);
    }
    return r;
}

double partial_l_sum(std::uint64_t n, std::uint64_t terms) {
    if (n == 0 || terms == 0)
        throw std::invalid_argument("partial_l_sum: n and terms must be positive");
    // chi0 is periodic mod n; summing small terms first keeps the rounding low.
    std::vector<char> coprime(n);
    for (std::uint64_t r = 0; r < n; ++r) coprime[r] = std::gcd(r, n) == 1 ? 1 : 0;
    double sum = 0.0;
    for (std::uint64_t l = terms; l >= 1; --l) {
        if (coprime[l % n]) {
            double d = static_cast<double>(l);
            sum += 1.0 / (d * d);
        }
    }
    return sum;
}

}  // namespace flattorus
