#pragma once

#include "flattorus/growth.hpp"
#include "flattorus/rational.hpp"

#include <cstdint>

namespace flattorus {

/// Element of SL2(Z), acting on column vectors.
struct IntegerMatrix2 {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }

    IntegerMatrix2 operator*(const IntegerMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    IntegerMatrix2 operator-() const { return {-a, -b, -c, -d}; }
    /// Inverse of a determinant-one matrix.
    IntegerMatrix2 inverse() const { return {d, -b, -c, a}; }

    PlanarVector apply(const PlanarVector& v) const {
        return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
    }

    bool operator==(const IntegerMatrix2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/// Rational marking (p1/q1, p2/q2) in [0,1)^2, both fractions in lowest
/// terms, not the origin.
struct RationalMarking2 {
    long long p1 = 0;
    std::uint64_t q1 = 1;
    long long p2 = 0;
    std::uint64_t q2 = 1;

    RationalMarking2(long long pn1, std::uint64_t pd1, long long pn2, std::uint64_t pd2);
    static RationalMarking2 from_point(const PlanarVector& v);

    PlanarVector point() const {
        return {Rational(BigInt(p1), BigInt(q1)), Rational(BigInt(p2), BigInt(q2))};
    }
};

/// Membership in the Veech group by the case-split congruence conditions,
/// keyed on the reduced coordinates. Requires det M == 1.
bool membership_congruence(const RationalMarking2& x, const IntegerMatrix2& M);

/// Membership by the stabilizer condition M x == x or M x == -x (mod Z^2),
/// evaluated in exact rationals. Requires det M == 1.
bool membership_stabilizer(const RationalMarking2& x, const IntegerMatrix2& M);

/// A in SL2(Z) with A * (p/n, q/n) == (1/n, 0) mod Z^2. Identity when the
/// input is already congruent to (1, 0) mod n; otherwise a gcd row, two Dehn
/// twists, and a quarter rotation. Postcondition verified internally.
IntegerMatrix2 reduce_to_canonical(long long p, long long q, std::uint64_t n);

/// |{(a,b) : 0 < a,b <= n, gcd(a,b,n)=1}| = n^2 prod_{p|n}(1 - 1/p^2).
std::uint64_t orbit_index(std::uint64_t n);
std::uint64_t orbit_index_bruteforce(std::uint64_t n);

/// Index of the Veech group of the 2-marking (1/n, 0) in SL2(Z):
/// (n^2/2) prod (1 - 1/p^2) for n > 2, and 3 for n = 2.
std::uint64_t veech_group_index(std::uint64_t n);

/// Number of one-cylinder direction orbits: phi(n)/2 for n > 2, 1 for n = 2.
std::uint64_t cusp_count(std::uint64_t n);

/// The same index computed from the cusp count and the visible-point density
/// of the coprime-residue distribution; must agree with veech_group_index.
std::uint64_t index_via_asymptotics(std::uint64_t n);

/// Index of Gamma_1(n) in SL2(Z): n^2 prod (1 - 1/p^2) for n > 2, 3 for n = 2.
std::uint64_t gamma1_index(std::uint64_t n);

/// min(x, n-x)/max(x, n-x) for 0 < x < n coprime to n; constant on the pair
/// {x, n-x}, so it takes phi(n)/2 distinct values for n > 2.
Rational ratio_invariant(std::uint64_t n, std::uint64_t x);

/// Size of the +-folded orbit of (1, 0) mod n under SL2(Z/n), by breadth
/// first search over the twist generators; equals the Veech group index.
std::uint64_t coset_count_by_orbit(std::uint64_t n);

}  // namespace flattorus
