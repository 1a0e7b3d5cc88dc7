#pragma once

#include "flattorus/growth.hpp"
#include "flattorus/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace flattorus {

/// Affine grid (p1 + q1*Z) x (p2 + q2*Z) with q1, q2 > 0.
struct Lattice {
    PlanarVector offset;
    Rational q1;
    Rational q2;

    Lattice(PlanarVector off, Rational m1, Rational m2);

    bool contains(const PlanarVector& v) const;
    bool same_point_set(const Lattice& o) const;
};

/// Finite union of lattices. Components must be pairwise distinct as
/// point sets; they may still overlap partially, counting dedups that.
struct PointDistribution {
    std::vector<Lattice> components;

    explicit PointDistribution(std::vector<Lattice> comps);

    bool contains(const PlanarVector& v) const;
    /// True when every offset and modulus is an integer.
    bool is_integral() const;
};

/// How antipodal pairs are reported: one representative per geometric
/// direction (unoriented) or both signs (directed).
enum class Visibility { directed, unoriented };

/// Intersection of two lattices, empty when the congruences clash.
std::optional<Lattice> intersect(const Lattice& a, const Lattice& b);

/// Exact cardinality of G intersected with the closed disk |v| <= T.
/// Row counting with integer square roots; unions via inclusion-exclusion.
std::uint64_t count_points(const PointDistribution& G, const Rational& T);

/// Sum of 1/(q1*q2) over components; the count grows like this times pi*T^2.
/// Requires pairwise disjoint components (checked exactly, not sampled).
Rational density_coefficient(const PointDistribution& G);

/// Visible points of a finite point set: p is visible when no q in the set
/// equals lambda*p with 0 < |lambda| < 1. Under unoriented, an antipodal
/// visible pair contributes its lexicographically larger member.
std::vector<PlanarVector> visible_subset(std::vector<PlanarVector> points, Visibility conv);

/// Visible points of G within the closed disk of radius T, computed from the
/// definition via direction bucketing. Rejects distributions containing the
/// origin unless exclude_origin is set (the "G minus origin" wrapper).
std::vector<PlanarVector> visible_points(const PointDistribution& G, const Rational& T,
                                         Visibility conv, bool exclude_origin = false);

/// Number of visible points without materializing them; integer-valued
/// distributions take a packed-key fast path.
std::uint64_t visible_count(const PointDistribution& G, const Rational& T, Visibility conv,
                            bool exclude_origin = false);

/// All points of G in the closed disk, deduplicated, ordered by (y, x).
std::vector<PlanarVector> points_in_disk(const PointDistribution& G, const Rational& T);

/// Union over k coprime to n of the lattices (n*Z + k, n*Z). Requires n >= 2.
PointDistribution coprime_residue_lattices(std::uint64_t n);

/// Z^2-completion of (n*Z + r, n*Z) for gcd(r, n) == 1; equals
/// coprime_residue_lattices(n) as a point set.
PointDistribution completion_in_z2(std::uint64_t n, long long r);

/// Z^2-completion of n*Z^2 + (p1, p2) with gcd(p1, p2, n) == 1: the union of
/// its unit multiples u*(p1, p2) mod n over u coprime to n.
PointDistribution z2_completion_of_shift(std::uint64_t n, long long p1, long long p2);

/// Rational c(n) with count(G, T) = visible_unoriented(G, T) * c(n) * pi^2
/// + o(T^2) for G = coprime_residue_lattices(n). Equals the L-series
/// coefficient divided by 3. Requires n >= 2.
Rational multiplicity_coefficient(std::uint64_t n);

/// lim visible_unoriented(G, T)/T^2 for G = coprime_residue_lattices(n),
/// as an exact growth constant: (3/n) * prod_{p|n} (1 + 1/p)^{-1} over pi.
GrowthConstant coprime_visible_density(std::uint64_t n);

/// Every offset and modulus multiplied by p > 0; counts obey
/// count(scale(G, p), T) == count(G, T/p).
PointDistribution scale_distribution(const PointDistribution& G, const Rational& p);

}  // namespace flattorus
