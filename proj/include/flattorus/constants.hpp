#pragma once

#include "flattorus/growth.hpp"
#include "flattorus/marking.hpp"
#include "flattorus/rational.hpp"

#include <cstdint>
#include <vector>

namespace flattorus {

enum class CountKind { sc, po };

/// Raised when a marking has no closed-form constant in scope (three or more
/// points in one rationality class, or a denominator too large to evaluate).
struct UnsupportedRegime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed forms are evaluated exactly; the coprime sum makes denominators
/// beyond this infeasible, and markings that far out behave as irrational.
inline constexpr std::uint64_t kMaxClosedFormDenominator = 20000;

/// Regime of a marking for constant evaluation. rational_two_marked carries
/// the reduced difference (p1/n, p2/n); general_position the point count.
struct MarkingRegime {
    enum class Kind { rational_two_marked, general_position, decomposable_po, unsupported };
    Kind kind = Kind::unsupported;
    std::uint64_t n = 0;
    long long p1 = 0;
    long long p2 = 0;
    std::size_t point_count = 0;
};

/// Classifies by relative-rationality classes alone. For sc with >= 3 points
/// general position additionally requires the absence of division events,
/// which only the counting layer can probe.
MarkingRegime classify_marking(const Marking& m, CountKind kind);

/// Writes a rational torus point as (p1/n, p2/n) over one denominator;
/// gcd(p1, p2, n) == 1 holds automatically. Rejects the origin.
void reduce_to_common_denominator(const PlanarVector& x, std::uint64_t& n, long long& p1,
                                  long long& p2);

/// Saddle-connection constant of the 2-marking {0, x} for rational x != 0:
/// (6/pi) * (1 + prod_{p|n}(1-1/p^2)^{-1} * sum_{i in I^n}(1/i^2 - 1/n^2)).
GrowthConstant sc_constant_two_marked(const PlanarVector& x);
GrowthConstant sc_constant_two_marked(std::uint64_t n, long long p1, long long p2);
/// 6/pi + pi, the maximal (irrational) 2-marking value.
GrowthConstant sc_constant_irrational_two_marked();

/// Cylinder constant of the 2-marking {0, x} for rational x != 0:
/// (6/pi) * (1 - (1/2n) * prod_{p|n}(1 + 1/p)^{-1}).
GrowthConstant po_constant_two_marked(const PlanarVector& x);
GrowthConstant po_constant_two_marked_n(std::uint64_t n);
/// 6/pi, the irrational 2-marking value.
GrowthConstant po_constant_irrational_two_marked();

/// k points in general position: (k(k-1)/2)*pi + 3k/pi.
GrowthConstant sc_constant_general_position(std::uint64_t k);
/// k points in general position: 3k/pi.
GrowthConstant po_constant_general_position(std::uint64_t k);

/// Cylinder constant when every rationality class has at most two points:
/// 3/pi per singleton, the two-marked value per pair. Throws
/// UnsupportedRegime on a class of three or more.
GrowthConstant po_constant_decomposable(const Marking& m);

/// Constants along a sequence of rational points (2-marking {0, x} per
/// point), in input order.
std::vector<std::pair<TorusPoint, GrowthConstant>> continuity_sweep(
    const std::vector<TorusPoint>& seq, CountKind kind);

/// Certified rational brackets: pi_squared_lower() < pi^2 < pi_squared_upper().
Rational pi_squared_lower();
Rational pi_squared_upper();

/// Exact sum over i in I^n of 1/i^2.
Rational coprime_inverse_square_sum(std::uint64_t n);

/// Checks, in exact certified arithmetic, the two-sided continuity bound
///   (pi^2/6)(1 - Q/n) < prod(1-1/p^2)^{-1} * sum_{i in I^n} 1/i^2
///                     < (pi^2/6)(1 - Q/4n),   Q = prod_{p|n}(1+1/p)^{-1},
/// for every n in [nmin, nmax]; returns the violating n (expected empty).
std::vector<std::uint64_t> sandwich_violations(std::uint64_t nmin, std::uint64_t nmax);

}  // namespace flattorus
