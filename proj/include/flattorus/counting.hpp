#pragma once

#include "flattorus/constants.hpp"
#include "flattorus/growth.hpp"
#include "flattorus/lattice.hpp"
#include "flattorus/marking.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace flattorus {

/// Geodesic segment between markings with no marking in its open interior.
/// Loops (from == to) carry the unoriented representative of {v, -v}; for
/// from < to both plane vectors of the pair appear as separate segments.
struct SaddleConnection {
    std::size_t from;
    std::size_t to;
    PlanarVector vec;
};

/// All parallel closed geodesics in one primitive direction. leaf_count is
/// the number of singular leaves through markings, i.e. the number of
/// cylinders of that circumference.
struct CylinderFamily {
    long long dir_x;
    long long dir_y;
    Rational circumference_sq;
    std::uint64_t leaf_count;
};

/// One counting run: exact count, float ratio count/T^2, and the closed-form
/// limit when the marking sits in a supported regime.
struct CountReport {
    Rational radius;
    std::uint64_t count = 0;
    double ratio = 0.0;
    std::optional<GrowthConstant> target;
};

enum class Exec { serial, parallel };

/// Raised when a structural guarantee fails (these are loud by design).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute-force oracle: every candidate vector within the closed disk of
/// radius T, filtered by the exact open-segment interior test against all
/// markings. Deterministic order: pair (i <= j), then rows by the vector's
/// second coordinate, then first coordinate.
std::vector<SaddleConnection> enumerate_saddle_connections(const Marking& m, const Rational& T);

/// Count of the above without materializing the list.
std::uint64_t count_sc_total(const Marking& m, const Rational& T, Exec exec = Exec::parallel);

/// One family per unoriented primitive integer direction with |w| <= T.
std::vector<CylinderFamily> enumerate_cylinders(const Marking& m, const Rational& T);

/// Total cylinder count: sum of leaf counts over all directions with
/// |w| <= T.
std::uint64_t count_po_total(const Marking& m, const Rational& T, Exec exec = Exec::parallel);

CountReport count_sc(const Marking& m, const Rational& T, Exec exec = Exec::parallel);
CountReport count_po(const Marking& m, const Rational& T, Exec exec = Exec::parallel);

/// Closed-form limit for the marking, when one applies. For sc with three or
/// more markings the class test is refined by a division-event probe at the
/// given radius, since pairwise-irrational points may still divide each
/// other's connections.
std::optional<GrowthConstant> closed_form_target(const Marking& m, CountKind kind,
                                                 const Rational& probe_radius = Rational(30));

/// A marking that lies on saddle connections of the others at a common
/// rational length ratio, together with the affine lattice those divided
/// connections form.
struct DivisionEvent {
    std::size_t divider;
    std::size_t from;
    std::size_t to;
    Rational ratio;
    Lattice witness;
    std::size_t member_count;
};

/// Scans, for every marking k, the saddle connections of the marking with k
/// removed, and groups the segments on which k sits at a horizon-rational
/// ratio. Verifies that each group's integer parts agree mod the ratio
/// denominator and that groups over a horizon-irrational pair share a single
/// stretch factor; violations raise ConsistencyError.
std::vector<DivisionEvent> rational_division_events(const Marking& m, const Rational& T);

/// Saddle connections of pair (i, j) parallel to a strictly longer connection
/// of the rest of the marking with horizon-irrational length ratio. Such
/// counts grow linearly, not quadratically.
std::uint64_t count_nonrational_parallel(const Marking& m, std::size_t i, std::size_t j,
                                         const Rational& T);

/// Unoriented primitive vectors of Z^2 in the closed disk of radius T.
std::uint64_t unoriented_primitive_z2_count(const Rational& T);

/// Saddle-connection count for the 2-marking {0, (p1/n, p2/n)} assembled from
/// lattice counts instead of the oracle: twice the unoriented primitive Z^2
/// count, minus twice the blocked loop directions (the visible points of the
/// completion of n*Z^2 + p), plus one boundary connection per directed
/// visible completion point at its rescaled length. Exact at every radius.
std::uint64_t lattice_assembled_sc_count(std::uint64_t n, long long p1, long long p2,
                                         const Rational& T);

/// Cylinder count for the same marking via lattices: twice the primitive
/// directions minus the single-leaf ones. Exact at every radius.
std::uint64_t lattice_assembled_po_count(std::uint64_t n, long long p1, long long p2,
                                         const Rational& T);

}  // namespace flattorus
