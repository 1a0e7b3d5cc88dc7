#pragma once

#include "flattorus/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flattorus {

/// Thrown by the markings-file parser; carries the offending line number.
struct MarkingParseError : std::runtime_error {
    int line;
    MarkingParseError(int ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

/// True when both coordinates of the difference have denominator <= horizon.
/// Differences beyond the horizon are treated as irrational: the denominator
/// is too large for any rational coincidence to show up inside the counting
/// window, so the point behaves like a generic irrational one.
bool is_horizon_rational(const PlanarVector& diff, std::uint64_t horizon);

/// Partition of {0..n-1} into relative-rationality classes: i and j share a
/// class exactly when points[i] - points[j] is horizon-rational. Classes are
/// sorted internally and by smallest member.
std::vector<std::vector<std::size_t>> decompose_classes(const std::vector<TorusPoint>& points,
                                                        std::uint64_t horizon);

/// Ordered list of distinct torus points with its class partition.
struct Marking {
    std::vector<TorusPoint> points;
    std::uint64_t horizon;
    std::vector<std::vector<std::size_t>> classes;

    Marking(std::vector<TorusPoint> pts, std::uint64_t horizon_value);

    std::size_t size() const { return points.size(); }

    /// Reads one point per line, "p1/q1 p2/q2" (integers allowed, values are
    /// wrapped into [0,1)); '#' starts a comment, blank lines are skipped.
    static Marking from_file(const std::string& path, std::uint64_t horizon_value);
    static Marking from_string(const std::string& text, std::uint64_t horizon_value);
};

}  // namespace flattorus
