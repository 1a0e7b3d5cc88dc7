#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace flattorus {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Invariants: den > 0 and gcd(|num|, den) == 1.
/// All arithmetic keeps the canonical form; nothing here ever rounds.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(-num_, den_, already_canonical{}); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    /// Largest integer <= value.
    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    /// Smallest integer >= value.
    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) ++q;
        return q;
    }

    /// Fractional part in [0, 1): value - floor(value).
    Rational frac() const { return *this - Rational(floor()); }

    /// Rounds to double; safe for values whose magnitude is far outside
    /// the double range of either numerator or denominator alone.
    double to_double() const {
        if (num_ == 0) return 0.0;
        BigInt an = boost::multiprecision::abs(num_);
        long ln = static_cast<long>(boost::multiprecision::msb(an));
        long ld = static_cast<long>(boost::multiprecision::msb(den_));
        long k = 63 - (ln - ld);
        BigInt t;
        if (k >= 0)
            t = (an << k) / den_;
        else
            t = an / (den_ << -k);
        double v = std::ldexp(t.convert_to<double>(), static_cast<int>(-k));
        return num_ < 0 ? -v : v;
    }

    /// "a" when integral, otherwise "a/b".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += "/";
            s += den_.str();
        }
        return s;
    }

    /// Parses "a" or "a/b" (optionally signed); throws on malformed input.
    static Rational parse(const std::string& text);

private:
    struct already_canonical {};
    Rational(BigInt n, BigInt d, already_canonical) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

/// Exact vector in the plane.
struct PlanarVector {
    Rational x;
    Rational y;

    PlanarVector() = default;
    PlanarVector(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    PlanarVector operator+(const PlanarVector& o) const { return {x + o.x, y + o.y}; }
    PlanarVector operator-(const PlanarVector& o) const { return {x - o.x, y - o.y}; }
    PlanarVector operator-() const { return {-x, -y}; }
    PlanarVector operator*(const Rational& s) const { return {x * s, y * s}; }

    bool operator==(const PlanarVector& o) const { return x == o.x && y == o.y; }
    bool operator!=(const PlanarVector& o) const { return !(*this == o); }
    /// Lexicographic order on (x, y); used for deterministic output and
    /// for picking the representative of an antipodal pair.
    bool operator<(const PlanarVector& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline Rational squared_norm(const PlanarVector& v) { return v.x * v.x + v.y * v.y; }

inline Rational cross(const PlanarVector& v, const PlanarVector& w) {
    return v.x * w.y - v.y * w.x;
}

inline Rational dot(const PlanarVector& v, const PlanarVector& w) {
    return v.x * w.x + v.y * w.y;
}

/// r with w == r*v, when v and w are exactly parallel; empty otherwise.
/// Parallelism is the exact cross-product test. Requires v != 0.
std::optional<Rational> rational_ratio(const PlanarVector& v, const PlanarVector& w);

/// A point of the unit torus: both coordinates in [0, 1).
struct TorusPoint {
    PlanarVector coords;

    TorusPoint() = default;
    explicit TorusPoint(PlanarVector c) : coords(std::move(c)) {
        if (coords.x.is_negative() || coords.x >= Rational(1) || coords.y.is_negative() ||
            coords.y >= Rational(1))
            throw std::invalid_argument("TorusPoint: coordinates must lie in [0,1)");
    }

    bool operator==(const TorusPoint& o) const { return coords == o.coords; }
    bool operator!=(const TorusPoint& o) const { return !(*this == o); }
};

/// Reduces a plane vector mod Z^2 to its fundamental-domain representative.
inline TorusPoint wrap_to_torus(const PlanarVector& v) {
    return TorusPoint(PlanarVector(v.x.frac(), v.y.frac()));
}

}  // namespace flattorus
