#include "flattorus/veech.hpp"

#include "flattorus/lattice.hpp"
#include "flattorus/numtheory.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace flattorus {

namespace {

long long norm_mod(long long v, long long m) { return ((v % m) + m) % m; }

void require_unimodular(const IntegerMatrix2& M) {
    if (M.det() != 1) throw std::invalid_argument("matrix must have determinant 1");
}

// Extended gcd: returns g = gcd(|a|, |b|) with a*x + b*y == g.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::llabs(a);
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

RationalMarking2::RationalMarking2(long long pn1, std::uint64_t pd1, long long pn2,
                                   std::uint64_t pd2)
    : p1(pn1), q1(pd1), p2(pn2), q2(pd2) {
    if (q1 == 0 || q2 == 0) throw std::invalid_argument("RationalMarking2: zero denominator");
    if (std::gcd<std::uint64_t>(std::llabs(p1), q1) != 1 ||
        std::gcd<std::uint64_t>(std::llabs(p2), q2) != 1)
        throw std::invalid_argument("RationalMarking2: fractions must be in lowest terms");
    if (p1 < 0 || p2 < 0 || static_cast<std::uint64_t>(p1) >= q1 ||
        static_cast<std::uint64_t>(p2) >= q2)
        throw std::invalid_argument("RationalMarking2: point must lie in [0,1)^2");
    if (p1 == 0 && p2 == 0) throw std::invalid_argument("RationalMarking2: point must be nonzero");
}

RationalMarking2 RationalMarking2::from_point(const PlanarVector& v) {
    PlanarVector w = wrap_to_torus(v).coords;
    return RationalMarking2(w.x.num().convert_to<long long>(),
                            w.x.den().convert_to<std::uint64_t>(),
                            w.y.num().convert_to<long long>(),
                            w.y.den().convert_to<std::uint64_t>());
}

bool membership_stabilizer(const RationalMarking2& x, const IntegerMatrix2& M) {
    require_unimodular(M);
    PlanarVector p = x.point();
    PlanarVector image = M.apply(p);
    auto congruent = [](const PlanarVector& u, const PlanarVector& v) {
        return (u.x - v.x).is_integer() && (u.y - v.y).is_integer();
    };
    return congruent(image, p) || congruent(image, -p);
}

namespace {

// Congruence conditions for the unsigned fixing part (image == +x mod Z^2),
// split by the arithmetic of the reduced denominators. Each branch is the
// exact integer reduction of the two stabilizer rows for that case; the
// divisibility branches need the coupled remainder terms, a plain
// entrywise congruence is only complete when q1 and q2 are coprime.
bool congruence_one_sign(const RationalMarking2& x, long long a, long long b, long long c,
                         long long d) {
    long long q1 = static_cast<long long>(x.q1);
    long long q2 = static_cast<long long>(x.q2);
    long long p1 = x.p1, p2 = x.p2;
    if (p2 == 0) {
        // Horizontal axis: congruent to an upper twist mod q1, b free.
        return norm_mod(a - 1, q1) == 0 && norm_mod(c, q1) == 0 && norm_mod(d - 1, q1) == 0;
    }
    if (p1 == 0) {
        return norm_mod(d - 1, q2) == 0 && norm_mod(b, q2) == 0 && norm_mod(a - 1, q2) == 0;
    }
    if (q1 == q2) {
        // The marked vector is fixed mod q1.
        return norm_mod(a * p1 + b * p2 - p1, q1) == 0 &&
               norm_mod(c * p1 + d * p2 - p2, q1) == 0;
    }
    if (q2 % q1 == 0) {
        long long s = q2 / q1;
        if (norm_mod(b, s) != 0 || norm_mod(d - 1, s) != 0) return false;
        return norm_mod(a * p1 + (b / s) * p2 - p1, q1) == 0 &&
               norm_mod(c * p1 + ((d - 1) / s) * p2, q1) == 0;
    }
    if (q1 % q2 == 0) {
        long long s = q1 / q2;
        if (norm_mod(a - 1, s) != 0 || norm_mod(c, s) != 0) return false;
        return norm_mod(((a - 1) / s) * p1 + b * p2, q2) == 0 &&
               norm_mod((c / s) * p1 + d * p2 - p2, q2) == 0;
    }
    long long g = std::gcd(q1, q2);
    if (g == 1) {
        // Coprime denominators decouple entrywise.
        return norm_mod(a - 1, q1) == 0 && norm_mod(b, q2) == 0 && norm_mod(c, q1) == 0 &&
               norm_mod(d - 1, q2) == 0;
    }
    // 1 < gcd < min(q1, q2): the rows stay coupled mod q1*q2.
    return norm_mod((a - 1) * p1 * q2 + b * p2 * q1, q1 * q2) == 0 &&
           norm_mod(c * p1 * q2 + (d - 1) * p2 * q1, q1 * q2) == 0;
}

}  // namespace

bool membership_congruence(const RationalMarking2& x, const IntegerMatrix2& M) {
    require_unimodular(M);
    if (congruence_one_sign(x, M.a, M.b, M.c, M.d)) return true;
    if (congruence_one_sign(x, -M.a, -M.b, -M.c, -M.d)) return true;
    // The quarter rotation joins in at (1/2, 1/2); its congruence is already
    // implied by the q1 == q2 case, kept explicit to mirror the case split.
    if (x.q1 == 2 && x.q2 == 2) {
        IntegerMatrix2 r{0, 1, -1, 0};
        if (M == r || M == -r) return true;
    }
    return false;
}

IntegerMatrix2 reduce_to_canonical(long long p, long long q, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("reduce_to_canonical: n must be >= 2");
    long long nn = static_cast<long long>(n);
    std::uint64_t g3 = std::gcd<std::uint64_t>(
        std::gcd<std::uint64_t>(std::llabs(p), std::llabs(q)), n);
    if (g3 != 1) throw std::invalid_argument("reduce_to_canonical: gcd(p, q, n) must be 1");
    auto verify = [&](const IntegerMatrix2& A) {
        return norm_mod(A.a * p + A.b * q - 1, nn) == 0 && norm_mod(A.c * p + A.d * q, nn) == 0;
    };
    IntegerMatrix2 identity{};
    if (verify(identity)) return identity;

    // Row construction: B maps (p, q) to (c, 0) with c = gcd(p, q).
    long long xa, xb;
    long long c = ext_gcd(p, q, xa, xb);
    IntegerMatrix2 B{xa, xb, -q / c, p / c};
    // Twist up to (c, 1) mod n, clear the first entry, then rotate.
    long long k = 0;
    {
        long long x, y;
        ext_gcd(norm_mod(c, nn), nn, x, y);
        k = norm_mod(x, nn);  // k*c == 1 (mod n)
    }
    IntegerMatrix2 Lk{1, 0, k, 1};
    IntegerMatrix2 Uc{1, -c, 0, 1};
    IntegerMatrix2 R{0, 1, -1, 0};
    IntegerMatrix2 A = R * Uc * Lk * B;
    if (A.det() != 1 || !verify(A))
        throw std::logic_error("reduce_to_canonical: postcondition failed");
    return A;
}

std::uint64_t orbit_index(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("orbit_index: n must be >= 2");
    std::uint64_t out = n * n;
    for (const auto& [p, e] : factorize(n).prime_factors) {
        (void)e;
        out = out / (p * p) * (p * p - 1);
    }
    return out;
}

std::uint64_t orbit_index_bruteforce(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("orbit_index_bruteforce: n must be >= 2");
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a)
        for (std::uint64_t b = 1; b <= n; ++b)
            if (std::gcd(std::gcd(a, b), n) == 1) ++count;
    return count;
}

std::uint64_t veech_group_index(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("veech_group_index: n must be >= 2");
    if (n == 2) return 3;
    std::uint64_t o = orbit_index(n);
    if (o % 2 != 0) throw std::logic_error("veech_group_index: odd orbit count");
    return o / 2;
}

std::uint64_t cusp_count(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("cusp_count: n must be >= 2");
    if (n == 2) return 1;
    std::uint64_t phi = euler_phi(n);
    if (phi % 2 != 0) throw std::logic_error("cusp_count: odd phi for n > 2");
    return phi / 2;
}

std::uint64_t index_via_asymptotics(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("index_via_asymptotics: n must be >= 2");
    // index = 3 k(n) / v where the visible density is v / pi.
    Rational v = coprime_visible_density(n).coef_inv_pi;
    Rational idx = Rational(BigInt(3) * cusp_count(n)) / v;
    if (!idx.is_integer()) throw std::logic_error("index_via_asymptotics: non-integer index");
    return idx.num().convert_to<std::uint64_t>();
}

std::uint64_t gamma1_index(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("gamma1_index: n must be >= 2");
    if (n == 2) return 3;
    return orbit_index(n);
}

Rational ratio_invariant(std::uint64_t n, std::uint64_t x) {
    if (n < 2 || x == 0 || x >= n || std::gcd(x, n) != 1)
        throw std::invalid_argument("ratio_invariant: need 0 < x < n with gcd(x, n) = 1");
    std::uint64_t lo = std::min(x, n - x);
    std::uint64_t hi = std::max(x, n - x);
    return Rational(BigInt(lo), BigInt(hi));
}

std::uint64_t coset_count_by_orbit(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("coset_count_by_orbit: n must be >= 2");
    auto key = [n](std::uint64_t a, std::uint64_t b) { return a * n + b; };
    std::vector<char> seen(n * n, 0);
    std::deque<std::pair<std::uint64_t, std::uint64_t>> queue;
    seen[key(1 % n, 0)] = 1;
    queue.emplace_back(1 % n, 0);
    std::uint64_t orbit = 0;
    std::unordered_set<std::uint64_t> folded;
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        ++orbit;
        std::uint64_t na = (n - a) % n, nb = (n - b) % n;
        folded.insert(std::min(key(a, b), key(na, nb)));
        const std::pair<std::uint64_t, std::uint64_t> next[4] = {
            {(a + b) % n, b},        // upper twist
            {(a + n - b % n) % n, b},  // its inverse
            {a, (b + a) % n},        // lower twist
            {a, (b + n - a % n) % n},  // its inverse
        };
        for (auto [x, y] : next) {
            if (!seen[key(x, y)]) {
                seen[key(x, y)] = 1;
                queue.emplace_back(x, y);
            }
        }
    }
    (void)orbit;
    return folded.size();
}

}  // namespace flattorus
