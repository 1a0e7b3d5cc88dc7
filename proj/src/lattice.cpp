#include "flattorus/lattice.hpp"

#include "flattorus/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace flattorus {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a < 0) != (b < 0) && q * b != a) --q;
    return q;
}

// floor((sqrt(X) + A) / B) for X >= 0, B > 0. Uses the integer square root
// and fixes the boundary with the exact predicate B*t - A <= sqrt(X).
BigInt floor_qsqrt(const BigInt& X, const BigInt& A, const BigInt& B) {
    BigInt r = boost::multiprecision::sqrt(X);
    BigInt t = floor_div(r + A, B);
    auto ok = [&](const BigInt& cand) {
        BigInt lhs = B * cand - A;
        return lhs <= 0 || lhs * lhs <= X;
    };
    while (ok(t + 1)) ++t;
    while (!ok(t)) --t;
    return t;
}

// floor((sqrt(R2) + c) / d) with rational R2 >= 0, d > 0.
BigInt floor_sqrt_linear(const Rational& R2, const Rational& c, const Rational& d) {
    const BigInt& a = R2.num();
    const BigInt& b = R2.den();
    const BigInt& cn = c.num();
    const BigInt& cd = c.den();
    const BigInt& dn = d.num();
    const BigInt& dd = d.den();
    BigInt X = a * b * cd * cd * dd * dd;
    BigInt A = cn * b * dd;
    BigInt B = b * cd * dn;
    return floor_qsqrt(X, A, B);
}

// Points of a single lattice in the closed disk of radius T.
std::uint64_t count_lattice(const Lattice& L, const Rational& T) {
    const Rational& p1 = L.offset.x;
    const Rational& p2 = L.offset.y;
    Rational T2 = T * T;
    BigInt kmin = ((-T - p2) / L.q2).ceil();
    BigInt kmax = ((T - p2) / L.q2).floor();
    std::uint64_t total = 0;
    for (BigInt k = kmin; k <= kmax; ++k) {
        Rational y = p2 + L.q2 * Rational(k);
        Rational R2 = T2 - y * y;
        if (R2.is_negative()) continue;
        BigInt jmax = floor_sqrt_linear(R2, -p1, L.q1);
        BigInt jmin = -floor_sqrt_linear(R2, p1, L.q1);
        if (jmax >= jmin) total += (jmax - jmin + 1).convert_to<std::uint64_t>();
    }
    return total;
}

void append_lattice_points(const Lattice& L, const Rational& T, std::vector<PlanarVector>& out) {
    const Rational& p1 = L.offset.x;
    const Rational& p2 = L.offset.y;
    Rational T2 = T * T;
    BigInt kmin = ((-T - p2) / L.q2).ceil();
    BigInt kmax = ((T - p2) / L.q2).floor();
    for (BigInt k = kmin; k <= kmax; ++k) {
        Rational y = p2 + L.q2 * Rational(k);
        Rational R2 = T2 - y * y;
        if (R2.is_negative()) continue;
        BigInt jmax = floor_sqrt_linear(R2, -p1, L.q1);
        BigInt jmin = -floor_sqrt_linear(R2, p1, L.q1);
        for (BigInt j = jmin; j <= jmax; ++j) out.emplace_back(p1 + L.q1 * Rational(j), y);
    }
}

// One-dimensional congruence intersection: (p + qZ) meet (p' + q'Z).
std::optional<std::pair<Rational, Rational>> intersect_1d(const Rational& p, const Rational& q,
                                                          const Rational& p2, const Rational& q2) {
    // Clear denominators so the problem is integral.
    BigInt D = p.den();
    auto lcm_in = [&](const BigInt& x) { D = boost::multiprecision::lcm(D, x); };
    lcm_in(q.den());
    lcm_in(p2.den());
    lcm_in(q2.den());
    auto scaled = [&](const Rational& r) { return r.num() * (D / r.den()); };
    BigInt P = scaled(p), Q = scaled(q), P2 = scaled(p2), Q2 = scaled(q2);
    // Solve Q*k - Q2*l = P2 - P.
    BigInt g, x, y;
    {
        BigInt a = Q, b = Q2;
        BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            BigInt t = a / b;
            BigInt r = a - t * b;
            a = b;
            b = r;
            BigInt nx = x0 - t * x1, ny = y0 - t * y1;
            x0 = x1;
            y0 = y1;
            x1 = nx;
            y1 = ny;
        }
        g = a;
        x = x0;
        y = y0;
    }
    BigInt rhs = P2 - P;
    if (rhs % g != 0) return std::nullopt;
    BigInt k0 = x * (rhs / g);
    Rational modulus = q * Rational(Q2 / g, 1);
    Rational offset = p + q * Rational(k0);
    // Reduce the offset into [0, modulus) for a canonical representative.
    offset = offset - modulus * Rational((offset / modulus).floor());
    return std::make_pair(offset, modulus);
}

struct DirectionKey {
    BigInt ux, uy;
    bool operator==(const DirectionKey& o) const { return ux == o.ux && uy == o.uy; }
};

struct DirectionKeyHash {
    std::size_t operator()(const DirectionKey& k) const {
        std::hash<std::string> h;
        return h(k.ux.str()) * 1315423911u ^ h(k.uy.str());
    }
};

// Canonical unoriented primitive integer direction of a nonzero point,
// plus the signed rational multiple along it.
std::pair<DirectionKey, Rational> direction_of(const PlanarVector& v) {
    BigInt dx = v.x.num() * v.y.den();
    BigInt dy = v.y.num() * v.x.den();
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(dx),
                                          boost::multiprecision::abs(dy));
    dx /= g;
    dy /= g;
    bool flip = dx < 0 || (dx == 0 && dy < 0);
    if (flip) {
        dx = -dx;
        dy = -dy;
    }
    Rational s = dx != 0 ? v.x / Rational(dx) : v.y / Rational(dy);
    return {DirectionKey{dx, dy}, s};
}

void sort_points(std::vector<PlanarVector>& pts) {
    std::sort(pts.begin(), pts.end(), [](const PlanarVector& a, const PlanarVector& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    });
}

#if defined(__SIZEOF_INT128__)
using int128 = __int128;
#else
#error "128-bit integers required"
#endif

long long isqrt_i128(int128 a) {
    if (a <= 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(a)));
    while (static_cast<int128>(r) * r > a) --r;
    while (static_cast<int128>(r + 1) * (r + 1) <= a) ++r;
    return r;
}

long long floor_div_ll(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Fast unoriented/directed visible counting for integer distributions.
// Keys pack the primitive direction into 64 bits; components stay well
// inside 31 bits for every radius this project uses.
std::uint64_t visible_count_integral(const PointDistribution& G, const Rational& T,
                                     Visibility conv, bool exclude_origin) {
    long long tn = T.num().convert_to<long long>();
    long long td = T.den().convert_to<long long>();
    int128 bound = static_cast<int128>(tn) * tn;  // |v|^2 * td^2 <= tn^2
    long long ymax_ll = tn / td;
    auto pack = [](long long x, long long y) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(x)))
                << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(y)));
    };
    std::unordered_set<std::uint64_t> unoriented;
    struct MinRec {
        long long abs_s;
        int signs;
    };
    std::unordered_map<std::uint64_t, MinRec> directed;
    for (const Lattice& L : G.components) {
        long long p1 = L.offset.x.num().convert_to<long long>();
        long long p2 = L.offset.y.num().convert_to<long long>();
        long long q1 = L.q1.num().convert_to<long long>();
        long long q2 = L.q2.num().convert_to<long long>();
        long long kmin = floor_div_ll(-ymax_ll - p2 + q2 - 1, q2);
        long long kmax = floor_div_ll(ymax_ll - p2, q2);
        for (long long k = kmin; k <= kmax; ++k) {
            long long y = p2 + q2 * k;
            int128 rem = bound - static_cast<int128>(y) * y * td * td;
            if (rem < 0) continue;
            long long xmax = isqrt_i128(rem) / td;
            long long jmin = floor_div_ll(-xmax - p1 + q1 - 1, q1);
            long long jmax = floor_div_ll(xmax - p1, q1);
            for (long long j = jmin; j <= jmax; ++j) {
                long long x = p1 + q1 * j;
                if (x == 0 && y == 0) {
                    if (!exclude_origin)
                        throw std::invalid_argument("visible_count: origin lies in G");
                    continue;
                }
                long long g = std::gcd(std::llabs(x), std::llabs(y));
                long long ux = x / g, uy = y / g;
                int sign = 1;
                if (ux < 0 || (ux == 0 && uy < 0)) {
                    ux = -ux;
                    uy = -uy;
                    sign = -1;
                }
                std::uint64_t key = pack(ux, uy);
                if (conv == Visibility::unoriented) {
                    unoriented.insert(key);
                } else {
                    auto [it, fresh] = directed.try_emplace(key, MinRec{g, sign > 0 ? 1 : 2});
                    if (!fresh) {
                        if (g < it->second.abs_s)
                            it->second = MinRec{g, sign > 0 ? 1 : 2};
                        else if (g == it->second.abs_s)
                            it->second.signs |= sign > 0 ? 1 : 2;
                    }
                }
            }
        }
    }
    if (conv == Visibility::unoriented) return unoriented.size();
    std::uint64_t total = 0;
    for (const auto& [key, rec] : directed)
        total += (rec.signs == 3) ? 2 : 1;
    return total;
}

}  // namespace

Lattice::Lattice(PlanarVector off, Rational m1, Rational m2)
    : offset(std::move(off)), q1(std::move(m1)), q2(std::move(m2)) {
    if (!(q1 > Rational(0)) || !(q2 > Rational(0)))
        throw std::invalid_argument("Lattice: moduli must be positive");
}

bool Lattice::contains(const PlanarVector& v) const {
    return ((v.x - offset.x) / q1).is_integer() && ((v.y - offset.y) / q2).is_integer();
}

bool Lattice::same_point_set(const Lattice& o) const {
    return q1 == o.q1 && q2 == o.q2 && contains(o.offset);
}

PointDistribution::PointDistribution(std::vector<Lattice> comps) : components(std::move(comps)) {
    if (components.empty())
        throw std::invalid_argument("PointDistribution: needs at least one lattice");
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j)
            if (components[i].same_point_set(components[j]))
                throw std::invalid_argument("PointDistribution: duplicate component");
}

bool PointDistribution::contains(const PlanarVector& v) const {
    for (const Lattice& L : components)
        if (L.contains(v)) return true;
    return false;
}

bool PointDistribution::is_integral() const {
    for (const Lattice& L : components)
        if (!L.offset.x.is_integer() || !L.offset.y.is_integer() || !L.q1.is_integer() ||
            !L.q2.is_integer())
            return false;
    return true;
}

std::optional<Lattice> intersect(const Lattice& a, const Lattice& b) {
    auto ix = intersect_1d(a.offset.x, a.q1, b.offset.x, b.q1);
    if (!ix) return std::nullopt;
    auto iy = intersect_1d(a.offset.y, a.q2, b.offset.y, b.q2);
    if (!iy) return std::nullopt;
    return Lattice(PlanarVector(ix->first, iy->first), ix->second, iy->second);
}

std::uint64_t count_points(const PointDistribution& G, const Rational& T) {
    if (T.is_negative()) throw std::invalid_argument("count_points: negative radius");
    const auto& comps = G.components;
    bool disjoint = true;
    for (std::size_t i = 0; i < comps.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < comps.size() && disjoint; ++j)
            if (intersect(comps[i], comps[j])) disjoint = false;
    if (disjoint) {
        std::uint64_t total = 0;
        for (const Lattice& L : comps) total += count_lattice(L, T);
        return total;
    }
    if (comps.size() > 24)
        throw std::invalid_argument("count_points: too many overlapping components");
    // Inclusion-exclusion; empty intersections prune their whole subtree.
    long long total = 0;
    auto rec = [&](auto&& self, std::size_t start, const Lattice& cur, int depth) -> void {
        total += (depth % 2 == 1 ? 1 : -1) * static_cast<long long>(count_lattice(cur, T));
        for (std::size_t i = start; i < comps.size(); ++i)
            if (auto next = intersect(cur, comps[i])) self(self, i + 1, *next, depth + 1);
    };
    for (std::size_t i = 0; i < comps.size(); ++i) rec(rec, i + 1, comps[i], 1);
    return static_cast<std::uint64_t>(total);
}

Rational density_coefficient(const PointDistribution& G) {
    const auto& comps = G.components;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (intersect(comps[i], comps[j]))
                throw std::invalid_argument("density_coefficient: components overlap");
    Rational sum(0);
    for (const Lattice& L : comps) sum += (L.q1 * L.q2).reciprocal();
    return sum;
}

std::vector<PlanarVector> points_in_disk(const PointDistribution& G, const Rational& T) {
    if (T.is_negative()) throw std::invalid_argument("points_in_disk: negative radius");
    std::vector<PlanarVector> pts;
    for (const Lattice& L : G.components) append_lattice_points(L, T, pts);
    sort_points(pts);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<PlanarVector> visible_subset(std::vector<PlanarVector> points, Visibility conv) {
    std::unordered_map<DirectionKey, std::vector<std::size_t>, DirectionKeyHash> buckets;
    std::vector<Rational> multiples(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].is_zero())
            throw std::invalid_argument("visible_subset: zero vector in point set");
        auto [key, s] = direction_of(points[i]);
        multiples[i] = s;
        buckets[key].push_back(i);
    }
    std::vector<PlanarVector> out;
    for (auto& [key, idxs] : buckets) {
        Rational best = multiples[idxs.front()].abs();
        for (std::size_t i : idxs) {
            Rational a = multiples[i].abs();
            if (a < best) best = a;
        }
        std::vector<std::size_t> minimal;
        for (std::size_t i : idxs)
            if (multiples[i].abs() == best) minimal.push_back(i);
        if (conv == Visibility::directed) {
            for (std::size_t i : minimal) out.push_back(points[i]);
        } else {
            std::size_t rep = minimal.front();
            for (std::size_t i : minimal)
                if (points[rep] < points[i]) rep = i;
            out.push_back(points[rep]);
        }
    }
    sort_points(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PlanarVector> visible_points(const PointDistribution& G, const Rational& T,
                                         Visibility conv, bool exclude_origin) {
    PlanarVector origin;
    if (G.contains(origin) && !exclude_origin)
        throw std::invalid_argument("visible_points: origin lies in G");
    std::vector<PlanarVector> pts = points_in_disk(G, T);
    if (exclude_origin) {
        pts.erase(std::remove_if(pts.begin(), pts.end(),
                                 [](const PlanarVector& v) { return v.is_zero(); }),
                  pts.end());
    }
    return visible_subset(std::move(pts), conv);
}

std::uint64_t visible_count(const PointDistribution& G, const Rational& T, Visibility conv,
                            bool exclude_origin) {
    if (T.is_negative()) throw std::invalid_argument("visible_count: negative radius");
    bool small_ints = G.is_integral() && T.num() < BigInt(1) << 30;
    for (const Lattice& L : G.components)
        small_ints = small_ints && boost::multiprecision::abs(L.offset.x.num()) < BigInt(1) << 30 &&
                     boost::multiprecision::abs(L.offset.y.num()) < BigInt(1) << 30 &&
                     L.q1.num() < BigInt(1) << 30 && L.q2.num() < BigInt(1) << 30;
    if (small_ints) return visible_count_integral(G, T, conv, exclude_origin);
    return visible_points(G, T, conv, exclude_origin).size();
}

PointDistribution coprime_residue_lattices(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("coprime_residue_lattices: n must be >= 2");
    std::vector<Lattice> comps;
    for (std::uint64_t k : coprime_residues(n, 1))
        comps.emplace_back(PlanarVector(Rational(BigInt(k)), Rational(0)), Rational(BigInt(n)),
                           Rational(BigInt(n)));
    return PointDistribution(std::move(comps));
}

PointDistribution z2_completion_of_shift(std::uint64_t n, long long p1, long long p2) {
    if (n < 2) throw std::invalid_argument("z2_completion_of_shift: n must be >= 2");
    long long nn = static_cast<long long>(n);
    auto norm = [&](long long v) { return ((v % nn) + nn) % nn; };
    long long a = norm(p1), b = norm(p2);
    if (std::gcd(std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)), n) != 1)
        throw std::invalid_argument("z2_completion_of_shift: gcd(p1, p2, n) must be 1");
    std::vector<std::pair<long long, long long>> offsets;
    for (std::uint64_t u : coprime_residues(n, 1))
        offsets.emplace_back(norm(static_cast<long long>(u) * a),
                             norm(static_cast<long long>(u) * b));
    std::sort(offsets.begin(), offsets.end());
    std::vector<Lattice> comps;
    for (auto [ox, oy] : offsets)
        comps.emplace_back(PlanarVector(Rational(ox), Rational(oy)), Rational(BigInt(n)),
                           Rational(BigInt(n)));
    return PointDistribution(std::move(comps));
}

PointDistribution completion_in_z2(std::uint64_t n, long long r) {
    if (n < 2) throw std::invalid_argument("completion_in_z2: n must be >= 2");
    long long nn = static_cast<long long>(n);
    std::uint64_t rr = static_cast<std::uint64_t>(((r % nn) + nn) % nn);
    if (std::gcd(rr, n) != 1)
        throw std::invalid_argument("completion_in_z2: r must be coprime to n");
    return z2_completion_of_shift(n, r, 0);
}

Rational multiplicity_coefficient(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("multiplicity_coefficient: n must be >= 2");
    return l_chi0_coefficient(n) / Rational(3);
}

GrowthConstant coprime_visible_density(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("coprime_visible_density: n must be >= 2");
    return GrowthConstant{Rational(3, BigInt(n)) * inv_one_plus_inv_p_product(n), Rational(0)};
}

PointDistribution scale_distribution(const PointDistribution& G, const Rational& p) {
    if (!(p > Rational(0))) throw std::invalid_argument("scale_distribution: p must be positive");
    std::vector<Lattice> comps;
    for (const Lattice& L : G.components)
        comps.emplace_back(L.offset * p, L.q1 * p, L.q2 * p);
    return PointDistribution(std::move(comps));
}

}  // namespace flattorus
