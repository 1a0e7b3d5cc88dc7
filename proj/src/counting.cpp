#include "flattorus/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flattorus {

namespace {

#if defined(__SIZEOF_INT128__)
using int128 = __int128;
#else
#error "128-bit integers required"
#endif

long long isqrt_i128(int128 a) {
    if (a <= 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(a)));
    if (r > 0) --r;
    while (static_cast<int128>(r + 1) * (r + 1) <= a) ++r;
    while (static_cast<int128>(r) * r > a) --r;
    return r;
}

long long floor_div_ll(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div_ll(long long a, long long b) { return -floor_div_ll(-a, b); }

// Extended gcd on nonnegative inputs; returns g and x with a*x == g (mod m0).
long long mod_inverse(long long a, long long m) {
    // Requires gcd(a, m) == 1, m >= 1.
    long long old_r = a, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    long long inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

// Everything the kernels touch, scaled by the common denominator M of the
// marking coordinates so the hot loops run on machine integers.
struct ScaledMarking {
    long long M = 1;
    std::vector<std::array<long long, 2>> pts;  // coordinates * M, in [0, M)
    long long tn = 0;                           // radius numerator
    long long td = 1;                           // radius denominator
    int128 norm_bound = 0;                      // |w|^2 * td^2 <= tn^2 * M^2
    std::size_t n = 0;

    ScaledMarking(const Marking& m, const Rational& T) {
        if (T.is_negative()) throw std::invalid_argument("counting: negative radius");
        BigInt mb(1);
        for (const TorusPoint& p : m.points) {
            mb = boost::multiprecision::lcm(mb, p.coords.x.den());
            mb = boost::multiprecision::lcm(mb, p.coords.y.den());
        }
        if (mb > BigInt(1) << 31)
            throw std::invalid_argument("counting: marking denominators too large to scale");
        M = mb.convert_to<long long>();
        if (T.num() * mb > BigInt(1) << 59)
            throw std::invalid_argument("counting: radius times denominator too large");
        tn = T.num().convert_to<long long>();
        td = T.den().convert_to<long long>();
        norm_bound = static_cast<int128>(tn) * tn * M * M;
        n = m.size();
        pts.reserve(n);
        for (const TorusPoint& p : m.points) {
            long long x = (p.coords.x.num() * (mb / p.coords.x.den())).convert_to<long long>();
            long long y = (p.coords.y.num() * (mb / p.coords.y.den())).convert_to<long long>();
            pts.push_back({x, y});
        }
    }

    // True when some marking lies strictly inside the segment from marking
    // `base` along the scaled vector w. A point of marking k sits at
    // parameter t = s/g, s integer in (0, g), g = gcd(|w1|, |w2|), exactly
    // when s*u == (pts[k] - pts[base]) mod M along the primitive direction
    // u = w/g; the two coordinate congruences combine by CRT.
    bool interior_hit(std::size_t base, long long w1, long long w2) const {
        long long g = std::gcd(std::llabs(w1), std::llabs(w2));
        if (g == 1) return false;  // no integer parameter fits in (0, 1)
        long long u1 = ((w1 / g) % M + M) % M;
        long long u2 = ((w2 / g) % M + M) % M;
        long long g1 = std::gcd(u1, M);
        long long g2 = std::gcd(u2, M);
        long long M1 = M / g1, M2 = M / g2;
        long long inv1 = M1 > 1 ? mod_inverse(u1 / g1, M1) : 0;
        long long inv2 = M2 > 1 ? mod_inverse(u2 / g2, M2) : 0;
        long long d = std::gcd(M1, M2);
        long long Md = M2 / d;
        // M1/d and M2/d are coprime, so this inverse is well defined.
        long long invM = Md > 1 ? mod_inverse((M1 / d) % Md, Md) : 0;
        for (std::size_t k = 0; k < n; ++k) {
            long long e1 = pts[k][0] - pts[base][0];
            long long e2 = pts[k][1] - pts[base][1];
            e1 = (e1 % M + M) % M;
            e2 = (e2 % M + M) % M;
            if (e1 % g1 != 0 || e2 % g2 != 0) continue;
            long long s1 = M1 > 1 ? static_cast<long long>(
                                        static_cast<int128>(e1 / g1) % M1 * inv1 % M1)
                                  : 0;
            long long s2 = M2 > 1 ? static_cast<long long>(
                                        static_cast<int128>(e2 / g2) % M2 * inv2 % M2)
                                  : 0;
            long long diff = s2 - s1;
            if (diff % d != 0) continue;
            long long L = M1 * Md;  // lcm(M1, M2), divides M
            long long t = Md > 1 ? static_cast<long long>(
                                       (static_cast<int128>((diff / d) % Md + Md) * invM) % Md)
                                 : 0;
            long long s0 = s1 + M1 * t;
            s0 %= L;
            if (s0 < 0) s0 += L;
            long long smallest = s0 == 0 ? L : s0;
            if (smallest < g) return true;
        }
        return false;
    }

    // All s in (0, g) with s*u == e (mod M): the interior parameters of
    // marking k on the segment (base, w). Used by the division-event scan.
    std::vector<std::pair<long long, long long>> interior_parameters(std::size_t base,
                                                                     std::size_t k, long long w1,
                                                                     long long w2) const {
        std::vector<std::pair<long long, long long>> out;  // (s, g)
        long long g = std::gcd(std::llabs(w1), std::llabs(w2));
        long long u1 = ((w1 / g) % M + M) % M;
        long long u2 = ((w2 / g) % M + M) % M;
        long long g1 = std::gcd(u1, M);
        long long g2 = std::gcd(u2, M);
        long long e1 = ((pts[k][0] - pts[base][0]) % M + M) % M;
        long long e2 = ((pts[k][1] - pts[base][1]) % M + M) % M;
        if (e1 % g1 != 0 || e2 % g2 != 0) return out;
        long long M1 = M / g1, M2 = M / g2;
        long long s1 = M1 > 1 ? static_cast<long long>(static_cast<int128>(e1 / g1) %
                                                       M1 * mod_inverse(u1 / g1, M1) % M1)
                              : 0;
        long long s2 = M2 > 1 ? static_cast<long long>(static_cast<int128>(e2 / g2) %
                                                       M2 * mod_inverse(u2 / g2, M2) % M2)
                              : 0;
        long long d = std::gcd(M1, M2);
        if ((s2 - s1) % d != 0) return out;
        long long Md = M2 / d;
        long long L = M1 * Md;
        long long t = Md > 1
                          ? static_cast<long long>((static_cast<int128>(((s2 - s1) / d) % Md + Md) *
                                                    mod_inverse((M1 / d) % Md, Md)) %
                                                   Md)
                          : 0;
        long long s0 = (s1 + M1 * t) % L;
        if (s0 < 0) s0 += L;
        for (long long s = s0 == 0 ? L : s0; s < g; s += L) out.emplace_back(s, g);
        return out;
    }

    long long row_max(long long w1) const {
        int128 rem = norm_bound - static_cast<int128>(w1) * w1 * td * td;
        if (rem < 0) return -1;
        return isqrt_i128(rem) / td;
    }
};

// Unoriented representative filter for loop vectors: keep the
// lexicographically larger of {w, -w}.
bool is_unoriented_rep(long long w1, long long w2) { return w1 > 0 || (w1 == 0 && w2 > 0); }

template <typename Fn>
void for_each_pair_candidate_row(const ScaledMarking& sm, std::size_t i, std::size_t j,
                                 long long a, Fn&& fn) {
    // Candidates w = delta + (a, b) * M for this fixed a, all b in range.
    long long d1 = sm.pts[j][0] - sm.pts[i][0];
    long long d2 = sm.pts[j][1] - sm.pts[i][1];
    long long w1 = d1 + a * sm.M;
    long long w2max = sm.row_max(w1);
    if (w2max < 0) return;
    long long bmin = ceil_div_ll(-w2max - d2, sm.M);
    long long bmax = floor_div_ll(w2max - d2, sm.M);
    for (long long b = bmin; b <= bmax; ++b) {
        long long w2 = d2 + b * sm.M;
        if (w1 == 0 && w2 == 0) continue;
        if (i == j && !is_unoriented_rep(w1, w2)) continue;
        fn(w1, w2);
    }
}

std::pair<long long, long long> pair_a_range(const ScaledMarking& sm, std::size_t i,
                                             std::size_t j) {
    long long d1 = sm.pts[j][0] - sm.pts[i][0];
    long long w1max = (sm.tn * sm.M) / sm.td;
    return {ceil_div_ll(-w1max - d1, sm.M), floor_div_ll(w1max - d1, sm.M)};
}

std::uint64_t count_pair(const ScaledMarking& sm, std::size_t i, std::size_t j, Exec exec) {
    auto [amin, amax] = pair_a_range(sm, i, j);
    std::uint64_t total = 0;
    if (exec == Exec::parallel) {
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 8)
        for (long long a = amin; a <= amax; ++a) {
            std::uint64_t row = 0;
            for_each_pair_candidate_row(sm, i, j, a, [&](long long w1, long long w2) {
                if (!sm.interior_hit(i, w1, w2)) ++row;
            });
            total += row;
        }
    } else {
        for (long long a = amin; a <= amax; ++a) {
            for_each_pair_candidate_row(sm, i, j, a, [&](long long w1, long long w2) {
                if (!sm.interior_hit(i, w1, w2)) ++total;
            });
        }
    }
    return total;
}

// Leaf classes of the markings in direction (a, b): i and j share a leaf
// exactly when cross(diff_ij, w) is an integer, i.e. e1*b - e2*a == 0 mod M.
std::uint64_t leaf_count_in_direction(const ScaledMarking& sm, long long a, long long b) {
    std::size_t n = sm.n;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long long e1 = sm.pts[j][0] - sm.pts[i][0];
            long long e2 = sm.pts[j][1] - sm.pts[i][1];
            int128 c = static_cast<int128>(e1) * b - static_cast<int128>(e2) * a;
            if (c % sm.M == 0) parent[find(i)] = find(j);
        }
    std::uint64_t classes = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (find(v) == v) ++classes;
    return classes;
}

template <typename Fn>
void for_each_primitive_direction(const ScaledMarking& sm, Fn&& fn) {
    // Unoriented representatives: a > 0, or a == 0 and b > 0.
    long long amax = sm.tn / sm.td;
    for (long long a = 0; a <= amax; ++a) {
        int128 rem = static_cast<int128>(sm.tn) * sm.tn -
                     static_cast<int128>(a) * a * sm.td * sm.td;
        if (rem < 0) continue;
        long long bmax = isqrt_i128(rem) / sm.td;
        long long bmin = a == 0 ? 1 : -bmax;
        for (long long b = bmin; b <= bmax; ++b) {
            if (a == 0 && b != 1) {
                if (std::llabs(b) != 1) continue;
            }
            if (std::gcd(a, std::llabs(b)) != 1) continue;
            fn(a, b);
        }
    }
}

}  // namespace

std::vector<SaddleConnection> enumerate_saddle_connections(const Marking& m, const Rational& T) {
    ScaledMarking sm(m, T);
    std::vector<SaddleConnection> out;
    for (std::size_t i = 0; i < sm.n; ++i) {
        for (std::size_t j = i; j < sm.n; ++j) {
            long long d2 = sm.pts[j][1] - sm.pts[i][1];
            long long w2max = (sm.tn * sm.M) / sm.td;
            long long bmin = ceil_div_ll(-w2max - d2, sm.M);
            long long bmax = floor_div_ll(w2max - d2, sm.M);
            for (long long b = bmin; b <= bmax; ++b) {
                long long w2 = d2 + b * sm.M;
                // Rows of constant second coordinate, ascending.
                int128 rem = sm.norm_bound - static_cast<int128>(w2) * w2 * sm.td * sm.td;
                if (rem < 0) continue;
                long long w1cap = isqrt_i128(rem) / sm.td;
                long long d1 = sm.pts[j][0] - sm.pts[i][0];
                long long amin = ceil_div_ll(-w1cap - d1, sm.M);
                long long amax = floor_div_ll(w1cap - d1, sm.M);
                for (long long a = amin; a <= amax; ++a) {
                    long long w1 = d1 + a * sm.M;
                    if (w1 == 0 && w2 == 0) continue;
                    if (i == j && !is_unoriented_rep(w1, w2)) continue;
                    if (sm.interior_hit(i, w1, w2)) continue;
                    out.push_back(SaddleConnection{
                        i, j,
                        PlanarVector(Rational(BigInt(w1), BigInt(sm.M)),
                                     Rational(BigInt(w2), BigInt(sm.M)))});
                }
            }
        }
    }
    return out;
}

std::uint64_t count_sc_total(const Marking& m, const Rational& T, Exec exec) {
    ScaledMarking sm(m, T);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < sm.n; ++i)
        for (std::size_t j = i; j < sm.n; ++j) total += count_pair(sm, i, j, exec);
    return total;
}

std::vector<CylinderFamily> enumerate_cylinders(const Marking& m, const Rational& T) {
    ScaledMarking sm(m, T);
    std::vector<CylinderFamily> out;
    for_each_primitive_direction(sm, [&](long long a, long long b) {
        out.push_back(CylinderFamily{a, b, Rational(BigInt(a) * a + BigInt(b) * b),
                                     leaf_count_in_direction(sm, a, b)});
    });
    return out;
}

std::uint64_t count_po_total(const Marking& m, const Rational& T, Exec exec) {
    ScaledMarking sm(m, T);
    long long amax = sm.tn / sm.td;
    std::uint64_t total = 0;
    if (exec == Exec::parallel) {
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 16)
        for (long long a = 0; a <= amax; ++a) {
            std::uint64_t row = 0;
            int128 rem = static_cast<int128>(sm.tn) * sm.tn -
                         static_cast<int128>(a) * a * sm.td * sm.td;
            if (rem >= 0) {
                long long bmax = isqrt_i128(rem) / sm.td;
                long long bmin = a == 0 ? 1 : -bmax;
                for (long long b = bmin; b <= bmax; ++b) {
                    if (a == 0 && std::llabs(b) != 1) continue;
                    if (std::gcd(a, std::llabs(b)) != 1) continue;
                    row += leaf_count_in_direction(sm, a, b);
                }
            }
            total += row;
        }
    } else {
        for_each_primitive_direction(
            sm, [&](long long a, long long b) { total += leaf_count_in_direction(sm, a, b); });
    }
    return total;
}

std::optional<GrowthConstant> closed_form_target(const Marking& m, CountKind kind,
                                                 const Rational& probe_radius) {
    MarkingRegime regime = classify_marking(m, kind);
    try {
        switch (regime.kind) {
            case MarkingRegime::Kind::general_position:
                if (kind == CountKind::sc && m.size() >= 3) {
                    // Pairwise-irrational points may still divide each other's
                    // connections; only an event probe can rule that out.
                    if (!rational_division_events(m, probe_radius).empty()) return std::nullopt;
                }
                return kind == CountKind::sc ? sc_constant_general_position(m.size())
                                             : po_constant_general_position(m.size());
            case MarkingRegime::Kind::rational_two_marked:
                return kind == CountKind::sc
                           ? sc_constant_two_marked(regime.n, regime.p1, regime.p2)
                           : po_constant_two_marked_n(regime.n);
            case MarkingRegime::Kind::decomposable_po:
                return po_constant_decomposable(m);
            case MarkingRegime::Kind::unsupported:
                return std::nullopt;
        }
    } catch (const UnsupportedRegime&) {
        return std::nullopt;
    }
    return std::nullopt;
}

CountReport count_sc(const Marking& m, const Rational& T, Exec exec) {
    CountReport r;
    r.radius = T;
    r.count = count_sc_total(m, T, exec);
    double t = T.to_double();
    r.ratio = t > 0 ? static_cast<double>(r.count) / (t * t) : 0.0;
    r.target = closed_form_target(m, CountKind::sc);
    return r;
}

CountReport count_po(const Marking& m, const Rational& T, Exec exec) {
    CountReport r;
    r.radius = T;
    r.count = count_po_total(m, T, exec);
    double t = T.to_double();
    r.ratio = t > 0 ? static_cast<double>(r.count) / (t * t) : 0.0;
    r.target = closed_form_target(m, CountKind::po);
    return r;
}

std::vector<DivisionEvent> rational_division_events(const Marking& m, const Rational& T) {
    std::vector<DivisionEvent> out;
    if (m.size() < 2) return out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        // Saddle connections of the marking with k removed, original indices.
        std::vector<TorusPoint> rest;
        std::vector<std::size_t> index_map;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != k) {
                rest.push_back(m.points[i]);
                index_map.push_back(i);
            }
        Marking reduced(rest, m.horizon);
        ScaledMarking sm_full(m, T);  // scaled copy including k, for hit params
        // Positions of the reduced markings inside the full scaled marking.
        std::vector<SaddleConnection> segs = enumerate_saddle_connections(reduced, T);
        struct GroupKey {
            std::size_t from, to;
            Rational ratio;
            bool operator<(const GroupKey& o) const {
                if (from != o.from) return from < o.from;
                if (to != o.to) return to < o.to;
                return ratio < o.ratio;
            }
        };
        struct GroupData {
            std::vector<std::pair<BigInt, BigInt>> int_parts;
            std::vector<PlanarVector> vecs;
        };
        std::map<GroupKey, GroupData> groups;
        for (const SaddleConnection& s : segs) {
            std::size_t from = index_map[s.from];
            std::size_t to = index_map[s.to];
            long long w1 = (s.vec.x.num() * (sm_full.M / s.vec.x.den())).convert_to<long long>();
            long long w2 = (s.vec.y.num() * (sm_full.M / s.vec.y.den())).convert_to<long long>();
            for (auto [snum, sden] : sm_full.interior_parameters(from, k, w1, w2)) {
                Rational t{BigInt(snum), BigInt(sden)};
                if (t.den() > BigInt(m.horizon)) continue;  // irrational-ratio hit
                PlanarVector delta = m.points[to].coords - m.points[from].coords;
                PlanarVector int_part = s.vec - delta;
                groups[GroupKey{from, to, t}].int_parts.emplace_back(int_part.x.num(),
                                                                     int_part.y.num());
                groups[GroupKey{from, to, t}].vecs.push_back(s.vec);
            }
        }
        // Uniqueness of the stretch factor over a horizon-irrational pair.
        std::map<std::pair<std::size_t, std::size_t>, Rational> seen_ratio;
        for (const auto& [key, data] : groups) {
            PlanarVector delta = m.points[key.to].coords - m.points[key.from].coords;
            if (key.from != key.to && !is_horizon_rational(delta, m.horizon)) {
                auto [it, fresh] =
                    seen_ratio.try_emplace(std::make_pair(key.from, key.to), key.ratio);
                if (!fresh && it->second != key.ratio)
                    throw ConsistencyError(
                        "division events over an irrational pair with two stretch factors");
            }
            // Integer parts must agree mod the ratio denominator.
            const BigInt q = key.ratio.den();
            const auto& [c0, d0] = data.int_parts.front();
            for (const auto& [c, d] : data.int_parts)
                if ((c - c0) % q != 0 || (d - d0) % q != 0)
                    throw ConsistencyError("division-event group is not a lattice");
            auto min_part = *std::min_element(data.int_parts.begin(), data.int_parts.end());
            PlanarVector base = delta + PlanarVector(Rational(min_part.first),
                                                     Rational(min_part.second));
            Rational modulus = key.ratio * Rational(q);
            out.push_back(DivisionEvent{k, key.from, key.to, key.ratio,
                                        Lattice(base * key.ratio, modulus, modulus),
                                        data.vecs.size()});
        }
    }
    return out;
}

std::uint64_t count_nonrational_parallel(const Marking& m, std::size_t i, std::size_t j,
                                         const Rational& T) {
    if (i >= m.size() || j >= m.size())
        throw std::invalid_argument("count_nonrational_parallel: bad pair");
    std::vector<SaddleConnection> all = enumerate_saddle_connections(m, T);
    auto in_pair = [&](const SaddleConnection& s) {
        return (s.from == std::min(i, j) && s.to == std::max(i, j));
    };
    // Reference connections bucketed by unoriented primitive direction.
    std::map<std::pair<BigInt, BigInt>, std::vector<Rational>> ref;  // dir -> squared norms
    auto dir_key = [](const PlanarVector& v) {
        BigInt dx = v.x.num() * v.y.den();
        BigInt dy = v.y.num() * v.x.den();
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(dx),
                                              boost::multiprecision::abs(dy));
        dx /= g;
        dy /= g;
        if (dx < 0 || (dx == 0 && dy < 0)) {
            dx = -dx;
            dy = -dy;
        }
        return std::make_pair(dx, dy);
    };
    for (const SaddleConnection& s : all)
        if (!in_pair(s)) ref[dir_key(s.vec)].push_back(squared_norm(s.vec));
    std::uint64_t count = 0;
    for (const SaddleConnection& s : all) {
        if (!in_pair(s)) continue;
        auto it = ref.find(dir_key(s.vec));
        if (it == ref.end()) continue;
        Rational n2 = squared_norm(s.vec);
        for (const Rational& r2 : it->second) {
            if (!(r2 > n2)) continue;
            // Squared length ratio has denominator at least that of the
            // length ratio; horizon-large means irrational here.
            Rational ratio2 = n2 / r2;
            if (ratio2.den() > BigInt(m.horizon)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

std::uint64_t unoriented_primitive_z2_count(const Rational& T) {
    if (T.is_negative()) throw std::invalid_argument("negative radius");
    long long tn = T.num().convert_to<long long>();
    long long td = T.den().convert_to<long long>();
    long long amax = tn / td;
    std::uint64_t total = 0;
    for (long long a = 0; a <= amax; ++a) {
        int128 rem = static_cast<int128>(tn) * tn - static_cast<int128>(a) * a * td * td;
        if (rem < 0) continue;
        long long bmax = isqrt_i128(rem) / td;
        long long bmin = a == 0 ? 1 : -bmax;
        for (long long b = bmin; b <= bmax; ++b) {
            if (a == 0 && std::llabs(b) != 1) continue;
            if (std::gcd(a, std::llabs(b)) == 1) ++total;
        }
    }
    return total;
}

namespace {

// Directed primitive points of the completion of n*Z^2 + p within radius R,
// visited once each; fn(x, y).
template <typename Fn>
void for_each_primitive_completion_point(const PointDistribution& C, std::uint64_t n,
                                         const Rational& R, Fn&& fn) {
    long long rn = R.num().convert_to<long long>();
    long long rd = R.den().convert_to<long long>();
    long long nn = static_cast<long long>(n);
    for (const Lattice& L : C.components) {
        long long o1 = L.offset.x.num().convert_to<long long>();
        long long o2 = L.offset.y.num().convert_to<long long>();
        long long ymax = rn / rd;
        long long kmin = ceil_div_ll(-ymax - o2, nn);
        long long kmax = floor_div_ll(ymax - o2, nn);
        for (long long k = kmin; k <= kmax; ++k) {
            long long y = o2 + nn * k;
            int128 rem = static_cast<int128>(rn) * rn - static_cast<int128>(y) * y * rd * rd;
            if (rem < 0) continue;
            long long xmax = isqrt_i128(rem) / rd;
            long long jmin = ceil_div_ll(-xmax - o1, nn);
            long long jmax = floor_div_ll(xmax - o1, nn);
            for (long long j = jmin; j <= jmax; ++j) {
                long long x = o1 + nn * j;
                if (x == 0 && y == 0) continue;
                if (std::gcd(std::llabs(x), std::llabs(y)) != 1) continue;
                fn(x, y);
            }
        }
    }
}

}  // namespace

std::uint64_t lattice_assembled_sc_count(std::uint64_t n, long long p1, long long p2,
                                         const Rational& T) {
    PointDistribution C = z2_completion_of_shift(n, p1, p2);
    std::uint64_t vz = unoriented_primitive_z2_count(T);
    std::uint64_t vc = visible_count(C, T, Visibility::unoriented);
    long long nn = static_cast<long long>(n);
    auto norm = [&](long long v) { return ((v % nn) + nn) % nn; };
    long long a = norm(p1), b = norm(p2);
    // Boundary connections: one per directed primitive completion point u,
    // of length (j/n)|u| with j the least multiplier putting j*u into
    // n*Z^2 + p.
    std::uint64_t cross = 0;
    Rational nT = Rational(BigInt(n)) * T;
    const BigInt bound = T.num() * T.num() * BigInt(n) * n;
    const BigInt td2 = T.den() * T.den();
    for_each_primitive_completion_point(C, n, nT, [&](long long x, long long y) {
        long long j = 0;
        for (long long i = 1; i < nn; ++i)
            if (norm(i * x - a) == 0 && norm(i * y - b) == 0) {
                j = i;
                break;
            }
        if (j == 0) return;  // never happens for points of the completion
        BigInt len2 = (BigInt(x) * x + BigInt(y) * y) * j * j * td2;
        if (len2 <= bound) ++cross;
    });
    return 2 * vz - 2 * vc + cross;
}

std::uint64_t lattice_assembled_po_count(std::uint64_t n, long long p1, long long p2,
                                         const Rational& T) {
    PointDistribution C = z2_completion_of_shift(n, p1, p2);
    std::uint64_t vz = unoriented_primitive_z2_count(T);
    std::uint64_t vc = visible_count(C, T, Visibility::unoriented);
    return 2 * vz - vc;
}

}  // namespace flattorus
