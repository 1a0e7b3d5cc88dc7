#include "flattorus/constants.hpp"

#include "flattorus/numtheory.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace flattorus {

std::string GrowthConstant::str() const {
    auto frac_times = [](const Rational& r) {
        if (r.den() == 1) return r.num().str();
        return "(" + r.str() + ")";
    };
    std::string out;
    if (!coef_pi.is_zero()) out += frac_times(coef_pi) + "*pi";
    if (!coef_inv_pi.is_zero()) {
        if (!out.empty()) out += " + ";
        out += frac_times(coef_inv_pi) + "/pi";
    }
    if (out.empty()) out = "0";
    return out;
}

void reduce_to_common_denominator(const PlanarVector& x, std::uint64_t& n, long long& p1,
                                  long long& p2) {
    if (x.is_zero())
        throw std::invalid_argument("reduce_to_common_denominator: point must be nonzero");
    BigInt d = boost::multiprecision::lcm(x.x.den(), x.y.den());
    if (d > BigInt(std::uint64_t(1) << 62))
        throw UnsupportedRegime("marking denominator too large");
    n = d.convert_to<std::uint64_t>();
    p1 = (x.x.num() * (d / x.x.den())).convert_to<long long>();
    p2 = (x.y.num() * (d / x.y.den())).convert_to<long long>();
}

MarkingRegime classify_marking(const Marking& m, CountKind kind) {
    MarkingRegime r;
    r.point_count = m.size();
    std::size_t largest = 0;
    for (const auto& c : m.classes) largest = std::max(largest, c.size());
    if (m.size() == 1 || largest == 1) {
        r.kind = MarkingRegime::Kind::general_position;
        return r;
    }
    if (m.size() == 2 && largest == 2) {
        r.kind = MarkingRegime::Kind::rational_two_marked;
        PlanarVector diff =
            wrap_to_torus(m.points[1].coords - m.points[0].coords).coords;
        reduce_to_common_denominator(diff, r.n, r.p1, r.p2);
        return r;
    }
    if (kind == CountKind::po && largest <= 2) {
        r.kind = MarkingRegime::Kind::decomposable_po;
        return r;
    }
    r.kind = MarkingRegime::Kind::unsupported;
    return r;
}

Rational coprime_inverse_square_sum(std::uint64_t n) {
    Rational s(0);
    for (std::uint64_t i : coprime_residues(n, 1)) {
        BigInt ii = BigInt(i) * i;
        s += Rational(BigInt(1), ii);
    }
    return s;
}

GrowthConstant sc_constant_two_marked(std::uint64_t n, long long p1, long long p2) {
    if (n < 2) throw std::invalid_argument("sc_constant_two_marked: denominator must be >= 2");
    std::uint64_t a = static_cast<std::uint64_t>(((p1 % (long long)n) + (long long)n) % (long long)n);
    std::uint64_t b = static_cast<std::uint64_t>(((p2 % (long long)n) + (long long)n) % (long long)n);
    if (std::gcd(std::gcd(a, b), n) != 1)
        throw std::invalid_argument("sc_constant_two_marked: gcd(p1, p2, n) must be 1");
    if (n > kMaxClosedFormDenominator)
        throw UnsupportedRegime("sc constant: denominator too large for the exact sum");
    Rational inv_n2(BigInt(1), BigInt(n) * n);
    Rational sum(0);
    for (std::uint64_t i : coprime_residues(n, 1)) {
        sum += Rational(BigInt(1), BigInt(i) * i) - inv_n2;
    }
    Rational coef = Rational(6) * (Rational(1) + l_chi0_coefficient(n).reciprocal() * sum);
    return GrowthConstant{coef, Rational(0)};
}

GrowthConstant sc_constant_two_marked(const PlanarVector& x) {
    std::uint64_t n;
    long long p1, p2;
    reduce_to_common_denominator(x, n, p1, p2);
    return sc_constant_two_marked(n, p1, p2);
}

GrowthConstant sc_constant_irrational_two_marked() {
    return GrowthConstant{Rational(6), Rational(1)};
}

GrowthConstant po_constant_two_marked_n(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("po_constant_two_marked: denominator must be >= 2");
    Rational coef =
        Rational(6) * (Rational(1) - Rational(BigInt(1), BigInt(2) * n) * inv_one_plus_inv_p_product(n));
    return GrowthConstant{coef, Rational(0)};
}

GrowthConstant po_constant_two_marked(const PlanarVector& x) {
    std::uint64_t n;
    long long p1, p2;
    reduce_to_common_denominator(x, n, p1, p2);
    if (n < 2) throw std::invalid_argument("po_constant_two_marked: x must be a nonzero point");
    return po_constant_two_marked_n(n);
}

GrowthConstant po_constant_irrational_two_marked() {
    return GrowthConstant{Rational(6), Rational(0)};
}

GrowthConstant sc_constant_general_position(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("sc_constant_general_position: k must be positive");
    return GrowthConstant{Rational(BigInt(3) * k), Rational(BigInt(k) * (k - 1), BigInt(2))};
}

GrowthConstant po_constant_general_position(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("po_constant_general_position: k must be positive");
    return GrowthConstant{Rational(BigInt(3) * k), Rational(0)};
}

GrowthConstant po_constant_decomposable(const Marking& m) {
    Rational coef(0);
    for (const auto& cls : m.classes) {
        if (cls.size() == 1) {
            coef += Rational(3);
        } else if (cls.size() == 2) {
            PlanarVector diff =
                wrap_to_torus(m.points[cls[1]].coords - m.points[cls[0]].coords).coords;
            coef += po_constant_two_marked(diff).coef_inv_pi;
        } else {
            throw UnsupportedRegime(
                "po constant: a rationality class with three or more points has no closed form "
                "here");
        }
    }
    return GrowthConstant{coef, Rational(0)};
}

std::vector<std::pair<TorusPoint, GrowthConstant>> continuity_sweep(
    const std::vector<TorusPoint>& seq, CountKind kind) {
    if (seq.empty()) throw std::invalid_argument("continuity_sweep: empty sequence");
    std::vector<std::pair<TorusPoint, GrowthConstant>> out;
    out.reserve(seq.size());
    for (const TorusPoint& pt : seq) {
        GrowthConstant c = kind == CountKind::sc ? sc_constant_two_marked(pt.coords)
                                                 : po_constant_two_marked(pt.coords);
        out.emplace_back(pt, c);
    }
    return out;
}

Rational pi_squared_lower() {
    return Rational(BigInt("9869604401089358618834490999876"), boost::multiprecision::pow(BigInt(10), 30));
}

Rational pi_squared_upper() {
    return Rational(BigInt("9869604401089358618834490999877"), boost::multiprecision::pow(BigInt(10), 30));
}

namespace {

#if defined(__SIZEOF_INT128__)
using int128 = __int128;
#endif

BigInt bigint_from_i128(int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt hi = static_cast<std::uint64_t>(u >> 64);
    BigInt out = (hi << 64) | static_cast<std::uint64_t>(u & ~std::uint64_t(0));
    return neg ? -out : out;
}

}  // namespace

std::vector<std::uint64_t> sandwich_violations(std::uint64_t nmin, std::uint64_t nmax) {
    std::vector<std::uint64_t> bad;
    if (nmax < nmin) return bad;
    if (nmin < 2) nmin = 2;
    // Smallest-prime-factor sieve for the per-n prime products.
    std::vector<std::uint32_t> spf(nmax + 1, 0);
    for (std::uint64_t i = 2; i <= nmax; ++i)
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= nmax; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);

    const int128 kScale = static_cast<int128>(1000000000000) * 1000000000000;  // 10^24
    const Rational pl = pi_squared_lower();
    const Rational ph = pi_squared_upper();

    for (std::uint64_t n = nmin; n <= nmax; ++n) {
        // S(n) = sum of 1/i^2 over i < n coprime to n, bracketed at 10^-24.
        int128 lo = 0;
        std::uint64_t terms = 0;
        {
            std::uint64_t m = n;
            std::vector<std::uint64_t> primes;
            while (m > 1) {
                std::uint64_t p = spf[m];
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
            for (std::uint64_t i = 1; i < n; ++i) {
                bool cop = true;
                for (std::uint64_t p : primes)
                    if (i % p == 0) {
                        cop = false;
                        break;
                    }
                if (!cop) continue;
                lo += kScale / (static_cast<int128>(i) * i);
                ++terms;
            }
        }
        int128 hi = lo + terms;
        // P = prod (1 - 1/p^2)^{-1} = Pn/Pd, Q = prod (1 + 1/p)^{-1} = Qn/Qd.
        BigInt Pn = 1, Pd = 1, Qn = 1, Qd = 1;
        {
            std::uint64_t m = n;
            while (m > 1) {
                std::uint64_t p = spf[m];
                Pn *= BigInt(p) * p;
                Pd *= BigInt(p) * p - 1;
                Qn *= p;
                Qd *= p + 1;
                while (m % p == 0) m /= p;
            }
        }
        BigInt scale_big = bigint_from_i128(kScale);
        BigInt w_lo_num = Pn * bigint_from_i128(lo), w_hi_num = Pn * bigint_from_i128(hi);
        BigInt w_den = Pd * scale_big;
        // Lower bound: (pi^2/6) (n Qd - Qn) / (n Qd) < W. Certify with ph.
        BigInt nQd = BigInt(n) * Qd;
        bool lower_ok = ph.num() * (nQd - Qn) * w_den < BigInt(6) * ph.den() * nQd * w_lo_num;
        // Upper bound: W < (pi^2/6) (4n Qd - Qn) / (4n Qd). Certify with pl.
        BigInt nQd4 = BigInt(4) * nQd;
        bool upper_ok = BigInt(6) * pl.den() * nQd4 * w_hi_num < pl.num() * (nQd4 - Qn) * w_den;
        if (!lower_ok || !upper_ok) bad.push_back(n);
    }
    return bad;
}

}  // namespace flattorus
