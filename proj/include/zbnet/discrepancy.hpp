#pragma once

// Exact and estimated discrepancy norms of finite point sets in [0,1)^2.
//
// Everything exact runs on integer numerators over one common denominator D:
// box counting with floats misclassifies boundary points, which is fatal for
// digital nets whose coordinates sit exactly on b-adic boundaries.  Kernels
// have a fast path on 64/128-bit integers, taken only when conservative bit
// bounds prove no overflow, and an arbitrary-precision fallback otherwise.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "zbnet/netcore.hpp"
#include "zbnet/rational.hpp"
#include "zbnet/zb.hpp"

namespace zbnet {

struct RatPoint {
    Rational x;
    Rational y;
};

// Point set rescaled to integer numerators over the least common denominator.
struct ScaledPointSet {
    BigInt denom = 1;
    std::vector<BigInt> u, w;  // numerators, 0 <= u_i < denom

    bool small = false;  // true when denom (hence every numerator) fits int64
    std::int64_t denom64 = 1;
    std::vector<std::int64_t> u64, w64;

    std::size_t size() const { return u.size(); }
};

inline ScaledPointSet scale_points(const std::vector<RatPoint>& pts) {
    require(!pts.empty(), "discrepancy of an empty point set is undefined");
    ScaledPointSet s;
    for (const RatPoint& p : pts) {
        require(p.x >= 0 && p.x < 1 && p.y >= 0 && p.y < 1, "points must lie in [0,1)^2");
        s.denom = lcm(s.denom, denominator(p.x));
        s.denom = lcm(s.denom, denominator(p.y));
    }
    s.u.reserve(pts.size());
    s.w.reserve(pts.size());
    for (const RatPoint& p : pts) {
        s.u.push_back(numerator(p.x) * (s.denom / denominator(p.x)));
        s.w.push_back(numerator(p.y) * (s.denom / denominator(p.y)));
    }
    if (s.denom <= BigInt(std::numeric_limits<std::int64_t>::max())) {
        s.small = true;
        s.denom64 = s.denom.convert_to<std::int64_t>();
        s.u64.reserve(pts.size());
        s.w64.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            s.u64.push_back(s.u[i].convert_to<std::int64_t>());
            s.w64.push_back(s.w[i].convert_to<std::int64_t>());
        }
    }
    return s;
}

inline ScaledPointSet scale_net(const DigitalNet& net) {
    require(!net.points.empty(), "discrepancy of an empty point set is undefined");
    ScaledPointSet s;
    s.denom = net.denom;
    s.small = true;
    s.denom64 = net.denom;
    s.u.reserve(net.points.size());
    s.w.reserve(net.points.size());
    s.u64.reserve(net.points.size());
    s.w64.reserve(net.points.size());
    for (const NetPoint& p : net.points) {
        s.u.push_back(p.num1);
        s.w.push_back(p.num2);
        s.u64.push_back(p.num1);
        s.w64.push_back(p.num2);
    }
    return s;
}

namespace detail {

inline int bit_width_i64(std::int64_t v) {
    return std::bit_width(static_cast<std::uint64_t>(v < 0 ? 0 : v));
}

inline BigInt big_from_u128(unsigned __int128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | BigInt(static_cast<std::uint64_t>(v));
}

}  // namespace detail

// Local discrepancy at y: fraction of points in the half-open box [0, y1) x
// [0, y2) minus the box area, exact.
inline Rational local_discrepancy(const std::vector<RatPoint>& pts, const Rational& y1, const Rational& y2) {
    require(!pts.empty(), "discrepancy of an empty point set is undefined");
    require(y1 >= 0 && y1 < 1 && y2 >= 0 && y2 < 1, "evaluation point must lie in [0,1)^2");
    std::int64_t count = 0;
    for (const RatPoint& p : pts)
        if (p.x < y1 && p.y < y2) ++count;
    return Rational(count, static_cast<std::int64_t>(pts.size())) - y1 * y2;
}

// Squared L2 discrepancy by the pairwise-sum identity
//   L2^2 = 1/9 - 2/N sum_i prod_j (1 - x_ij^2)/2
//              + 1/N^2 sum_{i,i'} prod_j (1 - max(x_ij, x_i'j))
// which over the common denominator D becomes
//   L2^2 = 1/9 - S1/(2 N D^4) + S2/(N^2 D^2),
//   S1 = sum_i (D^2-u_i^2)(D^2-w_i^2),
//   S2 = sum_{i,i'} (D - max(u_i,u_i'))(D - max(w_i,w_i')).
inline Rational l2_exact(const ScaledPointSet& s) {
    require(s.size() > 0, "discrepancy of an empty point set is undefined");
    const std::int64_t n = static_cast<std::int64_t>(s.size());
    BigInt s1, s2;

    const int bd = s.small ? detail::bit_width_i64(s.denom64) : 0;
    const int bn = detail::bit_width_i64(n);
    // S1 terms are < 2^(4 bd), N of them; S2 has N^2 terms < 2^(2 bd) counted
    // twice (symmetry), hence the +1.
    if (s.small && 4 * bd + bn <= 126 && 2 * bd + 2 * bn + 1 <= 126) {
        using u128 = unsigned __int128;
        const u128 d = static_cast<u128>(s.denom64);
        const u128 d2 = d * d;
        u128 acc1 = 0, acc2 = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const u128 ui = static_cast<u128>(s.u64[i]);
            const u128 wi = static_cast<u128>(s.w64[i]);
            acc1 += (d2 - ui * ui) * (d2 - wi * wi);
            acc2 += (d - ui) * (d - wi);  // diagonal pair (i,i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                const u128 mu = static_cast<u128>(std::max(s.u64[i], s.u64[j]));
                const u128 mw = static_cast<u128>(std::max(s.w64[i], s.w64[j]));
                acc2 += 2 * (d - mu) * (d - mw);
            }
        }
        s1 = detail::big_from_u128(acc1);
        s2 = detail::big_from_u128(acc2);
    } else {
        const BigInt d2 = s.denom * s.denom;
        for (std::size_t i = 0; i < s.size(); ++i) {
            s1 += (d2 - s.u[i] * s.u[i]) * (d2 - s.w[i] * s.w[i]);
            s2 += (s.denom - s.u[i]) * (s.denom - s.w[i]);
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                const BigInt mu = std::max(s.u[i], s.u[j]);
                const BigInt mw = std::max(s.w[i], s.w[j]);
                s2 += 2 * (s.denom - mu) * (s.denom - mw);
            }
        }
    }
    const BigInt d4 = s.denom * s.denom * s.denom * s.denom;
    return Rational(1, 9) - Rational(s1, 2 * n * d4) + Rational(s2, n * n * s.denom * s.denom);
}

// Exact L-infinity (star) discrepancy: the supremum of |Delta| over [0,1)^2.
// Within any cell of the grid formed by the points' coordinate values (plus 0
// and 1), the open-box count is constant, so Delta = c/N - t1 t2 is monotone
// in each variable and |Delta| is extremized at cell-corner limits.  Limits
// from below reproduce the open count at the corner; limits from above land
// on the closed count.  Hence the supremum equals
//   max over grid nodes g of max( g1 g2 - open(g)/N , closed(g)/N - g1 g2 ),
// and it is attained exactly on this critical grid (possibly as an unattained
// limit of the original sup).
inline Rational linf_exact(const ScaledPointSet& s) {
    require(s.size() > 0, "discrepancy of an empty point set is undefined");
    const std::int64_t n = static_cast<std::int64_t>(s.size());

    if (s.small) {
        const std::int64_t d = s.denom64;
        std::vector<std::int64_t> xs(s.u64), ys(s.w64);
        xs.push_back(0);
        xs.push_back(d);
        ys.push_back(0);
        ys.push_back(d);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

        // points sorted by u; each point's y mapped to its rank in ys
        std::vector<std::pair<std::int64_t, std::size_t>> pts(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::size_t yi = static_cast<std::size_t>(
                std::lower_bound(ys.begin(), ys.end(), s.w64[i]) - ys.begin());
            pts[i] = {s.u64[i], yi};
        }
        std::sort(pts.begin(), pts.end());

        using i128 = __int128;
        const i128 d2 = static_cast<i128>(d) * d;
        std::vector<std::int64_t> cnt(ys.size(), 0);
        i128 best = 0;
        std::size_t idx = 0;
        for (std::int64_t g1 : xs) {
            while (idx < pts.size() && pts[idx].first < g1) cnt[pts[idx++].second]++;
            // open counts: points with u < g1, prefix over w < g2 (exclusive)
            std::int64_t running = 0;
            const i128 g1n = static_cast<i128>(g1) * n;
            for (std::size_t j = 0; j < ys.size(); ++j) {
                const i128 v = g1n * ys[j] - static_cast<i128>(running) * d2;
                if (v > best) best = v;
                running += cnt[j];
            }
            while (idx < pts.size() && pts[idx].first == g1) cnt[pts[idx++].second]++;
            // closed counts: points with u <= g1, prefix over w <= g2 (inclusive)
            running = 0;
            for (std::size_t j = 0; j < ys.size(); ++j) {
                running += cnt[j];
                const i128 v = static_cast<i128>(running) * d2 - g1n * ys[j];
                if (v > best) best = v;
            }
        }
        const bool negative = best < 0;
        const unsigned __int128 mag =
            negative ? static_cast<unsigned __int128>(-best) : static_cast<unsigned __int128>(best);
        BigInt num = detail::big_from_u128(mag);
        if (negative) num = -num;
        return Rational(num, BigInt(n) * s.denom * s.denom);
    }

    // arbitrary-precision fallback, same sweep
    std::vector<BigInt> xs(s.u), ys(s.w);
    xs.push_back(0);
    xs.push_back(s.denom);
    ys.push_back(0);
    ys.push_back(s.denom);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<std::pair<BigInt, std::size_t>> pts(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::size_t yi =
            static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), s.w[i]) - ys.begin());
        pts[i] = {s.u[i], yi};
    }
    std::sort(pts.begin(), pts.end());
    const BigInt d2 = s.denom * s.denom;
    std::vector<std::int64_t> cnt(ys.size(), 0);
    BigInt best = 0;
    std::size_t idx = 0;
    for (const BigInt& g1 : xs) {
        while (idx < pts.size() && pts[idx].first < g1) cnt[pts[idx++].second]++;
        std::int64_t running = 0;
        const BigInt g1n = g1 * n;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const BigInt v = g1n * ys[j] - running * d2;
            if (v > best) best = v;
            running += cnt[j];
        }
        while (idx < pts.size() && pts[idx].first == g1) cnt[pts[idx++].second]++;
        running = 0;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            running += cnt[j];
            const BigInt v = running * d2 - g1n * ys[j];
            if (v > best) best = v;
        }
    }
    return Rational(best, BigInt(n) * s.denom * s.denom);
}

enum class Metric { l2, linf, lp };

struct DiscrepancyReport {
    Metric metric = Metric::lp;
    bool exact = false;
    Rational exact_value;  // l2: the square; linf: the value itself
    double estimate = 0;
    double std_error = 0;
    double p = 0;
    std::int64_t samples = 0;
    std::optional<std::uint64_t> seed;  // unset: deterministic midpoint grid
    int grid_side = 0;                  // midpoint mode only
    std::int64_t point_count = 0;
};

// Monte-Carlo / midpoint-grid estimate of the Lp norm of the local
// discrepancy: (1/S sum |Delta(t_s)|^p)^(1/p).  Box counts per sample are
// exact (integer cross-multiplication); only the final power/mean runs in
// floating point.  Without a seed the sample is the deterministic g x g
// midpoint grid with g = floor(sqrt(S)); with a seed, S uniform points from
// mt19937_64.  The report carries the standard error of the mean of |Delta|^p
// propagated through the 1/p power.
inline DiscrepancyReport lp_estimate(const ScaledPointSet& s, double p, std::int64_t samples,
                                     std::optional<std::uint64_t> seed = std::nullopt) {
    require(s.size() > 0, "discrepancy of an empty point set is undefined");
    require(std::isfinite(p), "p must be finite; for the supremum norm use the exact sweep");
    require(p >= 1.0, "p must satisfy p >= 1");
    require(samples >= 1, "sample count must be >= 1");

    const std::int64_t n = static_cast<std::int64_t>(s.size());
    const double inv_n = 1.0 / static_cast<double>(n);
    std::int64_t used = 0;
    double mean = 0, m2 = 0;
    auto welford = [&](double value) {
        ++used;
        const double d1 = value - mean;
        mean += d1 / static_cast<double>(used);
        m2 += d1 * (value - mean);
    };

    DiscrepancyReport rep;
    rep.metric = Metric::lp;
    rep.p = p;
    rep.seed = seed;
    rep.point_count = n;

    if (!seed) {
        const std::int64_t g = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(samples)))));
        require(g <= (1 << 20), "midpoint grid side exceeds 2^20");
        rep.grid_side = static_cast<int>(g);
        // Bucket b(x) = least grid index i with x < (2i+1)/(2g); the count for
        // sample (i,j) is then a 2D prefix sum over the bucket histogram.
        auto bucket64 = [&](std::int64_t num) {
            const __int128 lhs = static_cast<__int128>(2 * g) * num;
            std::int64_t i = static_cast<std::int64_t>(lhs / (static_cast<__int128>(2) * s.denom64));
            while (static_cast<__int128>(2 * i + 1) * s.denom64 <= lhs) ++i;
            return std::min(i, g);
        };
        auto bucket_big = [&](const BigInt& num) {
            const BigInt lhs = 2 * g * num;
            BigInt i = lhs / (2 * s.denom);
            while ((2 * i + 1) * s.denom <= lhs) ++i;
            return static_cast<std::int64_t>(std::min(i, BigInt(g)).convert_to<std::int64_t>());
        };
        std::vector<std::int64_t> hist(static_cast<std::size_t>((g + 1) * (g + 1)), 0);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const std::int64_t bi = s.small ? bucket64(s.u64[k]) : bucket_big(s.u[k]);
            const std::int64_t bj = s.small ? bucket64(s.w64[k]) : bucket_big(s.w[k]);
            ++hist[static_cast<std::size_t>(bi * (g + 1) + bj)];
        }
        // in-place 2D prefix sums
        for (std::int64_t i = 0; i <= g; ++i)
            for (std::int64_t j = 1; j <= g; ++j)
                hist[static_cast<std::size_t>(i * (g + 1) + j)] += hist[static_cast<std::size_t>(i * (g + 1) + j - 1)];
        for (std::int64_t i = 1; i <= g; ++i)
            for (std::int64_t j = 0; j <= g; ++j)
                hist[static_cast<std::size_t>(i * (g + 1) + j)] += hist[static_cast<std::size_t>((i - 1) * (g + 1) + j)];
        const double step = 1.0 / static_cast<double>(g);
        for (std::int64_t i = 0; i < g; ++i) {
            const double t1 = (2 * i + 1) * 0.5 * step;
            for (std::int64_t j = 0; j < g; ++j) {
                const double t2 = (2 * j + 1) * 0.5 * step;
                const double cnt = static_cast<double>(hist[static_cast<std::size_t>(i * (g + 1) + j)]);
                welford(std::pow(std::abs(cnt * inv_n - t1 * t2), p));
            }
        }
    } else {
        std::mt19937_64 rng(*seed);
        auto draw = [&rng]() { return static_cast<std::int64_t>(rng() >> 11); };  // 53 random bits
        constexpr double kScale = 0x1.0p-53;
        for (std::int64_t t = 0; t < samples; ++t) {
            const std::int64_t t1n = draw(), t2n = draw();  // sample = (t1n, t2n) / 2^53
            std::int64_t cnt = 0;
            if (s.small) {
                for (std::size_t k = 0; k < s.size(); ++k) {
                    // u/D < t1n/2^53  <=>  u * 2^53 < t1n * D  (both sides < 2^127)
                    if ((static_cast<__int128>(s.u64[k]) << 53) < static_cast<__int128>(t1n) * s.denom64 &&
                        (static_cast<__int128>(s.w64[k]) << 53) < static_cast<__int128>(t2n) * s.denom64)
                        ++cnt;
                }
            } else {
                const BigInt r1 = t1n * s.denom, r2 = t2n * s.denom;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if ((s.u[k] << 53) < r1 && (s.w[k] << 53) < r2) ++cnt;
            }
            const double t1 = static_cast<double>(t1n) * kScale;
            const double t2 = static_cast<double>(t2n) * kScale;
            welford(std::pow(std::abs(static_cast<double>(cnt) * inv_n - t1 * t2), p));
        }
    }

    rep.samples = used;
    const double se_mean = used > 1 ? std::sqrt(m2 / static_cast<double>(used - 1) / static_cast<double>(used)) : 0.0;
    rep.estimate = mean > 0 ? std::pow(mean, 1.0 / p) : 0.0;
    rep.std_error = (mean > 0) ? (1.0 / p) * std::pow(mean, 1.0 / p - 1.0) * se_mean : se_mean;
    return rep;
}

}  // namespace zbnet
