#pragma once

// Two-dimensional digital nets over Z_b: point generation from a pair of
// generating matrices, dual-net membership, and weight-bounded enumeration of
// dual pairs.
//
// Conventions (fixed across the library):
//  * index digits are least significant first, a = a_1 + a_2 b + ... + a_m b^(m-1);
//  * output digits are most significant first, x = y_1/b + ... + y_n/b^n, so a
//    coordinate is stored as the integer numerator sum y_i b^(n-i) at scale b^n;
//  * the digit vector of k pairs digit kappa_(i-1) (coefficient of b^(i-1))
//    with row i of the generating matrix, matching the transposed product
//    C^T k_vec.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "zbnet/weight_functions.hpp"
#include "zbnet/zb.hpp"

namespace zbnet {

struct GeneratingMatrices {
    MatrixZb c1;
    MatrixZb c2;
    int base = 2;
    int m = 1;  // columns = digits of the index
    int n = 1;  // rows = digits of each coordinate

    void validate() const {
        check_base(base);
        require(m >= 1 && n >= m, "generating matrices need 1 <= m <= n");
        require(c1.rows == n && c1.cols == m && c1.base == base, "C1 has wrong shape or base");
        require(c2.rows == n && c2.cols == m && c2.base == base, "C2 has wrong shape or base");
    }
};

struct NetPoint {
    std::int64_t num1 = 0;  // coordinate j = num_j / b^n
    std::int64_t num2 = 0;

    bool operator==(const NetPoint& o) const { return num1 == o.num1 && num2 == o.num2; }
    bool operator<(const NetPoint& o) const {
        return num1 != o.num1 ? num1 < o.num1 : num2 < o.num2;
    }
};

struct DigitalNet {
    GeneratingMatrices gen;
    std::int64_t denom = 1;  // b^n
    std::vector<NetPoint> points;

    int base() const { return gen.base; }
    int m() const { return gen.m; }
    int n() const { return gen.n; }
};

inline std::int64_t checked_pow(int base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        require(v <= (std::int64_t{1} << 62) / base, "b^n exceeds the 64-bit numerator range");
        v *= base;
    }
    return v;
}

// First n base-b digits of k, least significant first.
inline DigitVector first_digits(std::int64_t k, int base, int n) {
    DigitVector d(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n && k > 0; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<int>(k % base);
        k /= base;
    }
    return d;
}

inline DigitalNet generate_points(const GeneratingMatrices& g) {
    g.validate();
    DigitalNet net;
    net.gen = g;
    net.denom = checked_pow(g.base, g.n);
    const std::int64_t count = checked_pow(g.base, g.m);
    net.points.reserve(static_cast<std::size_t>(count));
    for (std::int64_t a = 0; a < count; ++a) {
        const DigitVector avec = first_digits(a, g.base, g.m);
        const DigitVector y1 = mat_vec_mul(g.c1, avec);
        const DigitVector y2 = mat_vec_mul(g.c2, avec);
        NetPoint p;
        for (int i = 0; i < g.n; ++i) {
            p.num1 = p.num1 * g.base + y1[static_cast<std::size_t>(i)];
            p.num2 = p.num2 * g.base + y2[static_cast<std::size_t>(i)];
        }
        net.points.push_back(p);
    }
    return net;
}

struct DualIndex {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
    int weight = 0;  // total weight under the enumeration's weight function

    bool operator==(const DualIndex& o) const { return k1 == o.k1 && k2 == o.k2; }
};

inline bool is_dual(const GeneratingMatrices& g, std::int64_t k1, std::int64_t k2) {
    g.validate();
    require(k1 >= 0 && k2 >= 0, "dual indices must be nonnegative");
    const DigitVector v1 = first_digits(k1, g.base, g.n);
    const DigitVector v2 = first_digits(k2, g.base, g.n);
    // C1^T v1 (+) C2^T v2 = 0: column c of C_j dotted with the digit vector.
    for (int c = 0; c < g.m; ++c) {
        std::int64_t acc = 0;
        for (int r = 0; r < g.n; ++r) {
            acc += static_cast<std::int64_t>(g.c1.at(r, c)) * v1[static_cast<std::size_t>(r)];
            acc += static_cast<std::int64_t>(g.c2.at(r, c)) * v2[static_cast<std::size_t>(r)];
        }
        if (acc % g.base != 0) return false;
    }
    return true;
}

enum class WeightKind { nrt, dick };

inline int weight_of(std::int64_t k, int base, WeightKind kind) {
    return kind == WeightKind::nrt ? nrt_weight(k, base) : dick_weight(k, base);
}

namespace detail {

// All k >= 0 with NRT weight exactly w and k < b^n, ascending.  Weight w means
// the most significant nonzero digit sits at position w, i.e. k in [b^(w-1), b^w).
inline std::vector<std::int64_t> nrt_candidates(int base, int w, int n) {
    if (w == 0) return {0};
    if (w > n) return {};
    std::vector<std::int64_t> out;
    const std::int64_t lo = checked_pow(base, w - 1);
    const std::int64_t hi = checked_pow(base, w);
    out.reserve(static_cast<std::size_t>(hi - lo));
    for (std::int64_t k = lo; k < hi; ++k) out.push_back(k);
    return out;
}

// All k >= 0 with Dick weight exactly w and k < b^n, ascending.  Constructive:
// either a single nonzero digit at position w (v = 1), or top positions
// a_1 > a_2 >= 1 with a_1 + a_2 = w and arbitrary digits below a_2.
inline std::vector<std::int64_t> dick_candidates(int base, int w, int n) {
    if (w == 0) return {0};
    std::vector<std::int64_t> out;
    if (w <= n) {
        const std::int64_t p = checked_pow(base, w - 1);
        for (int kappa = 1; kappa < base; ++kappa) out.push_back(kappa * p);
    }
    for (int a2 = 1; 2 * a2 < w; ++a2) {
        const int a1 = w - a2;
        if (a1 > n) continue;
        const std::int64_t p1 = checked_pow(base, a1 - 1);
        const std::int64_t p2 = checked_pow(base, a2 - 1);
        for (int k1 = 1; k1 < base; ++k1)
            for (int k2 = 1; k2 < base; ++k2)
                for (std::int64_t low = 0; low < p2; ++low)
                    out.push_back(k1 * p1 + k2 * p2 + low);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::int64_t> weight_candidates(int base, int w, int n, WeightKind kind) {
    return kind == WeightKind::nrt ? nrt_candidates(base, w, n) : dick_candidates(base, w, n);
}

}  // namespace detail

// Truncation lemma (used throughout the weight checks): is_dual only reads the
// first n digits of k, so every dual element is the n-digit truncation of a
// dual element with k1, k2 < b^n; and any k >= b^n has a nonzero digit at some
// position > n, hence NRT and Dick weight >= n+1.  Restricting enumeration to
// k < b^n is therefore lossless for any weight threshold <= n per component.
inline std::vector<DualIndex> enumerate_dual(const GeneratingMatrices& g, WeightKind kind, int cap) {
    g.validate();
    require(cap >= 0, "enumerate_dual: cap must be >= 0");
    std::vector<DualIndex> out;
    for (int w = 1; w <= cap; ++w) {
        std::vector<DualIndex> level;
        for (int w1 = 0; w1 <= w; ++w1) {
            const auto ks1 = detail::weight_candidates(g.base, w1, g.n, kind);
            const auto ks2 = detail::weight_candidates(g.base, w - w1, g.n, kind);
            for (std::int64_t k1 : ks1)
                for (std::int64_t k2 : ks2)
                    if (is_dual(g, k1, k2)) level.push_back({k1, k2, w});
        }
        std::sort(level.begin(), level.end(), [](const DualIndex& a, const DualIndex& b) {
            return a.k1 != b.k1 ? a.k1 < b.k1 : a.k2 < b.k2;
        });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace zbnet
