#pragma once

// The concrete two-dimensional point families: the Hammersley net in base b,
// the b-adic baker's transformation tau_n, and the folded Hammersley net --
// each available both as an explicit digit formula and as generating matrices,
// so the two routes can be checked against each other exactly.

#include <cstdint>
#include <vector>

#include "zbnet/netcore.hpp"
#include "zbnet/zb.hpp"

namespace zbnet {

// C1 = identity, C2 = anti-identity.  With least-significant-first index
// digits this yields coordinate one = digit reversal of a (the radical
// inverse) and coordinate two = a/b^m.
inline GeneratingMatrices hammersley_matrices(int base, int m) {
    check_base(base);
    require(m >= 1, "m must be >= 1");
    GeneratingMatrices g;
    g.base = base;
    g.m = m;
    g.n = m;
    g.c1 = MatrixZb(m, m, base);
    g.c2 = MatrixZb(m, m, base);
    for (int i = 0; i < m; ++i) {
        g.c1.at(i, i) = 1;
        g.c2.at(i, m - 1 - i) = 1;
    }
    return g;
}

inline DigitalNet hammersley_points(int base, int m) {
    check_base(base);
    require(m >= 1, "m must be >= 1");
    DigitalNet net;
    net.gen = hammersley_matrices(base, m);
    net.denom = checked_pow(base, m);
    net.points.reserve(static_cast<std::size_t>(net.denom));
    for (std::int64_t a = 0; a < net.denom; ++a) {
        // (a_1/b + ... + a_m/b^m, a_m/b + ... + a_1/b^m): numerator one is the
        // m-digit reversal of a, numerator two is a itself.
        std::int64_t rev = 0, rest = a;
        for (int i = 0; i < m; ++i) {
            rev = rev * base + rest % base;
            rest /= base;
        }
        net.points.push_back({rev, a});
    }
    return net;
}

// First `count` digits xi_1, xi_2, ... of num/b^scale in [0,1); digits beyond
// the scale are zero (the expansion is finite).
inline DigitVector b_adic_digits(std::int64_t num, int base, int scale, int count) {
    check_base(base);
    require(scale >= 0 && count >= 0, "b_adic_digits: negative scale or count");
    const std::int64_t denom = checked_pow(base, scale);
    require(num >= 0 && num < denom, "b_adic_digits: numerator out of [0, b^scale)");
    DigitVector xi(static_cast<std::size_t>(count), 0);
    // num = xi_1 b^(scale-1) + ... + xi_scale b^0
    std::int64_t rest = num;
    std::int64_t place = denom;
    for (int i = 0; i < count && i < scale; ++i) {
        place /= base;
        xi[static_cast<std::size_t>(i)] = static_cast<int>(rest / place);
        rest %= place;
    }
    return xi;
}

// tau_n(x) = sum_{i=1..n} (xi_{i+1} (-) xi_1) / b^i, applied to an exactly
// represented coordinate num/b^scale; returns the numerator at scale n.
inline std::int64_t baker_fold(std::int64_t num, int base, int scale, int depth) {
    require(depth >= 1, "baker_fold: depth must be >= 1");
    const DigitVector xi = b_adic_digits(num, base, scale, depth + 1);
    std::int64_t out = 0;
    for (int i = 1; i <= depth; ++i)
        out = out * base + sub_mod(xi[static_cast<std::size_t>(i)], xi[0], base);
    return out;
}

// Matrices of the folded net: column one of C1 is all b-1 with a shifted
// identity to its right; C2 is the row-reversed mirror (last column all b-1,
// ones on the rising diagonal (i, m-i)).  Derived by applying
// a (-) c = a (+) (b-1)c to the folded digit formulas.
inline GeneratingMatrices folded_matrices(int base, int m, int n) {
    check_base(base);
    require(m >= 1, "m must be >= 1");
    require(n >= 2 * m, "folded construction requires depth n >= 2m");
    GeneratingMatrices g;
    g.base = base;
    g.m = m;
    g.n = n;
    g.c1 = MatrixZb(n, m, base);
    g.c2 = MatrixZb(n, m, base);
    for (int i = 0; i < n; ++i) {
        g.c1.at(i, 0) = base - 1;
        g.c2.at(i, m - 1) = base - 1;
    }
    for (int i = 1; i <= m - 1; ++i) {
        g.c1.at(i - 1, i) = 1;          // entry (i, i+1), 1-based
        g.c2.at(i - 1, m - i - 1) = 1;  // entry (i, m-i), 1-based
    }
    return g;
}

// The folded net evaluated digit-by-digit: componentwise tau_n of the
// Hammersley points, at scale n.
inline DigitalNet folded_points(int base, int m, int n) {
    require(n >= 2 * m, "folded construction requires depth n >= 2m");
    const DigitalNet ham = hammersley_points(base, m);
    DigitalNet net;
    net.gen = folded_matrices(base, m, n);
    net.denom = checked_pow(base, n);
    net.points.reserve(ham.points.size());
    for (const NetPoint& p : ham.points)
        net.points.push_back({baker_fold(p.num1, base, m, n), baker_fold(p.num2, base, m, n)});
    return net;
}

}  // namespace zbnet
