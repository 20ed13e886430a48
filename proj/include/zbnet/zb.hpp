#pragma once

// Arithmetic and linear algebra over the residue ring Z_b, b >= 2.
// b is NOT assumed prime: linear independence over a composite modulus is
// decided by exhaustive coefficient enumeration, because elimination-style
// rank is only valid over a field (example: {(2,0)} over Z_4 is dependent,
// 2*(2,0) = (0,0), yet 2 != 0 would survive a naive pivot search).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zbnet {

using DigitVector = std::vector<int>;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void check_base(int base) {
    require(base >= 2, "base must be >= 2");
}

inline void check_digit(int a, int base) {
    require(a >= 0 && a < base, "digit out of range for base " + std::to_string(base));
}

inline int add_mod(int a, int c, int base) {
    check_base(base);
    check_digit(a, base);
    check_digit(c, base);
    int s = a + c;
    return s >= base ? s - base : s;
}

inline int neg_mod(int a, int base) {
    check_base(base);
    check_digit(a, base);
    return a == 0 ? 0 : base - a;
}

// a (-) c, computed through the identity a (-) c = a (+) (b-1)*c so the same
// code path serves both the baker's transformation and the matrix entries.
inline int sub_mod(int a, int c, int base) {
    check_base(base);
    check_digit(a, base);
    check_digit(c, base);
    return add_mod(a, static_cast<int>((static_cast<std::int64_t>(base - 1) * c) % base), base);
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct MatrixZb {
    int rows = 0;
    int cols = 0;
    int base = 2;
    std::vector<int> a;  // row-major, entries in {0,...,base-1}

    MatrixZb() = default;
    MatrixZb(int r, int c, int b) : rows(r), cols(c), base(b), a(static_cast<std::size_t>(r) * c, 0) {
        check_base(b);
        require(r >= 1 && c >= 1, "matrix dimensions must be >= 1");
    }

    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    // l-th row, 1-based, as used in the rank criteria below.
    DigitVector row(int l) const {
        require(l >= 1 && l <= rows, "row index out of range");
        DigitVector v(static_cast<std::size_t>(cols));
        for (int c = 0; c < cols; ++c) v[static_cast<std::size_t>(c)] = at(l - 1, c);
        return v;
    }

    bool operator==(const MatrixZb& o) const {
        return rows == o.rows && cols == o.cols && base == o.base && a == o.a;
    }
};

inline DigitVector mat_vec_mul(const MatrixZb& m, const DigitVector& v) {
    require(static_cast<std::size_t>(m.cols) == v.size(), "mat_vec_mul: dimension mismatch");
    for (int x : v) check_digit(x, m.base);
    DigitVector y(static_cast<std::size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r) {
        std::int64_t acc = 0;
        for (int c = 0; c < m.cols; ++c) acc += static_cast<std::int64_t>(m.at(r, c)) * v[static_cast<std::size_t>(c)];
        y[static_cast<std::size_t>(r)] = static_cast<int>(acc % m.base);
    }
    return y;
}

namespace detail {

// Work cap for the exhaustive route: base^k coefficient tuples.
inline constexpr std::int64_t kEnumerationCap = std::int64_t{1} << 24;

// Gaussian elimination over the field Z_p; only valid for prime base.
inline bool independent_by_elimination(const std::vector<DigitVector>& vecs, int base) {
    check_base(base);
    require(is_prime(base), "elimination requires a prime base");
    if (vecs.empty()) return true;
    const std::size_t len = vecs.front().size();
    if (vecs.size() > len) return false;  // more vectors than coordinates
    std::vector<std::vector<int>> m;
    m.reserve(vecs.size());
    for (const auto& v : vecs) {
        require(v.size() == len, "independence check: length mismatch");
        for (int x : v) check_digit(x, base);
        m.push_back(std::vector<int>(v.begin(), v.end()));
    }
    // modular inverse by Fermat: a^(p-2) mod p
    auto inv = [base](int x) {
        std::int64_t result = 1, acc = x;
        for (int e = base - 2; e > 0; e >>= 1) {
            if (e & 1) result = result * acc % base;
            acc = acc * acc % base;
        }
        return static_cast<int>(result);
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < len && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const int scale = inv(m[rank][col]);
        for (std::size_t c = col; c < len; ++c)
            m[rank][c] = static_cast<int>(static_cast<std::int64_t>(m[rank][c]) * scale % base);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const int f = m[r][col];
            for (std::size_t c = col; c < len; ++c) {
                std::int64_t t = m[r][c] - static_cast<std::int64_t>(f) * m[rank][c] % base;
                m[r][c] = static_cast<int>((t % base + base) % base);
            }
        }
        ++rank;
    }
    return rank == m.size();
}

// Exhaustive route, valid over any Z_b: dependent iff some coefficient tuple
// other than all-zero combines to the zero vector.  The tuple odometer keeps a
// running sum; stepping digit i (including a wrap b-1 -> 0) changes the sum by
// exactly +v_i mod b, because -(b-1) = +1 (mod b).
inline bool independent_by_enumeration(const std::vector<DigitVector>& vecs, int base) {
    check_base(base);
    if (vecs.empty()) return true;
    const std::size_t k = vecs.size();
    const std::size_t len = vecs.front().size();
    // k > len is dependent over any Z_b: the additive map Z_b^k -> Z_b^len
    // cannot be injective, and a collision of coefficient tuples yields a
    // nontrivial null combination.
    if (k > len) return false;
    std::int64_t states = 1;
    for (std::size_t i = 0; i < k; ++i) {
        states *= base;
        if (states > kEnumerationCap)
            throw std::length_error("independence check: base^k exceeds the exhaustive-enumeration cap");
    }
    for (const auto& v : vecs) {
        require(v.size() == len, "independence check: length mismatch");
        for (int x : v) check_digit(x, base);
    }
    std::vector<int> coeff(k, 0);
    std::vector<int> sum(len, 0);
    auto add_vec = [&](std::size_t i) {
        for (std::size_t c = 0; c < len; ++c) sum[c] = add_mod(sum[c], vecs[i][c], base);
    };
    for (std::int64_t step = 1; step < states; ++step) {
        std::size_t i = 0;
        while (true) {
            add_vec(i);
            if (++coeff[i] < base) break;
            coeff[i] = 0;
            ++i;  // carry
        }
        bool zero = true;
        for (std::size_t c = 0; c < len && zero; ++c) zero = (sum[c] == 0);
        if (zero) return false;
    }
    return true;
}

}  // namespace detail

// Dispatch on primality: field -> elimination, proper ring -> enumeration.
inline bool is_linearly_independent(const std::vector<DigitVector>& vecs, int base) {
    check_base(base);
    if (is_prime(base)) return detail::independent_by_elimination(vecs, base);
    return detail::independent_by_enumeration(vecs, base);
}

}  // namespace zbnet
