#pragma once

// NRT and Dick weights of a nonnegative integer k, read off its base-b digits
// k = kappa_1 b^(a_1-1) + ... + kappa_v b^(a_v-1) with a_1 > ... > a_v > 0 and
// nonzero kappa_i.  The NRT weight is a_1; the Dick weight adds the second
// position, a_1 + a_2, when two or more digits are nonzero.

#include <cstdint>
#include <vector>

#include "zbnet/zb.hpp"

namespace zbnet {

struct WeightDecomposition {
    // positions[0] = a_1 (most significant), digits[0] = kappa_1; empty iff k = 0
    std::vector<int> positions;
    std::vector<int> digits;

    int v() const { return static_cast<int>(positions.size()); }
};

inline WeightDecomposition decompose(std::int64_t k, int base) {
    check_base(base);
    require(k >= 0, "decompose: k must be nonnegative");
    WeightDecomposition d;
    int pos = 1;
    std::vector<int> rev_pos, rev_dig;
    while (k > 0) {
        const int digit = static_cast<int>(k % base);
        if (digit != 0) {
            rev_pos.push_back(pos);
            rev_dig.push_back(digit);
        }
        k /= base;
        ++pos;
    }
    d.positions.assign(rev_pos.rbegin(), rev_pos.rend());
    d.digits.assign(rev_dig.rbegin(), rev_dig.rend());
    return d;
}

inline int nrt_weight(std::int64_t k, int base) {
    check_base(base);
    require(k >= 0, "nrt_weight: k must be nonnegative");
    int pos = 0;
    while (k > 0) {
        ++pos;
        k /= base;
    }
    return pos;  // 0 when k = 0, else the position of the top nonzero digit
}

inline int dick_weight(std::int64_t k, int base) {
    check_base(base);
    require(k >= 0, "dick_weight: k must be nonnegative");
    int top = 0, second = 0, pos = 1;
    while (k > 0) {
        if (k % base != 0) {
            second = top;
            top = pos;
        }
        k /= base;
        ++pos;
    }
    return top + second;  // a_1 + a_2, degenerating to a_1 (v=1) or 0 (k=0)
}

inline int nrt_weight_pair(std::int64_t k1, std::int64_t k2, int base) {
    return nrt_weight(k1, base) + nrt_weight(k2, base);
}

inline int dick_weight_pair(std::int64_t k1, std::int64_t k2, int base) {
    return dick_weight(k1, base) + dick_weight(k2, base);
}

}  // namespace zbnet
