#include "lamroot/sieve.hpp"

#include <cmath>

namespace lamroot {

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> primes;
    if (n < 2) return primes;

    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;

    std::vector<bool> base_comp(root + 1, false);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!base_comp[i]) {
            base.push_back(i);
            for (u64 j = i * i; j <= root; j += i) base_comp[j] = true;
        }
    }
    primes = base;

    constexpr u64 kSegment = 1 << 16;
    std::vector<bool> seg;
    for (u64 low = root + 1; low <= n; low += kSegment) {
        u64 high = std::min(n, low + kSegment - 1);
        seg.assign(high - low + 1, true);
        for (u64 p : base) {
            u64 start = ((low + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (u64 j = start; j <= high; j += p) seg[j - low] = false;
        }
        for (u64 i = low; i <= high; ++i)
            if (seg[i - low]) primes.push_back(i);
    }
    return primes;
}

} // namespace lamroot
