#pragma once

#include "lamroot/arith.hpp"

#include <vector>

namespace lamroot {

/// All primes <= n, via a segmented sieve of Eratosthenes.
std::vector<u64> primes_up_to(u64 n);

} // namespace lamroot
