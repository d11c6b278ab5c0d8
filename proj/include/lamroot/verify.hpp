#pragma once

#include "lamroot/arith.hpp"

#include <map>
#include <string>

namespace lamroot {

struct VerifyOptions {
    u64 qmax = 2000;
    // per-identity range caps; the heavy identities get smaller defaults
    u64 decomposition_qmax = 500;
    u64 periodicity_qmax = 1000;
    int periodicity_samples = 100;
    bool inject_fault = false;  // test hook: corrupts one coefficient
};

struct VerifyResult {
    bool ok = true;
    std::string first_failure;              // "(q, identity, witness)"
    std::map<std::string, u64> pass_counts; // identity -> moduli passed
};

/// Runs the exact-identity suites over q in [3, qmax]:
/// decomposition, count, coefficient sums, order census, exponent of G,
/// cyclic specialization, structural-rank agreement, induced periodicity.
VerifyResult run_verify(const VerifyOptions& opts);

} // namespace lamroot
