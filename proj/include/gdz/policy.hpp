#pragma once

namespace gdz {

/// Tolerance thresholds for the floating backend. The exact backend
/// ignores both fields; every comparison there is structural.
struct TolerancePolicy {
    double zero_threshold = 1e-10; // absolute magnitude below which a value counts as zero
    double rel_threshold = 1e-8;   // relative slack for approximate comparisons

    static TolerancePolicy exact_default() { return {}; }
};

} // namespace gdz
