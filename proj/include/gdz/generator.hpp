#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdz/hypotheses.hpp"

namespace gdz {

/// Seeded construction request. Same config (id, dim, seed, pool, scramble)
/// always yields the identical instance.
struct GenConfig {
    HypothesisId id = HypothesisId::H22;
    std::size_t dim = 2;       // core dimension n
    std::uint64_t seed = 0;
    long pool_min = -3;
    long pool_max = 3;
    bool half_denominators = true; // admit denominator 2 in the entry pool
    bool scramble = true;          // integer-unimodular similarity at the end
};

/// A generated instance: (a, b) for pair ids, (A, B, C, D) for block ids.
struct Instance {
    std::vector<ExactMatrix> mats;
    std::string recipe; // construction family tag, e.g. "H31/ab-zero"

    bool is_pair() const { return mats.size() == 2; }
};

/// Build an instance satisfying cfg.id exactly; every output is re-checked
/// through check_hypothesis before it is returned.
Instance generate_instance(const GenConfig& cfg);

/// Pair with a b = 0 exactly, for the additive-series suite.
Instance make_ab_zero_pair(std::size_t dim, std::uint64_t seed);

/// Seeded rank-one perturbation search: returns a variant violating exactly
/// the chosen condition while the others stay satisfied; throws
/// CannotIsolateError when the bounded search finds none.
Instance perturb_to_violate(const Instance& inst, HypothesisId id, std::size_t which,
                            std::uint64_t seed);

HypothesisReport check_instance(HypothesisId id, const Instance& inst,
                                const TolerancePolicy& pol = {});

} // namespace gdz
