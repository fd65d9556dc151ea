#pragma once

#include "flk/weil.hpp"

namespace flk {

struct PipelineConfig {
    Int q;
    Int p;
    unsigned f = 1;
    unsigned rank = 1;
    unsigned weight = 2;
    unsigned precision = 32;
    double budget = kDefaultBudget;
};

// Derives p and f from q and validates q = p^f, w even and r >= 1.
PipelineConfig make_pipeline_config(const Int& q, unsigned weight, unsigned rank, unsigned precision = 32,
                                    double budget = kDefaultBudget);

struct BoundReport {
    Int c1, c2, c3;
    unsigned c4 = 0;
    Int denominator;  // lcm of the Bezout denominators behind c1 and c2
    unsigned s = 0;
    std::vector<Int> primes;  // primes ell <= c1
    Int bound;                // p^c3 * prod ell^c2
};

// (c1, c2) = weil_constants(q, w, r), c4 = c4_constant(p, f),
// c3 = c2 f + 2 r c4 f. Throws BudgetError when the enumeration is too big.
BoundReport bound_pipeline(const PipelineConfig& cfg);

}  // namespace flk
