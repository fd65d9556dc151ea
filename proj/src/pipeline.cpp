#include "flk/pipeline.hpp"

#include "flk/eigenlattice.hpp"
#include "flk/errors.hpp"

namespace flk {

PipelineConfig make_pipeline_config(const Int& q, unsigned weight, unsigned rank, unsigned precision,
                                    double budget) {
    PipelineConfig cfg;
    if (!prime_power(q, cfg.p, cfg.f)) throw PreconditionError("q = " + q.get_str() + " is not a prime power");
    if (weight % 2) throw PreconditionError("even weight required");
    if (rank == 0) throw PreconditionError("rank must be at least 1");
    if (precision == 0) throw PreconditionError("precision must be positive");
    cfg.q = q;
    cfg.weight = weight;
    cfg.rank = rank;
    cfg.precision = precision;
    cfg.budget = budget;
    return cfg;
}

BoundReport bound_pipeline(const PipelineConfig& cfg) {
    WeilConstants wc = weil_constants(cfg.q, cfg.weight, cfg.rank, cfg.budget);
    BoundReport r;
    r.c1 = wc.c;
    r.c2 = wc.c_prime;
    r.denominator = wc.denominator;
    r.s = wc.s;
    r.c4 = c4_constant(cfg.p, cfg.f);
    r.c3 = c3_constant(r.c2, r.c4, cfg.f, cfg.rank);
    if (!r.c2.fits_ulong_p() || !r.c3.fits_ulong_p()) throw BudgetError("bound exponents too large", 0);
    r.bound = ipow(cfg.p, r.c3.get_ui());
    for (Int l = 2; l <= r.c1; ++l)
        if (is_prime(l)) {
            r.primes.push_back(l);
            r.bound *= ipow(l, r.c2.get_ui());
        }
    return r;
}

}  // namespace flk
