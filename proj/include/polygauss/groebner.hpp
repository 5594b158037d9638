#ifndef POLYGAUSS_GROEBNER_HPP
#define POLYGAUSS_GROEBNER_HPP

// Buchberger's algorithm with the coprime-lcm pair criterion, reduced-basis
// post-processing, a process-wide cache, and configurable resource budgets.

#include <memory>
#include <optional>
#include <vector>

#include "polygauss/polynomial.hpp"

namespace polygauss {

struct GroebnerBasis {
    ContextPtr ctx;
    std::vector<Polynomial> gens;  // monic, interreduced, sorted by leading monomial desc
    bool reduced = true;

    bool is_unit_ideal() const {
        return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
    }
};

using GroebnerPtr = std::shared_ptr<const GroebnerBasis>;

// Budgets for a single basis computation.  Defaults can be overridden by the
// POLYGAUSS_GB_MAX_GENERATORS / POLYGAUSS_GB_MAX_TERMS environment variables.
struct GroebnerBudget {
    std::size_t max_generators = 10000;
    std::size_t max_total_terms = 1000000;

    static GroebnerBudget from_environment();
};

// Remainder of f on division by the polynomials of G (need not be a Groebner
// basis).  No term of the result is divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Reduced Groebner basis of the ideal generated by `gens` under the context
// order.  Results are cached per (context signature, generator list).
GroebnerPtr buchberger(const ContextPtr& ctx, const std::vector<Polynomial>& gens);

// Uncached variant used by tests that exercise budgets directly.
GroebnerBasis buchberger_uncached(const ContextPtr& ctx, const std::vector<Polynomial>& gens,
                                  const GroebnerBudget& budget);

// If f lies in the ideal generated by `gens`, returns cofactors h with
// f = sum h[i] * gens[i]; otherwise nullopt.  Runs a tracked Buchberger
// computation; not cached.
std::optional<std::vector<Polynomial>> ideal_cofactors(const Polynomial& f,
                                                       const std::vector<Polynomial>& gens);

std::int64_t groebner_cache_size();
void groebner_cache_clear();

}  // namespace polygauss

#endif
