#ifndef POLYGAUSS_FRACTIONAL_HPP
#define POLYGAUSS_FRACTIONAL_HPP

// Fractional ideals of claimed-domain rings, invertibility certification,
// and local minimal-generator counts at rational points.

#include <optional>

#include "polygauss/ideal.hpp"

namespace polygauss {

// (1/denominator) * numerator inside the fraction field.  Constructible only
// over rings flagged as domains.
struct FractionalIdeal {
    Polynomial denominator;  // nonzero base-ring element
    IdealHandle numerator;
};

// Equality under cross-multiplication: d' * J == d * J'.
bool fractional_equal(const FractionalIdeal& a, const FractionalIdeal& b);

// (R : I) represented as (d, (d : I)) for the first nonzero generator d.
FractionalIdeal fractional_inverse(const IdealHandle& ideal);

// One summand of the certifying identity d = sum cofactor * generator.
struct CofactorTerm {
    Polynomial cofactor;
    Polynomial generator;
};

struct InvertibilityResult {
    bool invertible = false;
    FractionalIdeal inverse;
    IdealHandle product;       // I * numerator(inverse)
    IdealHandle principal_d;   // (d)
    // When invertible: cofactors expressing d over the product's preimage
    // generators (defining generators included); the identity re-verifies by
    // exact polynomial arithmetic.
    std::vector<CofactorTerm> certificate;
};

InvertibilityResult is_invertible(const IdealHandle& ideal);

// A rational maximal ideal: ring/M must be the base field (colength 1).
class LocalityWitness {
  public:
    explicit LocalityWitness(IdealHandle m);
    const IdealHandle& ideal() const { return m_; }

  private:
    IdealHandle m_;
};

// nu(I at M) = colength(M*I) - colength(I), i.e. dim_k I/MI (Nakayama).
// Requires I within M and finite colengths.
std::uint64_t min_generators_local(const IdealHandle& ideal, const LocalityWitness& at);

// Cross-check oracle: greedily drop generators that stay in the span of the
// others modulo M*I; the survivors form a basis of I/MI.
std::uint64_t min_generators_drop_oracle(const IdealHandle& ideal, const LocalityWitness& at);

}  // namespace polygauss

#endif
