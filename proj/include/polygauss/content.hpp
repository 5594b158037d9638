#ifndef POLYGAUSS_CONTENT_HPP
#define POLYGAUSS_CONTENT_HPP

// Content ideals, the Gaussian property and its decision procedures, the
// Dedekind-Mertens exponent identity, and the nu-sequence of content powers.

#include <optional>

#include "polygauss/fractional.hpp"
#include "polygauss/ideal.hpp"

namespace polygauss {

// Ideal of the base ring generated by the X-coefficients of f.  The zero
// polynomial yields the zero ideal.
IdealHandle content(const RingPtr& ring, const Polynomial& f);

struct ContentDefect {
    bool proper = false;             // c(fg) strictly below c(f)c(g)
    IdealHandle product;             // c(f)c(g)
    IdealHandle content_of_product;  // c(fg)
    std::optional<Polynomial> witness;  // generator of the gap when proper
};

// Checks c(fg) within c(f)c(g) (always; a violation is an engine defect),
// then reports equality or a witness generator of the gap.
ContentDefect content_product_defect(const RingPtr& ring, const Polynomial& f,
                                     const Polynomial& g);

enum class GaussianStatus { Certified, NonGaussian, Inconclusive };
enum class GaussianMethod { GenericCoefficients, Invertibility, PrincipalContent };

struct GaussianWitness {
    Polynomial g;        // concrete cofactor polynomial
    Polynomial element;  // in c(f)c(g) but not in c(fg)
};

struct GaussianVerdict {
    GaussianStatus status = GaussianStatus::Inconclusive;
    GaussianMethod method = GaussianMethod::GenericCoefficients;
    std::uint32_t degree_tested = 0;
    std::optional<GaussianWitness> witness;
    std::string note;
};

const char* to_string(GaussianStatus s);
const char* to_string(GaussianMethod m);

// Multiplicativity against a generic degree-d polynomial with fresh
// indeterminate coefficients.  Certifies the Gaussian property over every
// ring extension for cofactors of degree <= d; on failure attempts to
// specialize the generic coefficients into a concrete witness.
GaussianVerdict gaussian_generic(const RingPtr& ring, const Polynomial& f, std::uint32_t d);

// Exact decision for claimed domains: Gaussian iff the content is invertible.
GaussianVerdict gaussian_status_domain(const RingPtr& ring, const Polynomial& f);

// First generator g with I = (g), if the ideal is principal.
std::optional<Polynomial> principal_generator(const IdealHandle& ideal);

// Certification valid over any ring: principal content implies Gaussian.
GaussianVerdict gaussian_principal_content(const RingPtr& ring, const Polynomial& f);

struct DedekindMertensReport {
    std::uint32_t exponent = 0;     // m = deg g
    bool exponent_identity = false; // c(f)^{m+1} c(g) == c(f)^m c(fg)
    bool radical_identity = false;  // sqrt(c(fg)) == sqrt(c(f)c(g))
    bool holds() const { return exponent_identity && radical_identity; }
};

DedekindMertensReport dedekind_mertens_check(const RingPtr& ring, const Polynomial& f,
                                             const Polynomial& g);

// Checks c(f(X^n) g(X^n)) = c(f g) for every sample, and multiplicativity of
// f(X^n) against the samples when f is certified Gaussian on a domain.
bool power_substitution_check(const RingPtr& ring, const Polynomial& f, std::uint32_t n,
                              const std::vector<Polynomial>& samples);

struct NuSequence {
    std::uint32_t mmax = 0;
    IdealHandle content_ideal;
    std::uint64_t bound = 0;  // deg f + 1
    std::vector<Polynomial> track;                 // h_0..h_mmax
    std::vector<std::uint64_t> nu;                 // nu(I^{2^m})
    std::vector<bool> step_identity_ok;            // c(h_{m+1}) == c(h_m h_m(-X) pulled back)
    std::vector<bool> track_matches_power;         // c(h_m) == I^{2^m}
    std::vector<bool> degree_preserved;            // deg h_m == deg f
    std::optional<std::uint32_t> bound_violated_at;

    bool bound_holds() const { return !bound_violated_at.has_value(); }
};

NuSequence nu_sequence(const RingPtr& ring, const Polynomial& f, const LocalityWitness& at,
                       std::uint32_t mmax);

}  // namespace polygauss

#endif
