#ifndef POLYGAUSS_IDEAL_HPP
#define POLYGAUSS_IDEAL_HPP

// Ideals of a presented ring and the Groebner-backed decision procedures:
// membership, equality, intersection, colon, radical membership, colength.

#include <optional>
#include <vector>

#include "polygauss/ring.hpp"

namespace polygauss {

// An ideal of the quotient ring, held as a preimage: the effective generator
// list is the stored generators plus the defining ideal.  Stored generators
// are kept in normal form modulo J with zero images dropped.
class IdealHandle {
  public:
    IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

    static IdealHandle zero(RingPtr ring);
    static IdealHandle unit(RingPtr ring);
    static IdealHandle principal(RingPtr ring, const Polynomial& g);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    std::vector<Polynomial> all_generators() const;  // generators + defining ideal

    // Reduced Groebner basis of the preimage in the base context (cached).
    GroebnerPtr gb() const;

    // Zero ideal of the quotient ring.
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gb()->is_unit_ideal(); }

    // Equivalent handle whose generator list is the reduced basis, with
    // members of the defining ideal dropped.
    IdealHandle minimalized() const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

bool is_member(const Polynomial& f, const IdealHandle& ideal);
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);
bool ideal_contains(const IdealHandle& outer, const IdealHandle& inner);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_power(const IdealHandle& a, std::uint32_t n);

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);
IdealHandle colon(const IdealHandle& a, const IdealHandle& b);

// Rabinowitsch: f in sqrt(I) iff 1 in I + (1 - y f).
bool radical_member(const Polynomial& f, const IdealHandle& ideal);

// dim_k of ring/I as counted standard monomials; nullopt when infinite.
std::optional<std::uint64_t> colength(const IdealHandle& ideal);

}  // namespace polygauss

#endif
