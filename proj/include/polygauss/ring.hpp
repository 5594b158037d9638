#ifndef POLYGAUSS_RING_HPP
#define POLYGAUSS_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "polygauss/groebner.hpp"
#include "polygauss/polynomial.hpp"

namespace polygauss {

// Name of the reserved main indeterminate.
inline const std::string kMainVar = "X";

// A presented ring k[v_1..v_m]/J together with the polynomial extension in
// the reserved indeterminate X.  Content ideals live in the base context
// (the v_i only); polynomials f(X) live in the full context.  Quotients are
// handled by the preimage convention: every ideal computation adds the
// defining generators, and ring elements are kept in normal form modulo J.
class RingSpec {
  public:
    // Base context a caller should use to construct defining generators
    // before the ring exists.
    static ContextPtr base_context_for(const Field& field,
                                       const std::vector<std::string>& base_vars);

    static std::shared_ptr<const RingSpec> make(Field field,
                                                std::vector<std::string> base_vars,
                                                std::vector<Polynomial> defining_gens,
                                                bool claimed_domain);

    const Field& field() const { return field_; }
    const std::vector<std::string>& base_vars() const { return base_vars_; }
    bool claimed_domain() const { return claimed_domain_; }
    bool is_quotient() const { return !defining_gens_.empty(); }

    const ContextPtr& base_ctx() const { return base_ctx_; }
    const ContextPtr& full_ctx() const { return full_ctx_; }

    const std::vector<Polynomial>& defining_gens() const { return defining_gens_; }
    const std::vector<Polynomial>& defining_gens_full() const { return defining_gens_full_; }
    const GroebnerPtr& defining_gb() const { return defining_gb_; }

    // Canonical representative modulo J, in the full / base context.
    Polynomial reduce_full(const Polynomial& f) const;
    Polynomial reduce_base(const Polynomial& f) const;

    Polynomial lift_to_full(const Polynomial& base_poly) const;
    // Requires the polynomial to be X-free.
    Polynomial project_to_base(const Polynomial& full_poly) const;

    // Same presentation (field, variables, defining generators, domain flag).
    bool same(const RingSpec& o) const;

    // Ring with extra base variables appended (same defining ideal).
    std::shared_ptr<const RingSpec> extend_base(const std::vector<std::string>& names) const;
    // Transport of a full-context polynomial into an extension built by
    // extend_base.
    Polynomial lift_full_to(const Polynomial& f,
                            const std::shared_ptr<const RingSpec>& bigger) const;

    std::string to_string() const;

  private:
    RingSpec() = default;
    Field field_ = Field::rationals();
    std::vector<std::string> base_vars_;
    bool claimed_domain_ = false;
    ContextPtr base_ctx_;
    ContextPtr full_ctx_;
    std::vector<Polynomial> defining_gens_;       // base context, reduced basis of J
    std::vector<Polynomial> defining_gens_full_;  // the same, lifted
    GroebnerPtr defining_gb_;                     // base context
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_quotient(const std::vector<std::string>& vars, const Field& field,
                      const std::vector<Polynomial>& j_gens, bool claimed_domain = false);

void check_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace polygauss

#endif
