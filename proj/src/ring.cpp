#include "polygauss/ring.hpp"

#include <sstream>

namespace polygauss {

namespace {
// rebind a compatible polynomial to this exact context object
Polynomial rebind(const Polynomial& f, const ContextPtr& target) {
    std::vector<std::size_t> id(f.context()->nvars());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return remap(f, target, id);
}
}  // namespace

ContextPtr RingSpec::base_context_for(const Field& field,
                                      const std::vector<std::string>& base_vars) {
    return PolyContext::make(field, base_vars, MonomialOrder::grevlex(base_vars.size()));
}

std::shared_ptr<const RingSpec> RingSpec::make(Field field,
                                               std::vector<std::string> base_vars,
                                               std::vector<Polynomial> defining_gens,
                                               bool claimed_domain) {
    for (const auto& v : base_vars)
        if (v == kMainVar)
            throw InvalidArgumentError("'" + kMainVar +
                                       "' is reserved for the main indeterminate");

    auto ring = std::shared_ptr<RingSpec>(new RingSpec());
    ring->field_ = field;
    ring->base_vars_ = base_vars;
    ring->claimed_domain_ = claimed_domain;
    ring->base_ctx_ = base_context_for(field, base_vars);

    std::vector<std::string> full_vars = base_vars;
    full_vars.push_back(kMainVar);
    ring->full_ctx_ = PolyContext::make(field, full_vars,
                                        MonomialOrder::grevlex(full_vars.size()),
                                        full_vars.size() - 1);

    std::vector<Polynomial> j;
    for (auto& g : defining_gens) {
        if (g.context() != ring->base_ctx_ && !g.context()->compatible(*ring->base_ctx_))
            throw InvalidArgumentError("defining generator not in the base ring");
        if (!g.is_zero()) j.push_back(rebind(g, ring->base_ctx_));
    }
    ring->defining_gb_ = buchberger(ring->base_ctx_, j);
    if (ring->defining_gb_->is_unit_ideal())
        throw TrivialRingError("defining ideal contains a unit; the quotient is the zero ring");
    // store the reduced basis itself: canonical and small
    ring->defining_gens_ = ring->defining_gb_->gens;

    std::vector<std::size_t> pad(ring->base_ctx_->nvars());
    for (std::size_t i = 0; i < pad.size(); ++i) pad[i] = i;
    for (const auto& g : ring->defining_gens_)
        ring->defining_gens_full_.push_back(remap(g, ring->full_ctx_, pad));
    return ring;
}

Polynomial RingSpec::reduce_full(const Polynomial& f) const {
    if (defining_gens_full_.empty()) return f;
    return normal_form(f, defining_gens_full_);
}

Polynomial RingSpec::reduce_base(const Polynomial& f) const {
    if (defining_gens_.empty()) return f;
    return normal_form(f, defining_gens_);
}

Polynomial RingSpec::lift_to_full(const Polynomial& base_poly) const {
    std::vector<std::size_t> pad(base_ctx_->nvars());
    for (std::size_t i = 0; i < pad.size(); ++i) pad[i] = i;
    return remap(base_poly, full_ctx_, pad);
}

Polynomial RingSpec::project_to_base(const Polynomial& full_poly) const {
    std::size_t xv = full_ctx_->main_var();
    if (full_poly.degree_in(xv) > 0)
        throw InvalidArgumentError("polynomial involves the main indeterminate " + kMainVar);
    std::vector<Term> out;
    for (const auto& t : full_poly.terms()) {
        Monomial m(base_ctx_->nvars());
        for (std::size_t i = 0; i < base_ctx_->nvars(); ++i) m.e[i] = t.m.e[i];
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(base_ctx_, std::move(out));
}

bool RingSpec::same(const RingSpec& o) const {
    if (field_ != o.field_ || base_vars_ != o.base_vars_ ||
        claimed_domain_ != o.claimed_domain_)
        return false;
    if (defining_gens_.size() != o.defining_gens_.size()) return false;
    for (std::size_t i = 0; i < defining_gens_.size(); ++i)
        if (defining_gens_[i].to_string() != o.defining_gens_[i].to_string()) return false;
    return true;
}

std::shared_ptr<const RingSpec> RingSpec::extend_base(
    const std::vector<std::string>& names) const {
    std::vector<std::string> vars = base_vars_;
    for (const auto& n : names) vars.push_back(n);
    auto bigger_base = base_context_for(field_, vars);
    std::vector<std::size_t> pad(base_ctx_->nvars());
    for (std::size_t i = 0; i < pad.size(); ++i) pad[i] = i;
    std::vector<Polynomial> j;
    for (const auto& g : defining_gens_) j.push_back(remap(g, bigger_base, pad));
    return make(field_, std::move(vars), std::move(j), claimed_domain_);
}

Polynomial RingSpec::lift_full_to(const Polynomial& f,
                                  const std::shared_ptr<const RingSpec>& bigger) const {
    std::vector<std::size_t> map(full_ctx_->nvars());
    for (std::size_t i = 0; i + 1 < map.size(); ++i) map[i] = i;
    map[full_ctx_->main_var()] = bigger->full_ctx()->main_var();
    return remap(f, bigger->full_ctx(), map);
}

std::string RingSpec::to_string() const {
    std::ostringstream os;
    os << field_.to_string() << '[';
    for (std::size_t i = 0; i < base_vars_.size(); ++i) {
        if (i) os << ',';
        os << base_vars_[i];
    }
    os << ']';
    if (is_quotient()) {
        os << "/(";
        for (std::size_t i = 0; i < defining_gens_.size(); ++i) {
            if (i) os << ", ";
            os << defining_gens_[i].to_string();
        }
        os << ')';
    }
    if (claimed_domain_) os << " domain";
    return os.str();
}

RingPtr make_quotient(const std::vector<std::string>& vars, const Field& field,
                      const std::vector<Polynomial>& j_gens, bool claimed_domain) {
    return RingSpec::make(field, vars, j_gens, claimed_domain);
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b) throw InvalidArgumentError("missing ring");
    if (a != b && !a->same(*b)) throw InvalidArgumentError("operands live in different rings");
}

}  // namespace polygauss
