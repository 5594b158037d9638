#include "polygauss/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace polygauss {

namespace {

Polynomial rebind(const Polynomial& f, const ContextPtr& target) {
    std::vector<std::size_t> id(f.context()->nvars());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return remap(f, target, id);
}

// f / g when the division is exact in the free polynomial ring.
std::optional<Polynomial> try_exact_divide(const Polynomial& f, const Polynomial& g) {
    const ContextPtr& ctx = f.context();
    Polynomial q = Polynomial::zero(ctx);
    Polynomial rem = f;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!g.leading_monomial().divides(lt.m)) return std::nullopt;
        Monomial m = lt.m.divided_by(g.leading_monomial());
        Coeff c = lt.c * g.leading_coeff().inverse();
        q = q + Polynomial::one(ctx).times_monomial(m, c);
        rem = rem - g.times_monomial(m, c);
    }
    return q;
}

// Intersection of two ideals of the free ring `ctx` by tag-variable
// elimination: eliminate w from w*A + (1-w)*B under a block order with the
// tag dominating.
std::vector<Polynomial> ctx_intersect(const ContextPtr& ctx,
                                      const std::vector<Polynomial>& a,
                                      const std::vector<Polynomial>& b) {
    ContextPtr ext = ctx->extend_back({"#tag"}, /*elim_block_front=*/true);
    std::size_t tag = ext->nvars() - 1;
    std::vector<std::size_t> pad(ctx->nvars());
    for (std::size_t i = 0; i < pad.size(); ++i) pad[i] = i;

    Polynomial w = Polynomial::variable(ext, tag);
    Polynomial one_minus_w = Polynomial::one(ext) - w;
    std::vector<Polynomial> gens;
    for (const auto& p : a) gens.push_back(w * remap(p, ext, pad));
    for (const auto& p : b) gens.push_back(one_minus_w * remap(p, ext, pad));

    GroebnerPtr gb = buchberger(ext, gens);
    std::vector<Polynomial> out;
    for (const auto& g : gb->gens) {
        if (g.degree_in(tag) > 0) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Monomial m(ctx->nvars());
            for (std::size_t i = 0; i < ctx->nvars(); ++i) m.e[i] = t.m.e[i];
            terms.push_back({std::move(m), t.c});
        }
        out.push_back(Polynomial::from_terms(ctx, std::move(terms)));
    }
    return out;
}

// (A : g) in the free ring: (A intersect (g)) / g.
std::vector<Polynomial> ctx_colon_single(const ContextPtr& ctx,
                                         const std::vector<Polynomial>& a,
                                         const Polynomial& g) {
    std::vector<Polynomial> meet = ctx_intersect(ctx, a, {g});
    std::vector<Polynomial> out;
    for (const auto& m : meet) {
        auto q = try_exact_divide(m, g);
        if (!q)
            throw Error("internal: member of a principal ideal not divisible by its generator");
        out.push_back(*q);
    }
    return out;
}

}  // namespace

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        const ContextPtr& bc = ring_->base_ctx();
        if (g.context() != bc && !g.context()->compatible(*bc))
            throw InvalidArgumentError("ideal generator not in the base ring");
        Polynomial r = ring_->reduce_base(rebind(g, bc));
        if (r.is_zero()) continue;
        bool duplicate = false;
        for (const auto& have : gens_)
            if (have == r) {
                duplicate = true;
                break;
            }
        if (!duplicate) gens_.push_back(std::move(r));
    }
}

IdealHandle IdealHandle::zero(RingPtr ring) { return IdealHandle(std::move(ring), {}); }

IdealHandle IdealHandle::unit(RingPtr ring) {
    Polynomial one = Polynomial::one(ring->base_ctx());
    return IdealHandle(std::move(ring), {one});
}

IdealHandle IdealHandle::principal(RingPtr ring, const Polynomial& g) {
    return IdealHandle(std::move(ring), {g});
}

std::vector<Polynomial> IdealHandle::all_generators() const {
    std::vector<Polynomial> out = gens_;
    for (const auto& j : ring_->defining_gens()) out.push_back(j);
    return out;
}

GroebnerPtr IdealHandle::gb() const { return buchberger(ring_->base_ctx(), all_generators()); }

IdealHandle IdealHandle::minimalized() const {
    IdealHandle reduced(ring_, gb()->gens);  // constructor drops members of J
    std::vector<Polynomial> gens = reduced.generators();
    // greedily drop generators the others already span
    bool changed = true;
    while (changed && gens.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (is_member(gens[i], IdealHandle(ring_, others))) {
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return IdealHandle(ring_, gens);
}

std::string IdealHandle::to_string() const {
    if (gens_.empty()) return "(0)";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].to_string();
    }
    os << ')';
    return os.str();
}

bool is_member(const Polynomial& f, const IdealHandle& ideal) {
    const ContextPtr& bc = ideal.ring()->base_ctx();
    if (f.context() != bc && !f.context()->compatible(*bc))
        throw InvalidArgumentError("element not in the ideal's ring");
    return normal_form(rebind(f, bc), *ideal.gb()).is_zero();
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring(), b.ring());
    const auto& ga = a.gb()->gens;
    const auto& gc = b.gb()->gens;
    if (ga.size() != gc.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gc[i]) return false;
    return true;
}

bool ideal_contains(const IdealHandle& outer, const IdealHandle& inner) {
    check_same_ring(outer.ring(), inner.ring());
    for (const auto& g : inner.generators())
        if (!is_member(g, outer)) return false;
    return true;
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(rebind(g, a.ring()->base_ctx()));
    return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens;
    for (const auto& p : a.generators())
        for (const auto& q : b.generators())
            gens.push_back(p * rebind(q, a.ring()->base_ctx()));
    return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& a, std::uint32_t n) {
    if (n == 0) return IdealHandle::unit(a.ring());
    IdealHandle result = IdealHandle::unit(a.ring());
    IdealHandle square = a;
    bool result_is_unit = true;
    while (n > 0) {
        if (n & 1) {
            result = result_is_unit ? square : ideal_product(result, square).minimalized();
            result_is_unit = false;
        }
        n >>= 1;
        if (n > 0) square = ideal_product(square, square).minimalized();
    }
    return result;
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring(), b.ring());
    const ContextPtr& bc = a.ring()->base_ctx();
    std::vector<Polynomial> bg;
    for (const auto& g : b.all_generators()) bg.push_back(rebind(g, bc));
    std::vector<Polynomial> meet = ctx_intersect(bc, a.all_generators(), bg);
    return IdealHandle(a.ring(), std::move(meet));
}

IdealHandle colon(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw InvalidArgumentError("colon by the zero ideal");
    const ContextPtr& bc = a.ring()->base_ctx();
    std::vector<Polynomial> pre = a.all_generators();
    std::optional<std::vector<Polynomial>> acc;
    for (const auto& g : b.generators()) {
        std::vector<Polynomial> part = ctx_colon_single(bc, pre, rebind(g, bc));
        if (!acc)
            acc = std::move(part);
        else
            acc = ctx_intersect(bc, *acc, part);
    }
    return IdealHandle(a.ring(), std::move(*acc));
}

bool radical_member(const Polynomial& f, const IdealHandle& ideal) {
    const ContextPtr& bc = ideal.ring()->base_ctx();
    ContextPtr ext = bc->extend_back({"#rab"}, /*elim_block_front=*/false);
    std::size_t yv = ext->nvars() - 1;
    std::vector<std::size_t> pad(bc->nvars());
    for (std::size_t i = 0; i < pad.size(); ++i) pad[i] = i;

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.all_generators()) gens.push_back(remap(g, ext, pad));
    Polynomial y = Polynomial::variable(ext, yv);
    gens.push_back(Polynomial::one(ext) - y * remap(rebind(f, bc), ext, pad));
    return buchberger(ext, gens)->is_unit_ideal();
}

std::optional<std::uint64_t> colength(const IdealHandle& ideal) {
    GroebnerPtr gb = ideal.gb();
    const ContextPtr& bc = ideal.ring()->base_ctx();
    std::size_t n = bc->nvars();
    if (gb->is_unit_ideal()) return 0;

    std::vector<Monomial> lts;
    lts.reserve(gb->gens.size());
    for (const auto& g : gb->gens) lts.push_back(g.leading_monomial());

    // finite iff every variable carries a pure power among the leading terms
    std::vector<std::uint64_t> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& m : lts) {
            bool pure = m.e[v] > 0;
            for (std::size_t w = 0; pure && w < n; ++w)
                if (w != v && m.e[w] > 0) pure = false;
            if (pure && (bound[v] == 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
        }
        if (bound[v] == 0) return std::nullopt;
    }

    std::uint64_t box = 1;
    for (std::size_t v = 0; v < n; ++v) {
        box *= bound[v];
        if (box > 10000000)
            throw ResourceLimitError("colength enumeration box exceeds 10^7 monomials");
    }

    // walk the exponent box and count monomials outside the leading-term ideal
    std::uint64_t count = 0;
    Monomial m(n);
    std::uint64_t total = box;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t v = 0; v < n; ++v) {
            m.e[v] = static_cast<std::uint32_t>(r % bound[v]);
            r /= bound[v];
        }
        bool divisible = false;
        for (const auto& lt : lts) {
            if (lt.divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) ++count;
    }
    return count;
}

}  // namespace polygauss
