#include "polygauss/fractional.hpp"

namespace polygauss {

bool fractional_equal(const FractionalIdeal& a, const FractionalIdeal& b) {
    check_same_ring(a.numerator.ring(), b.numerator.ring());
    const RingPtr& ring = a.numerator.ring();
    IdealHandle lhs = ideal_product(IdealHandle::principal(ring, b.denominator), a.numerator);
    IdealHandle rhs = ideal_product(IdealHandle::principal(ring, a.denominator), b.numerator);
    return ideal_equal(lhs, rhs);
}

namespace {

void require_domain(const IdealHandle& ideal, const char* what) {
    if (!ideal.ring()->claimed_domain())
        throw UnsupportedError(std::string(what) +
                               " requires a ring flagged as a domain ('domain' keyword)");
}

}  // namespace

FractionalIdeal fractional_inverse(const IdealHandle& ideal) {
    require_domain(ideal, "fractional_inverse");
    if (ideal.is_zero()) throw InvalidArgumentError("fractional inverse of the zero ideal");
    const Polynomial& d = ideal.generators().front();
    IdealHandle principal_d = IdealHandle::principal(ideal.ring(), d);
    return FractionalIdeal{d, colon(principal_d, ideal)};
}

InvertibilityResult is_invertible(const IdealHandle& ideal) {
    FractionalIdeal inv = fractional_inverse(ideal);
    InvertibilityResult res{false,
                            inv,
                            ideal_product(ideal, inv.numerator),
                            IdealHandle::principal(ideal.ring(), inv.denominator),
                            {}};
    res.invertible = ideal_equal(res.product, res.principal_d);
    if (res.invertible) {
        // express d over the preimage generators of the product
        const RingPtr& ring = ideal.ring();
        std::vector<Polynomial> gens = res.product.all_generators();
        auto cof = ideal_cofactors(ring->reduce_base(inv.denominator), gens);
        if (!cof)
            throw Error("internal: invertibility certificate lift failed");
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!(*cof)[i].is_zero()) res.certificate.push_back({(*cof)[i], gens[i]});
    }
    return res;
}

LocalityWitness::LocalityWitness(IdealHandle m) : m_(std::move(m)) {
    auto cl = colength(m_);
    if (!cl || *cl != 1)
        throw InvalidArgumentError(
            "locality witness must be a rational maximal ideal (colength 1), got " +
            m_.to_string());
}

std::uint64_t min_generators_local(const IdealHandle& ideal, const LocalityWitness& at) {
    check_same_ring(ideal.ring(), at.ideal().ring());
    if (!ideal_contains(at.ideal(), ideal))
        throw InvalidArgumentError("ideal is not contained in the witness maximal ideal");
    auto cl_i = colength(ideal);
    if (!cl_i)
        throw UnsupportedInputError(
            "colength(I) is infinite; nu needs zero-dimensional support at the witness");
    auto cl_mi = colength(ideal_product(at.ideal(), ideal));
    if (!cl_mi)
        throw UnsupportedInputError(
            "colength(M*I) is infinite; nu needs zero-dimensional support at the witness");
    return *cl_mi - *cl_i;
}

std::uint64_t min_generators_drop_oracle(const IdealHandle& ideal, const LocalityWitness& at) {
    check_same_ring(ideal.ring(), at.ideal().ring());
    if (!ideal_contains(at.ideal(), ideal))
        throw InvalidArgumentError("ideal is not contained in the witness maximal ideal");
    IdealHandle mi = ideal_product(at.ideal(), ideal);
    std::vector<Polynomial> gens = ideal.minimalized().generators();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            IdealHandle span = ideal_sum(IdealHandle(ideal.ring(), others), mi);
            if (is_member(gens[i], span)) {
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return gens.size();
}

}  // namespace polygauss
