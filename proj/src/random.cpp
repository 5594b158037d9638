#include "polygauss/random.hpp"

namespace polygauss {

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, const RandomPolyParams& params) {
    const ContextPtr& fc = ring->full_ctx();
    const Field& field = fc->field();
    std::size_t xv = fc->main_var();

    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Term> terms;
        std::uint32_t nterms = 1 + static_cast<std::uint32_t>(rng.below(params.max_terms));
        for (std::uint32_t t = 0; t < nterms; ++t) {
            Monomial m(fc->nvars());
            m.e[xv] = static_cast<std::uint32_t>(rng.below(params.max_main_degree + 1));
            for (std::size_t v = 0; v < fc->nvars(); ++v) {
                if (v == xv) continue;
                m.e[v] = static_cast<std::uint32_t>(rng.below(params.max_base_exponent + 1));
            }
            Coeff c = Coeff::zero(field);
            if (field.kind() == Field::Kind::Rationals) {
                std::int64_t span = params.coeff_span;
                std::int64_t k = static_cast<std::int64_t>(rng.below(2 * span)) - span;
                if (k >= 0) ++k;  // skip zero
                c = Coeff::from_integer(field, mpz_class(static_cast<long>(k)));
            } else {
                std::uint64_t k = 1 + rng.below(field.modulus() - 1);
                c = Coeff::from_integer(field, mpz_class(static_cast<unsigned long>(k)));
            }
            terms.push_back({std::move(m), std::move(c)});
        }
        Polynomial p = ring->reduce_full(Polynomial::from_terms(fc, std::move(terms)));
        if (!p.is_zero()) return p;
    }
    return Polynomial::one(fc);
}

}  // namespace polygauss
