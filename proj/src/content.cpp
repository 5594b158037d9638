#include "polygauss/content.hpp"

#include <algorithm>
#include <numeric>

namespace polygauss {

IdealHandle content(const RingPtr& ring, const Polynomial& f) {
    Polynomial red = ring->reduce_full(f);
    MainVarView view = main_var_view(red);
    std::vector<Polynomial> gens;
    for (const auto& c : view.coeffs)
        if (!c.is_zero()) gens.push_back(ring->project_to_base(c));
    return IdealHandle(ring, std::move(gens));
}

ContentDefect content_product_defect(const RingPtr& ring, const Polynomial& f,
                                     const Polynomial& g) {
    check_same_context(f, g);
    IdealHandle cf = content(ring, f);
    IdealHandle cg = content(ring, g);
    IdealHandle prod = ideal_product(cf, cg);
    IdealHandle cfg = content(ring, f * g);
    for (const auto& gen : cfg.generators())
        if (!is_member(gen, prod))
            throw Error("engine defect: c(fg) not contained in c(f)c(g)");
    ContentDefect report{false, prod, cfg, std::nullopt};
    if (ideal_equal(prod, cfg)) return report;
    report.proper = true;
    for (const auto& gen : prod.generators()) {
        if (!is_member(gen, cfg)) {
            report.witness = gen;
            break;
        }
    }
    if (!report.witness)
        throw Error("engine defect: proper containment without a generator witness");
    return report;
}

const char* to_string(GaussianStatus s) {
    switch (s) {
        case GaussianStatus::Certified: return "gaussian-certified";
        case GaussianStatus::NonGaussian: return "non-gaussian";
        case GaussianStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(GaussianMethod m) {
    switch (m) {
        case GaussianMethod::GenericCoefficients: return "generic-coefficients";
        case GaussianMethod::Invertibility: return "invertibility";
        case GaussianMethod::PrincipalContent: return "principal-content";
    }
    return "?";
}

namespace {

void require_nonzero(const RingPtr& ring, const Polynomial& f, const char* what) {
    if (ring->reduce_full(f).is_zero())
        throw InvalidArgumentError(std::string(what) + " requires a nonzero polynomial");
}

// Build sum c_i X^i from base-context coefficients.
Polynomial from_coeff_list(const RingPtr& ring, const std::vector<Polynomial>& coeffs) {
    const ContextPtr& fc = ring->full_ctx();
    Polynomial sum = Polynomial::zero(fc);
    std::size_t xv = fc->main_var();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Monomial xi(fc->nvars());
        xi.e[xv] = static_cast<std::uint32_t>(i);
        sum = sum + ring->lift_to_full(coeffs[i]).times_monomial(xi, Coeff::one(fc->field()));
    }
    return sum;
}

// Specializing witness search: coefficient permutations of f first, then
// tuples over a small pool (coefficients of f, base variables, 0, 1).
std::optional<GaussianWitness> witness_search(const RingPtr& ring, const Polynomial& f,
                                              std::uint32_t d) {
    Polynomial fr = ring->reduce_full(f);
    MainVarView view = main_var_view(fr);

    std::size_t n1 = view.coeffs.size();
    if (n1 > 0) {
        std::vector<std::size_t> perm(n1);
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t tried = 0;
        do {
            Polynomial g = permute_coefficients(fr, perm);
            g = ring->reduce_full(g);
            if (g.is_zero()) continue;
            ContentDefect defect = content_product_defect(ring, fr, g);
            if (defect.proper) return GaussianWitness{g, *defect.witness};
        } while (++tried < 720 && std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<Polynomial> pool;
    auto add_pool = [&](const Polynomial& p) {
        for (const auto& q : pool)
            if (q == p) return;
        pool.push_back(p);
    };
    add_pool(Polynomial::zero(ring->base_ctx()));
    add_pool(Polynomial::one(ring->base_ctx()));
    for (const auto& c : view.coeffs)
        if (!c.is_zero()) add_pool(ring->project_to_base(c));
    for (std::size_t v = 0; v < ring->base_ctx()->nvars(); ++v)
        add_pool(ring->reduce_base(Polynomial::variable(ring->base_ctx(), v)));

    std::size_t width = d + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < width; ++i) {
        total *= pool.size();
        if (total > 2000) {
            total = 2000;
            break;
        }
    }
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t r = idx;
        std::vector<Polynomial> coeffs;
        coeffs.reserve(width);
        for (std::size_t i = 0; i < width; ++i) {
            coeffs.push_back(pool[r % pool.size()]);
            r /= pool.size();
        }
        Polynomial g = ring->reduce_full(from_coeff_list(ring, coeffs));
        if (g.is_zero()) continue;
        ContentDefect defect = content_product_defect(ring, fr, g);
        if (defect.proper) return GaussianWitness{g, *defect.witness};
    }
    return std::nullopt;
}

std::vector<std::string> fresh_generic_names(const RingPtr& ring, std::uint32_t d) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i <= d; ++i) {
        std::string cand = "u" + std::to_string(i);
        while (std::find(ring->base_vars().begin(), ring->base_vars().end(), cand) !=
                   ring->base_vars().end() ||
               cand == kMainVar ||
               std::find(names.begin(), names.end(), cand) != names.end())
            cand = "g" + cand;
        names.push_back(cand);
    }
    return names;
}

}  // namespace

GaussianVerdict gaussian_generic(const RingPtr& ring, const Polynomial& f, std::uint32_t d) {
    require_nonzero(ring, f, "gaussian_generic");
    std::vector<std::string> names = fresh_generic_names(ring, d);
    RingPtr ext = ring->extend_base(names);

    Polynomial lifted = ring->lift_full_to(ring->reduce_full(f), ext);
    std::vector<Polynomial> ucoeffs;
    for (const auto& n : names) {
        std::size_t idx = *ext->base_ctx()->var_index(n);
        ucoeffs.push_back(Polynomial::variable(ext->base_ctx(), idx));
    }
    Polynomial generic = from_coeff_list(ext, ucoeffs);

    IdealHandle lhs = content(ext, lifted * generic);
    IdealHandle rhs = ideal_product(content(ext, lifted), content(ext, generic));

    GaussianVerdict verdict;
    verdict.method = GaussianMethod::GenericCoefficients;
    verdict.degree_tested = d;
    if (ideal_equal(lhs, rhs)) {
        verdict.status = GaussianStatus::Certified;
        verdict.note = "multiplicative against a generic cofactor of degree " +
                       std::to_string(d) + " over every ring extension";
        return verdict;
    }
    if (auto w = witness_search(ring, f, d)) {
        verdict.status = GaussianStatus::NonGaussian;
        verdict.witness = std::move(w);
        verdict.note = "generic equality fails; concrete witness found";
        return verdict;
    }
    verdict.status = GaussianStatus::Inconclusive;
    verdict.note = "generic equality fails at degree " + std::to_string(d) +
                   " but no concrete witness exists in the search set";
    return verdict;
}

GaussianVerdict gaussian_status_domain(const RingPtr& ring, const Polynomial& f) {
    if (!ring->claimed_domain())
        throw UnsupportedError(
            "gaussian_status_domain requires a ring flagged as a domain");
    require_nonzero(ring, f, "gaussian_status_domain");

    IdealHandle c = content(ring, f);
    InvertibilityResult inv = is_invertible(c);
    GaussianVerdict verdict;
    verdict.method = GaussianMethod::Invertibility;
    verdict.degree_tested = static_cast<std::uint32_t>(ring->reduce_full(f).main_degree());
    if (inv.invertible) {
        verdict.status = GaussianStatus::Certified;
        verdict.note = "content " + c.minimalized().to_string() + " is invertible";
        return verdict;
    }
    verdict.status = GaussianStatus::NonGaussian;
    verdict.note = "content " + c.minimalized().to_string() + " is not invertible";
    verdict.witness = witness_search(ring, f, verdict.degree_tested);
    return verdict;
}

std::optional<Polynomial> principal_generator(const IdealHandle& ideal) {
    std::vector<Polynomial> candidates = ideal.generators();
    for (const auto& g : ideal.gb()->gens) candidates.push_back(g);
    for (const auto& g : candidates) {
        Polynomial r = ideal.ring()->reduce_base(g);
        if (r.is_zero()) continue;
        if (ideal_equal(ideal, IdealHandle::principal(ideal.ring(), r))) return r;
    }
    return std::nullopt;
}

GaussianVerdict gaussian_principal_content(const RingPtr& ring, const Polynomial& f) {
    require_nonzero(ring, f, "gaussian_principal_content");
    IdealHandle c = content(ring, f);
    GaussianVerdict verdict;
    verdict.method = GaussianMethod::PrincipalContent;
    verdict.degree_tested = static_cast<std::uint32_t>(ring->reduce_full(f).main_degree());
    if (auto g = principal_generator(c)) {
        verdict.status = GaussianStatus::Certified;
        verdict.note = "content is principal, generated by " + g->to_string();
    } else {
        verdict.status = GaussianStatus::Inconclusive;
        verdict.note = "content is not principal (locally principal not excluded)";
    }
    return verdict;
}

DedekindMertensReport dedekind_mertens_check(const RingPtr& ring, const Polynomial& f,
                                             const Polynomial& g) {
    require_nonzero(ring, f, "dedekind_mertens_check");
    require_nonzero(ring, g, "dedekind_mertens_check");
    Polynomial fr = ring->reduce_full(f);
    Polynomial gr = ring->reduce_full(g);
    std::uint32_t m = static_cast<std::uint32_t>(gr.main_degree());

    IdealHandle cf = content(ring, fr);
    IdealHandle cg = content(ring, gr);
    IdealHandle cfg = content(ring, fr * gr);

    DedekindMertensReport report;
    report.exponent = m;
    report.exponent_identity =
        ideal_equal(ideal_product(ideal_power(cf, m + 1), cg),
                    ideal_product(ideal_power(cf, m), cfg));

    bool radical = true;
    IdealHandle prod = ideal_product(cf, cg);
    for (const auto& gen : prod.generators())
        if (!radical_member(gen, cfg)) radical = false;
    for (const auto& gen : cfg.generators())
        if (!radical_member(gen, prod)) radical = false;
    report.radical_identity = radical;
    return report;
}

bool power_substitution_check(const RingPtr& ring, const Polynomial& f, std::uint32_t n,
                              const std::vector<Polynomial>& samples) {
    if (n == 0) throw InvalidArgumentError("power_substitution_check requires n >= 1");
    Polynomial fr = ring->reduce_full(f);
    Polynomial fn = substitute_power(fr, n);
    for (const auto& g : samples) {
        Polynomial gr = ring->reduce_full(g);
        Polynomial gn = substitute_power(gr, n);
        if (!ideal_equal(content(ring, fn * gn), content(ring, fr * gr))) return false;
    }
    if (ring->claimed_domain() && !fr.is_zero()) {
        GaussianVerdict v = gaussian_status_domain(ring, fr);
        if (v.status == GaussianStatus::Certified) {
            IdealHandle cfn = content(ring, fn);
            for (const auto& g : samples) {
                Polynomial gr = ring->reduce_full(g);
                if (gr.is_zero()) continue;
                if (!ideal_equal(content(ring, fn * gr),
                                 ideal_product(cfn, content(ring, gr))))
                    return false;
            }
        }
    }
    return true;
}

NuSequence nu_sequence(const RingPtr& ring, const Polynomial& f, const LocalityWitness& at,
                       std::uint32_t mmax) {
    require_nonzero(ring, f, "nu_sequence");
    if (mmax > 10) throw InvalidArgumentError("mmax capped at 10");
    Polynomial fr = ring->reduce_full(f);

    NuSequence seq{mmax,
                   content(ring, fr),
                   static_cast<std::uint64_t>(fr.main_degree()) + 1,
                   {},
                   {},
                   {},
                   {},
                   {},
                   std::nullopt};

    const ContextPtr& fc = ring->full_ctx();
    Polynomial x = Polynomial::variable(fc, fc->main_var());

    Polynomial h = fr;
    for (std::uint32_t m = 0; m <= mmax; ++m) {
        IdealHandle power = ideal_power(seq.content_ideal, 1u << m);
        seq.nu.push_back(min_generators_local(power, at));
        seq.track.push_back(h);
        seq.track_matches_power.push_back(ideal_equal(content(ring, h), power));
        seq.degree_preserved.push_back(h.main_degree() == fr.main_degree());
        if (seq.nu.back() > seq.bound && !seq.bound_violated_at) seq.bound_violated_at = m;
        if (m == mmax) break;

        auto [g0, g1] = even_odd_split(h);
        Polynomial next = ring->reduce_full(g0 * g0 - x * (g1 * g1));
        // h(X) h(-X) has even main degrees only and pulls back through
        // X^2 -> X to the next track polynomial, exactly
        Polynomial mirror = ring->reduce_full(h * negate_main_var(h));
        auto [pulled, odd_part] = even_odd_split(mirror);
        bool step_ok = odd_part.is_zero() && ring->reduce_full(pulled) == next &&
                       ideal_equal(content(ring, next), content(ring, mirror));
        seq.step_identity_ok.push_back(step_ok);
        h = next;
    }
    return seq;
}

}  // namespace polygauss
