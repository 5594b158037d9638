#include "polygauss/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace polygauss {

GroebnerBudget GroebnerBudget::from_environment() {
    GroebnerBudget b;
    if (const char* s = std::getenv("POLYGAUSS_GB_MAX_GENERATORS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_generators = v;
    }
    if (const char* s = std::getenv("POLYGAUSS_GB_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_total_terms = v;
    }
    return b;
}

namespace {

// Division by a fixed basis.  When `quotients` is non-null it receives one
// cofactor per basis element so that f = sum q_i b_i + remainder.
Polynomial divide(const Polynomial& f, const std::vector<Polynomial>& basis,
                  std::vector<Polynomial>* quotients) {
    const ContextPtr& ctx = f.context();
    if (quotients) quotients->assign(basis.size(), Polynomial::zero(ctx));
    Polynomial rem = Polynomial::zero(ctx);
    Polynomial cur = f;
    while (!cur.is_zero()) {
        const Term& lt = cur.leading_term();
        bool reduced_step = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Polynomial& g = basis[i];
            if (g.is_zero()) continue;
            if (!g.leading_monomial().divides(lt.m)) continue;
            Monomial q = lt.m.divided_by(g.leading_monomial());
            Coeff qc = lt.c * g.leading_coeff().inverse();
            cur = cur - g.times_monomial(q, qc);
            if (quotients) {
                (*quotients)[i] =
                    (*quotients)[i] + Polynomial::one(ctx).times_monomial(q, qc);
            }
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            // move the leading term to the remainder
            Polynomial lead = Polynomial::from_terms(ctx, {lt});
            rem = rem + lead;
            cur = cur - lead;
        }
    }
    return rem;
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
    Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
    Monomial ma = l.divided_by(a.leading_monomial());
    Monomial mb = l.divided_by(b.leading_monomial());
    return a.times_monomial(ma, a.leading_coeff().inverse()) -
           b.times_monomial(mb, b.leading_coeff().inverse());
}

struct Pair {
    std::size_t i, j;
    std::uint64_t lcm_degree;
};

std::size_t total_terms(const std::vector<Polynomial>& v) {
    std::size_t n = 0;
    for (const auto& p : v) n += p.terms().size();
    return n;
}

void check_budget(const std::vector<Polynomial>& basis, const GroebnerBudget& budget) {
    if (basis.size() > budget.max_generators)
        throw ResourceLimitError("Groebner basis exceeded generator budget (" +
                                 std::to_string(budget.max_generators) + ")");
    if (total_terms(basis) > budget.max_total_terms)
        throw ResourceLimitError("Groebner basis exceeded term budget (" +
                                 std::to_string(budget.max_total_terms) + ")");
}

// Core Buchberger loop.  When `track` is non-null, (*track)[k] holds the
// representation of basis[k] over the original generator list.
std::vector<Polynomial> buchberger_core(const ContextPtr& ctx,
                                        const std::vector<Polynomial>& input,
                                        const GroebnerBudget& budget,
                                        std::vector<std::vector<Polynomial>>* track) {
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> reps;

    auto push_elem = [&](const Polynomial& p, std::vector<Polynomial>&& rep) {
        basis.push_back(p);
        if (track) reps.push_back(std::move(rep));
        check_budget(basis, budget);
    };

    for (std::size_t k = 0; k < input.size(); ++k) {
        if (input[k].is_zero()) continue;
        std::vector<Polynomial> q;
        Polynomial r = divide(input[k], basis, track ? &q : nullptr);
        if (r.is_zero()) continue;
        std::vector<Polynomial> rep;
        if (track) {
            rep.assign(input.size(), Polynomial::zero(ctx));
            rep[k] = Polynomial::one(ctx);
            for (std::size_t t = 0; t < basis.size(); ++t)
                for (std::size_t g = 0; g < input.size(); ++g)
                    rep[g] = rep[g] - q[t] * reps[t][g];
        }
        push_elem(r, std::move(rep));
    }

    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            // first Buchberger criterion: coprime leading monomials
            if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
            Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            pairs.push_back({i, j, l.total_degree()});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        // normal strategy: minimal lcm degree first, deterministic tie-break
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair& a = pairs[k];
            const Pair& b = pairs[best];
            if (a.lcm_degree < b.lcm_degree ||
                (a.lcm_degree == b.lcm_degree && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        Polynomial s = spoly(basis[p.i], basis[p.j]);
        std::vector<Polynomial> q;
        Polynomial r = divide(s, basis, track ? &q : nullptr);
        if (r.is_zero()) continue;

        std::vector<Polynomial> rep;
        if (track) {
            // representation of the S-polynomial over the originals
            Monomial l = lcm(basis[p.i].leading_monomial(), basis[p.j].leading_monomial());
            Monomial mi = l.divided_by(basis[p.i].leading_monomial());
            Monomial mj = l.divided_by(basis[p.j].leading_monomial());
            Coeff ci = basis[p.i].leading_coeff().inverse();
            Coeff cj = basis[p.j].leading_coeff().inverse();
            rep.assign(input.size(), Polynomial::zero(ctx));
            for (std::size_t g = 0; g < input.size(); ++g) {
                rep[g] = reps[p.i][g].times_monomial(mi, ci) -
                         reps[p.j][g].times_monomial(mj, cj);
                for (std::size_t t = 0; t < basis.size(); ++t)
                    rep[g] = rep[g] - q[t] * reps[t][g];
            }
        }
        push_elem(r, std::move(rep));
        add_pairs_for(basis.size() - 1);
    }

    if (track) *track = std::move(reps);
    return basis;
}

// Minimalize + tail-reduce + sort: the unique reduced basis.
std::vector<Polynomial> reduce_basis(const ContextPtr& ctx, std::vector<Polynomial> basis) {
    // drop elements whose leading monomial is divisible by another's
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
                // on equal leading monomials keep the earlier element
                if (basis[i].leading_monomial() == basis[j].leading_monomial() && i < j)
                    continue;
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i].monic());

    std::vector<Polynomial> reduced(minimal.size(), Polynomial::zero(ctx));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = divide(minimal[i], others, nullptr).monic();
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ctx->order().greater(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

struct Cache {
    std::shared_mutex mutex;
    std::unordered_map<std::string, GroebnerPtr> map;
};

Cache& cache() {
    static Cache c;
    return c;
}

std::string cache_key(const ContextPtr& ctx, const std::vector<Polynomial>& gens) {
    std::vector<std::string> texts;
    texts.reserve(gens.size());
    for (const auto& g : gens) texts.push_back(g.to_string());
    std::sort(texts.begin(), texts.end());
    texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
    std::ostringstream os;
    os << ctx->signature() << '|';
    for (const auto& t : texts) os << t << ';';
    return os.str();
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    for (const auto& g : basis)
        if (!g.is_zero()) check_same_context(f, g);
    return divide(f, basis, nullptr);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.gens);
}

GroebnerBasis buchberger_uncached(const ContextPtr& ctx, const std::vector<Polynomial>& gens,
                                  const GroebnerBudget& budget) {
    for (const auto& g : gens)
        if (g.context() != ctx && !g.context()->compatible(*ctx))
            throw InvalidArgumentError("generator from a different ring");
    GroebnerBasis gb;
    gb.ctx = ctx;
    gb.gens = reduce_basis(ctx, buchberger_core(ctx, gens, budget, nullptr));
    gb.reduced = true;
    return gb;
}

GroebnerPtr buchberger(const ContextPtr& ctx, const std::vector<Polynomial>& gens) {
    std::string key = cache_key(ctx, gens);
    {
        std::shared_lock lock(cache().mutex);
        auto it = cache().map.find(key);
        if (it != cache().map.end()) return it->second;
    }
    auto gb = std::make_shared<GroebnerBasis>(
        buchberger_uncached(ctx, gens, GroebnerBudget::from_environment()));
    {
        std::unique_lock lock(cache().mutex);
        auto [it, inserted] = cache().map.emplace(key, gb);
        return it->second;
    }
}

std::optional<std::vector<Polynomial>> ideal_cofactors(const Polynomial& f,
                                                       const std::vector<Polynomial>& gens) {
    const ContextPtr& ctx = f.context();
    std::vector<std::vector<Polynomial>> reps;
    std::vector<Polynomial> basis =
        buchberger_core(ctx, gens, GroebnerBudget::from_environment(), &reps);
    std::vector<Polynomial> q;
    Polynomial r = divide(f, basis, &q);
    if (!r.is_zero()) return std::nullopt;
    std::vector<Polynomial> cof(gens.size(), Polynomial::zero(ctx));
    for (std::size_t t = 0; t < basis.size(); ++t)
        for (std::size_t g = 0; g < gens.size(); ++g) cof[g] = cof[g] + q[t] * reps[t][g];
    return cof;
}

std::int64_t groebner_cache_size() {
    std::shared_lock lock(cache().mutex);
    return static_cast<std::int64_t>(cache().map.size());
}

void groebner_cache_clear() {
    std::unique_lock lock(cache().mutex);
    cache().map.clear();
}

}  // namespace polygauss
