#include "polygauss/verify.hpp"

#include <chrono>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polygauss/parse.hpp"
#include "polygauss/random.hpp"

namespace polygauss {

std::vector<bool> run_cases(std::size_t n, const std::function<bool(std::size_t)>& fn,
                            bool parallel) {
    // plain byte array: vector<bool> elements cannot be written concurrently
    std::vector<unsigned char> ok(n, 0);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            unsigned char r = 0;
            try {
                r = fn(static_cast<std::size_t>(i)) ? 1 : 0;
            } catch (...) {
                r = 0;
            }
            ok[static_cast<std::size_t>(i)] = r;
        }
        return std::vector<bool>(ok.begin(), ok.end());
#endif
    }
    for (std::size_t i = 0; i < n; ++i) {
        try {
            ok[i] = fn(i) ? 1 : 0;
        } catch (...) {
            ok[i] = 0;
        }
    }
    return std::vector<bool>(ok.begin(), ok.end());
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct SubCheck {
    std::string name;
    bool pass;
};

CheckResult finish(const std::string& name, std::vector<SubCheck> subs,
                   Clock::time_point start) {
    CheckResult r;
    r.name = name;
    r.pass = true;
    std::ostringstream os;
    for (const auto& s : subs) {
        if (!s.pass) r.pass = false;
        os << (s.pass ? "[ok] " : "[FAIL] ") << s.name << "; ";
    }
    r.detail = os.str();
    if (!r.detail.empty()) r.detail.resize(r.detail.size() - 2);
    r.ms = elapsed_ms(start);
    return r;
}

std::uint64_t case_seed(std::uint64_t sweep_seed, std::size_t i) {
    return sweep_seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) + 1));
}

bool witness_verifies(const RingPtr& ring, const Polynomial& f, const GaussianWitness& w) {
    IdealHandle prod = ideal_product(content(ring, f), content(ring, w.g));
    IdealHandle cfg = content(ring, f * w.g);
    return is_member(w.element, prod) && !is_member(w.element, cfg);
}

}  // namespace

CheckResult check_extension_defect(bool mutated_free_ring, bool parallel) {
    (void)parallel;
    auto start = Clock::now();
    std::vector<SubCheck> subs;

    // R[u,v] with R = k[s,t]/(s,t)^2 over k = GF(2)
    RingPtr ruv = parse_ring(mutated_free_ring
                                 ? "GF(2)[s,t,u,v]"
                                 : "GF(2)[s,t,u,v]/(s^2, s*t, t^2)");
    Polynomial f = parse_poly("s + t*X", ruv);
    Polynomial g = parse_poly("u + v*X", ruv);
    Polynomial sv = parse_poly_base("s*v", ruv);

    IdealHandle prod = ideal_product(content(ruv, f), content(ruv, g));
    IdealHandle cfg = content(ruv, f * g);
    subs.push_back({"sv in c(s+tX)c(u+vX)", is_member(sv, prod)});
    subs.push_back({"sv not in (su, tv, sv+tu)", !is_member(sv, cfg)});

    ContentDefect defect = content_product_defect(ruv, f, g);
    bool witness_ok = defect.proper && defect.witness &&
                      is_member(*defect.witness, prod) && !is_member(*defect.witness, cfg);
    subs.push_back({"defect proper with re-verified witness", witness_ok});

    // f stays multiplicative over R itself (every sample cofactor)
    RingPtr r = parse_ring(mutated_free_ring ? "GF(2)[s,t]" : "GF(2)[s,t]/(s^2, s*t, t^2)");
    Polynomial fr = parse_poly("s + t*X", r);
    bool over_r = true;
    for (const char* text : {"t + s*X", "s + t*X", "s", "t", "1 + X", "s + X", "t + t*X"}) {
        Polynomial gr = parse_poly(text, r);
        if (gr.is_zero()) continue;
        ContentDefect d = content_product_defect(r, fr, gr);
        if (d.proper) over_r = false;
    }
    subs.push_back({"s+tX multiplicative over R itself (samples)", over_r});

    return finish("extension-defect", std::move(subs), start);
}

CheckResult check_principal_square() {
    auto start = Clock::now();
    std::vector<SubCheck> subs;

    // presentation of k[s,t,s^2/t^2], char 2: s -> a, t -> b, s^2/t^2 -> c
    RingPtr ring = parse_ring("GF(2)[a,b,c]/(a^2 - b^2*c) domain");
    Polynomial f = parse_poly("a + b*X", ring);
    Polynomial f2 = f * f;

    IdealHandle cf2 = content(ring, f2);
    IdealHandle principal_b2 = IdealHandle::principal(ring, parse_poly_base("b^2", ring));
    subs.push_back({"c(f^2) = (b^2)", ideal_equal(cf2, principal_b2)});

    GaussianVerdict principal = gaussian_principal_content(ring, f2);
    subs.push_back({"f^2 certified via principal content",
                    principal.status == GaussianStatus::Certified});

    Polynomial ab = parse_poly_base("a*b", ring);
    IdealHandle cf_sq = ideal_power(content(ring, f), 2);
    subs.push_back({"ab in c(f)^2", is_member(ab, cf_sq)});
    subs.push_back({"ab not in c(f^2)", !is_member(ab, cf2)});

    return finish("principal-square", std::move(subs), start);
}

CheckResult check_reduced_ring_defect() {
    auto start = Clock::now();
    std::vector<SubCheck> subs;

    RingPtr free_ring = parse_ring("QQ[s,t]");
    IdealHandle ideal =
        IdealHandle(free_ring, parse_poly_list_base("s*t, s^2 + t^2", free_ring));
    Polynomial s2 = parse_poly_base("s^2", free_ring);
    subs.push_back({"s^2 not in (st, s^2+t^2) over QQ[s,t]", !is_member(s2, ideal)});

    RingPtr quot = parse_ring("QQ[s,t]/(s*t)");
    Polynomial f = parse_poly("s + t*X", quot);
    Polynomial g = parse_poly("t + s*X", quot);
    ContentDefect defect = content_product_defect(quot, f, g);
    bool witness_is_s2 = defect.proper && defect.witness &&
                         *defect.witness == parse_poly_base("s^2", quot);
    subs.push_back({"content defect in QQ[s,t]/(st) with witness s^2", witness_is_s2});

    return finish("reduced-ring-defect", std::move(subs), start);
}

CheckResult check_power_substitution(bool parallel) {
    auto start = Clock::now();
    std::vector<SubCheck> subs;

    std::vector<RingPtr> rings = {
        parse_ring("QQ[x,y]"),
        parse_ring("GF(2)[s,t]"),
        parse_ring("GF(2)[a,b,c]/(a^2 - b^2*c)"),
        parse_ring("QQ[s,t]/(s*t)"),
    };
    const std::size_t cases = 50;
    auto ok = run_cases(
        cases,
        [&](std::size_t i) {
            Rng rng(case_seed(0x70707070, i));
            const RingPtr& ring = rings[i % rings.size()];
            RandomPolyParams params{2, 2, 4, 3};
            Polynomial f = random_polynomial(rng, ring, params);
            Polynomial g = random_polynomial(rng, ring, params);
            std::uint32_t n = 1 + static_cast<std::uint32_t>(i % 3);
            Polynomial fn = substitute_power(f, n);
            Polynomial gn = substitute_power(g, n);
            return ideal_equal(content(ring, fn * gn), content(ring, f * g));
        },
        parallel);
    std::size_t passed = 0;
    for (bool b : ok) passed += b;
    subs.push_back({"c(f(X^n) g(X^n)) = c(fg) on " + std::to_string(cases) + " random cases (" +
                        std::to_string(passed) + " passed)",
                    passed == cases});

    return finish("power-substitution", std::move(subs), start);
}

CheckResult check_nu_bound() {
    auto start = Clock::now();
    std::vector<SubCheck> subs;

    struct Entry {
        const char* ring;
        const char* f;
        const char* at;
    };
    // claimed domains with invertible content and a zero-dimensional witness
    const Entry positive[] = {
        {"QQ[x] domain", "x + x*X", "x"},
        {"QQ[x] domain", "x + x^2*X", "x"},
        {"QQ[x] domain", "x^2 + x*X + x*X^2", "x"},
        {"QQ[x,y]/(x^2 + y^2 - 1) domain", "1 - x + y*X", "x - 1, y"},
    };
    for (const Entry& e : positive) {
        RingPtr ring = parse_ring(e.ring);
        Polynomial f = parse_poly(e.f, ring);
        LocalityWitness at(IdealHandle(ring, parse_poly_list_base(e.at, ring)));
        NuSequence seq = nu_sequence(ring, f, at, 3);
        bool track_ok = true;
        for (std::size_t m = 0; m < seq.track.size(); ++m)
            track_ok = track_ok && seq.track_matches_power[m] && seq.degree_preserved[m];
        for (bool s : seq.step_identity_ok) track_ok = track_ok && s;
        subs.push_back({std::string("nu bound holds for ") + e.f + " over " + e.ring,
                        seq.bound_holds()});
        subs.push_back({std::string("squaring track sound for ") + e.f, track_ok});
    }

    // contrapositive: f = x + yX over QQ[x,y]
    RingPtr ring = parse_ring("QQ[x,y] domain");
    Polynomial f = parse_poly("x + y*X", ring);
    LocalityWitness origin(IdealHandle(ring, parse_poly_list_base("x, y", ring)));
    NuSequence seq = nu_sequence(ring, f, origin, 3);
    bool nu_match = seq.nu == std::vector<std::uint64_t>{2, 3, 5, 9};
    subs.push_back({"nu sequence of x+yX at (x,y) is 2,3,5,9", nu_match});
    subs.push_back({"bound deg f + 1 = 2 violated from m = 1",
                    seq.bound_violated_at && *seq.bound_violated_at == 1});

    GaussianVerdict vd = gaussian_status_domain(ring, f);
    bool non_gaussian_ok = vd.status == GaussianStatus::NonGaussian && vd.witness &&
                           witness_verifies(ring, f, *vd.witness);
    subs.push_back({"gaussian verdict agrees (non-gaussian, witness re-verified)",
                    non_gaussian_ok});

    return finish("nu-bound", std::move(subs), start);
}

CheckResult check_dedekind_mertens(bool parallel) {
    auto start = Clock::now();
    std::vector<SubCheck> subs;

    std::vector<RingPtr> rings = {
        parse_ring("QQ[x,y]"),
        parse_ring("GF(2)[s,t]"),
        parse_ring("GF(2)[s,t]/(s^2, s*t, t^2)"),
        parse_ring("QQ[s,t]/(s*t)"),
        parse_ring("GF(2)[a,b,c]/(a^2 - b^2*c)"),
    };
    const std::size_t cases = 50;
    auto ok = run_cases(
        cases,
        [&](std::size_t i) {
            Rng rng(case_seed(0xd3d3d3d3, i));
            const RingPtr& ring = rings[i % rings.size()];
            RandomPolyParams params{2, 2, 4, 3};
            Polynomial f = random_polynomial(rng, ring, params);
            Polynomial g = random_polynomial(rng, ring, params);
            // the defect report also asserts the universal containment
            content_product_defect(ring, f, g);
            return dedekind_mertens_check(ring, f, g).holds();
        },
        parallel);
    std::size_t passed = 0;
    for (bool b : ok) passed += b;
    subs.push_back({"exponent + radical identity on " + std::to_string(cases) +
                        " random pairs (" + std::to_string(passed) + " passed)",
                    passed == cases});

    return finish("dedekind-mertens", std::move(subs), start);
}

CheckResult check_invertibility_crosscheck(bool parallel) {
    auto start = Clock::now();
    std::vector<SubCheck> subs;

    struct Entry {
        const char* ring;
        const char* f;
    };
    const Entry entries[] = {
        {"QQ[x,y] domain", "x + y*X"},
        {"QQ[x,y] domain", "x^2 + x*y*X + y^2*X^2"},
        {"QQ[x,y] domain", "x + x*X"},
        {"QQ[x,y] domain", "1 + x*X"},
        {"QQ[x] domain", "x + x^2*X"},
        {"QQ[x] domain", "1 + x*X + x^2*X^2"},
        {"QQ[x,y]/(x^2 + y^2 - 1) domain", "1 - x + y*X"},
        {"GF(2)[a,b,c]/(a^2 - b^2*c) domain", "a + b*X"},
    };
    const std::size_t n = sizeof(entries) / sizeof(entries[0]);
    auto ok = run_cases(
        n,
        [&](std::size_t i) {
            RingPtr ring = parse_ring(entries[i].ring);
            Polynomial f = parse_poly(entries[i].f, ring);
            GaussianVerdict vd = gaussian_status_domain(ring, f);
            GaussianVerdict vg =
                gaussian_generic(ring, f, static_cast<std::uint32_t>(f.main_degree()));
            bool consistent = (vd.status == GaussianStatus::Certified) ==
                              (vg.status == GaussianStatus::Certified);
            if (vd.status == GaussianStatus::NonGaussian)
                consistent = consistent && vd.witness && witness_verifies(ring, f, *vd.witness);
            if (vg.status == GaussianStatus::NonGaussian)
                consistent = consistent && vg.witness && witness_verifies(ring, f, *vg.witness);
            return consistent;
        },
        parallel);
    for (std::size_t i = 0; i < n; ++i)
        subs.push_back({std::string("invertibility vs generic verdict for ") + entries[i].f +
                            " over " + entries[i].ring,
                        ok[i]});

    return finish("invertibility-crosscheck", std::move(subs), start);
}

std::vector<CheckResult> run_verification_catalog(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(check_extension_defect(opts.negative_control, opts.parallel));
    out.push_back(check_principal_square());
    out.push_back(check_reduced_ring_defect());
    out.push_back(check_power_substitution(opts.parallel));
    out.push_back(check_nu_bound());
    out.push_back(check_dedekind_mertens(opts.parallel));
    out.push_back(check_invertibility_crosscheck(opts.parallel));
    return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace polygauss
