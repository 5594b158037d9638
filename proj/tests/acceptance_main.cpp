// Acceptance suite: one pass/fail line per criterion, each with a pinned
// runtime budget.  Usage: polygauss_acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polygauss/content.hpp"
#include "polygauss/random.hpp"
#include "polygauss/verify.hpp"
#include "support/oracle.hpp"
#include "support/testutil.hpp"

using namespace polygauss;
using namespace testutil;

namespace {

std::string g_cli_path;

struct Criterion {
    int id;
    std::string title;
    double budget_ms;
    std::function<bool(std::string&)> body;
};

#define REQUIRE_OR(cond, msg)            \
    do {                                 \
        if (!(cond)) {                   \
            why = (msg);                 \
            return false;                \
        }                                \
    } while (0)

bool criterion1(std::string& why) {
    RingPtr ruv = R("GF(2)[s,t,u,v]/(s^2, s*t, t^2)");
    Polynomial f = P("s + t*X", ruv);
    Polynomial g = P("u + v*X", ruv);
    Polynomial sv = PB("s*v", ruv);
    IdealHandle prod = ideal_product(content(ruv, f), content(ruv, g));
    IdealHandle cfg = content(ruv, f * g);
    REQUIRE_OR(ideal_equal(cfg, I("s*u, s*v + t*u, t*v", ruv)),
               "c(fg) is not (su, sv+tu, tv)");
    REQUIRE_OR(is_member(sv, prod), "sv not in c(s+tX)c(u+vX)");
    REQUIRE_OR(!is_member(sv, cfg), "sv unexpectedly in (su, tv, sv+tu)");
    return true;
}

bool criterion2(std::string& why) {
    RingPtr ring = R("GF(2)[a,b,c]/(a^2 - b^2*c) domain");
    Polynomial f = P("a + b*X", ring);
    Polynomial f2 = f * f;
    REQUIRE_OR(ring->reduce_full(f2) == P("a^2 + b^2*X^2", ring),
               "f^2 is not a^2 + b^2 X^2");
    IdealHandle cf2 = content(ring, f2);
    REQUIRE_OR(ideal_equal(cf2, I("b^2", ring)), "c(f^2) differs from (b^2)");
    auto principal = principal_generator(cf2);
    REQUIRE_OR(principal.has_value(), "c(f^2) not recognized as principal");
    Polynomial ab = PB("a*b", ring);
    REQUIRE_OR(is_member(ab, ideal_power(content(ring, f), 2)), "ab not in c(f)^2");
    REQUIRE_OR(!is_member(ab, cf2), "ab unexpectedly in c(f^2)");
    return true;
}

bool criterion3(std::string& why) {
    RingPtr free_ring = R("QQ[s,t]");
    REQUIRE_OR(!is_member(PB("s^2", free_ring), I("s*t, s^2 + t^2", free_ring)),
               "s^2 in (st, s^2+t^2) over QQ[s,t]");
    RingPtr quot = R("QQ[s,t]/(s*t)");
    ContentDefect defect =
        content_product_defect(quot, P("s + t*X", quot), P("t + s*X", quot));
    REQUIRE_OR(defect.proper, "no content defect over QQ[s,t]/(st)");
    REQUIRE_OR(defect.witness && *defect.witness == PB("s^2", quot),
               "witness is not s^2");
    return true;
}

bool criterion4(std::string& why) {
    struct Entry {
        const char* ring;
        const char* f;
        const char* at;
    };
    const Entry entries[] = {
        {"QQ[x] domain", "x + x*X", "x"},
        {"QQ[x] domain", "x + x^2*X", "x"},
        {"QQ[x] domain", "x^2 + x*X + x*X^2", "x"},
        {"QQ[x,y]/(x^2 + y^2 - 1) domain", "1 - x + y*X", "x - 1, y"},
    };
    for (const Entry& e : entries) {
        RingPtr ring = R(e.ring);
        Polynomial f = P(e.f, ring);
        REQUIRE_OR(is_invertible(content(ring, f)).invertible,
                   std::string("content not invertible for ") + e.f);
        LocalityWitness at(I(e.at, ring));
        NuSequence seq = nu_sequence(ring, f, at, 3);
        for (std::size_t m = 0; m < seq.nu.size(); ++m)
            REQUIRE_OR(seq.nu[m] <= seq.bound,
                       std::string("nu bound violated for ") + e.f + " at m=" +
                           std::to_string(m));
    }
    return true;
}

bool criterion5(std::string& why) {
    RingPtr ring = R("QQ[x,y] domain");
    Polynomial f = P("x + y*X", ring);
    LocalityWitness origin(I("x, y", ring));
    NuSequence seq = nu_sequence(ring, f, origin, 3);
    REQUIRE_OR(seq.nu == (std::vector<std::uint64_t>{2, 3, 5, 9}),
               "nu sequence is not 2, 3, 5, 9");
    REQUIRE_OR(seq.bound == 2, "bound is not deg f + 1 = 2");
    REQUIRE_OR(seq.bound_violated_at && *seq.bound_violated_at == 1,
               "bound not violated from m = 1");

    GaussianVerdict vd = gaussian_status_domain(ring, f);
    REQUIRE_OR(vd.status == GaussianStatus::NonGaussian, "domain verdict not non-gaussian");
    REQUIRE_OR(vd.witness.has_value(), "no witness attached");
    IdealHandle prod = ideal_product(content(ring, f), content(ring, vd.witness->g));
    REQUIRE_OR(is_member(vd.witness->element, prod), "witness not in c(f)c(g)");
    REQUIRE_OR(!is_member(vd.witness->element, content(ring, f * vd.witness->g)),
               "witness re-verification failed");
    GaussianVerdict vg = gaussian_generic(ring, f, 1);
    REQUIRE_OR(vg.status == GaussianStatus::NonGaussian, "generic verdict disagrees");
    return true;
}

// random certified-Gaussian polynomial: base scalar times w = 1 + X*p
// (unit content by construction), optionally times the invertible-content
// circle example
Polynomial random_gaussian_poly(Rng& rng, const RingPtr& ring, bool with_circle_factor) {
    RandomPolyParams scalar_params{0, 2, 2, 3};
    Polynomial a = random_polynomial(rng, ring, scalar_params);
    RandomPolyParams tail_params{with_circle_factor ? 1u : 3u, 1, 3, 3};
    const ContextPtr& fc = ring->full_ctx();
    Polynomial x = Polynomial::variable(fc, fc->main_var());
    Polynomial w = Polynomial::one(fc) + x * random_polynomial(rng, ring, tail_params);
    Polynomial f = a * w;
    if (with_circle_factor) f = f * P("1 - x + y*X", ring);
    return ring->reduce_full(f);
}

bool criterion6(std::string& why) {
    struct Case {
        RingPtr ring;
        Polynomial f;
    };
    std::vector<Case> cases;
    Rng rng(0x5157);
    RingPtr qq = R("QQ[x,y] domain");
    RingPtr gf2 = R("GF(2)[s,t] domain");
    RingPtr circle = R("QQ[x,y]/(x^2 + y^2 - 1) domain");
    for (int i = 0; i < 10; ++i) cases.push_back({qq, random_gaussian_poly(rng, qq, false)});
    for (int i = 0; i < 10; ++i) cases.push_back({gf2, random_gaussian_poly(rng, gf2, false)});
    for (int i = 0; i < 5; ++i)
        cases.push_back({circle, random_gaussian_poly(rng, circle, true)});

    for (std::size_t k = 0; k < cases.size(); ++k) {
        const RingPtr& ring = cases[k].ring;
        const Polynomial& f = cases[k].f;
        if (f.is_zero() || f.main_degree() > 4) {
            why = "generated polynomial out of contract";
            return false;
        }
        IdealHandle base = content(ring, f);
        const ContextPtr& fc = ring->full_ctx();
        Polynomial x = Polynomial::variable(fc, fc->main_var());
        Polynomial h = f;
        for (std::uint32_t m = 0; m <= 2; ++m) {
            auto [g0, g1] = even_odd_split(h);
            Polynomial next = ring->reduce_full(g0 * g0 - x * (g1 * g1));
            REQUIRE_OR(next.main_degree() == f.main_degree(),
                       "track degree drifted at case " + std::to_string(k));
            REQUIRE_OR(ideal_equal(content(ring, next), ideal_power(base, 1u << (m + 1))),
                       "c(h_{m+1}) differs from c(f)^{2^{m+1}} at case " + std::to_string(k));
            h = next;
        }
    }
    return true;
}

bool criterion7(std::string& why) {
    std::vector<RingPtr> rings = {R("QQ[x,y]"), R("GF(2)[s,t]"),
                                  R("GF(2)[a,b,c]/(a^2 - b^2*c)"), R("QQ[s,t]/(s*t)")};
    Rng rng(0x5158);
    RandomPolyParams params{2, 2, 4, 3};
    for (int i = 0; i < 50; ++i) {
        const RingPtr& ring = rings[i % rings.size()];
        Polynomial f = random_polynomial(rng, ring, params);
        Polynomial g = random_polynomial(rng, ring, params);
        std::uint32_t n = 1 + static_cast<std::uint32_t>(i % 3);
        Polynomial fn = substitute_power(f, n);
        Polynomial gn = substitute_power(g, n);
        REQUIRE_OR(ideal_equal(content(ring, fn * gn), content(ring, f * g)),
                   "power identity failed at case " + std::to_string(i));
    }
    return true;
}

bool criterion8(std::string& why) {
    std::vector<RingPtr> rings = {R("QQ[x,y]"), R("GF(2)[s,t]"),
                                  R("GF(2)[s,t]/(s^2, s*t, t^2)"), R("QQ[s,t]/(s*t)"),
                                  R("GF(2)[a,b,c]/(a^2 - b^2*c)")};
    Rng rng(0x5159);
    RandomPolyParams params{2, 2, 4, 3};
    for (int i = 0; i < 50; ++i) {
        const RingPtr& ring = rings[i % rings.size()];
        Polynomial f = random_polynomial(rng, ring, params);
        Polynomial g = random_polynomial(rng, ring, params);
        DedekindMertensReport rep = dedekind_mertens_check(ring, f, g);
        REQUIRE_OR(rep.exponent_identity,
                   "exponent identity failed at case " + std::to_string(i));
        REQUIRE_OR(rep.radical_identity,
                   "radical identity failed at case " + std::to_string(i));
    }
    return true;
}

bool criterion9(std::string& why) {
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
    for (const Entry& e : entries) {
        RingPtr ring = R(e.ring);
        Polynomial f = P(e.f, ring);
        GaussianVerdict vd = gaussian_status_domain(ring, f);
        GaussianVerdict vg =
            gaussian_generic(ring, f, static_cast<std::uint32_t>(f.main_degree()));
        bool agree = (vd.status == GaussianStatus::Certified) ==
                     (vg.status == GaussianStatus::Certified);
        REQUIRE_OR(agree, std::string("verdicts disagree for ") + e.f + " over " + e.ring);
    }
    return true;
}

bool criterion10(std::string& why) {
    std::vector<RingPtr> rings = {R("QQ[x,y]"), R("GF(2)[x,y]"), R("GF(7)[x,y]")};
    Rng rng(0x515a);
    RandomPolyParams gen_params{0, 2, 3, 3};
    RandomPolyParams cof_params{0, 1, 2, 2};
    for (int i = 0; i < 100; ++i) {
        const RingPtr& ring = rings[i % rings.size()];
        std::vector<Polynomial> gens;
        std::size_t k = 1 + rng.below(3);
        for (std::size_t j = 0; j < k; ++j)
            gens.push_back(ring->project_to_base(random_polynomial(rng, ring, gen_params)));
        Polynomial f = Polynomial::zero(ring->base_ctx());
        if (i % 2 == 0) {
            for (const auto& g : gens)
                f = f + g * ring->project_to_base(random_polynomial(rng, ring, cof_params));
        } else {
            f = ring->project_to_base(random_polynomial(rng, ring, gen_params));
        }
        bool gb_says = is_member(f, IdealHandle(ring, gens));
        bool oracle_says = testoracle::bounded_combination_member(f, gens, 3);
        if (gb_says && !oracle_says)
            oracle_says = testoracle::bounded_combination_member(f, gens, 6);
        REQUIRE_OR(gb_says == oracle_says,
                   "membership mismatch with the oracle at instance " + std::to_string(i));
    }

    RingPtr ring = R("QQ[x,y]");
    RandomPolyParams params{0, 3, 3, 3};
    for (int i = 0; i < 100; ++i) {
        std::vector<Polynomial> gens;
        for (int j = 0; j < 4; ++j)
            gens.push_back(ring->project_to_base(random_polynomial(rng, ring, params)));
        GroebnerPtr gb1 = buchberger(ring->base_ctx(), gens);
        std::vector<Polynomial> mixed = gens;
        for (std::size_t j = mixed.size(); j > 1; --j)
            std::swap(mixed[j - 1], mixed[rng.below(j)]);
        GroebnerPtr gb2 = buchberger(ring->base_ctx(), mixed);
        bool same = gb1->gens.size() == gb2->gens.size();
        for (std::size_t j = 0; same && j < gb1->gens.size(); ++j)
            same = gb1->gens[j] == gb2->gens[j];
        REQUIRE_OR(same, "shuffled generators changed the reduced basis at instance " +
                             std::to_string(i));
    }
    return true;
}

int run_subprocess(const std::string& command, std::string& output) {
    output.clear();
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

bool criterion11(std::string& why) {
    REQUIRE_OR(!g_cli_path.empty(), "path to the CLI binary not supplied");
    std::string quoted = "'" + g_cli_path + "'";

    std::string output;
    int code = run_subprocess(quoted + " verify-paper --no-timing", output);
    REQUIRE_OR(code == 0, "verify-paper exited with " + std::to_string(code));
    for (const char* anchor : {"extension-defect", "principal-square", "reduced-ring-defect", "power-substitution",
                               "nu-bound", "dedekind-mertens", "invertibility-crosscheck"})
        REQUIRE_OR(output.find(std::string("PASS ") + anchor) != std::string::npos,
                   std::string("anchor not reported passing: ") + anchor);

    int neg = run_subprocess(quoted + " verify-paper --negative-control --no-timing", output);
    REQUIRE_OR(neg == 1, "negative control exited with " + std::to_string(neg));
    REQUIRE_OR(output.find("FAIL extension-defect") != std::string::npos,
               "negative control did not name the failed anchor");
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    std::vector<Criterion> criteria = {
        {1, "extension counterexample reproduced exactly", 1000, criterion1},
        {2, "principal-square counterexample reproduced exactly", 1000, criterion2},
        {3, "reduced-ring counterexample reproduced", 1000, criterion3},
        {4, "nu bound holds for invertible-content catalog", 10000, criterion4},
        {5, "nu sequence 2,3,5,9 certifies the contrapositive", 10000, criterion5},
        {6, "squaring track equals content powers on 25 random cases", 60000, criterion6},
        {7, "power substitution identity on 50 random cases", 30000, criterion7},
        {8, "Dedekind-Mertens suite on 50 random pairs", 60000, criterion8},
        {9, "invertibility and generic verdicts agree on the catalog", 30000, criterion9},
        {10, "engine matches the combination oracle; bases canonical", 60000, criterion10},
        {11, "verify-paper exit-code contract", 120000, criterion11},
    };

    bool all_ok = true;
    double total_ms = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        total_ms += ms;
        bool in_budget = ms < c.budget_ms;
        bool pass = ok && in_budget;
        all_ok = all_ok && pass;
        std::ostringstream line;
        line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title
             << " (" << static_cast<long>(ms) << " ms, budget "
             << static_cast<long>(c.budget_ms) << " ms)";
        if (!ok) line << " -- " << why;
        if (ok && !in_budget) line << " -- over budget";
        std::cout << line.str() << "\n";
    }
    std::cout << (all_ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES")
              << " (" << static_cast<long>(total_ms) << " ms total)\n";
    return all_ok ? 0 : 1;
}
