#ifndef POLYGAUSS_VERIFY_HPP
#define POLYGAUSS_VERIFY_HPP

// The fixed verification catalog behind the verify-paper command: every
// identity, bound, and counterexample the library can check mechanically,
// one named anchor per check.

#include <functional>
#include <string>
#include <vector>

#include "polygauss/content.hpp"

namespace polygauss {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

struct VerifyOptions {
    bool parallel = true;
    // Re-runs the extension-defect check over the free ring (quotient
    // dropped); the check must then fail.  Negative control of the harness.
    bool negative_control = false;
};

// Evaluates fn(0..n-1), optionally with OpenMP; results keep index order.
// The serial path is the reference the parallel one is tested against.
std::vector<bool> run_cases(std::size_t n, const std::function<bool(std::size_t)>& fn,
                            bool parallel);

// s+tX stays multiplicative over k[s,t]/(s,t)^2 but shows a content defect
// over the extension by u, v.
CheckResult check_extension_defect(bool mutated_free_ring, bool parallel);
// f^2 has principal content while f itself exhibits a defect (char 2).
CheckResult check_principal_square();
// the reduced-ring defect with witness s^2 over k[s,t]/(st).
CheckResult check_reduced_ring_defect();
// c(f(X^n) g(X^n)) = c(fg) on random inputs.
CheckResult check_power_substitution(bool parallel);
// nu(c(f)^(2^m)) <= deg f + 1 on invertible-content inputs, and the
// 2,3,5,9 contrapositive for x + yX.
CheckResult check_nu_bound();
// exponent identity and radical consequence on random pairs.
CheckResult check_dedekind_mertens(bool parallel);
// invertibility-based and generic-coefficient verdicts agree on domains.
CheckResult check_invertibility_crosscheck(bool parallel);

std::vector<CheckResult> run_verification_catalog(const VerifyOptions& opts);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace polygauss

#endif
