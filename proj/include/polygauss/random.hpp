#ifndef POLYGAUSS_RANDOM_HPP
#define POLYGAUSS_RANDOM_HPP

#include <random>

#include "polygauss/ring.hpp"

namespace polygauss {

// Deterministic generator for the verification sweeps.  Avoids
// std::uniform_int_distribution so that streams are identical across
// standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  private:
    std::mt19937_64 eng_;
};

struct RandomPolyParams {
    std::uint32_t max_main_degree = 2;   // 0 for base-ring elements
    std::uint32_t max_base_exponent = 2;
    std::uint32_t max_terms = 4;
    std::uint32_t coeff_span = 3;  // rational coefficients from -span..span
};

// Random polynomial in the full context, nonzero modulo the defining ideal
// (falls back to 1 if the parameters keep collapsing to zero).
Polynomial random_polynomial(Rng& rng, const RingPtr& ring, const RandomPolyParams& params);

}  // namespace polygauss

#endif
