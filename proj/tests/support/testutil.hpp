#ifndef POLYGAUSS_TESTS_TESTUTIL_HPP
#define POLYGAUSS_TESTS_TESTUTIL_HPP

#include <string>

#include "polygauss/ideal.hpp"
#include "polygauss/parse.hpp"

namespace testutil {

inline polygauss::RingPtr R(const std::string& text) { return polygauss::parse_ring(text); }

inline polygauss::Polynomial P(const std::string& text, const polygauss::RingPtr& ring) {
    return polygauss::parse_poly(text, ring);
}

inline polygauss::Polynomial PB(const std::string& text, const polygauss::RingPtr& ring) {
    return polygauss::parse_poly_base(text, ring);
}

inline polygauss::IdealHandle I(const std::string& gens, const polygauss::RingPtr& ring) {
    return polygauss::IdealHandle(ring, polygauss::parse_poly_list_base(gens, ring));
}

// Transport a polynomial into another context over the same variables
// (used to run Groebner computations under a non-default order).
inline polygauss::Polynomial to_ctx(const polygauss::Polynomial& p,
                                    const polygauss::ContextPtr& ctx) {
    std::vector<std::size_t> id(p.context()->nvars());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return polygauss::remap(p, ctx, id);
}

}  // namespace testutil

#endif
