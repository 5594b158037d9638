#ifndef POLYGAUSS_PARSE_HPP
#define POLYGAUSS_PARSE_HPP

// Text grammar (whitespace-insensitive):
//   ring  := FIELD '[' (ident (',' ident)*)? ']' ('/' '(' poly (',' poly)* ')')? 'domain'?
//   FIELD := 'QQ' | 'GF' '(' prime ')'
//   poly  := signed sum of terms
//   term  := coefficient? ('*'? ident ('^' nat)?)*
//   coefficient := integer | integer '/' integer
// The main indeterminate X is reserved: auto-appended to every ring and not
// permitted in the declared variable list or in defining generators.

#include <string>
#include <vector>

#include "polygauss/ring.hpp"

namespace polygauss {

RingPtr parse_ring(const std::string& text);

// Polynomial in the ring's full context (X available), normal form mod J.
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

// Base-ring element: X is rejected with a parse error.
Polynomial parse_poly_base(const std::string& text, const RingPtr& ring);

// Comma-separated list of polynomials.
std::vector<Polynomial> parse_poly_list(const std::string& text, const RingPtr& ring);
std::vector<Polynomial> parse_poly_list_base(const std::string& text, const RingPtr& ring);

}  // namespace polygauss

#endif
