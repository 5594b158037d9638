#ifndef POLYGAUSS_MONOMIAL_HPP
#define POLYGAUSS_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "polygauss/errors.hpp"

namespace polygauss {

// Exponent vector, one entry per declared variable of the owning context.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::size_t size() const { return e.size(); }
    bool is_unit() const;
    std::uint64_t total_degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;  // requires o | *this

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Total, multiplicative monomial order.  `precedence` lists variable indices
// from greatest to least.  `elim_front` > 0 makes the first elim_front
// entries of the precedence a dominating block (each block compared by
// `kind`); this is the elimination order used for intersections.
struct MonomialOrder {
    enum class Kind { Lex, Grevlex };

    Kind kind = Kind::Grevlex;
    std::vector<std::uint32_t> precedence;
    std::uint32_t elim_front = 0;

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);

    // a <=> b: negative if a < b, zero if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && precedence == o.precedence && elim_front == o.elim_front;
    }
};

}  // namespace polygauss

#endif
