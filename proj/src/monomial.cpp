#include "polygauss/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace polygauss {

bool Monomial::is_unit() const {
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e.size() != o.e.size())
        throw InvalidArgumentError("monomial product across different variable counts");
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e.size() != o.e.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (o.e[i] > e[i]) throw InvalidArgumentError("monomial division not exact");
        r.e[i] = e[i] - o.e[i];
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    MonomialOrder o;
    o.kind = Kind::Lex;
    o.precedence.resize(nvars);
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    MonomialOrder o;
    o.kind = Kind::Grevlex;
    o.precedence.resize(nvars);
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
}

namespace {

// Compare over a contiguous slice [lo, hi) of the precedence list.
int compare_slice(const Monomial& a, const Monomial& b,
                  const std::vector<std::uint32_t>& prec, std::size_t lo, std::size_t hi,
                  MonomialOrder::Kind kind) {
    if (kind == MonomialOrder::Kind::Lex) {
        for (std::size_t k = lo; k < hi; ++k) {
            std::uint32_t v = prec[k];
            if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
        }
        return 0;
    }
    // grevlex: total degree of the slice first, then the last differing
    // variable with the smaller exponent wins.
    std::uint64_t da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
        da += a.e[prec[k]];
        db += b.e[prec[k]];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = hi; k > lo; --k) {
        std::uint32_t v = prec[k - 1];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != precedence.size() || b.size() != precedence.size())
        throw InvalidArgumentError("monomial/order variable count mismatch");
    if (elim_front > 0) {
        int c = compare_slice(a, b, precedence, 0, elim_front, kind);
        if (c != 0) return c;
        return compare_slice(a, b, precedence, elim_front, precedence.size(), kind);
    }
    return compare_slice(a, b, precedence, 0, precedence.size(), kind);
}

}  // namespace polygauss
