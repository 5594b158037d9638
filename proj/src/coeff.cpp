#include "polygauss/coeff.hpp"

namespace polygauss {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidArgumentError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero rational");
    return Rational(denominator(), numerator());
}

Rational normalize_rational(const mpz_class& num, const mpz_class& den) {
    return Rational(num, den);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {
void check_same_modulus(const GFpElem& a, const GFpElem& b) {
    if (a.p != b.p)
        throw InvalidArgumentError("GF(p) arithmetic across different moduli");
}
}  // namespace

GFpElem GFpElem::operator+(const GFpElem& o) const {
    check_same_modulus(*this, o);
    std::uint64_t r = residue + o.residue;
    if (r >= p) r -= p;
    return {r, p};
}

GFpElem GFpElem::operator-(const GFpElem& o) const {
    check_same_modulus(*this, o);
    std::uint64_t r = residue + (p - o.residue);
    if (r >= p) r -= p;
    return {r, p};
}

GFpElem GFpElem::operator*(const GFpElem& o) const {
    check_same_modulus(*this, o);
    return {(residue * o.residue) % p, p};  // p < 2^31, no overflow
}

GFpElem GFpElem::inverse() const {
    if (residue == 0) throw DivisionByZeroError("inverse of zero in GF(p)");
    // extended Euclid on (residue, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p);
    std::int64_t new_r = static_cast<std::int64_t>(residue);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return {static_cast<std::uint64_t>(t), p};
}

Field Field::prime_field(std::uint64_t p) {
    if (p > kMaxPrimeModulus)
        throw InvalidArgumentError("prime modulus exceeds word-size cap");
    if (!is_prime_u64(p))
        throw InvalidArgumentError("GF(p) modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::PrimeField, p);
}

std::string Field::to_string() const {
    return kind_ == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Coeff Coeff::zero(const Field& f) {
    if (f.kind() == Field::Kind::Rationals) return Coeff(Rational(0));
    return Coeff(GFpElem{0, f.modulus()});
}

Coeff Coeff::one(const Field& f) {
    if (f.kind() == Field::Kind::Rationals) return Coeff(Rational(1));
    return Coeff(GFpElem{1 % f.modulus(), f.modulus()});
}

Coeff Coeff::from_integer(const Field& f, const mpz_class& n) {
    if (f.kind() == Field::Kind::Rationals) return Coeff(Rational(n));
    mpz_class r = n % static_cast<unsigned long>(f.modulus());
    if (r < 0) r += static_cast<unsigned long>(f.modulus());
    return Coeff(GFpElem{r.get_ui(), f.modulus()});
}

Coeff Coeff::from_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidArgumentError("coefficient with zero denominator");
    if (f.kind() == Field::Kind::Rationals) return Coeff(normalize_rational(num, den));
    Coeff d = from_integer(f, den);
    if (d.is_zero())
        throw DivisionByZeroError("denominator vanishes in GF(" +
                                  std::to_string(f.modulus()) + ")");
    return from_integer(f, num) * d.inverse();
}

Field Coeff::field() const {
    if (std::holds_alternative<Rational>(v_)) return Field::rationals();
    return Field::prime_field(std::get<GFpElem>(v_).p);
}

bool Coeff::is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Coeff::is_one() const {
    return std::visit([](const auto& x) { return x.is_one(); }, v_);
}

const Rational& Coeff::rational() const {
    if (!std::holds_alternative<Rational>(v_))
        throw InvalidArgumentError("coefficient is not rational");
    return std::get<Rational>(v_);
}

const GFpElem& Coeff::gfp() const {
    if (!std::holds_alternative<GFpElem>(v_))
        throw InvalidArgumentError("coefficient is not a GF(p) element");
    return std::get<GFpElem>(v_);
}

namespace {
void check_same_field(const Coeff& a, const Coeff& b) {
    if (a.field() != b.field())
        throw InvalidArgumentError("coefficient arithmetic across different fields");
}
}  // namespace

Coeff Coeff::operator-() const {
    return std::visit([](const auto& x) { return Coeff(-x); }, v_);
}

Coeff Coeff::operator+(const Coeff& o) const {
    check_same_field(*this, o);
    if (std::holds_alternative<Rational>(v_))
        return Coeff(std::get<Rational>(v_) + std::get<Rational>(o.v_));
    return Coeff(std::get<GFpElem>(v_) + std::get<GFpElem>(o.v_));
}

Coeff Coeff::operator-(const Coeff& o) const {
    check_same_field(*this, o);
    if (std::holds_alternative<Rational>(v_))
        return Coeff(std::get<Rational>(v_) - std::get<Rational>(o.v_));
    return Coeff(std::get<GFpElem>(v_) - std::get<GFpElem>(o.v_));
}

Coeff Coeff::operator*(const Coeff& o) const {
    check_same_field(*this, o);
    if (std::holds_alternative<Rational>(v_))
        return Coeff(std::get<Rational>(v_) * std::get<Rational>(o.v_));
    return Coeff(std::get<GFpElem>(v_) * std::get<GFpElem>(o.v_));
}

Coeff Coeff::inverse() const {
    return std::visit([](const auto& x) { return Coeff(x.inverse()); }, v_);
}

std::string Coeff::to_string() const {
    if (std::holds_alternative<Rational>(v_)) return std::get<Rational>(v_).to_string();
    return std::to_string(std::get<GFpElem>(v_).residue);
}

Coeff field_inverse(const Coeff& a) { return a.inverse(); }

}  // namespace polygauss
