#ifndef POLYGAUSS_COEFF_HPP
#define POLYGAUSS_COEFF_HPP

// Exact coefficient arithmetic: arbitrary-precision rationals (GMP-backed)
// and prime fields GF(p) with word-size p.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "polygauss/errors.hpp"

namespace polygauss {

// Canonical rational number: positive denominator, gcd(|num|, den) = 1,
// zero stored as 0/1.  mpq_class maintains exactly this form.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational inverse() const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    std::string to_string() const { return v_.get_str(); }

  private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;  // always canonical
};

Rational normalize_rational(const mpz_class& num, const mpz_class& den);

// Largest accepted prime modulus.  Residues then fit comfortably in 64 bits
// during multiplication.
inline constexpr std::uint64_t kMaxPrimeModulus = (std::uint64_t{1} << 31) - 1;

bool is_prime_u64(std::uint64_t n);

// Element of GF(p).  Carries its modulus so values are self-contained.
struct GFpElem {
    std::uint64_t residue = 0;
    std::uint64_t p = 2;

    bool is_zero() const { return residue == 0; }
    bool is_one() const { return residue == 1; }

    GFpElem operator-() const { return {residue == 0 ? 0 : p - residue, p}; }
    GFpElem operator+(const GFpElem& o) const;
    GFpElem operator-(const GFpElem& o) const;
    GFpElem operator*(const GFpElem& o) const;
    GFpElem inverse() const;  // extended Euclid

    bool operator==(const GFpElem& o) const { return residue == o.residue && p == o.p; }
    bool operator!=(const GFpElem& o) const { return !(*this == o); }
};

// Coefficient field descriptor: QQ or GF(p).
class Field {
  public:
    enum class Kind { Rationals, PrimeField };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime_field(std::uint64_t p);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

// A field element, tagged with its field.  Arithmetic between elements of
// different fields throws InvalidArgumentError.
class Coeff {
  public:
    Coeff() : v_(Rational()) {}
    explicit Coeff(Rational r) : v_(std::move(r)) {}
    explicit Coeff(GFpElem e) : v_(e) {}

    static Coeff zero(const Field& f);
    static Coeff one(const Field& f);
    static Coeff from_integer(const Field& f, const mpz_class& n);
    static Coeff from_fraction(const Field& f, const mpz_class& num, const mpz_class& den);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    const Rational& rational() const;
    const GFpElem& gfp() const;

    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff inverse() const;

    bool operator==(const Coeff& o) const { return v_ == o.v_; }
    bool operator!=(const Coeff& o) const { return v_ != o.v_; }

    std::string to_string() const;

  private:
    std::variant<Rational, GFpElem> v_;
};

Coeff field_inverse(const Coeff& a);

}  // namespace polygauss

#endif
