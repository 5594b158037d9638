#ifndef POLYGAUSS_POLYNOMIAL_HPP
#define POLYGAUSS_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polygauss/coeff.hpp"
#include "polygauss/monomial.hpp"

namespace polygauss {

// A polynomial ring presentation-free context: coefficient field, named
// variables, and the active monomial order.  Optionally one variable is
// distinguished as the main indeterminate X for content work.
class PolyContext {
  public:
    static constexpr std::size_t kNoMainVar = static_cast<std::size_t>(-1);

    static std::shared_ptr<const PolyContext> make(Field field,
                                                   std::vector<std::string> vars,
                                                   MonomialOrder order,
                                                   std::size_t main_var = kNoMainVar);

    const Field& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const MonomialOrder& order() const { return order_; }
    bool has_main_var() const { return main_var_ != kNoMainVar; }
    std::size_t main_var() const;
    std::optional<std::size_t> var_index(const std::string& name) const;
    const std::string& var_name(std::size_t i) const { return vars_[i]; }

    // Same field, variables, order and main-variable choice.
    bool compatible(const PolyContext& o) const;

    // Stable text form used in Groebner cache keys.
    std::string signature() const;

    // New context with `names` appended after the existing variables.  When
    // `elim_block_front` the new variables form a dominating order block
    // (elimination order); otherwise they rank beneath the existing ones.
    std::shared_ptr<const PolyContext> extend_back(const std::vector<std::string>& names,
                                                   bool elim_block_front) const;

  private:
    PolyContext(Field field, std::vector<std::string> vars, MonomialOrder order,
                std::size_t main_var);
    Field field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::size_t main_var_ = kNoMainVar;
};

using ContextPtr = std::shared_ptr<const PolyContext>;

struct Term {
    Monomial m;
    Coeff c;
};

// Sparse exact polynomial.  Terms are kept sorted descending under the
// context order with no zero coefficients; two equal polynomials therefore
// have identical representations.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero(ContextPtr ctx);
    static Polynomial constant(ContextPtr ctx, Coeff c);
    static Polynomial one(ContextPtr ctx);
    static Polynomial variable(ContextPtr ctx, std::size_t var, std::uint32_t exp = 1);
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().m; }
    const Coeff& leading_coeff() const { return leading_term().c; }

    std::uint64_t total_degree() const;
    std::int64_t degree_in(std::size_t var) const;  // -1 for the zero polynomial
    std::int64_t main_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Coeff& c) const;
    Polynomial times_monomial(const Monomial& m, const Coeff& c) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Canonical text: X-degree major, then the active order; explicit * and ^.
    std::string to_string() const;

  private:
    Polynomial(ContextPtr ctx, std::vector<Term> terms)
        : ctx_(std::move(ctx)), terms_(std::move(terms)) {}
    void normalize();

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

void check_same_context(const Polynomial& a, const Polynomial& b);

// Coefficient list of f along the main indeterminate: coeffs[i] is the
// X^i coefficient, an X-free polynomial in the same context.
struct MainVarView {
    ContextPtr ctx;
    std::vector<Polynomial> coeffs;

    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
};

MainVarView main_var_view(const Polynomial& f);
Polynomial reassemble(const MainVarView& view);

// f(X) -> f(X^n).
Polynomial substitute_power(const Polynomial& f, std::uint32_t n);
// f(X) -> f(-X).
Polynomial negate_main_var(const Polynomial& f);
// f = g0(X^2) + X*g1(X^2); returns (g0, g1).
std::pair<Polynomial, Polynomial> even_odd_split(const Polynomial& f);
// Coefficient of X^i in the result is the coefficient of X^perm[i] in f.
Polynomial permute_coefficients(const Polynomial& f, const std::vector<std::size_t>& perm);

// Transport f into `target`, sending variable i of f's context to variable
// index_map[i].  Fields must agree.
Polynomial remap(const Polynomial& f, const ContextPtr& target,
                 const std::vector<std::size_t>& index_map);

}  // namespace polygauss

#endif
