#include "polygauss/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace polygauss {

PolyContext::PolyContext(Field field, std::vector<std::string> vars, MonomialOrder order,
                         std::size_t main_var)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)), main_var_(main_var) {}

std::shared_ptr<const PolyContext> PolyContext::make(Field field,
                                                     std::vector<std::string> vars,
                                                     MonomialOrder order,
                                                     std::size_t main_var) {
    if (order.precedence.size() != vars.size())
        throw InvalidArgumentError("order precedence size does not match variable count");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw InvalidArgumentError("duplicate variable '" + vars[i] + "'");
    if (main_var != kNoMainVar && main_var >= vars.size())
        throw InvalidArgumentError("main variable index out of range");
    return std::shared_ptr<const PolyContext>(
        new PolyContext(field, std::move(vars), std::move(order), main_var));
}

std::size_t PolyContext::main_var() const {
    if (main_var_ == kNoMainVar)
        throw InvalidArgumentError("context has no main indeterminate");
    return main_var_;
}

std::optional<std::size_t> PolyContext::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool PolyContext::compatible(const PolyContext& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_ &&
           main_var_ == o.main_var_;
}

std::string PolyContext::signature() const {
    std::ostringstream os;
    os << field_.to_string() << '[';
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << ',';
        os << vars_[i];
    }
    os << "];" << (order_.kind == MonomialOrder::Kind::Lex ? "lex" : "grevlex") << ';';
    for (auto p : order_.precedence) os << p << '.';
    os << ";e" << order_.elim_front;
    if (has_main_var()) os << ";X" << main_var_;
    return os.str();
}

std::shared_ptr<const PolyContext> PolyContext::extend_back(
    const std::vector<std::string>& names, bool elim_block_front) const {
    std::vector<std::string> vars = vars_;
    for (const auto& n : names) {
        if (var_index(n)) throw InvalidArgumentError("variable '" + n + "' already declared");
        vars.push_back(n);
    }
    MonomialOrder order;
    order.kind = order_.kind;
    std::vector<std::uint32_t> fresh(names.size());
    for (std::size_t k = 0; k < names.size(); ++k)
        fresh[k] = static_cast<std::uint32_t>(vars_.size() + k);
    if (elim_block_front) {
        order.precedence = fresh;
        order.precedence.insert(order.precedence.end(), order_.precedence.begin(),
                                order_.precedence.end());
        order.elim_front = static_cast<std::uint32_t>(names.size());
    } else {
        order.precedence = order_.precedence;
        order.precedence.insert(order.precedence.end(), fresh.begin(), fresh.end());
        order.elim_front = order_.elim_front;
    }
    return make(field_, std::move(vars), std::move(order), main_var_);
}

void check_same_context(const Polynomial& a, const Polynomial& b) {
    if (!a.context() || !b.context())
        throw InvalidArgumentError("polynomial without context");
    if (a.context() != b.context() && !a.context()->compatible(*b.context()))
        throw InvalidArgumentError("polynomials from different rings");
}

Polynomial Polynomial::zero(ContextPtr ctx) { return Polynomial(std::move(ctx), {}); }

Polynomial Polynomial::constant(ContextPtr ctx, Coeff c) {
    if (c.field() != ctx->field())
        throw InvalidArgumentError("coefficient field does not match ring field");
    if (c.is_zero()) return zero(std::move(ctx));
    Monomial unit(ctx->nvars());
    return Polynomial(std::move(ctx), {Term{std::move(unit), std::move(c)}});
}

Polynomial Polynomial::one(ContextPtr ctx) {
    Coeff c = Coeff::one(ctx->field());
    return constant(std::move(ctx), std::move(c));
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t var, std::uint32_t exp) {
    if (var >= ctx->nvars()) throw InvalidArgumentError("variable index out of range");
    if (exp == 0) return one(std::move(ctx));
    Monomial m(ctx->nvars());
    m.e[var] = exp;
    Coeff c = Coeff::one(ctx->field());
    return Polynomial(std::move(ctx), {Term{std::move(m), std::move(c)}});
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (t.m.size() != ctx->nvars())
            throw InvalidArgumentError("term variable count does not match ring");
        if (t.c.field() != ctx->field())
            throw InvalidArgumentError("coefficient field does not match ring field");
    }
    Polynomial p(std::move(ctx), std::move(terms));
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return ctx_->order().greater(a.m, b.m);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = out.back().c + t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw InvalidArgumentError("leading term of zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
    return d;
}

std::int64_t Polynomial::degree_in(std::size_t var) const {
    if (terms_.empty()) return -1;
    std::int64_t d = 0;
    for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.m.e[var]);
    return d;
}

std::int64_t Polynomial::main_degree() const { return degree_in(ctx_->main_var()); }

Polynomial Polynomial::operator-() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.m, -t.c});
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_context(*this, o);
    // merge of two sorted term lists
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& order = ctx_->order();
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = order.compare(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Coeff s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) out.push_back({terms_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_context(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) out.push_back({a.m * b.m, a.c * b.c});
    Polynomial p(ctx_, std::move(out));
    p.normalize();
    return p;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    if (c.is_zero()) return zero(ctx_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.m, t.c * c});
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Coeff& c) const {
    if (c.is_zero()) return zero(ctx_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.m * m, t.c * c});
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_context(*this, o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

namespace {

std::string monomial_text(const PolyContext& ctx, const Monomial& m) {
    std::string s;
    auto append_var = [&](std::size_t v) {
        if (m.e[v] == 0) return;
        if (!s.empty()) s += "*";
        s += ctx.var_name(v);
        if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
    };
    // base variables in declaration order, the main indeterminate last
    for (std::size_t v = 0; v < ctx.nvars(); ++v)
        if (!ctx.has_main_var() || v != ctx.main_var()) append_var(v);
    if (ctx.has_main_var()) append_var(ctx.main_var());
    return s;
}

// (negative?, magnitude text) for one term
std::pair<bool, std::string> term_text(const PolyContext& ctx, const Term& t) {
    bool neg = false;
    Coeff c = t.c;
    if (c.field().kind() == Field::Kind::Rationals && c.rational().numerator() < 0) {
        neg = true;
        c = -c;
    }
    std::string vars = monomial_text(ctx, t.m);
    if (vars.empty()) return {neg, c.to_string()};
    if (c.is_one()) return {neg, vars};
    return {neg, c.to_string() + "*" + vars};
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<Term> ordered = terms_;
    if (ctx_->has_main_var()) {
        std::size_t xv = ctx_->main_var();
        std::stable_sort(ordered.begin(), ordered.end(), [&](const Term& a, const Term& b) {
            if (a.m.e[xv] != b.m.e[xv]) return a.m.e[xv] > b.m.e[xv];
            return ctx_->order().greater(a.m, b.m);
        });
    }
    std::string s;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        auto [neg, mag] = term_text(*ctx_, ordered[i]);
        if (i == 0)
            s = (neg ? "-" : "") + mag;
        else
            s += (neg ? " - " : " + ") + mag;
    }
    return s;
}

MainVarView main_var_view(const Polynomial& f) {
    const auto& ctx = f.context();
    std::size_t xv = ctx->main_var();
    MainVarView view{ctx, {}};
    std::int64_t deg = f.degree_in(xv);
    if (deg < 0) return view;
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg) + 1);
    for (const auto& t : f.terms()) {
        Monomial m = t.m;
        std::uint32_t d = m.e[xv];
        m.e[xv] = 0;
        buckets[d].push_back({std::move(m), t.c});
    }
    view.coeffs.reserve(buckets.size());
    for (auto& b : buckets) view.coeffs.push_back(Polynomial::from_terms(ctx, std::move(b)));
    return view;
}

Polynomial reassemble(const MainVarView& view) {
    Polynomial sum = Polynomial::zero(view.ctx);
    std::size_t xv = view.ctx->main_var();
    for (std::size_t i = 0; i < view.coeffs.size(); ++i) {
        Monomial xi(view.ctx->nvars());
        xi.e[xv] = static_cast<std::uint32_t>(i);
        sum = sum + view.coeffs[i].times_monomial(xi, Coeff::one(view.ctx->field()));
    }
    return sum;
}

Polynomial substitute_power(const Polynomial& f, std::uint32_t n) {
    if (n == 0) throw InvalidArgumentError("substitute_power requires n >= 1");
    std::size_t xv = f.context()->main_var();
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m = t.m;
        m.e[xv] *= n;
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(f.context(), std::move(out));
}

Polynomial negate_main_var(const Polynomial& f) {
    std::size_t xv = f.context()->main_var();
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Coeff c = (t.m.e[xv] % 2 == 1) ? -t.c : t.c;
        out.push_back({t.m, std::move(c)});
    }
    return Polynomial::from_terms(f.context(), std::move(out));
}

std::pair<Polynomial, Polynomial> even_odd_split(const Polynomial& f) {
    std::size_t xv = f.context()->main_var();
    std::vector<Term> even, odd;
    for (const auto& t : f.terms()) {
        Monomial m = t.m;
        std::uint32_t d = m.e[xv];
        m.e[xv] = d / 2;
        (d % 2 == 0 ? even : odd).push_back({std::move(m), t.c});
    }
    return {Polynomial::from_terms(f.context(), std::move(even)),
            Polynomial::from_terms(f.context(), std::move(odd))};
}

Polynomial permute_coefficients(const Polynomial& f, const std::vector<std::size_t>& perm) {
    MainVarView view = main_var_view(f);
    if (perm.size() != view.coeffs.size())
        throw InvalidArgumentError("permutation size must be deg(f)+1");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p])
            throw InvalidArgumentError("not a permutation of 0..deg(f)");
        seen[p] = true;
    }
    MainVarView out{view.ctx, {}};
    out.coeffs.reserve(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out.coeffs.push_back(view.coeffs[perm[i]]);
    return reassemble(out);
}

Polynomial remap(const Polynomial& f, const ContextPtr& target,
                 const std::vector<std::size_t>& index_map) {
    if (f.context()->field() != target->field())
        throw InvalidArgumentError("remap across different coefficient fields");
    if (index_map.size() != f.context()->nvars())
        throw InvalidArgumentError("remap index map has wrong size");
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < index_map.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (index_map[i] >= target->nvars())
                throw InvalidArgumentError("remap target index out of range");
            m.e[index_map[i]] += t.m.e[i];
        }
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(target, std::move(out));
}

}  // namespace polygauss
