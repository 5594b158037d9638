#include "polygauss/parse.hpp"

#include <cctype>

namespace polygauss {

namespace {

struct Token {
    enum class Kind { Ident, Int, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.column);
    }

  private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= text_.size()) {
            tok_ = {Token::Kind::End, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            tok_ = {Token::Kind::Ident, text_.substr(start, pos_ - start), tok_.line,
                    tok_.column};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_ = {Token::Kind::Int, text_.substr(start, pos_ - start), tok_.line,
                    tok_.column};
            return;
        }
        static const std::string symbols = "+-*/^()[],";
        if (symbols.find(c) != std::string::npos) {
            ++pos_;
            ++col_;
            tok_ = {Token::Kind::Symbol, std::string(1, c), tok_.line, tok_.column};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

bool is_symbol(const Token& t, char c) {
    return t.kind == Token::Kind::Symbol && t.text.size() == 1 && t.text[0] == c;
}

void expect_symbol(Lexer& lex, char c) {
    if (!is_symbol(lex.peek(), c))
        lex.fail(std::string("expected '") + c + "'");
    lex.take();
}

class PolyParser {
  public:
    PolyParser(Lexer& lex, ContextPtr ctx) : lex_(lex), ctx_(std::move(ctx)) {}

    Polynomial parse() {
        Polynomial sum = parse_signed_term();
        while (is_symbol(lex_.peek(), '+') || is_symbol(lex_.peek(), '-')) {
            bool minus = lex_.take().text[0] == '-';
            Polynomial t = parse_signed_term();
            sum = minus ? sum - t : sum + t;
        }
        return sum;
    }

  private:
    Polynomial parse_signed_term() {
        bool minus = false;
        while (is_symbol(lex_.peek(), '+') || is_symbol(lex_.peek(), '-')) {
            if (lex_.take().text[0] == '-') minus = !minus;
        }
        Polynomial t = parse_term();
        return minus ? -t : t;
    }

    bool at_factor_start() const {
        return lex_.peek().kind == Token::Kind::Ident;
    }

    Polynomial parse_term() {
        const Field& field = ctx_->field();
        Coeff c = Coeff::one(field);
        Monomial m(ctx_->nvars());
        bool saw_anything = false;

        if (lex_.peek().kind == Token::Kind::Int) {
            mpz_class num(lex_.take().text);
            if (is_symbol(lex_.peek(), '/')) {
                lex_.take();
                if (lex_.peek().kind != Token::Kind::Int)
                    lex_.fail("expected denominator after '/'");
                mpz_class den(lex_.take().text);
                if (den == 0) lex_.fail("zero denominator in coefficient");
                c = Coeff::from_fraction(field, num, den);
            } else {
                c = Coeff::from_integer(field, num);
            }
            saw_anything = true;
        }
        for (;;) {
            if (is_symbol(lex_.peek(), '*')) {
                lex_.take();
                if (!at_factor_start()) lex_.fail("expected variable after '*'");
            }
            if (!at_factor_start()) break;
            Token id = lex_.take();
            auto idx = ctx_->var_index(id.text);
            if (!idx)
                throw ParseError("unknown variable '" + id.text + "'", id.line, id.column);
            std::uint32_t exp = 1;
            if (is_symbol(lex_.peek(), '^')) {
                lex_.take();
                if (lex_.peek().kind != Token::Kind::Int)
                    lex_.fail("expected exponent after '^'");
                exp = static_cast<std::uint32_t>(std::stoul(lex_.take().text));
            }
            m.e[*idx] += exp;
            saw_anything = true;
        }
        if (!saw_anything) lex_.fail("expected a term");
        if (c.is_zero()) return Polynomial::zero(ctx_);
        return Polynomial::from_terms(ctx_, {Term{std::move(m), std::move(c)}});
    }

    Lexer& lex_;
    ContextPtr ctx_;
};

Polynomial parse_poly_text(Lexer& lex, const ContextPtr& ctx) {
    PolyParser p(lex, ctx);
    return p.parse();
}

void expect_end(Lexer& lex) {
    if (lex.peek().kind != Token::Kind::End) lex.fail("trailing input");
}

}  // namespace

RingPtr parse_ring(const std::string& text) {
    Lexer lex(text);

    Token field_tok = lex.take();
    if (field_tok.kind != Token::Kind::Ident)
        throw ParseError("expected field (QQ or GF(p))", field_tok.line, field_tok.column);
    Field field = Field::rationals();
    if (field_tok.text == "QQ") {
        // rationals
    } else if (field_tok.text == "GF") {
        expect_symbol(lex, '(');
        if (lex.peek().kind != Token::Kind::Int) lex.fail("expected prime modulus");
        Token p = lex.take();
        mpz_class pz(p.text);
        if (pz > static_cast<unsigned long>(kMaxPrimeModulus))
            throw ParseError("prime modulus exceeds word-size cap", p.line, p.column);
        try {
            field = Field::prime_field(pz.get_ui());
        } catch (const InvalidArgumentError& e) {
            throw ParseError(e.what(), p.line, p.column);
        }
        expect_symbol(lex, ')');
    } else {
        throw ParseError("unknown field '" + field_tok.text + "' (expected QQ or GF(p))",
                         field_tok.line, field_tok.column);
    }

    expect_symbol(lex, '[');
    std::vector<std::string> vars;
    if (!is_symbol(lex.peek(), ']')) {
        for (;;) {
            Token id = lex.take();
            if (id.kind != Token::Kind::Ident)
                throw ParseError("expected variable name", id.line, id.column);
            if (id.text == kMainVar)
                throw ParseError("'" + kMainVar +
                                     "' is reserved for the main indeterminate",
                                 id.line, id.column);
            for (const auto& v : vars)
                if (v == id.text)
                    throw ParseError("duplicate variable '" + id.text + "'", id.line,
                                     id.column);
            vars.push_back(id.text);
            if (is_symbol(lex.peek(), ',')) {
                lex.take();
                continue;
            }
            break;
        }
    }
    expect_symbol(lex, ']');

    std::vector<Polynomial> j_gens;
    if (is_symbol(lex.peek(), '/')) {
        lex.take();
        expect_symbol(lex, '(');
        ContextPtr base = RingSpec::base_context_for(field, vars);
        for (;;) {
            j_gens.push_back(parse_poly_text(lex, base));
            if (is_symbol(lex.peek(), ',')) {
                lex.take();
                continue;
            }
            break;
        }
        expect_symbol(lex, ')');
    }

    bool domain = false;
    if (lex.peek().kind == Token::Kind::Ident && lex.peek().text == "domain") {
        lex.take();
        domain = true;
    }
    expect_end(lex);
    return RingSpec::make(field, std::move(vars), std::move(j_gens), domain);
}

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
    Lexer lex(text);
    Polynomial p = parse_poly_text(lex, ring->full_ctx());
    expect_end(lex);
    return ring->reduce_full(p);
}

Polynomial parse_poly_base(const std::string& text, const RingPtr& ring) {
    Lexer lex(text);
    Polynomial p = parse_poly_text(lex, ring->full_ctx());
    expect_end(lex);
    if (p.degree_in(ring->full_ctx()->main_var()) > 0)
        throw ParseError("main indeterminate " + kMainVar +
                             " not allowed in a base-ring element",
                         1, 1);
    return ring->reduce_base(ring->project_to_base(p));
}

std::vector<Polynomial> parse_poly_list(const std::string& text, const RingPtr& ring) {
    Lexer lex(text);
    std::vector<Polynomial> out;
    for (;;) {
        out.push_back(ring->reduce_full(parse_poly_text(lex, ring->full_ctx())));
        if (is_symbol(lex.peek(), ',')) {
            lex.take();
            continue;
        }
        break;
    }
    expect_end(lex);
    return out;
}

std::vector<Polynomial> parse_poly_list_base(const std::string& text, const RingPtr& ring) {
    std::vector<Polynomial> full = parse_poly_list(text, ring);
    std::vector<Polynomial> out;
    for (const auto& p : full) {
        if (p.degree_in(ring->full_ctx()->main_var()) > 0)
            throw ParseError("main indeterminate " + kMainVar +
                                 " not allowed in ideal generators",
                             1, 1);
        out.push_back(ring->reduce_base(ring->project_to_base(p)));
    }
    return out;
}

}  // namespace polygauss
