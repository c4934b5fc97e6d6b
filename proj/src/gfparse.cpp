#include "riordan/gfparse.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "riordan/error.hpp"

namespace riordan {

namespace {
constexpr long kMaxExponent = 64;
}

GfPtr gf_literal(Rat value) {
    auto e = std::make_shared<GfExpr>();
    e->kind = GfExpr::Kind::Literal;
    e->literal = std::move(value);
    return e;
}

GfPtr gf_var() {
    auto e = std::make_shared<GfExpr>();
    e->kind = GfExpr::Kind::Var;
    return e;
}

namespace {
std::shared_ptr<GfExpr> unary(GfExpr::Kind kind, GfPtr a) {
    auto e = std::make_shared<GfExpr>();
    e->kind = kind;
    e->a = std::move(a);
    return e;
}
std::shared_ptr<GfExpr> binary(GfExpr::Kind kind, GfPtr a, GfPtr b) {
    auto e = std::make_shared<GfExpr>();
    e->kind = kind;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}
}  // namespace

GfPtr gf_neg(GfPtr a) { return unary(GfExpr::Kind::Neg, std::move(a)); }
GfPtr gf_add(GfPtr a, GfPtr b) { return binary(GfExpr::Kind::Add, std::move(a), std::move(b)); }
GfPtr gf_sub(GfPtr a, GfPtr b) { return binary(GfExpr::Kind::Sub, std::move(a), std::move(b)); }
GfPtr gf_mul(GfPtr a, GfPtr b) { return binary(GfExpr::Kind::Mul, std::move(a), std::move(b)); }
GfPtr gf_div(GfPtr a, GfPtr b) { return binary(GfExpr::Kind::Div, std::move(a), std::move(b)); }
GfPtr gf_group(GfPtr a) { return unary(GfExpr::Kind::Group, std::move(a)); }

GfPtr gf_pow(GfPtr a, long exponent) {
    if (exponent > kMaxExponent || exponent < -kMaxExponent)
        throw DomainError("exponent out of range (|k| <= 64)");
    auto e = unary(GfExpr::Kind::Pow, std::move(a));
    e->exponent = exponent;
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    GfPtr run() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("empty input", 0);
        GfPtr e = expr();
        skip_space();
        if (pos_ < text_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    GfPtr expr() {
        GfPtr e = term();
        while (true) {
            const char c = peek();
            if (c != '+' && c != '-') return e;
            ++pos_;
            GfPtr rhs = term();
            e = c == '+' ? gf_add(std::move(e), std::move(rhs)) : gf_sub(std::move(e), std::move(rhs));
        }
    }

    GfPtr term() {
        GfPtr e = factor();
        while (true) {
            const char c = peek();
            if (c != '*' && c != '/') return e;
            ++pos_;
            GfPtr rhs = factor();
            e = c == '*' ? gf_mul(std::move(e), std::move(rhs)) : gf_div(std::move(e), std::move(rhs));
        }
    }

    GfPtr factor() {
        GfPtr base = atom();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer exponent", pos_);
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxExponent) throw ParseError("exponent out of range (|k| <= 64)", at);
            ++pos_;
        }
        return gf_pow(std::move(base), negative ? -value : value);
    }

    GfPtr atom() {
        const char c = peek();
        const std::size_t at = pos_;
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        if (c == '-') {
            ++pos_;
            return gf_neg(atom());
        }
        if (c == '(') {
            ++pos_;
            GfPtr inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return gf_group(std::move(inner));
        }
        if (c == 'x') {
            ++pos_;
            return gf_var();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits.push_back(text_[pos_]);
                ++pos_;
            }
            Rat value(digits);
            value.canonicalize();
            return gf_literal(std::move(value));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

int precedence(GfExpr::Kind k) {
    switch (k) {
        case GfExpr::Kind::Add:
        case GfExpr::Kind::Sub: return 1;
        case GfExpr::Kind::Mul:
        case GfExpr::Kind::Div: return 2;
        case GfExpr::Kind::Pow: return 3;
        default: return 4;  // atoms, including negation and groups
    }
}

void render_into(const GfExpr& e, std::ostringstream& out) {
    auto child = [&out](const GfExpr& c, int min_prec) {
        if (precedence(c.kind) < min_prec) {
            out << '(';
            render_into(c, out);
            out << ')';
        } else {
            render_into(c, out);
        }
    };
    switch (e.kind) {
        case GfExpr::Kind::Literal: out << rat_to_string(e.literal); return;
        case GfExpr::Kind::Var: out << 'x'; return;
        case GfExpr::Kind::Neg:
            out << '-';
            child(*e.a, 4);
            return;
        case GfExpr::Kind::Group:
            out << '(';
            render_into(*e.a, out);
            out << ')';
            return;
        case GfExpr::Kind::Add:
            child(*e.a, 1);
            out << '+';
            child(*e.b, 2);
            return;
        case GfExpr::Kind::Sub:
            child(*e.a, 1);
            out << '-';
            child(*e.b, 2);
            return;
        case GfExpr::Kind::Mul:
            child(*e.a, 2);
            out << '*';
            child(*e.b, 3);
            return;
        case GfExpr::Kind::Div:
            child(*e.a, 2);
            out << '/';
            child(*e.b, 3);
            return;
        case GfExpr::Kind::Pow:
            child(*e.a, 4);
            out << '^';
            if (e.exponent < 0) out << '-';
            out << (e.exponent < 0 ? -e.exponent : e.exponent);
            return;
    }
    throw InternalError("render: bad node kind");
}

// Exact polynomial arithmetic; coefficient vectors with no trailing zeros.
using Poly = std::vector<Rat>;

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b, bool subtract) {
    Poly out = a;
    if (b.size() > out.size()) out.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (subtract)
            out[i] -= b[i];
        else
            out[i] += b[i];
    }
    strip(out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    strip(out);
    return out;
}

int poly_valuation(const Poly& p) {  // p must be nonzero
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<int>(i);
    throw InternalError("poly_valuation: zero polynomial");
}

// Fraction of polynomials with a nonzero denominator; common powers of x
// are cancelled so the valuation of the value is val(num) - val(den) >= 0.
struct Frac {
    Poly num;
    Poly den;  // nonzero
};

void normalize(Frac& f) {
    strip(f.num);
    strip(f.den);
    if (f.den.empty()) throw InternalError("gf eval: zero denominator");
    if (f.num.empty()) {
        f.den = {Rat(1)};
        return;
    }
    const int shift = std::min(poly_valuation(f.num), poly_valuation(f.den));
    if (shift > 0) {
        f.num.erase(f.num.begin(), f.num.begin() + shift);
        f.den.erase(f.den.begin(), f.den.begin() + shift);
    }
}

// Valuation of the fraction's power-series value; num must be nonzero.
int frac_valuation(const Frac& f) { return poly_valuation(f.num) - poly_valuation(f.den); }

Frac frac_pow(Frac base, long k) {
    if (k < 0) {
        if (base.num.empty()) throw DomainError("negative power of zero");
        if (frac_valuation(base) != 0)
            throw DomainError("negative power of a non-unit series");
        std::swap(base.num, base.den);
        k = -k;
    }
    Frac out{{Rat(1)}, {Rat(1)}};
    while (k > 0) {
        if (k & 1) {
            out.num = poly_mul(out.num, base.num);
            out.den = poly_mul(out.den, base.den);
        }
        k >>= 1;
        if (k > 0) {
            base.num = poly_mul(base.num, base.num);
            base.den = poly_mul(base.den, base.den);
        }
    }
    normalize(out);
    return out;
}

Frac eval_frac(const GfExpr& e) {
    switch (e.kind) {
        case GfExpr::Kind::Literal: return Frac{{e.literal}, {Rat(1)}};
        case GfExpr::Kind::Var: return Frac{{Rat(0), Rat(1)}, {Rat(1)}};
        case GfExpr::Kind::Group: return eval_frac(*e.a);
        case GfExpr::Kind::Neg: {
            Frac f = eval_frac(*e.a);
            for (Rat& c : f.num) c = -c;
            return f;
        }
        case GfExpr::Kind::Add:
        case GfExpr::Kind::Sub: {
            const Frac fa = eval_frac(*e.a);
            const Frac fb = eval_frac(*e.b);
            Frac out{poly_add(poly_mul(fa.num, fb.den), poly_mul(fb.num, fa.den),
                              e.kind == GfExpr::Kind::Sub),
                     poly_mul(fa.den, fb.den)};
            normalize(out);
            return out;
        }
        case GfExpr::Kind::Mul: {
            const Frac fa = eval_frac(*e.a);
            const Frac fb = eval_frac(*e.b);
            Frac out{poly_mul(fa.num, fb.num), poly_mul(fa.den, fb.den)};
            normalize(out);
            return out;
        }
        case GfExpr::Kind::Div: {
            const Frac fa = eval_frac(*e.a);
            const Frac fb = eval_frac(*e.b);
            if (fb.num.empty()) throw DomainError("division by zero");
            Frac out{poly_mul(fa.num, fb.den), poly_mul(fa.den, fb.num)};
            normalize(out);
            if (!out.num.empty() && frac_valuation(out) < 0)
                throw DomainError("division result has a pole at zero (Laurent part not representable)");
            return out;
        }
        case GfExpr::Kind::Pow:
            return frac_pow(eval_frac(*e.a), e.exponent);
    }
    throw InternalError("eval: bad node kind");
}

}  // namespace

GfPtr parse(const std::string& text) { return Parser(text).run(); }

std::string render(const GfExpr& e) {
    std::ostringstream out;
    render_into(e, out);
    return out.str();
}

Series eval(const GfExpr& e, int trunc_order) {
    if (trunc_order < 0) throw DomainError("eval: negative truncation order");
    Frac f = eval_frac(e);
    // After normalization the denominator is a unit, so one truncated-ring
    // division gives the exact expansion.
    auto take = [trunc_order](const Poly& p) {
        std::vector<Rat> c(static_cast<std::size_t>(trunc_order) + 1, Rat(0));
        for (std::size_t i = 0; i < p.size() && i <= static_cast<std::size_t>(trunc_order); ++i)
            c[i] = p[i];
        return Series(std::move(c));
    };
    return div(take(f.num), take(f.den));
}

}  // namespace riordan
