#include "torsionforge/catalog.hpp"

#include "torsionforge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace torsionforge {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 0;
    int column = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(text[i++]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = column;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok.kind = Tok::Ident;
            while (i < text.size()
                   && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                tok.text += text[i];
                advance(text[i++]);
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = Tok::Int;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                tok.text += text[i];
                advance(text[i++]);
            }
        } else if (std::string("();=+-*/^{}[]").find(c) != std::string::npos) {
            tok.kind = Tok::Punct;
            tok.text = c;
            advance(c);
            ++i;
        } else {
            throw SyntaxError(line, column, "a token (identifier, number, or operator)");
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.line = line;
    end.column = column;
    out.push_back(end);
    return out;
}

class TokenStream {
public:
    explicit TokenStream(const std::vector<Token>& tokens) : tokens_(tokens) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
    bool at_end() const { return peek().kind == Tok::End; }

    bool accept_punct(const char* p) {
        if (peek().kind == Tok::Punct && peek().text == p) {
            next();
            return true;
        }
        return false;
    }
    void expect_punct(const char* p) {
        if (!accept_punct(p)) fail(std::string("'") + p + "'");
    }
    std::string expect_ident(const char* what) {
        if (peek().kind != Tok::Ident) fail(what);
        return next().text;
    }
    int expect_int(const char* what) {
        if (peek().kind != Tok::Int) fail(what);
        return std::stoi(next().text);
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(peek().line, peek().column, expected);
    }

private:
    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

// Recursive-descent expression parser producing KForms (degree 0 = scalars).
class ExprParser {
public:
    ExprParser(RingPtr ring, TokenStream& ts) : ring_(std::move(ring)), ts_(ts) {}

    KForm parse() { return parse_sum(); }

private:
    KForm parse_sum() {
        KForm acc = parse_product();
        while (true) {
            if (ts_.accept_punct("+")) {
                acc = sum(std::move(acc), parse_product(), false);
            } else if (ts_.accept_punct("-")) {
                acc = sum(std::move(acc), parse_product(), true);
            } else {
                return acc;
            }
        }
    }

    // '+'/'-' tolerate mixing a zero form into any degree.
    static KForm sum(KForm a, KForm b, bool subtract) {
        if (a.degree() != b.degree()) {
            if (a.is_zero()) {
                KForm zero(b.ring(), b.degree());
                a = std::move(zero);
            } else if (b.is_zero()) {
                KForm zero(a.ring(), a.degree());
                b = std::move(zero);
            }
        }
        return subtract ? a - b : a + b;
    }

    KForm parse_product() {
        KForm acc = parse_unary();
        while (true) {
            if (ts_.accept_punct("*")) {
                acc = wedge(acc, parse_unary());
            } else if (ts_.accept_punct("/")) {
                const Token& at = ts_.peek();
                KForm divisor = parse_unary();
                if (divisor.degree() != 0)
                    throw SyntaxError(at.line, at.column, "a degree-0 divisor");
                Scalar value = divisor.coefficient({});
                if (value.is_zero()) throw DivisionByZero();
                acc = wedge(acc, KForm::from_scalar(Scalar::one(ring_) / value));
            } else {
                return acc;
            }
        }
    }

    KForm parse_unary() {
        if (ts_.accept_punct("-")) return -parse_unary();
        return parse_power();
    }

    KForm parse_power() {
        KForm acc = parse_atom();
        while (ts_.accept_punct("^")) {
            if (ts_.peek().kind == Tok::Int) {
                int n = ts_.expect_int("an integer exponent");
                acc = wedge_pow(acc, n);
            } else {
                acc = wedge(acc, parse_atom());
            }
        }
        return acc;
    }

    KForm parse_atom() {
        const Token& tok = ts_.peek();
        if (ts_.accept_punct("(")) {
            KForm inner = parse_sum();
            ts_.expect_punct(")");
            return inner;
        }
        if (tok.kind == Tok::Int) {
            ts_.next();
            return KForm::from_scalar(Scalar::constant(ring_, rational_from_string(tok.text)));
        }
        if (tok.kind == Tok::Ident) {
            ts_.next();
            // e<digits> is a wedge of basis covectors when not a parameter name.
            if (tok.text.size() > 1 && tok.text[0] == 'e' && !ring_->index_of(tok.text)
                && std::all_of(tok.text.begin() + 1, tok.text.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                KForm::Indices indices;
                for (std::size_t i = 1; i < tok.text.size(); ++i) {
                    int idx = tok.text[i] - '0';
                    if (idx < 1 || idx > 6) throw DimensionError(idx);
                    indices.push_back(idx);
                }
                return KForm::basis(ring_, indices);
            }
            if (!ring_->index_of(tok.text))
                throw UndeclaredParam(tok.text, tok.line, tok.column);
            return KForm::from_scalar(Scalar::var(ring_, tok.text));
        }
        ts_.fail("a parameter, number, basis covector, or '('");
    }

    RingPtr ring_;
    TokenStream& ts_;
};

KForm parse_expression(const RingPtr& ring, TokenStream& ts) {
    return ExprParser(ring, ts).parse();
}

struct RadicalText {
    std::string name;
    std::vector<Token> tokens;  // radicand expression span
};

// First pass: collect declarations in order; radicand token spans are kept
// for a second parse over the shadow ring.
struct Declarations {
    std::vector<Ring::Decl> decls;
    std::vector<RadicalText> radicals;
};

Declarations collect_declarations(const std::vector<Token>& tokens) {
    Declarations out;
    TokenStream ts(tokens);
    auto skip_statement = [&](bool braces) {
        int depth = 0;
        while (!ts.at_end()) {
            const Token& t = ts.peek();
            if (t.kind == Tok::Punct && t.text == "{") ++depth;
            if (t.kind == Tok::Punct && t.text == "}") {
                --depth;
                ts.next();
                if (braces && depth == 0) return;
                continue;
            }
            if (!braces && t.kind == Tok::Punct && t.text == ";") {
                ts.next();
                return;
            }
            ts.next();
        }
    };
    while (!ts.at_end()) {
        if (ts.peek().kind != Tok::Ident) ts.fail("a statement keyword");
        std::string kw = ts.peek().text;
        if (kw == "param" || kw == "sign") {
            ts.next();
            Ring::Decl d;
            d.name = ts.expect_ident("a parameter name");
            d.kind = (kw == "sign") ? ParamKind::Sign : ParamKind::Free;
            ts.expect_punct(";");
            out.decls.push_back(std::move(d));
        } else if (kw == "radical") {
            ts.next();
            RadicalText rt;
            rt.name = ts.expect_ident("a parameter name");
            ts.expect_punct("=");
            while (!(ts.peek().kind == Tok::Punct && ts.peek().text == ";")) {
                if (ts.at_end()) ts.fail("';'");
                rt.tokens.push_back(ts.next());
            }
            ts.expect_punct(";");
            Token end;
            end.line = rt.tokens.empty() ? 0 : rt.tokens.back().line;
            rt.tokens.push_back(end);
            Ring::Decl d;
            d.name = rt.name;
            d.kind = ParamKind::Radical;
            out.decls.push_back(std::move(d));
            out.radicals.push_back(std::move(rt));
        } else if (kw == "d") {
            skip_statement(false);
        } else if (kw == "connection") {
            skip_statement(true);
        } else {
            ts.fail("'param', 'sign', 'radical', 'd', or 'connection'");
        }
    }
    return out;
}

// Radicand polynomials are parsed over a ring where every declared name is
// free; the real ring then re-applies the square rewrites.
void fill_radicands(Declarations& declarations) {
    std::vector<Ring::Decl> shadow;
    for (const auto& d : declarations.decls) shadow.push_back({d.name, ParamKind::Free, {}});
    auto shadow_ring = Ring::make(shadow);
    for (const auto& rt : declarations.radicals) {
        TokenStream ts(rt.tokens);
        KForm expr = parse_expression(shadow_ring, ts);
        if (!ts.at_end()) ts.fail("end of the radicand expression");
        if (expr.degree() != 0)
            throw DegreeMismatch("radicand of '" + rt.name + "' must be a scalar");
        Scalar value = expr.coefficient({});
        auto den = value.den().as_constant();
        if (!den)
            throw Error("radicand of '" + rt.name + "' must be polynomial in the parameters");
        Poly poly = value.num().divided_by(*den, Poly::Mono(shadow_ring->size(), 0));
        Ring::Decl* target = nullptr;
        for (auto& d : declarations.decls)
            if (d.name == rt.name) target = &d;
        for (const auto& [mono, coeff] : poly.terms()) {
            std::map<std::string, int> names;
            for (std::size_t i = 0; i < mono.size(); ++i)
                if (mono[i] != 0) names[shadow_ring->param(i).name] = mono[i];
            target->radicand.push_back({coeff, std::move(names)});
        }
    }
}

}  // namespace

KForm parse_form(const RingPtr& ring, const std::string& text) {
    auto tokens = tokenize(text);
    TokenStream ts(tokens);
    KForm result = parse_expression(ring, ts);
    if (!ts.at_end()) ts.fail("end of the expression");
    return result;
}

Scalar parse_scalar(const RingPtr& ring, const std::string& text) {
    KForm form = parse_form(ring, text);
    if (form.degree() != 0) throw DegreeMismatch("expected a scalar expression");
    return form.coefficient({});
}

Model parse_model(const std::string& text) {
    auto tokens = tokenize(text);
    auto declarations = collect_declarations(tokens);
    fill_radicands(declarations);
    auto ring = Ring::make(declarations.decls);

    std::vector<KForm> de(6, KForm(ring, 2));
    std::map<std::string, Connection> connections;

    TokenStream ts(tokens);
    while (!ts.at_end()) {
        std::string kw = ts.expect_ident("a statement keyword");
        if (kw == "param" || kw == "sign") {
            ts.expect_ident("a parameter name");
            ts.expect_punct(";");
        } else if (kw == "radical") {
            ts.expect_ident("a parameter name");
            ts.expect_punct("=");
            while (!ts.accept_punct(";")) ts.next();
        } else if (kw == "d") {
            std::string target = ts.expect_ident("a basis covector e1..e6");
            if (target.size() != 2 || target[0] != 'e' || target[1] < '1' || target[1] > '6')
                ts.fail("a basis covector e1..e6");
            int k = target[1] - '0';
            ts.expect_punct("=");
            KForm expr = parse_expression(ring, ts);
            ts.expect_punct(";");
            if (!expr.is_zero() && expr.degree() != 2)
                throw DegreeMismatch("d e" + std::to_string(k) + " must be a 2-form");
            if (expr.degree() == 2) de[k - 1] = std::move(expr);
        } else if (kw == "connection") {
            std::string name = ts.expect_ident("a connection name");
            ts.expect_punct("{");
            Connection conn(ring);
            while (!ts.accept_punct("}")) {
                std::string s = ts.expect_ident("'s'");
                if (s != "s") ts.fail("'s'");
                ts.expect_punct("[");
                int i = ts.expect_int("a row index");
                ts.expect_punct("]");
                ts.expect_punct("[");
                int j = ts.expect_int("a column index");
                ts.expect_punct("]");
                if (i < 1 || i > 6) throw DimensionError(i);
                if (j < 1 || j > 6) throw DimensionError(j);
                ts.expect_punct("=");
                KForm expr = parse_expression(ring, ts);
                ts.expect_punct(";");
                if (!expr.is_zero() && expr.degree() != 1)
                    throw DegreeMismatch("connection entries must be 1-forms");
                if (expr.degree() == 1) conn.set_sigma(i, j, std::move(expr));
            }
            connections.emplace(std::move(name), std::move(conn));
        } else {
            ts.fail("'param', 'sign', 'radical', 'd', or 'connection'");
        }
    }

    Model m;
    m.ring = ring;
    m.algebra = std::make_shared<const LieAlgebra>(ring, "user", std::move(de));
    m.structure = std::make_shared<const SU3Structure>(m.algebra);
    m.connections = std::move(connections);
    return m;
}

}  // namespace torsionforge
