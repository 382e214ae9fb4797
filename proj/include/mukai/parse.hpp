#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "charclasses.hpp"
#include "cohomology_class.hpp"
#include "duality.hpp"
#include "error.hpp"
#include "kexpr.hpp"
#include "series.hpp"

namespace mukai {

namespace detail {

struct token {
    enum class kind { number, ident, quoted, symbol, end } type;
    std::string text;
    std::size_t pos;
};

inline std::vector<token> tokenize(std::string_view s)
{
    std::vector<token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        const unsigned char ch = static_cast<unsigned char>(s[k]);
        if (std::isspace(ch)) {
            ++k;
        } else if (std::isdigit(ch)) {
            std::size_t b = k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            out.push_back({token::kind::number, std::string(s.substr(b, k - b)), b});
        } else if (std::isalpha(ch) || ch == '_') {
            std::size_t b = k;
            while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
            out.push_back({token::kind::ident, std::string(s.substr(b, k - b)), b});
        } else if (ch == '{') {
            const std::size_t close = s.find('}', k);
            if (close == std::string_view::npos) throw parse_error("unterminated '{'", k);
            out.push_back({token::kind::quoted, std::string(s.substr(k + 1, close - k - 1)), k});
            k = close + 1;
        } else if (std::string_view("+-*/^()[],").find(static_cast<char>(ch)) != std::string_view::npos) {
            out.push_back({token::kind::symbol, std::string(1, static_cast<char>(ch)), k});
            ++k;
        } else {
            throw parse_error(std::string("unexpected character '") + static_cast<char>(ch) + "'", k);
        }
    }
    out.push_back({token::kind::end, "", s.size()});
    return out;
}

/// Recursive-descent parser for class expressions and K-theory expressions.
/**
 * class := term (('+' | '-') term)*
 * term  := unary (('*' | '/') unary)*
 * unary := '-' unary | power
 * power := atom ('^' '-'? integer)?
 * atom  := integer | 'i' | basis-name | '{' basis-name '}' | '(' class ')' | function '(' ... ')' | keyword
 *
 * kexpr := kterm ('+' kterm)*
 * kterm := kpost ('*' kpost)*
 * kpost := katom ('[' '-'? integer ']')*
 * katom := 'O' ('(' class ')')? | 'T' | 'dual' '(' kexpr ')' | 'box' '(' kexpr ',' kexpr ')' | '(' kexpr ')'
 *
 * Basis names take precedence over keywords. Inside pr1(...), pr2(...) and box(.., ..) the
 * nested expression is read on the corresponding factor of a product space.
 */
class expression_parser {
public:
    explicit expression_parser(std::string_view text) : toks_(tokenize(text)) {}

    coh_class parse_class_to_end(const space_ptr& s)
    {
        coh_class c = parse_class(s);
        expect_end();
        return c;
    }

    kexpr parse_kexpr_to_end(const space_ptr& s)
    {
        kexpr e = parse_kexpr(s);
        expect_end();
        return e;
    }

private:
    const token& peek() const { return toks_[pos_]; }
    bool at_symbol(const char* sym) const { return peek().type == token::kind::symbol && peek().text == sym; }
    bool at_ident(const char* id) const { return peek().type == token::kind::ident && peek().text == id; }

    [[noreturn]] void fail(const std::string& expected) const
    {
        const token& t = peek();
        const std::string got = t.type == token::kind::end ? "end of input" : "'" + t.text + "'";
        throw parse_error("expected " + expected + ", got " + got, t.pos);
    }

    void expect_symbol(const char* sym)
    {
        if (!at_symbol(sym)) fail(std::string("'") + sym + "'");
        ++pos_;
    }

    void expect_end()
    {
        if (peek().type != token::kind::end) fail("end of input or an operator");
    }

    long parse_signed_integer()
    {
        bool neg = false;
        if (at_symbol("-")) {
            neg = true;
            ++pos_;
        }
        if (peek().type != token::kind::number) fail("integer");
        const long v = std::stol(peek().text);
        ++pos_;
        return neg ? -v : v;
    }

    coh_class parse_class(const space_ptr& s)
    {
        coh_class acc = parse_term(s);
        while (at_symbol("+") || at_symbol("-")) {
            const bool minus = at_symbol("-");
            ++pos_;
            coh_class rhs = parse_term(s);
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    coh_class parse_term(const space_ptr& s)
    {
        coh_class acc = parse_unary(s);
        while (at_symbol("*") || at_symbol("/")) {
            const bool divide = at_symbol("/");
            const std::size_t at = peek().pos;
            ++pos_;
            coh_class rhs = parse_unary(s);
            acc = divide ? acc * invert(rhs, at) : acc * rhs;
        }
        return acc;
    }

    static coh_class invert(const coh_class& c, std::size_t at)
    {
        const gauss_rational c0 = c.constant_term();
        if (c0.is_zero()) throw parse_error("division by a class without constant term", at);
        return series_inverse(c * c0.inverse()) * c0.inverse();
    }

    coh_class parse_unary(const space_ptr& s)
    {
        if (at_symbol("-")) {
            ++pos_;
            return -parse_unary(s);
        }
        if (at_symbol("+")) {
            ++pos_;
            return parse_unary(s);
        }
        return parse_power(s);
    }

    coh_class parse_power(const space_ptr& s)
    {
        coh_class base = parse_atom(s);
        if (!at_symbol("^")) return base;
        const std::size_t at = peek().pos;
        ++pos_;
        const long e = parse_signed_integer();
        coh_class b = e < 0 ? invert(base, at) : base;
        coh_class acc = coh_class::unit(s);
        for (long k = 0; k < (e < 0 ? -e : e); ++k) {
            acc = acc * b;
            if (acc.is_zero()) break;
        }
        return acc;
    }

    coh_class parse_call_class(const space_ptr& s)
    {
        expect_symbol("(");
        coh_class c = parse_class(s);
        expect_symbol(")");
        return c;
    }

    kexpr parse_call_kexpr(const space_ptr& s)
    {
        expect_symbol("(");
        kexpr e = parse_kexpr(s);
        expect_symbol(")");
        return e;
    }

    coh_class parse_atom(const space_ptr& s)
    {
        const token t = peek();
        if (t.type == token::kind::number) {
            ++pos_;
            return coh_class::scalar(s, gauss_rational(rational(t.text)));
        }
        if (at_symbol("(")) return parse_call_class(s);
        if (t.type == token::kind::quoted) {
            ++pos_;
            if (auto k = s->find(t.text)) return coh_class::basis(s, *k);
            throw unknown_basis_name(t.text, t.pos);
        }
        if (t.type != token::kind::ident) fail("number, basis name, 'i', function or '('");
        ++pos_;
        if (auto k = s->find(t.text)) return coh_class::basis(s, *k);
        const std::string& id = t.text;
        if (id == "i") return coh_class::scalar(s, gauss_rational::i());
        if (id == "pr1" || id == "pr2") {
            if (!s->is_product()) throw parse_error(id + " used on non-product space '" + s->name() + "'", t.pos);
            const factor f = id == "pr1" ? factor::first : factor::second;
            return pullback(s, f, parse_call_class(f == factor::first ? s->first() : s->second()));
        }
        if (id == "exp") return guarded(t, [&] { return series_exp(parse_call_class(s)); });
        if (id == "log") return guarded(t, [&] { return series_log(parse_call_class(s)); });
        if (id == "sqrt") return guarded(t, [&] { return series_sqrt(parse_call_class(s)); });
        if (id == "tau") return tau(parse_call_class(s));
        if (id == "vdual") return dualize(parse_call_class(s));
        if (id == "ch") return chern_character(parse_call_kexpr(s));
        if (id == "v") return mukai_vector(parse_call_kexpr(s));
        if (id == "td") return todd(s);
        if (id == "sqrt_td") return sqrt_todd(s);
        if (id == "c") return tangent_chern(s);
        if (id == "diag") {
            if (!s->is_product() || !same_space(*s->first(), *s->second()))
                throw parse_error("diag needs a space of the form X x X", t.pos);
            return diagonal_class(s->first(), s);
        }
        throw unknown_basis_name(id, t.pos);
    }

    template <class F>
    static coh_class guarded(const token& t, F f)
    {
        try {
            return f();
        } catch (const bad_constant_term& e) {
            throw parse_error(t.text + ": " + e.what(), t.pos);
        }
    }

    kexpr parse_kexpr(const space_ptr& s)
    {
        kexpr acc = parse_kterm(s);
        while (at_symbol("+")) {
            ++pos_;
            acc = kexpr::sum(acc, parse_kterm(s));
        }
        return acc;
    }

    kexpr parse_kterm(const space_ptr& s)
    {
        kexpr acc = parse_kpost(s);
        while (at_symbol("*")) {
            ++pos_;
            acc = kexpr::tensor(acc, parse_kpost(s));
        }
        return acc;
    }

    kexpr parse_kpost(const space_ptr& s)
    {
        kexpr e = parse_katom(s);
        while (at_symbol("[")) {
            ++pos_;
            const long n = parse_signed_integer();
            expect_symbol("]");
            e = kexpr::shift(e, n);
        }
        return e;
    }

    kexpr parse_katom(const space_ptr& s)
    {
        if (at_symbol("(")) return parse_call_kexpr(s);
        const token t = peek();
        if (t.type != token::kind::ident) fail("'O', 'T', 'dual', 'box' or '('");
        ++pos_;
        if (t.text == "O") {
            if (!at_symbol("(")) return kexpr::structure(s);
            const std::size_t at = peek().pos;
            coh_class c1 = parse_call_class(s);
            for (const auto& [k, c] : c1.terms()) {
                const auto& b = s->basis(k);
                if (b.p != 1 || b.q != 1)
                    throw bidegree_violation("O(c) needs c of bidegree (1,1); component " + b.name + " has (" +
                                                 std::to_string(b.p) + "," + std::to_string(b.q) + ")",
                                             at);
            }
            return kexpr::line_bundle(c1);
        }
        if (t.text == "T") return kexpr::tangent(s);
        if (t.text == "dual") return kexpr::dual(parse_call_kexpr(s));
        if (t.text == "box") {
            if (!s->is_product()) throw parse_error("box used on non-product space '" + s->name() + "'", t.pos);
            expect_symbol("(");
            kexpr a = parse_kexpr(s->first());
            expect_symbol(",");
            kexpr b = parse_kexpr(s->second());
            expect_symbol(")");
            return kexpr::external_tensor(s, a, b);
        }
        --pos_;
        fail("'O', 'T', 'dual', 'box' or '('");
    }

    std::vector<token> toks_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse a class expression such as "1 + 3*H + 5*H^2" on the given space.
inline coh_class parse_class_expr(std::string_view text, const space_ptr& s)
{
    return detail::expression_parser(text).parse_class_to_end(s);
}

/// Parse a K-theory expression such as "dual(O(2*H))[1]" on the given space.
inline kexpr parse_kexpr(std::string_view text, const space_ptr& s)
{
    return detail::expression_parser(text).parse_kexpr_to_end(s);
}

/// Parse a scalar in Q(i), e.g. "3/4 - 1/2*i".
inline gauss_rational parse_scalar(std::string_view text)
{
    static const space_ptr point = projective_space(0);
    return parse_class_expr(text, point).constant_term();
}

/// Resolve a built-in space name: pN, tN, k3, and products "A x B" (left-associative,
/// parentheses allowed).
inline space_ptr builtin_space(std::string_view text)
{
    struct reader {
        std::string_view s;
        std::size_t k = 0;

        void skip()
        {
            while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        }
        space_ptr atom()
        {
            skip();
            if (k < s.size() && s[k] == '(') {
                ++k;
                space_ptr inner = chain();
                skip();
                if (k >= s.size() || s[k] != ')') throw parse_error("expected ')' in space name", k);
                ++k;
                return inner;
            }
            std::size_t b = k;
            while (k < s.size() && std::isalnum(static_cast<unsigned char>(s[k]))) ++k;
            const std::string word(s.substr(b, k - b));
            if (word == "k3") return k3();
            if (word == "pt") return projective_space(0);
            if (word.size() >= 2 && (word[0] == 'p' || word[0] == 't') &&
                word.find_first_not_of("0123456789", 1) == std::string::npos && word.size() <= 3) {
                const int n = std::stoi(word.substr(1));
                return word[0] == 'p' ? projective_space(n) : torus(n);
            }
            throw parse_error("unknown space '" + word + "' (expected pN, tN, k3 or pt)", b);
        }
        space_ptr chain()
        {
            space_ptr acc = atom();
            for (;;) {
                skip();
                if (k < s.size() && s[k] == 'x' && (k + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[k + 1])))) {
                    ++k;
                    acc = product(acc, atom());
                } else {
                    return acc;
                }
            }
        }
    } r{text};
    space_ptr out = r.chain();
    r.skip();
    if (r.k != text.size()) throw parse_error("trailing text in space name", r.k);
    return out;
}

} // namespace mukai
