#include <gtest/gtest.h>

#include <random>
#include <string>

#include "mukai/builders.hpp"
#include "mukai/charclasses.hpp"
#include "mukai/duality.hpp"
#include "mukai/parse.hpp"
#include "mukai/random.hpp"

using namespace mukai;

namespace {

gauss_rational q(long n, long d = 1) { return gauss_rational::fraction(n, d); }

std::size_t error_position(const std::string& text, const space_ptr& s)
{
    try {
        parse_class_expr(text, s);
    } catch (const parse_error& e) {
        return e.position();
    }
    return std::string::npos;
}

} // namespace

TEST(ParseClass, Examples)
{
    const auto p2 = projective_space(2);
    const auto v = parse_class_expr("1 + 3*H + 5*H^2", p2);
    EXPECT_EQ(v.coeff(0), gauss_rational(1));
    EXPECT_EQ(v.coeff(1), gauss_rational(3));
    EXPECT_EQ(v.coeff(2), gauss_rational(5));
    EXPECT_EQ(parse_class_expr("  1+3 * H+5*H ^ 2 ", p2), v);
    EXPECT_EQ(parse_class_expr("(1+H)^3", p2), parse_class_expr("1 + 3*H + 3*H^2", p2));
    EXPECT_EQ(parse_class_expr("1/(1+H)", p2), parse_class_expr("1 - H + H^2", p2));
    EXPECT_EQ(parse_class_expr("(1+H)^-1", p2), parse_class_expr("1 - H + H^2", p2));
    EXPECT_EQ(parse_class_expr("3/4*H - i*H^2/2", p2),
              coh_class::basis(p2, 1, q(3, 4)) - coh_class::basis(p2, 2, gauss_rational::i() * q(1, 2)));
    EXPECT_EQ(parse_class_expr("-H", p2), -coh_class::basis(p2, 1));
    EXPECT_EQ(parse_class_expr("exp(2*H)", p2), parse_class_expr("1 + 2*H + 2*H^2", p2));
    EXPECT_EQ(parse_class_expr("log(1+H)", p2), parse_class_expr("H - H^2/2", p2));
    EXPECT_EQ(parse_class_expr("sqrt(1+2*H)", p2), parse_class_expr("1 + H - 1/2*H^2", p2));
    EXPECT_EQ(parse_class_expr("td", p2), todd(p2));
    EXPECT_EQ(parse_class_expr("c", p2), tangent_chern(p2));
    EXPECT_EQ(parse_class_expr("vdual(1)", p2), dualize(coh_class::unit(p2)));
    EXPECT_EQ(parse_class_expr("tau(H)", p2), -coh_class::basis(p2, 1));
    EXPECT_EQ(parse_class_expr("ch(O(H))", p2), series_exp(coh_class::basis(p2, 1)));
    EXPECT_EQ(parse_class_expr("v(O)", p2), sqrt_todd(p2));
}

TEST(ParseClass, ProductsAndDiagonal)
{
    const auto p1 = projective_space(1);
    const auto pp = product(p1, p1);
    EXPECT_EQ(parse_class_expr("diag", pp), diagonal_class(p1, pp));
    EXPECT_EQ(parse_class_expr("pr1(H) + pr2(H)", pp), diagonal_class(p1, pp));
    EXPECT_EQ(parse_class_expr("pr1(H)*pr2(H)", pp), coh_class::point(pp));
    EXPECT_THROW(parse_class_expr("diag", product(p1, projective_space(2))), parse_error);
    EXPECT_THROW(parse_class_expr("pr1(H)", p1), parse_error);
}

TEST(ParseClass, TorusAndK3Names)
{
    const auto t = torus(1);
    const auto ab = parse_class_expr("a1*b1", t);
    EXPECT_EQ(integrate(ab), gauss_rational(1));
    EXPECT_EQ(parse_class_expr("b1*a1", t), -ab);
    const auto x = k3();
    EXPECT_EQ(integrate(parse_class_expr("u2a*u2b", x)), gauss_rational(1));
    EXPECT_EQ(integrate(parse_class_expr("e1*e1", x)), gauss_rational(-2));
    EXPECT_EQ(parse_class_expr("sqrt(td)", x), parse_class_expr("1 + pt", x));
}

TEST(ParseClass, Errors)
{
    const auto p2 = projective_space(2);
    EXPECT_EQ(error_position("H + Q", p2), 4u);
    EXPECT_EQ(error_position("H +", p2), 3u);
    EXPECT_EQ(error_position("(1 + H", p2), 6u);
    EXPECT_EQ(error_position("1 + H)", p2), 5u);
    EXPECT_EQ(error_position("H $ 2", p2), 2u);
    EXPECT_THROW(parse_class_expr("H + Q", p2), unknown_basis_name);
    EXPECT_THROW(parse_class_expr("1/H", p2), parse_error);
    EXPECT_THROW(parse_class_expr("1/0", p2), parse_error);
    EXPECT_THROW(parse_class_expr("sqrt(H)", p2), parse_error);
    EXPECT_THROW(parse_class_expr("H^x", p2), parse_error);
    EXPECT_THROW(parse_class_expr("", p2), parse_error);
    try {
        parse_class_expr("1 + * H", p2);
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 4u);
        EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos) << e.what();
    }
}

TEST(ParseKExpr, Examples)
{
    const auto p1 = projective_space(1);
    const auto e = parse_kexpr("dual(O(2*H))[1]", p1);
    EXPECT_EQ(chern_character(e), -parse_class_expr("1 - 2*H", p1));
    EXPECT_EQ(chern_character(parse_kexpr("O + T", p1)), parse_class_expr("2 + 2*H", p1));
    EXPECT_EQ(chern_character(parse_kexpr("O(H) * O(H) * dual(O(3*H))", p1)), parse_class_expr("1 - H", p1));
    EXPECT_EQ(chern_character(parse_kexpr("(O + O(H))[2]", p1)), parse_class_expr("2 + H", p1));
    EXPECT_EQ(chern_character(parse_kexpr("O[-1]", p1)), -coh_class::unit(p1));

    const auto pp = product(p1, p1);
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            const auto text = "box(O(" + std::to_string(a) + "*H), O(" + std::to_string(b) + "*H))";
            const auto k = parse_kexpr(text, pp);
            EXPECT_EQ(chern_character(k),
                      external_product(pp, series_exp(coh_class::basis(p1, 1, a)), series_exp(coh_class::basis(p1, 1, b))));
        }
}

TEST(ParseKExpr, Errors)
{
    const auto p2 = projective_space(2);
    EXPECT_THROW(parse_kexpr("O(H^2)", p2), bidegree_violation);
    EXPECT_THROW(parse_kexpr("O(1 + H)", p2), bidegree_violation);
    EXPECT_THROW(parse_kexpr("O(Q)", p2), unknown_basis_name);
    EXPECT_THROW(parse_kexpr("box(O, O)", p2), parse_error);
    EXPECT_THROW(parse_kexpr("O[", p2), parse_error);
    EXPECT_THROW(parse_kexpr("O + ", p2), parse_error);
    EXPECT_THROW(parse_kexpr("X", p2), parse_error);
    const auto t = torus(1);
    EXPECT_THROW(parse_kexpr("O(a1)", t), bidegree_violation);
}

TEST(ParseScalar, Values)
{
    EXPECT_EQ(parse_scalar("3/2"), q(3, 2));
    EXPECT_EQ(parse_scalar("1/2 + 3/4*i"), q(1, 2) + q(3, 4) * gauss_rational::i());
    EXPECT_EQ(parse_scalar("-i"), -gauss_rational::i());
    EXPECT_EQ(parse_scalar("(1+i)*(1-i)"), gauss_rational(2));
    EXPECT_THROW(parse_scalar("1/0"), parse_error);
}

TEST(Render, RoundTrip)
{
    std::mt19937_64 rng(77);
    for (const auto& s : {projective_space(3), torus(1), torus(2), k3(), product(projective_space(1), torus(1)),
                          product(torus(1), product(projective_space(1), torus(1)))}) {
        for (int t = 0; t < 20; ++t) {
            const auto v = random_class(s, rng, 5, true);
            ASSERT_EQ(parse_class_expr(v.str(), s), v) << s->name() << ": " << v.str();
        }
        for (std::size_t k = 0; k < s->size(); ++k) {
            const auto b = coh_class::basis(s, k, -1);
            ASSERT_EQ(parse_class_expr(b.str(), s), b) << b.str();
        }
    }
    for (int t = 0; t < 50; ++t) {
        const auto c = random_scalar(rng, 9, true);
        ASSERT_EQ(parse_scalar(c.str()), c) << c.str();
    }
}

TEST(Render, Canonical)
{
    const auto p2 = projective_space(2);
    EXPECT_EQ(parse_class_expr("1 + 3*H + 5*H^2", p2).str(), "1 + 3*H + 5*H^2");
    EXPECT_EQ(parse_class_expr("-H", p2).str(), "-H");
    EXPECT_EQ(parse_class_expr("(1+2*i)*H", p2).str(), "(1 + 2*i)*H");
    EXPECT_EQ(parse_class_expr("3/2*H", p2).str(), "3/2*H");
    EXPECT_EQ(parse_class_expr("0*H", p2).str(), "0");
    EXPECT_EQ(diagonal_class(projective_space(1)).str(), "pr2(H) + pr1(H)");
}

TEST(BuiltinSpace, Names)
{
    EXPECT_EQ(builtin_space("p2")->dim(), 2);
    EXPECT_EQ(builtin_space("k3")->size(), 24u);
    EXPECT_EQ(builtin_space("t1")->size(), 4u);
    EXPECT_EQ(builtin_space("pt")->size(), 1u);
    const auto s = builtin_space("p1 x p2 x t1");
    EXPECT_EQ(s->dim(), 4);
    EXPECT_EQ(s->first()->dim(), 3);
    const auto r = builtin_space("p1 x (p2 x t1)");
    EXPECT_EQ(r->second()->dim(), 3);
    EXPECT_THROW(builtin_space("q7"), parse_error);
    EXPECT_THROW(builtin_space("p1 x"), parse_error);
}

TEST(Render, Deterministic)
{
    const auto x = k3();
    const auto a = mukai_vector(parse_kexpr("O(u2a + 2*e3) + T", x)).str();
    const auto b = mukai_vector(parse_kexpr("O(u2a + 2*e3) + T", x)).str();
    EXPECT_EQ(a, b);
}
