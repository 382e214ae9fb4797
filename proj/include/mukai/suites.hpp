#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "builders.hpp"
#include "charclasses.hpp"
#include "pairing.hpp"
#include "random.hpp"
#include "report.hpp"
#include "series.hpp"
#include "transforms.hpp"

namespace mukai {

/// A (1,1) class used to twist line bundles: H on P^n, the first (1,1) basis class on other
/// primitive spaces, and pr1^* h + pr2^* h on products. Zero when there is no (1,1) class.
inline coh_class polarization(const space_ptr& s)
{
    if (s->is_product())
        return pullback(s, factor::first, polarization(s->first())) +
               pullback(s, factor::second, polarization(s->second()));
    for (std::size_t k = 0; k < s->size(); ++k)
        if (s->basis(k).p == 1 && s->basis(k).q == 1) return coh_class::basis(s, k);
    return coh_class::zero(s);
}

namespace detail {

/// tau against pullback and pushforward along both projections of prod.
inline void tau_projection_checks(check_report& r, const space_ptr& prod)
{
    for (factor f : {factor::first, factor::second}) {
        const space_ptr& src = f == factor::first ? prod->first() : prod->second();
        const std::string tag = f == factor::first ? "pr1" : "pr2";
        for (std::size_t k = 0; k < src->size(); ++k) {
            const coh_class v = coh_class::basis(src, k);
            r.expect_equal(tau(pullback(prod, f, v)), pullback(prod, f, tau(v)),
                           [&] { return "pullback " + tag + "^* on " + prod->name() + ", v=" + src->basis(k).name; });
        }
        const int drop = prod->dim() - src->dim();
        for (std::size_t k = 0; k < prod->size(); ++k) {
            const coh_class v = coh_class::basis(prod, k);
            coh_class rhs = tau(pushforward(f, v));
            if (drop % 2) rhs = -rhs;
            r.expect_equal(pushforward(f, tau(v)), rhs,
                           [&] { return "pushforward " + tag + "_* on " + prod->name() + ", v=" + prod->basis(k).name; });
        }
    }
}

} // namespace detail

/// Identities of tau on X. Projections are exercised on X x P^1, P^1 x X, and on X when it is a product.
inline check_report verify_tau_properties(const space_ptr& x, std::uint64_t seed = 1, int samples = 10)
{
    check_report r;
    r.check = "tau-props";
    r.space_names = {x->name()};
    std::mt19937_64 rng(seed);
    const std::size_t n = x->size();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const coh_class a = coh_class::basis(x, i), b = coh_class::basis(x, j);
            r.expect_equal(tau(a * b), tau(a) * tau(b),
                           [&] { return "multiplicative: " + x->basis(i).name + " * " + x->basis(j).name; });
        }
    for (int t = 0; t < samples; ++t) {
        const coh_class u = random_unit_class(x, rng, false);
        r.expect_equal(tau(series_sqrt(u)), series_sqrt(tau(u)), [&] { return "commutes with sqrt: u=" + u.str(); });
    }
    for (std::size_t k = 0; k < n; ++k)
        if (x->degree(k) % 2 == 0) {
            const coh_class v = coh_class::basis(x, k);
            r.expect_equal(tau(tau(v)), v, [&] { return "involution on even classes: v=" + x->basis(k).name; });
        }
    for (int t = 0; t < samples; ++t) {
        const coh_class v = random_class(x, rng, [&](std::size_t k) { return x->degree(k) % 2 == 0; });
        r.expect_equal(tau(tau(v)), v, [&] { return "involution on even classes: v=" + v.str(); });
    }
    for (int t = 0; t < samples; ++t) {
        const coh_class c1 = random_class(x, rng, [&](std::size_t k) {
            return x->basis(k).p == 1 && x->basis(k).q == 1;
        });
        const coh_class ch = chern_character(kexpr::line_bundle(c1));
        const coh_class ch_inv = chern_character(kexpr::line_bundle(-c1));
        r.expect_equal(tau(ch), ch_inv, [&] { return "tau(ch L) = ch(L^-1), c1=" + c1.str(); });
        r.expect_equal(tau(ch), series_inverse(ch), [&] { return "tau(ch L) = ch(L)^-1, c1=" + c1.str(); });
    }
    const space_ptr p1 = projective_space(1);
    detail::tau_projection_checks(r, product(x, p1));
    detail::tau_projection_checks(r, product(p1, x));
    if (x->is_product()) detail::tau_projection_checks(r, x);
    return r;
}

/// Squares and products of square roots for random even unit-term classes, plus the closed form
/// 1 + c1/2 + (4c2 - c1^2)/8 + (8c3 - 4c1c2 + c1^3)/16 of the low-degree terms.
inline check_report verify_sqrt_properties(const space_ptr& x, std::uint64_t seed = 1, int samples = 100)
{
    check_report r;
    r.check = "sqrt-props";
    r.space_names = {x->name()};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < samples; ++t) {
        const coh_class u = random_unit_class(x, rng, true);
        const coh_class v = random_unit_class(x, rng, true);
        const coh_class su = series_sqrt(u);
        r.expect_equal(su * su, u, [&] { return "(sqrt u)^2, u=" + u.str(); });
        r.expect_equal(series_sqrt(u * v), su * series_sqrt(v),
                       [&] { return "sqrt(uv), u=" + u.str() + ", v=" + v.str(); });
        const coh_class c1 = u.degree_part(2), c2 = u.degree_part(4), c3 = u.degree_part(6);
        const coh_class expected = coh_class::unit(x) + c1 * gauss_rational::fraction(1, 2) +
                                   (c2 * gauss_rational(4) - c1 * c1) * gauss_rational::fraction(1, 8) +
                                   (c3 * gauss_rational(8) - c1 * c2 * gauss_rational(4) + c1 * c1 * c1) *
                                       gauss_rational::fraction(1, 16);
        for (int d : {0, 2, 4, 6})
            r.expect_equal(su.degree_part(d), expected.degree_part(d),
                           [&] { return "expansion in degree " + std::to_string(d) + ", u=" + u.str(); });
    }
    return r;
}

/// chi(O(a h), O(b h)) = <v(O(a h)), v(O(b h))> for twists a, b in [-range, range].
inline check_report verify_euler_mukai(const space_ptr& x, int range = 4)
{
    check_report r;
    r.check = "euler";
    r.space_names = {x->name()};
    const coh_class h = polarization(x);
    r.kernel_description = "O(a*h), h=" + h.str();
    for (int a = -range; a <= range; ++a)
        for (int b = -range; b <= range; ++b) {
            const kexpr la = kexpr::line_bundle(h * gauss_rational(a));
            const kexpr lb = kexpr::line_bundle(h * gauss_rational(b));
            r.expect_equal(euler_pairing(la, lb), mukai_pairing(mukai_vector(la), mukai_vector(lb)),
                           [&] { return "a=" + std::to_string(a) + ", b=" + std::to_string(b); });
        }
    return r;
}

/// Twist-by-line-bundle kernel [Delta] . pr2^* ch(O(c1)), whose transform is v -> v ch(O(c1)).
inline coh_class line_bundle_twist_kernel(const coh_class& c1)
{
    const space_ptr& x = c1.space();
    const space_ptr xx = product(x, x);
    return diagonal_class(x, xx) * pullback(xx, factor::second, chern_character(kexpr::line_bundle(c1)));
}

} // namespace mukai
