#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charclasses.hpp"
#include "cohomology_class.hpp"
#include "duality.hpp"
#include "kexpr.hpp"
#include "pairing.hpp"
#include "report.hpp"
#include "series.hpp"

namespace mukai {

/// phi^mu_{X->Y}(v) = pr_Y*(pr_X^*(v) mu) for mu on X x Y.
inline coh_class apply_transform(const coh_class& mu, const coh_class& v)
{
    const space_ptr& xy = mu.space();
    require_space(v, xy->first(), "apply_transform");
    return pushforward(factor::second, pullback(xy, factor::first, v) * mu);
}

/// The kernel mu on X x Y read as a transform Y -> X: v -> pr_X*(pr_Y^*(v) mu).
inline coh_class apply_transform_backward(const coh_class& mu, const coh_class& v)
{
    const space_ptr& xy = mu.space();
    require_space(v, xy->second(), "apply_transform_backward");
    return pushforward(factor::first, pullback(xy, factor::second, v) * mu);
}

namespace detail {

/// pr_YZ^*: Y x Z -> (X x Y) x Z, b (x) c -> (1 (x) b) (x) c.
inline coh_class pullback_last_two(const space_ptr& xyz, const coh_class& nu)
{
    const space_ptr& xy = xyz->first();
    const space_ptr& yz = nu.space();
    sparse_vector v;
    for (const auto& [k, c] : nu.terms()) {
        const auto [iy, iz] = yz->split_index(k);
        v.emplace(xyz->product_index(xy->product_index(xy->first()->unit_index(), iy), iz), c);
    }
    return coh_class(xyz, std::move(v));
}

// pr_XZ*: (X x Y) x Z -> X x Z, (a (x) b) (x) c -> (int b) a (x) c.
// Moving b past c costs (-1)^{|b||c|}, but only the point class of Y survives and it is even.
inline coh_class pushforward_middle(const space_ptr& xz, const coh_class& t)
{
    const space_ptr& xyz = t.space();
    const space_ptr& xy = xyz->first();
    const std::size_t pt_y = xy->second()->point_index();
    sparse_vector v;
    for (const auto& [k, c] : t.terms()) {
        const auto [ixy, iz] = xyz->split_index(k);
        const auto [ix, iy] = xy->split_index(ixy);
        if (iy == pt_y) accumulate(v, xz->product_index(ix, iz), c);
    }
    return coh_class(xz, std::move(v));
}

} // namespace detail

/// nu o mu = pr_XZ*(pr_XY^* mu . pr_YZ^* nu), computed on the triple product (X x Y) x Z.
inline coh_class compose_kernels(const coh_class& mu, const coh_class& nu, const space_ptr& xz)
{
    const space_ptr& xy = mu.space();
    const space_ptr& yz = nu.space();
    if (!same_space(*xy->second(), *yz->first()))
        throw space_mismatch("compose_kernels: middle spaces '" + xy->second()->name() + "' and '" +
                             yz->first()->name() + "' differ");
    if (!same_space(*xz->first(), *xy->first()) || !same_space(*xz->second(), *yz->second()))
        throw space_mismatch("compose_kernels: target '" + xz->name() + "' does not match the outer factors");
    const space_ptr xyz = product(xy, yz->second());
    const coh_class t = pullback(xyz, factor::first, mu) * detail::pullback_last_two(xyz, nu);
    return detail::pushforward_middle(xz, t);
}

inline coh_class compose_kernels(const coh_class& mu, const coh_class& nu)
{
    return compose_kernels(mu, nu, product(mu.space()->first(), nu.space()->second()));
}

/// The canonical ring isomorphism H((X x Y) x Z) -> H(X x (Y x Z)), (a (x) b) (x) c -> a (x) (b (x) c).
inline coh_class reassociate(const coh_class& t, const space_ptr& x_yz)
{
    const space_ptr& xy_z = t.space();
    const space_ptr& xy = xy_z->first();
    const space_ptr& yz = x_yz->second();
    sparse_vector v;
    for (const auto& [k, c] : t.terms()) {
        const auto [ixy, iz] = xy_z->split_index(k);
        const auto [ix, iy] = xy->split_index(ixy);
        v.emplace(x_yz->product_index(ix, yz->product_index(iy, iz)), c);
    }
    return coh_class(x_yz, std::move(v));
}

inline coh_class sqrt_canonical(const space_ptr& s) { return series_sqrt(canonical_chern_character(s)); }

/// Kernel of the left adjoint, read as a transform Y -> X:
/// e* = (-1)^{dim Y} tau(e) pr_Y^* sqrt(ch w_Y) / pr_X^* sqrt(ch w_X).
inline coh_class left_adjoint_kernel(const coh_class& e)
{
    const space_ptr& xy = e.space();
    const space_ptr& x = xy->first();
    const space_ptr& y = xy->second();
    coh_class out = tau(e) * pullback(xy, factor::second, sqrt_canonical(y)) *
                    pullback(xy, factor::first, series_inverse(sqrt_canonical(x)));
    return y->dim() % 2 ? -out : out;
}

/// Kernel of the right adjoint, read as a transform Y -> X:
/// e^! = (-1)^{dim X} tau(e) pr_X^* sqrt(ch w_X) / pr_Y^* sqrt(ch w_Y).
inline coh_class right_adjoint_kernel(const coh_class& e)
{
    const space_ptr& xy = e.space();
    const space_ptr& x = xy->first();
    const space_ptr& y = xy->second();
    coh_class out = tau(e) * pullback(xy, factor::first, sqrt_canonical(x)) *
                    pullback(xy, factor::second, series_inverse(sqrt_canonical(y)));
    return x->dim() % 2 ? -out : out;
}

/// Transpose of a kernel on X x Y to Y x X, with the Koszul sign of swapping the factors.
inline coh_class swap_factors(const coh_class& e, const space_ptr& yx)
{
    const space_ptr& xy = e.space();
    sparse_vector v;
    for (const auto& [k, c] : e.terms()) {
        const auto [ix, iy] = xy->split_index(k);
        const bool odd = (xy->first()->degree(ix) * xy->second()->degree(iy)) % 2 != 0;
        v.emplace(yx->product_index(iy, ix), odd ? -c : c);
    }
    return coh_class(yx, std::move(v));
}

inline coh_class swap_factors(const coh_class& e)
{
    return swap_factors(e, product(e.space()->second(), e.space()->first()));
}

enum class adjoint_side { left, right };

namespace detail {

inline std::vector<std::string> factor_names(const space_ptr& xy)
{
    return {xy->first()->name(), xy->second()->name()};
}

inline std::string pair_case(const space& sv, std::size_t v, const space& sw, std::size_t w)
{
    return "v=" + sv.basis(v).name + ", w=" + sw.basis(w).name;
}

} // namespace detail

/// Sweeps the adjunction identity over all basis pairs v in H(Y), w in H(X):
/// left:  <v, phi^e(w)>_Y = <phi^{e*}(v), w>_X
/// right: <phi^e(w), v>_Y = <w, phi^{e!}(v)>_X
inline check_report verify_adjointness(const coh_class& e, adjoint_side side = adjoint_side::left,
                                       const std::string& description = "")
{
    const space_ptr& xy = e.space();
    const space_ptr& x = xy->first();
    const space_ptr& y = xy->second();
    check_report r;
    r.check = side == adjoint_side::left ? "adjointness" : "right-adjointness";
    r.space_names = detail::factor_names(xy);
    r.kernel_description = description.empty() ? e.str() : description;
    const coh_class adj = side == adjoint_side::left ? left_adjoint_kernel(e) : right_adjoint_kernel(e);

    std::vector<coh_class> forward, backward;
    for (std::size_t w = 0; w < x->size(); ++w) forward.push_back(apply_transform(e, coh_class::basis(x, w)));
    for (std::size_t v = 0; v < y->size(); ++v)
        backward.push_back(apply_transform_backward(adj, coh_class::basis(y, v)));

    for (std::size_t v = 0; v < y->size(); ++v)
        for (std::size_t w = 0; w < x->size(); ++w) {
            const coh_class bv = coh_class::basis(y, v);
            const coh_class bw = coh_class::basis(x, w);
            const gauss_rational lhs = side == adjoint_side::left ? mukai_pairing(bv, forward[w])
                                                                  : mukai_pairing(forward[w], bv);
            const gauss_rational rhs = side == adjoint_side::left ? mukai_pairing(backward[v], bw)
                                                                  : mukai_pairing(bw, backward[v]);
            r.expect_equal(lhs, rhs, [&] { return detail::pair_case(*y, v, *x, w); });
        }
    return r;
}

// phi^{nu o mu} against phi^nu o phi^mu, basis class by basis class
inline check_report verify_composition(const coh_class& mu, const coh_class& nu, const std::string& description = "")
{
    check_report r;
    r.check = "composition";
    const space_ptr& x = mu.space()->first();
    r.space_names = {x->name(), mu.space()->second()->name(), nu.space()->second()->name()};
    r.kernel_description = description.empty() ? "mu=" + mu.str() + "; nu=" + nu.str() : description;
    const coh_class composite = compose_kernels(mu, nu);
    for (std::size_t k = 0; k < x->size(); ++k) {
        const coh_class v = coh_class::basis(x, k);
        r.expect_equal(apply_transform(composite, v), apply_transform(nu, apply_transform(mu, v)),
                       [&] { return "v=" + x->basis(k).name; });
    }
    return r;
}

inline check_report verify_kernel_associativity(const coh_class& mu, const coh_class& nu, const coh_class& kappa)
{
    check_report r;
    r.check = "kernel-associativity";
    r.space_names = {mu.space()->first()->name(), mu.space()->second()->name(), nu.space()->second()->name(),
                     kappa.space()->second()->name()};
    r.kernel_description = "mu=" + mu.str() + "; nu=" + nu.str() + "; kappa=" + kappa.str();
    r.expect_equal(compose_kernels(mu, compose_kernels(nu, kappa)), compose_kernels(compose_kernels(mu, nu), kappa),
                   [] { return std::string("(kappa o nu) o mu vs kappa o (nu o mu)"); });
    return r;
}

inline check_report verify_identity_kernel(const space_ptr& x)
{
    check_report r;
    r.check = "identity-kernel";
    r.space_names = {x->name()};
    r.kernel_description = "[Delta]";
    const coh_class delta = diagonal_class(x);
    for (std::size_t k = 0; k < x->size(); ++k) {
        const coh_class v = coh_class::basis(x, k);
        r.expect_equal(apply_transform(delta, v), v, [&] { return "v=" + x->basis(k).name; });
    }
    return r;
}

/// Confirms e_inv o e = [Delta_X] and e o e_inv = [Delta_Y], then sweeps
/// <phi^e v, phi^e w>_Y = <v, w>_X over all basis pairs of X.
inline check_report verify_isometry(const coh_class& e, const coh_class& e_inv, const std::string& description = "")
{
    const space_ptr& xy = e.space();
    const space_ptr& x = xy->first();
    const space_ptr& y = xy->second();
    check_report r;
    r.check = "isometry";
    r.space_names = detail::factor_names(xy);
    r.kernel_description = description.empty() ? e.str() : description;
    if (!same_space(*e_inv.space()->first(), *y) || !same_space(*e_inv.space()->second(), *x))
        throw space_mismatch("verify_isometry: inverse kernel must live on '" + y->name() + " x " + x->name() + "'");

    const bool left_ok = compose_kernels(e, e_inv) == diagonal_class(x);
    const bool right_ok = compose_kernels(e_inv, e) == diagonal_class(y);
    if (!left_ok || !right_ok) {
        r.cases_total = 2;
        r.cases_failed = (left_ok ? 0 : 1) + (right_ok ? 0 : 1);
        r.first_failure = check_failure{"not an equivalence", left_ok ? "e_inv o e = [Delta_X]" : "e_inv o e != [Delta_X]",
                                        right_ok ? "e o e_inv = [Delta_Y]" : "e o e_inv != [Delta_Y]"};
        return r;
    }
    std::vector<coh_class> images;
    for (std::size_t k = 0; k < x->size(); ++k) images.push_back(apply_transform(e, coh_class::basis(x, k)));
    for (std::size_t v = 0; v < x->size(); ++v)
        for (std::size_t w = 0; w < x->size(); ++w)
            r.expect_equal(mukai_pairing(images[v], images[w]),
                           mukai_pairing(coh_class::basis(x, v), coh_class::basis(x, w)),
                           [&] { return detail::pair_case(*x, v, *x, w); });
    return r;
}

/// phi^e maps each Hodge-diamond column of X into the same column of Y.
inline check_report verify_columns(const coh_class& e, const std::string& description = "")
{
    const space_ptr& x = e.space()->first();
    check_report r;
    r.check = "columns";
    r.space_names = detail::factor_names(e.space());
    r.kernel_description = description.empty() ? e.str() : description;
    for (std::size_t k = 0; k < x->size(); ++k) {
        const int col = x->basis(k).q - x->basis(k).p;
        const coh_class image = apply_transform(e, coh_class::basis(x, k));
        r.expect_equal(column_projection(image, col), image,
                       [&] { return "v=" + x->basis(k).name + " (column " + std::to_string(col) + ")"; });
    }
    return r;
}

/// Composition law for Mukai vectors of kernels: phi^{v(E2) o v(E1)} = phi^{v(E2)} o phi^{v(E1)}.
inline check_report functoriality_check(const kexpr& e1, const kexpr& e2)
{
    check_report r = verify_composition(mukai_vector(e1), mukai_vector(e2), "E1=" + e1.str() + "; E2=" + e2.str());
    r.check = "functoriality";
    return r;
}

} // namespace mukai
