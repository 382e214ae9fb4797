#pragma once

#include "charclasses.hpp"
#include "cohomology_class.hpp"
#include "matrix.hpp"
#include "kexpr.hpp"
#include "series.hpp"

namespace mukai {

/// Generalized Mukai pairing <v, w> = int v^ w.
inline gauss_rational mukai_pairing(const coh_class& v, const coh_class& w)
{
    v.require_same(w);
    return integrate(dualize(v) * w);
}

/// chi(E, F) by Hirzebruch-Riemann-Roch: int tau(ch E) ch F Td(X).
inline gauss_rational euler_pairing(const kexpr& e, const kexpr& f)
{
    if (!same_space(*e.space(), *f.space()))
        throw space_mismatch("euler_pairing: '" + e.space()->name() + "' vs '" + f.space()->name() + "'");
    return integrate(tau(chern_character(e)) * chern_character(f) * todd(e.space()));
}

/// int weyl(v) w, with the Weyl operator i^{p-q} on H^{p,q}.
inline gauss_rational hodge_weyl_pairing(const coh_class& v, const coh_class& w)
{
    v.require_same(w);
    return integrate(weyl_operator(v) * w);
}

/// Component of v in the Hodge-diamond column q - p = i.
inline coh_class column_projection(const coh_class& v, int i)
{
    const space& s = *v.space();
    return v.filter([&](std::size_t k) { return s.basis(k).q - s.basis(k).p == i; });
}

/// Gram matrix of the Mukai pairing on the basis of s.
inline matrix mukai_gram_matrix(const space_ptr& s)
{
    const std::size_t n = s->size();
    matrix g(n, n);
    std::vector<coh_class> duals;
    for (std::size_t i = 0; i < n; ++i) duals.push_back(dualize(coh_class::basis(s, i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = integrate(duals[i] * coh_class::basis(s, j));
    return g;
}

} // namespace mukai
