#pragma once

#include <cstddef>
#include <vector>

#include "cohomology_class.hpp"
#include "kexpr.hpp"
#include "series.hpp"

namespace mukai {

namespace detail {

/// Coefficients of a truncated univariate power series in x.
using univariate = std::vector<rational>;

inline univariate univariate_inverse(const univariate& f)
{
    univariate g(f.size());
    g[0] = 1 / f[0];
    for (std::size_t k = 1; k < f.size(); ++k) {
        rational s = 0;
        for (std::size_t j = 1; j <= k; ++j) s += f[j] * g[k - j];
        g[k] = -s / f[0];
    }
    return g;
}

inline univariate univariate_log(const univariate& f)
{
    // (log f)' = f'/f with f(0) = 1.
    const univariate inv = univariate_inverse(f);
    univariate out(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) {
        rational s = 0;
        for (std::size_t j = 1; j <= k; ++j) s += rational(static_cast<long>(j)) * f[j] * inv[k - j];
        out[k] = s / static_cast<long>(k);
    }
    return out;
}

} // namespace detail

/// a_1..a_n with log(x / (1 - e^{-x})) = sum_k a_k x^k.
inline std::vector<rational> todd_log_coefficients(int n)
{
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    detail::univariate f(static_cast<std::size_t>(n) + 1);
    rational fact(1);
    for (std::size_t k = 0; k < f.size(); ++k) {
        fact *= static_cast<long>(k + 1);
        f[k] = rational(k % 2 ? -1 : 1) / fact;
    }
    detail::univariate l = detail::univariate_log(detail::univariate_inverse(f));
    return l;
}

/// c_k(T_X), the degree-2k part of the stored total Chern class.
inline coh_class chern_class(const space_ptr& s, int k) { return tangent_chern(s).degree_part(2 * k); }

/// Power sums p_1..p_n of the Chern roots of T_X by Newton's identities; index 0 is unused.
inline std::vector<coh_class> chern_power_sums(const space_ptr& s)
{
    const int n = s->dim();
    std::vector<coh_class> e, p;
    for (int k = 0; k <= n; ++k) {
        e.push_back(chern_class(s, k));
        p.push_back(coh_class::zero(s));
    }
    for (int k = 1; k <= n; ++k) {
        coh_class acc = e[k] * gauss_rational(k % 2 ? k : -k);
        for (int j = 1; j < k; ++j) {
            coh_class t = e[j] * p[k - j];
            acc += j % 2 ? t : -t;
        }
        p[k] = acc;
    }
    return p;
}

/// Td(X) = exp(sum_k a_k p_k).
inline coh_class todd(const space_ptr& s)
{
    const auto a = todd_log_coefficients(s->dim());
    const auto p = chern_power_sums(s);
    coh_class exponent = coh_class::zero(s);
    for (int k = 1; k <= s->dim(); ++k) exponent += p[k] * gauss_rational(a[k]);
    return series_exp(exponent);
}

inline coh_class sqrt_todd(const space_ptr& s) { return series_sqrt(todd(s)); }

/// ch(omega_X) = exp(-c_1(T_X)).
inline coh_class canonical_chern_character(const space_ptr& s) { return series_exp(-chern_class(s, 1)); }

inline coh_class chern_character(const kexpr& e)
{
    using kind = kexpr::kind;
    const space_ptr& s = e.space();
    switch (e.type()) {
    case kind::structure: return coh_class::unit(s);
    case kind::line_bundle: return series_exp(e.first_chern());
    case kind::tangent: {
        const auto p = chern_power_sums(s);
        coh_class out = coh_class::scalar(s, s->dim());
        rational fact(1);
        for (int k = 1; k <= s->dim(); ++k) {
            fact *= k;
            out += p[k] * gauss_rational(rational(1) / fact);
        }
        return out;
    }
    case kind::dual: return tau(chern_character(e.left()));
    case kind::tensor: return chern_character(e.left()) * chern_character(e.right());
    case kind::sum: return chern_character(e.left()) + chern_character(e.right());
    case kind::shift: {
        coh_class c = chern_character(e.left());
        return e.shift_amount() % 2 ? -c : c;
    }
    case kind::external_tensor:
        return external_product(s, chern_character(e.left()), chern_character(e.right()));
    }
    throw error("chern_character: unknown expression kind");
}

/// v^ = tau(v) / sqrt(ch(omega_X)).
inline coh_class dualize(const coh_class& v)
{
    return tau(v) * series_inverse(series_sqrt(canonical_chern_character(v.space())));
}

/// v(E) = ch(E) sqrt(Td(X)).
inline coh_class mukai_vector(const kexpr& e) { return chern_character(e) * sqrt_todd(e.space()); }

} // namespace mukai
