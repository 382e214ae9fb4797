#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cohomology_class.hpp"
#include "error.hpp"

namespace mukai {

namespace detail {

/// sum_k coeff(k) x^k for x without constant term. x^k vanishes once k exceeds 2 dim X.
inline coh_class nilpotent_series(const coh_class& x, const std::function<gauss_rational(long)>& coeff)
{
    coh_class acc = coh_class::scalar(x.space(), coeff(0));
    coh_class power = coh_class::unit(x.space());
    for (long k = 1;; ++k) {
        power = power * x;
        if (power.is_zero()) break;
        acc += power * coeff(k);
    }
    return acc;
}

inline coh_class unit_part_removed(const coh_class& u, const char* op)
{
    if (!u.constant_term().is_one())
        throw bad_constant_term(std::string(op) + ": constant term must be 1, got " + u.constant_term().str());
    return u - coh_class::unit(u.space());
}

/// binomial(1/2, k).
inline gauss_rational half_binomial(long k)
{
    rational c(1);
    for (long j = 0; j < k; ++j) c = c * (rational(1, 2) - j) / (j + 1);
    c.canonicalize();
    return gauss_rational(c);
}

} // namespace detail

/// 1/u for u with constant term 1.
inline coh_class series_inverse(const coh_class& u)
{
    const coh_class x = detail::unit_part_removed(u, "series_inverse");
    return detail::nilpotent_series(x, [](long k) { return gauss_rational(k % 2 ? -1 : 1); });
}

/// The unique square root with constant term 1, via the binomial series of (1 + x)^{1/2}.
inline coh_class series_sqrt(const coh_class& u)
{
    const coh_class x = detail::unit_part_removed(u, "series_sqrt");
    return detail::nilpotent_series(x, detail::half_binomial);
}

/// exp(a) for a with zero constant term.
inline coh_class series_exp(const coh_class& a)
{
    if (!a.constant_term().is_zero())
        throw bad_constant_term("series_exp: constant term must be 0, got " + a.constant_term().str());
    rational fact(1);
    std::vector<gauss_rational> inv_fact{1};
    return detail::nilpotent_series(a, [&](long k) {
        while (static_cast<long>(inv_fact.size()) <= k) {
            fact *= static_cast<long>(inv_fact.size());
            inv_fact.emplace_back(rational(1) / fact);
        }
        return inv_fact[static_cast<std::size_t>(k)];
    });
}

/// log(u) for u with constant term 1.
inline coh_class series_log(const coh_class& u)
{
    const coh_class x = detail::unit_part_removed(u, "series_log");
    return detail::nilpotent_series(x, [](long k) {
        if (k == 0) return gauss_rational(0);
        return gauss_rational::fraction(k % 2 ? 1 : -1, k);
    });
}

/// Multiplies the total-degree-k component by i^k.
inline coh_class tau(const coh_class& v)
{
    const space& s = *v.space();
    return v.map_coefficients([&](std::size_t k) { return gauss_rational::i_pow(s.degree(k)); });
}

/// The Weyl operator: multiplies the (p,q) component by i^{p-q}.
inline coh_class weyl_operator(const coh_class& v)
{
    const space& s = *v.space();
    return v.map_coefficients([&](std::size_t k) { return gauss_rational::i_pow(s.basis(k).p - s.basis(k).q); });
}

} // namespace mukai
