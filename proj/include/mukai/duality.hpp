#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cohomology_class.hpp"
#include "matrix.hpp"

namespace mukai {

/// P_ij = int e_i e_j.
inline matrix intersection_matrix(const space& s)
{
    const std::size_t n = s.size();
    matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : s.multiply_basis(i, j))
                if (t.index == s.point_index()) p(i, j) += t.coeff;
    return p;
}

struct dual_pair {
    coh_class basis;
    coh_class dual;
};

/// Pairs (e_i, e^i) with int e_i e^j = delta_ij.
inline std::vector<dual_pair> poincare_dual_basis(const space_ptr& s)
{
    const std::size_t n = s->size();
    matrix p = intersection_matrix(*s);
    // e^i = sum_j Q_ij e_j with Q P^T = 1, so Q = (P^T)^{-1}.
    matrix q;
    try {
        q = inverse(transpose(p));
    } catch (const singular_matrix& e) {
        throw malformed_space("intersection pairing of '" + s->name() + "' is degenerate (rank " +
                              std::to_string(e.rank()) + ")");
    }
    std::vector<dual_pair> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        sparse_vector v;
        for (std::size_t j = 0; j < n; ++j)
            if (!q(i, j).is_zero()) v.emplace(j, q(i, j));
        out.push_back({coh_class::basis(s, i), coh_class(s, std::move(v))});
    }
    return out;
}

/// [Delta] = sum_i (-1)^{|e_i|} e_i (x) e^i on X x X.
/**
 * The sign makes pr2_*(pr1^*(a) [Delta]) = a and pr1_*([Delta] pr2^*(a)) = a for every a,
 * including odd classes where the pairing matrix is antisymmetric.
 */
inline coh_class diagonal_class(const space_ptr& s, const space_ptr& xx)
{
    require_space(coh_class::unit(xx->first()), s, "diagonal_class");
    require_space(coh_class::unit(xx->second()), s, "diagonal_class");
    coh_class out(xx);
    for (const auto& [e, dual] : poincare_dual_basis(s)) {
        const auto i = e.terms().begin()->first;
        coh_class t = external_product(xx, e, dual);
        out += s->degree(i) % 2 ? -t : t;
    }
    return out;
}

inline coh_class diagonal_class(const space_ptr& s) { return diagonal_class(s, product(s, s)); }

/// Delta_*(a) = pr1^*(a) [Delta].
inline coh_class diagonal_pushforward(const coh_class& a, const space_ptr& xx)
{
    return pullback(xx, factor::first, a) * diagonal_class(a.space(), xx);
}

inline coh_class diagonal_pushforward(const coh_class& a) { return diagonal_pushforward(a, product(a.space(), a.space())); }

/// Alternating sum of Betti numbers.
inline long euler_characteristic(const space& s)
{
    long chi = 0;
    for (const auto& b : s.basis()) chi += b.degree() % 2 ? -1 : 1;
    return chi;
}

/// Every violated model invariant, as readable messages. Empty when the space is well formed.
inline std::vector<std::string> check_space_invariants(const space_ptr& s)
{
    std::vector<std::string> bad;
    const std::size_t n = s->size();
    const int top = 2 * s->dim();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& b = s->basis(i);
        if (b.p < 0 || b.q < 0 || b.p > s->dim() || b.q > s->dim())
            bad.push_back("basis element " + b.name + " has bidegree out of range");
    }
    if (s->basis(s->point_index()).p != s->dim() || s->basis(s->point_index()).q != s->dim())
        bad.push_back("point class does not have bidegree (n,n)");
    std::size_t points = 0;
    for (const auto& b : s->basis())
        if (b.p == s->dim() && b.q == s->dim()) ++points;
    if (points != 1) bad.push_back("expected exactly one (n,n) basis element");

    const std::size_t u = s->unit_index();
    for (std::size_t i = 0; i < n; ++i) {
        const coh_class ei = coh_class::basis(s, i);
        if (coh_class::basis(s, u) * ei != ei || ei * coh_class::basis(s, u) != ei)
            bad.push_back("unit does not act as identity on " + s->basis(i).name);
        for (std::size_t j = 0; j < n; ++j) {
            const auto prod = s->multiply_basis(i, j);
            for (const auto& t : prod) {
                const auto& r = s->basis(t.index);
                if (r.p != s->basis(i).p + s->basis(j).p || r.q != s->basis(i).q + s->basis(j).q)
                    bad.push_back("product " + s->basis(i).name + "*" + s->basis(j).name + " breaks bidegree");
            }
            const coh_class ej = coh_class::basis(s, j);
            const bool odd = (s->degree(i) * s->degree(j)) % 2 != 0;
            const coh_class lhs = ei * ej;
            const coh_class rhs = ej * ei;
            if (lhs != (odd ? -rhs : rhs))
                bad.push_back("graded commutativity fails for " + s->basis(i).name + ", " + s->basis(j).name);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (s->degree(i) + s->degree(j) > top) continue;
            const coh_class eij = coh_class::basis(s, i) * coh_class::basis(s, j);
            for (std::size_t k = 0; k < n; ++k) {
                const coh_class ek = coh_class::basis(s, k);
                if (eij * ek != coh_class::basis(s, i) * (coh_class::basis(s, j) * ek))
                    bad.push_back("associativity fails on " + s->basis(i).name + ", " + s->basis(j).name + ", " +
                                  s->basis(k).name);
            }
        }
    try {
        inverse(intersection_matrix(*s));
    } catch (const singular_matrix&) {
        bad.push_back("intersection pairing is degenerate");
    }
    const coh_class c = tangent_chern(s);
    if (!c.constant_term().is_one()) bad.push_back("tangent Chern class does not start with 1");
    for (const auto& [k, coeff] : c.terms())
        if (s->basis(k).p != s->basis(k).q) bad.push_back("tangent Chern class has a non-(p,p) component");
    return bad;
}

} // namespace mukai
