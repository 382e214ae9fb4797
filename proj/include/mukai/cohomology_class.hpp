#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>

#include "error.hpp"
#include "gauss_rational.hpp"
#include "space.hpp"

namespace mukai {

/// An element of H^*(X, Q(i)) for a given model space X.
class coh_class {
public:
    explicit coh_class(space_ptr s) : space_(std::move(s))
    {
        if (!space_) throw error("coh_class needs a space");
    }
    coh_class(space_ptr s, sparse_vector coeffs) : coh_class(std::move(s))
    {
        for (auto& [k, c] : coeffs) {
            if (k >= space_->size()) throw error("basis index out of range for space '" + space_->name() + "'");
            if (!c.is_zero()) coeffs_.emplace(k, std::move(c));
        }
    }

    static coh_class zero(space_ptr s) { return coh_class(std::move(s)); }
    static coh_class unit(space_ptr s) { return scalar(std::move(s), 1); }
    static coh_class scalar(space_ptr s, const gauss_rational& c)
    {
        const std::size_t u = s->unit_index();
        return coh_class(std::move(s), {{u, c}});
    }
    static coh_class basis(space_ptr s, std::size_t i, const gauss_rational& c = 1)
    {
        return coh_class(std::move(s), {{i, c}});
    }
    static coh_class point(space_ptr s)
    {
        const std::size_t pt = s->point_index();
        return basis(std::move(s), pt);
    }

    const space_ptr& space() const noexcept { return space_; }
    const sparse_vector& terms() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    gauss_rational coeff(std::size_t i) const
    {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? gauss_rational() : it->second;
    }
    gauss_rational constant_term() const { return coeff(space_->unit_index()); }

    /// Component of total degree k.
    coh_class degree_part(int k) const
    {
        return filter([&](std::size_t i) { return space_->degree(i) == k; });
    }

    /// Keep only the basis components for which pred(index) holds.
    template <class Pred>
    coh_class filter(Pred pred) const
    {
        coh_class out(space_);
        for (const auto& [k, c] : coeffs_)
            if (pred(k)) out.coeffs_.emplace(k, c);
        return out;
    }

    /// Multiply each component by f(index).
    template <class F>
    coh_class map_coefficients(F f) const
    {
        coh_class out(space_);
        for (const auto& [k, c] : coeffs_) accumulate(out.coeffs_, k, c * f(k));
        return out;
    }

    coh_class operator-() const
    {
        coh_class out(*this);
        for (auto& [k, c] : out.coeffs_) c = -c;
        return out;
    }

    coh_class& operator+=(const coh_class& o)
    {
        require_same(o);
        for (const auto& [k, c] : o.coeffs_) accumulate(coeffs_, k, c);
        return *this;
    }
    coh_class& operator-=(const coh_class& o)
    {
        require_same(o);
        for (const auto& [k, c] : o.coeffs_) accumulate(coeffs_, k, -c);
        return *this;
    }
    coh_class& operator*=(const gauss_rational& s)
    {
        if (s.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, c] : coeffs_) c *= s;
        return *this;
    }

    friend coh_class operator+(coh_class a, const coh_class& b) { return a += b; }
    friend coh_class operator-(coh_class a, const coh_class& b) { return a -= b; }
    friend coh_class operator*(coh_class a, const gauss_rational& s) { return a *= s; }
    friend coh_class operator*(const gauss_rational& s, coh_class a) { return a *= s; }

    /// Cup product, the bilinear extension of the structure constants.
    friend coh_class operator*(const coh_class& a, const coh_class& b)
    {
        a.require_same(b);
        coh_class out(a.space_);
        const mukai::space& sp = *a.space_;
        for (const auto& [i, ci] : a.coeffs_)
            for (const auto& [j, cj] : b.coeffs_) {
                const auto prod = sp.multiply_basis(i, j);
                if (prod.empty()) continue;
                const gauss_rational cij = ci * cj;
                for (const auto& t : prod) accumulate(out.coeffs_, t.index, cij * t.coeff);
            }
        return out;
    }
    coh_class& operator*=(const coh_class& o) { return *this = *this * o; }

    friend bool operator==(const coh_class& a, const coh_class& b)
    {
        return same_space(*a.space_, *b.space_) && a.coeffs_ == b.coeffs_;
    }

    /// Rendering that the class-expression parser reads back to the same value.
    std::string str() const
    {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : coeffs_) {
            const std::string nm = space_->basis_label(k);
            const bool unit = k == space_->unit_index();
            const bool single = c.is_real() || sgn(c.re()) == 0;
            const bool negative = single && (c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0);
            const gauss_rational mag = negative ? -c : c;
            std::string body;
            if (unit)
                body = single ? mag.str() : "(" + mag.str() + ")";
            else if (mag.is_one())
                body = nm;
            else
                body = (single ? mag.str() : "(" + mag.str() + ")") + "*" + nm;
            if (first)
                out = (negative ? "-" : "") + body;
            else
                out += (negative ? " - " : " + ") + body;
            first = false;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const coh_class& c) { return os << c.str(); }

    void require_same(const coh_class& o) const
    {
        if (!same_space(*space_, *o.space_))
            throw space_mismatch("space mismatch: '" + space_->name() + "' vs '" + o.space_->name() + "'");
    }

private:
    space_ptr space_;
    sparse_vector coeffs_;
};

inline coh_class tangent_chern(const space_ptr& s) { return coh_class(s, s->tangent_chern()); }

/// Integration: the coefficient of the point class.
inline gauss_rational integrate(const coh_class& a) { return a.coeff(a.space()->point_index()); }

inline void require_space(const coh_class& a, const space_ptr& s, const char* what)
{
    if (!same_space(*a.space(), *s))
        throw space_mismatch(std::string(what) + ": class lives on '" + a.space()->name() + "', expected '" +
                             s->name() + "'");
}

enum class factor { first, second };

/// Pull back a class from one factor of a product: a -> a (x) 1 or 1 (x) a.
inline coh_class pullback(const space_ptr& prod, factor f, const coh_class& a)
{
    const space_ptr& src = f == factor::first ? prod->first() : prod->second();
    require_space(a, src, "pullback");
    sparse_vector v;
    for (const auto& [k, c] : a.terms()) {
        const std::size_t idx = f == factor::first ? prod->product_index(k, prod->second()->unit_index())
                                                   : prod->product_index(prod->first()->unit_index(), k);
        v.emplace(idx, c);
    }
    return coh_class(prod, std::move(v));
}

/// Push forward to the surviving factor by integrating out the other one.
/**
 * a (x) b -> (int b) a onto the first factor and a (x) b -> (int a) b onto the second.
 * Only the point class of the integrated factor contributes; it has even degree, so
 * no Koszul sign appears. The projection formula and the diagonal identities pin this.
 */
inline coh_class pushforward(factor keep, const coh_class& a)
{
    const space_ptr& prod = a.space();
    const space_ptr& target = keep == factor::first ? prod->first() : prod->second();
    const std::size_t other_pt =
        keep == factor::first ? prod->second()->point_index() : prod->first()->point_index();
    sparse_vector v;
    for (const auto& [k, c] : a.terms()) {
        const auto [ix, iy] = prod->split_index(k);
        if (keep == factor::first && iy == other_pt) accumulate(v, ix, c);
        if (keep == factor::second && ix == other_pt) accumulate(v, iy, c);
    }
    return coh_class(target, std::move(v));
}

/// a (x) b on X x Y, equal to pr1^*(a) * pr2^*(b).
inline coh_class external_product(const space_ptr& prod, const coh_class& a, const coh_class& b)
{
    require_space(a, prod->first(), "external_product");
    require_space(b, prod->second(), "external_product");
    sparse_vector v;
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms()) v.emplace(prod->product_index(i, j), ci * cj);
    return coh_class(prod, std::move(v));
}

} // namespace mukai
