#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gauss_rational.hpp"

namespace mukai {

/// A basis vector of H^{p,q}; its total degree is p + q.
struct basis_element {
    std::string name;
    int p = 0;
    int q = 0;

    int degree() const noexcept { return p + q; }
    friend bool operator==(const basis_element&, const basis_element&) = default;
};

/// Basis index -> coefficient. Zero coefficients are never stored.
using sparse_vector = std::map<std::size_t, gauss_rational>;

/// One term of a structure-constant expansion.
struct term {
    std::size_t index;
    gauss_rational coeff;
};

inline void accumulate(sparse_vector& acc, std::size_t index, const gauss_rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

class space;
using space_ptr = std::shared_ptr<const space>;

/// Finite model of the cohomology ring H^*(X, Q(i)) of a compact complex manifold.
/**
 * A primitive space carries an explicit table of structure constants e_i * e_j.
 * A product space X x Y has basis {a (x) b} indexed by ix * |Y| + iy and multiplies
 * through its factors with the Koszul rule
 *     (a (x) b)(a' (x) b') = (-1)^{|b||a'|} (a a') (x) (b b').
 * Instances are immutable once built.
 */
class space {
public:
    struct primitive_data {
        std::string name;
        int dim = 0;
        std::vector<basis_element> basis;
        /// (i, j) -> e_i e_j; missing entries are zero.
        std::map<std::pair<std::size_t, std::size_t>, sparse_vector> mult;
        std::size_t point_index = 0;
        sparse_vector tangent_chern;
        /// Builders name basis elements by expressions that parse back to them ("H^2", "a1*b1").
        bool expression_names = false;
    };

    static space_ptr make(primitive_data data)
    {
        auto s = std::shared_ptr<space>(new space());
        s->name_ = std::move(data.name);
        s->dim_ = data.dim;
        s->basis_ = std::move(data.basis);
        s->point_index_ = data.point_index;
        s->tangent_chern_ = std::move(data.tangent_chern);
        s->expression_names_ = data.expression_names;
        const std::size_t n = s->basis_.size();
        if (n == 0) throw malformed_space("space '" + s->name_ + "' has an empty basis");
        if (s->point_index_ >= n) throw malformed_space("point index out of range");
        s->table_.resize(n * n);
        for (auto& [ij, v] : data.mult) {
            if (ij.first >= n || ij.second >= n) throw malformed_space("multiplication index out of range");
            for (const auto& [k, c] : v) {
                if (k >= n) throw malformed_space("multiplication result index out of range");
                if (!c.is_zero()) s->table_[ij.first * n + ij.second].push_back({k, c});
            }
        }
        for (const auto& [k, c] : s->tangent_chern_)
            if (k >= n) throw malformed_space("tangent Chern class index out of range");
        s->find_unit();
        return s;
    }

    static space_ptr make_product(space_ptr x, space_ptr y)
    {
        auto s = std::shared_ptr<space>(new space());
        s->name_ = x->name_ + " x " + (y->is_product() ? "(" + y->name_ + ")" : y->name_);
        s->dim_ = x->dim_ + y->dim_;
        const std::size_t ny = y->size();
        s->basis_.reserve(x->size() * ny);
        for (std::size_t ix = 0; ix < x->size(); ++ix)
            for (std::size_t iy = 0; iy < ny; ++iy) {
                const auto& a = x->basis_[ix];
                const auto& b = y->basis_[iy];
                std::string nm;
                if (ix != x->unit_index_) nm = "pr1(" + x->basis_label(ix) + ")";
                if (iy != y->unit_index_) nm += (nm.empty() ? "" : "*") + std::string("pr2(") + y->basis_label(iy) + ")";
                if (nm.empty()) nm = "1";
                s->basis_.push_back({std::move(nm), a.p + b.p, a.q + b.q});
            }
        s->point_index_ = x->point_index_ * ny + y->point_index_;
        for (const auto& [kx, cx] : x->tangent_chern_)
            for (const auto& [ky, cy] : y->tangent_chern_) accumulate(s->tangent_chern_, kx * ny + ky, cx * cy);
        s->expression_names_ = true;
        s->first_ = std::move(x);
        s->second_ = std::move(y);
        s->find_unit();
        return s;
    }

    const std::string& name() const noexcept { return name_; }
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<basis_element>& basis() const noexcept { return basis_; }
    const basis_element& basis(std::size_t i) const { return basis_.at(i); }
    int degree(std::size_t i) const { return basis_[i].degree(); }
    std::size_t unit_index() const noexcept { return unit_index_; }
    std::size_t point_index() const noexcept { return point_index_; }
    const sparse_vector& tangent_chern() const noexcept { return tangent_chern_; }

    bool is_product() const noexcept { return first_ != nullptr; }
    const space_ptr& first() const
    {
        if (!first_) throw not_a_product(name_);
        return first_;
    }
    const space_ptr& second() const
    {
        if (!second_) throw not_a_product(name_);
        return second_;
    }

    std::size_t product_index(std::size_t ix, std::size_t iy) const { return ix * second()->size() + iy; }
    std::pair<std::size_t, std::size_t> split_index(std::size_t i) const
    {
        const std::size_t ny = second()->size();
        return {i / ny, i % ny};
    }

    /// The basis name as written in class expressions; names that are not expressions are braced.
    std::string basis_label(std::size_t i) const
    {
        const std::string& nm = basis_[i].name;
        if (expression_names_ || is_identifier(nm) || (i == unit_index_ && nm == "1")) return nm;
        return "{" + nm + "}";
    }

    static bool is_identifier(const std::string& s)
    {
        if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
        for (char c : s)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
        return true;
    }

    std::optional<std::size_t> find(const std::string& basis_name) const
    {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].name == basis_name) return i;
        return std::nullopt;
    }

    /// Structure constants: the expansion of e_i * e_j.
    std::vector<term> multiply_basis(std::size_t i, std::size_t j) const
    {
        if (!first_) return table_[i * basis_.size() + j];
        const auto [ix, iy] = split_index(i);
        const auto [jx, jy] = split_index(j);
        const auto tx = first_->multiply_basis(ix, jx);
        if (tx.empty()) return {};
        const auto ty = second_->multiply_basis(iy, jy);
        if (ty.empty()) return {};
        const bool odd = (second_->degree(iy) * first_->degree(jx)) % 2 != 0;
        const std::size_t ny = second_->size();
        std::vector<term> out;
        out.reserve(tx.size() * ty.size());
        for (const auto& a : tx)
            for (const auto& b : ty) {
                gauss_rational c = a.coeff * b.coeff;
                out.push_back({a.index * ny + b.index, odd ? -c : c});
            }
        return out;
    }

    /// Same model: the identical object or a copy with matching name and basis.
    friend bool same_space(const space& a, const space& b)
    {
        return &a == &b || (a.name_ == b.name_ && a.dim_ == b.dim_ && a.basis_ == b.basis_);
    }

private:
    space() = default;

    void find_unit()
    {
        std::optional<std::size_t> unit;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].p == 0 && basis_[i].q == 0) {
                if (unit) throw malformed_space("space '" + name_ + "' has more than one (0,0) basis element");
                unit = i;
            }
        if (!unit) throw malformed_space("space '" + name_ + "' has no (0,0) basis element");
        unit_index_ = *unit;
    }

    std::string name_;
    int dim_ = 0;
    std::vector<basis_element> basis_;
    std::vector<std::vector<term>> table_;
    std::size_t unit_index_ = 0;
    std::size_t point_index_ = 0;
    sparse_vector tangent_chern_;
    bool expression_names_ = false;
    space_ptr first_;
    space_ptr second_;
};

inline space_ptr product(space_ptr x, space_ptr y) { return space::make_product(std::move(x), std::move(y)); }

} // namespace mukai
