#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "cohomology_class.hpp"
#include "error.hpp"

namespace mukai {

/// A formal K-theory expression on a model space, evaluated homomorphically by ch.
class kexpr {
public:
    enum class kind { structure, line_bundle, tangent, dual, tensor, sum, shift, external_tensor };

    static kexpr structure(space_ptr s) { return kexpr(node{kind::structure, std::move(s)}); }

    /// Line bundle with first Chern class c1, which must be of pure bidegree (1,1).
    static kexpr line_bundle(const coh_class& c1)
    {
        for (const auto& [k, c] : c1.terms()) {
            const auto& b = c1.space()->basis(k);
            if (b.p != 1 || b.q != 1)
                throw error("line_bundle: first Chern class has a component of bidegree (" + std::to_string(b.p) +
                            "," + std::to_string(b.q) + ")");
        }
        node n{kind::line_bundle, c1.space()};
        n.c1 = c1;
        return kexpr(std::move(n));
    }

    static kexpr tangent(space_ptr s) { return kexpr(node{kind::tangent, std::move(s)}); }

    static kexpr dual(const kexpr& e)
    {
        node n{kind::dual, e.space()};
        n.lhs = e.node_;
        return kexpr(std::move(n));
    }

    static kexpr tensor(const kexpr& a, const kexpr& b) { return binary(kind::tensor, a, b); }
    static kexpr sum(const kexpr& a, const kexpr& b) { return binary(kind::sum, a, b); }

    /// e[n]; contributes (-1)^n to ch.
    static kexpr shift(const kexpr& e, long n)
    {
        node nd{kind::shift, e.space()};
        nd.lhs = e.node_;
        nd.shift = n;
        return kexpr(std::move(nd));
    }

    /// a on X and b on Y combined to pr1^* a (x) pr2^* b on the product X x Y.
    static kexpr external_tensor(space_ptr xy, const kexpr& a, const kexpr& b)
    {
        if (!same_space(*xy->first(), *a.space()) || !same_space(*xy->second(), *b.space()))
            throw space_mismatch("external_tensor: factors of '" + xy->name() + "' do not match '" +
                                 a.space()->name() + "' and '" + b.space()->name() + "'");
        node n{kind::external_tensor, std::move(xy)};
        n.lhs = a.node_;
        n.rhs = b.node_;
        return kexpr(std::move(n));
    }

    kind type() const noexcept { return node_->type; }
    const space_ptr& space() const noexcept { return node_->ambient; }
    const coh_class& first_chern() const { return *node_->c1; }
    kexpr left() const { return kexpr(node_->lhs); }
    kexpr right() const { return kexpr(node_->rhs); }
    long shift_amount() const noexcept { return node_->shift; }

    std::string str() const
    {
        switch (type()) {
        case kind::structure: return "O";
        case kind::line_bundle: return "O(" + first_chern().str() + ")";
        case kind::tangent: return "T";
        case kind::dual: return "dual(" + left().str() + ")";
        case kind::tensor: return "(" + left().str() + " * " + right().str() + ")";
        case kind::sum: return "(" + left().str() + " + " + right().str() + ")";
        case kind::shift: return left().str() + "[" + std::to_string(shift_amount()) + "]";
        case kind::external_tensor: return "box(" + left().str() + ", " + right().str() + ")";
        }
        return {};
    }

private:
    struct node {
        kind type;
        space_ptr ambient;
        std::optional<coh_class> c1{};
        std::shared_ptr<const node> lhs{};
        std::shared_ptr<const node> rhs{};
        long shift = 0;
    };

    explicit kexpr(node n) : node_(std::make_shared<const node>(std::move(n))) {}
    explicit kexpr(std::shared_ptr<const node> n) : node_(std::move(n)) {}

    static kexpr binary(kind k, const kexpr& a, const kexpr& b)
    {
        if (!same_space(*a.space(), *b.space()))
            throw space_mismatch("K-theory expression mixes spaces '" + a.space()->name() + "' and '" +
                                 b.space()->name() + "'");
        node n{k, a.space()};
        n.lhs = a.node_;
        n.rhs = b.node_;
        return kexpr(std::move(n));
    }

    std::shared_ptr<const node> node_;
};

} // namespace mukai
