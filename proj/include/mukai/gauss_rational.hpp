#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "error.hpp"

namespace mukai {

using rational = mpq_class;

/// Exact element re + im*i of the Gaussian rationals Q(i).
/**
 * Both parts are kept as canonical GMP rationals, so two values compare equal
 * exactly when their representations are identical.
 */
class gauss_rational {
public:
    gauss_rational() = default;
    gauss_rational(long v) : re_(v) {}
    gauss_rational(int v) : re_(v) {}
    gauss_rational(rational re) : re_(std::move(re)) { re_.canonicalize(); }
    gauss_rational(rational re, rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static gauss_rational i() { return {rational(0), rational(1)}; }

    /// num/den with den != 0.
    static gauss_rational fraction(long num, long den)
    {
        if (den == 0) throw division_by_zero();
        rational q(num, den);
        q.canonicalize();
        return gauss_rational(q);
    }

    const rational& re() const noexcept { return re_; }
    const rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    gauss_rational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2.
    rational norm() const { return re_ * re_ + im_ * im_; }

    gauss_rational operator-() const { return {-re_, -im_}; }

    gauss_rational& operator+=(const gauss_rational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    gauss_rational& operator-=(const gauss_rational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    gauss_rational& operator*=(const gauss_rational& o)
    {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        rational r = re_ * o.re_ - im_ * o.im_;
        rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    gauss_rational& operator/=(const gauss_rational& o)
    {
        if (o.is_zero()) throw division_by_zero();
        if (sgn(o.im_) == 0) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        rational n = o.norm();
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend gauss_rational operator+(gauss_rational a, const gauss_rational& b) { return a += b; }
    friend gauss_rational operator-(gauss_rational a, const gauss_rational& b) { return a -= b; }
    friend gauss_rational operator*(gauss_rational a, const gauss_rational& b) { return a *= b; }
    friend gauss_rational operator/(gauss_rational a, const gauss_rational& b) { return a /= b; }

    friend bool operator==(const gauss_rational& a, const gauss_rational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    gauss_rational inverse() const { return gauss_rational(1) / *this; }

    /// Integer power; negative exponents invert (and throw on zero).
    gauss_rational pow(long e) const
    {
        gauss_rational base = e < 0 ? inverse() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
        gauss_rational acc(1);
        while (n != 0) {
            if (n & 1UL) acc *= base;
            n >>= 1;
            if (n != 0) base *= base;
        }
        return acc;
    }

    /// i^k for any integer k.
    static gauss_rational i_pow(long k)
    {
        switch (((k % 4) + 4) % 4) {
        case 0: return 1;
        case 1: return i();
        case 2: return -1;
        default: return -i();
        }
    }

    /// Canonical text "a/b + c/d*i"; zero parts are omitted, "0" for zero.
    std::string str() const
    {
        const bool has_re = sgn(re_) != 0;
        const bool has_im = sgn(im_) != 0;
        if (!has_re && !has_im) return "0";
        std::string out;
        if (has_re) out = re_.get_str();
        if (has_im) {
            rational mag = abs(im_);
            std::string im_txt = mag == 1 ? "i" : mag.get_str() + "*i";
            if (has_re)
                out += sgn(im_) < 0 ? " - " : " + ";
            else if (sgn(im_) < 0)
                out += "-";
            out += im_txt;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const gauss_rational& z) { return os << z.str(); }

private:
    rational re_{0};
    rational im_{0};
};

} // namespace mukai
