#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cohomology_class.hpp"
#include "space.hpp"

namespace mukai {

namespace detail {

inline rational binomial(long n, long k)
{
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
    return rational(r);
}

} // namespace detail

/// P^n: basis 1, H, ..., H^n with c(T) = (1 + H)^{n+1} truncated.
inline space_ptr projective_space(int n)
{
    if (n < 0) throw error("projective_space: negative dimension");
    space::primitive_data d;
    d.name = "p" + std::to_string(n);
    d.dim = n;
    for (int k = 0; k <= n; ++k) {
        std::string nm = k == 0 ? "1" : k == 1 ? "H" : "H^" + std::to_string(k);
        d.basis.push_back({nm, k, k});
    }
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) d.mult[{a, b}] = {{static_cast<std::size_t>(a + b), 1}};
    d.point_index = static_cast<std::size_t>(n);
    d.expression_names = true;
    for (int k = 0; k <= n; ++k) d.tangent_chern[k] = gauss_rational(detail::binomial(n + 1, k));
    return space::make(std::move(d));
}

/// Exterior algebra on generators a1, b1, ..., ag, bg with a_k of bidegree (1,0) and b_k of
/// bidegree (0,1). The top class a1*b1*...*ag*bg integrates to 1; c(T) = 1.
inline space_ptr torus(int g)
{
    if (g < 0) throw error("torus: negative genus");
    const int gens = 2 * g;
    // Generator order a1, b1, a2, b2, ...: bit 2k is a_{k+1}, bit 2k+1 is b_{k+1}.
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1U << gens); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });
    std::vector<std::size_t> index_of(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) index_of[masks[i]] = i;

    space::primitive_data d;
    d.name = "t" + std::to_string(g);
    d.dim = g;
    for (auto m : masks) {
        std::string nm;
        int p = 0, q = 0;
        for (int b = 0; b < gens; ++b) {
            if (!(m & (1U << b))) continue;
            if (!nm.empty()) nm += "*";
            nm += (b % 2 == 0 ? "a" : "b") + std::to_string(b / 2 + 1);
            (b % 2 == 0 ? p : q) += 1;
        }
        d.basis.push_back({nm.empty() ? "1" : nm, p, q});
    }
    for (auto x : masks)
        for (auto y : masks) {
            if (x & y) continue;
            // Sign of moving each generator of y past the larger generators of x.
            int swaps = 0;
            for (int b = 0; b < gens; ++b)
                if (y & (1U << b)) swaps += std::popcount(x >> (b + 1));
            d.mult[{index_of[x], index_of[y]}] = {{index_of[x | y], swaps % 2 ? -1 : 1}};
        }
    d.point_index = index_of[(1U << gens) - 1];
    d.expression_names = true;
    d.tangent_chern[0] = 1;
    return space::make(std::move(d));
}

/// Gram matrix of U^3 + E8(-1)^2, the even unimodular lattice H^2(K3, Z).
/**
 * Basis order: sigma, sigmabar (first hyperbolic plane, bidegrees (2,0) and (0,2)),
 * u2a, u2b, u3a, u3b (the other two hyperbolic planes), e1..e8, f1..f8 (E8(-1) twice).
 */
inline std::array<std::array<int, 22>, 22> k3_lattice()
{
    std::array<std::array<int, 22>, 22> g{};
    for (int h = 0; h < 3; ++h) g[2 * h][2 * h + 1] = g[2 * h + 1][2 * h] = 1;
    // E8 Dynkin diagram, Bourbaki labelling (0-based): chain 0-2-3-4-5-6-7 with 1 attached to 3.
    const int edges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (int block = 0; block < 2; ++block) {
        const int off = 6 + 8 * block;
        for (int k = 0; k < 8; ++k) g[off + k][off + k] = -2;
        for (const auto& e : edges) g[off + e[0]][off + e[1]] = g[off + e[1]][off + e[0]] = 1;
    }
    return g;
}

/// K3 surface. H^2 carries the K3 lattice form on 22 classes; c(T) = 1 + 24 pt.
inline space_ptr k3()
{
    space::primitive_data d;
    d.name = "k3";
    d.dim = 2;
    d.basis.push_back({"1", 0, 0});
    d.basis.push_back({"sigma", 2, 0});
    d.basis.push_back({"sigmabar", 0, 2});
    for (const char* nm : {"u2a", "u2b", "u3a", "u3b"}) d.basis.push_back({nm, 1, 1});
    for (int k = 1; k <= 8; ++k) d.basis.push_back({"e" + std::to_string(k), 1, 1});
    for (int k = 1; k <= 8; ++k) d.basis.push_back({"f" + std::to_string(k), 1, 1});
    d.basis.push_back({"pt", 2, 2});
    const std::size_t pt = 23;
    for (std::size_t k = 0; k <= pt; ++k) {
        d.mult[{0, k}] = {{k, 1}};
        d.mult[{k, 0}] = {{k, 1}};
    }
    const auto g = k3_lattice();
    for (std::size_t a = 0; a < 22; ++a)
        for (std::size_t b = 0; b < 22; ++b)
            if (g[a][b] != 0) d.mult[{a + 1, b + 1}] = {{pt, g[a][b]}};
    d.point_index = pt;
    d.expression_names = true;
    d.tangent_chern[0] = 1;
    d.tangent_chern[pt] = 24;
    return space::make(std::move(d));
}

} // namespace mukai
