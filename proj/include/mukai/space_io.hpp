#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "duality.hpp"
#include "error.hpp"
#include "parse.hpp"
#include "space.hpp"

namespace mukai {

/// Text model of a space, one directive per line ('#' starts a comment):
///
///     space <name>
///     dim <n>
///     basis <count>
///     <name> <p> <q>          (count lines, in basis order)
///     point <index>
///     mult                    (nonzero products, then "end"; products with the unit may be omitted)
///     <i> <j> -> <sparse>
///     end
///     tangent_chern <sparse>
///
/// A sparse class is "0" or "k: c; k: c; ..." with basis indices k and Q(i) scalars c.
/// Basis names may be any non-blank text without '{', '}', ';' or ':'.
inline std::string format_sparse(const sparse_vector& v)
{
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : v) {
        if (!out.empty()) out += "; ";
        out += std::to_string(k) + ": " + c.str();
    }
    return out;
}

inline void write_space(std::ostream& os, const space& s)
{
    os << "space " << s.name() << "\n";
    os << "dim " << s.dim() << "\n";
    os << "basis " << s.size() << "\n";
    for (const auto& b : s.basis()) os << b.name << " " << b.p << " " << b.q << "\n";
    os << "point " << s.point_index() << "\n";
    os << "mult\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            sparse_vector v;
            for (const auto& t : s.multiply_basis(i, j)) accumulate(v, t.index, t.coeff);
            if (!v.empty()) os << i << " " << j << " -> " << format_sparse(v) << "\n";
        }
    os << "end\n";
    os << "tangent_chern " << format_sparse(s.tangent_chern()) << "\n";
}

namespace detail {

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline sparse_vector parse_sparse(const std::string& text, std::size_t line)
{
    sparse_vector v;
    const std::string t = trim(text);
    if (t == "0") return v;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw malformed_space("line " + std::to_string(line) + ": expected 'index: coeff'");
        std::size_t idx = 0;
        try {
            idx = std::stoul(trim(item.substr(0, colon)));
        } catch (const std::exception&) {
            throw malformed_space("line " + std::to_string(line) + ": bad basis index");
        }
        try {
            accumulate(v, idx, parse_scalar(item.substr(colon + 1)));
        } catch (const parse_error& e) {
            throw malformed_space("line " + std::to_string(line) + ": " + e.what());
        }
    }
    return v;
}

} // namespace detail

/// Reads a space description and checks every model invariant; throws malformed_space otherwise.
inline space_ptr read_space(std::istream& is)
{
    space::primitive_data d;
    std::vector<std::string> lines;
    std::vector<std::size_t> numbers;
    {
        std::string raw;
        std::size_t n = 0;
        while (std::getline(is, raw)) {
            ++n;
            const auto hash = raw.find('#');
            std::string l = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
            if (l.empty()) continue;
            lines.push_back(std::move(l));
            numbers.push_back(n);
        }
    }
    bool have_name = false, have_dim = false, have_basis = false, have_point = false, have_tc = false;
    std::size_t k = 0;
    auto bad = [&](const std::string& msg) {
        return malformed_space("line " + std::to_string(k < numbers.size() ? numbers[k] : 0) + ": " + msg);
    };
    while (k < lines.size()) {
        std::istringstream ls(lines[k]);
        std::string key;
        ls >> key;
        if (key == "space") {
            std::getline(ls, d.name);
            d.name = detail::trim(d.name);
            if (d.name.empty()) throw bad("empty space name");
            have_name = true;
        } else if (key == "dim") {
            if (!(ls >> d.dim) || d.dim < 0) throw bad("bad dimension");
            have_dim = true;
        } else if (key == "basis") {
            std::size_t count = 0;
            if (!(ls >> count)) throw bad("bad basis count");
            for (std::size_t b = 0; b < count; ++b) {
                ++k;
                if (k >= lines.size()) throw bad("basis list ends early");
                std::istringstream bs(lines[k]);
                basis_element e;
                if (!(bs >> e.name >> e.p >> e.q)) throw bad("expected '<name> <p> <q>'");
                if (e.name.find_first_of("{};:") != std::string::npos) throw bad("basis name contains a reserved character");
                d.basis.push_back(std::move(e));
            }
            have_basis = true;
        } else if (key == "point") {
            if (!(ls >> d.point_index)) throw bad("bad point index");
            have_point = true;
        } else if (key == "mult") {
            for (++k; k < lines.size() && lines[k] != "end"; ++k) {
                const auto arrow = lines[k].find("->");
                if (arrow == std::string::npos) throw bad("expected '<i> <j> -> <sparse class>'");
                std::istringstream ij(lines[k].substr(0, arrow));
                std::size_t i = 0, j = 0;
                if (!(ij >> i >> j)) throw bad("bad multiplication indices");
                d.mult[{i, j}] = detail::parse_sparse(lines[k].substr(arrow + 2), numbers[k]);
            }
            if (k >= lines.size()) throw bad("mult block is missing 'end'");
        } else if (key == "tangent_chern") {
            std::string rest;
            std::getline(ls, rest);
            d.tangent_chern = detail::parse_sparse(rest, numbers[k]);
            have_tc = true;
        } else {
            throw bad("unknown directive '" + key + "'");
        }
        ++k;
    }
    if (!have_name || !have_dim || !have_basis || !have_point || !have_tc)
        throw malformed_space("space file needs space, dim, basis, point and tangent_chern directives");
    // products with the unit may be left out of the mult block
    for (std::size_t u = 0; u < d.basis.size(); ++u) {
        if (d.basis[u].p != 0 || d.basis[u].q != 0) continue;
        for (std::size_t j = 0; j < d.basis.size(); ++j) {
            d.mult.try_emplace({u, j}, sparse_vector{{j, gauss_rational(1)}});
            d.mult.try_emplace({j, u}, sparse_vector{{j, gauss_rational(1)}});
        }
        break;
    }
    space_ptr s = space::make(std::move(d));
    const auto problems = check_space_invariants(s);
    if (!problems.empty()) throw malformed_space("space '" + s->name() + "': " + problems.front());
    return s;
}

} // namespace mukai
