#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mukai {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

class singular_matrix : public error {
public:
    singular_matrix(std::size_t rank, std::size_t size)
        : error("singular matrix: rank " + std::to_string(rank) + " < " + std::to_string(size)),
          rank_(rank) {}
    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

class space_mismatch : public error {
public:
    using error::error;
};

class not_a_product : public error {
public:
    explicit not_a_product(const std::string& name) : error("space '" + name + "' is not a product") {}
};

/// A formal series was asked for on a class whose constant term is not the required one.
class bad_constant_term : public error {
public:
    using error::error;
};

class malformed_space : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : error("parse error at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class unknown_basis_name : public parse_error {
public:
    unknown_basis_name(const std::string& name, std::size_t pos)
        : parse_error("unknown basis name '" + name + "'", pos) {}
};

class bidegree_violation : public parse_error {
public:
    using parse_error::parse_error;
};

} // namespace mukai
