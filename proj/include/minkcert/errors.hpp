#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minkcert {

// Root of every failure this library raises.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- interval kernel -------------------------------------------------------

struct division_by_zero_interval : error {
    division_by_zero_interval() : error("division by an interval containing zero") {}
};

struct non_finite_result : error {
    non_finite_result() : error("interval endpoint overflowed or is not finite") {}
    explicit non_finite_result(const std::string& what) : error(what) {}
};

struct log_non_positive : error {
    log_non_positive() : error("ln requires a strictly positive lower endpoint") {}
};

struct negative_base : error {
    negative_base() : error("pow requires a non-negative base interval") {}
};

struct zero_to_nonpositive : error {
    zero_to_nonpositive() : error("pow with zero base requires a strictly positive exponent") {}
};

struct empty_interval : error {
    explicit empty_interval(const std::string& what) : error(what) {}
};

// --- moduli / verifier -----------------------------------------------------

struct precondition_violation : error {
    using error::error;
};

struct bracket_failure : error {
    explicit bracket_failure(const std::string& what) : error(what) {}
};

struct seed_indeterminate : error {
    seed_indeterminate() : error("continuation seed enclosure contains zero") {}
};

// --- term algebra ----------------------------------------------------------

struct unbound_variable : error {
    explicit unbound_variable(const std::string& name)
        : error("unbound variable: " + name), variable(name) {}
    std::string variable;
};

struct syntax_error : error {
    syntax_error(const std::string& what, std::size_t pos)
        : error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct unknown_symbol : error {
    unknown_symbol(const std::string& name, std::size_t pos)
        : error("unknown symbol '" + name + "' at position " + std::to_string(pos)),
          symbol(name), position(pos) {}
    std::string symbol;
    std::size_t position;
};

struct arity_mismatch : error {
    arity_mismatch(const std::string& name, int expected, int got, std::size_t pos)
        : error("operation '" + name + "' expects " + std::to_string(expected) +
                " argument(s), got " + std::to_string(got) +
                " at position " + std::to_string(pos)),
          symbol(name), expected(expected), got(got), position(pos) {}
    std::string symbol;
    int expected;
    int got;
    std::size_t position;
};

}  // namespace minkcert
