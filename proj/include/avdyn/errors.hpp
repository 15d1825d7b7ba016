#pragma once

#include <stdexcept>
#include <string>

namespace avdyn {

// Malformed input: wrong shape, broken invariant, bad scenario field.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// det(M^l - I) = 0 or a similar degeneracy; the fixed locus may be positive dimensional.
class DegenerateError : public std::runtime_error {
public:
    explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive work would exceed the caller's budget. Never returned as a partial answer.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace avdyn
