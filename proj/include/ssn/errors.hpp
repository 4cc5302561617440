#pragma once

#include <stdexcept>
#include <string>

namespace ssn {

// Undefined operation in Q ∪ {∞} (∞ + ∞, 0·∞, 0/0).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A construction was asked for outside the parameter range where it is
// defined. The message names the violated condition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input ("p/q" literals, ranges).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ssn
