#pragma once

#include <stdexcept>
#include <string>

namespace polyauto {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violations of algebraic preconditions: zero divisor, gcd(0,0), degree of 0.
class DomainError : public Error {
public:
    using Error::Error;
};

// Mismatched variable counts or map dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Exact division requested on non-divisible input.
class DivisionError : public Error {
public:
    using Error::Error;
};

// A map fed to an algorithm that requires an automorphism is not one.
class NotAutomorphismError : public Error {
public:
    using Error::Error;
};

// Certificate replay found an inconsistency.
class VerifyError : public Error {
public:
    using Error::Error;
};

// A computation left the fraction domain the engine represents
// (denominators must stay in Z[t]).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg), line(line), col(col) {}
    int line;
    int col;
};

} // namespace polyauto
