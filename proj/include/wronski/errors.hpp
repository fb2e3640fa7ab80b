#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wronski {

// Base of every domain failure. The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidConfiguration : public DomainError {
public:
    using DomainError::DomainError;
};

class NonFullDimensional : public DomainError {
public:
    NonFullDimensional() : DomainError("point configuration is not full-dimensional") {}
};

class DimensionMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class NonSimplicialCell : public DomainError {
public:
    explicit NonSimplicialCell(std::vector<std::size_t> c);
    std::vector<std::size_t> cell;
};

class DisconnectedComplex : public DomainError {
public:
    DisconnectedComplex() : DomainError("dual graph of the complex is disconnected") {}
};

class NotFoldableError : public DomainError {
public:
    NotFoldableError() : DomainError("complex is not foldable") {}
};

class ZeroPolynomial : public DomainError {
public:
    ZeroPolynomial() : DomainError("polynomial is zero") {}
};

class NotSquare : public DomainError {
public:
    NotSquare(std::size_t polys, std::size_t vars);
};

class ZeroDegreePolynomial : public DomainError {
public:
    explicit ZeroDegreePolynomial(std::size_t index);
};

class UnsupportedDimension : public DomainError {
public:
    explicit UnsupportedDimension(std::size_t d);
};

class BadWindow : public DomainError {
public:
    BadWindow() : DomainError("plot window is degenerate") {}
};

class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

// Raised by JSON deserialization; `pointer` is a JSON pointer to the bad node.
class SchemaError : public DomainError {
public:
    SchemaError(std::string ptr, const std::string& what);
    std::string pointer;
};

}  // namespace wronski
