#include "wronski/errors.hpp"

#include <sstream>

namespace wronski {

namespace {

std::string describe_cell(const std::vector<std::size_t>& cell) {
    std::ostringstream os;
    os << "cell {";
    for (std::size_t i = 0; i < cell.size(); ++i) os << (i ? " " : "") << cell[i];
    os << "} is not a simplex (non-generic lifting)";
    return os.str();
}

}  // namespace

NonSimplicialCell::NonSimplicialCell(std::vector<std::size_t> c)
    : DomainError(describe_cell(c)), cell(std::move(c)) {}

NotSquare::NotSquare(std::size_t polys, std::size_t vars)
    : DomainError("system is not square: " + std::to_string(polys) + " polynomials in " +
                  std::to_string(vars) + " variables") {}

ZeroDegreePolynomial::ZeroDegreePolynomial(std::size_t index)
    : DomainError("polynomial " + std::to_string(index) + " has total degree 0") {}

UnsupportedDimension::UnsupportedDimension(std::size_t d)
    : DomainError("unsupported dimension " + std::to_string(d)) {}

SchemaError::SchemaError(std::string ptr, const std::string& what)
    : DomainError("schema error at '" + ptr + "': " + what), pointer(std::move(ptr)) {}

}  // namespace wronski
