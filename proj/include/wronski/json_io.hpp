#pragma once

#include "wronski/homotopy.hpp"
#include "wronski/lattice.hpp"
#include "wronski/polynomial.hpp"
#include "wronski/wronski.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace wronski::io {

// File could not be read or written. Not a domain error: the CLI reports it as
// a usage problem.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// Rationals travel as {"num": "9", "den": "2"} so no precision is lost.
Json to_json(const Rational& q);
Json to_json(const PointConfiguration& config);
Json to_json(const Lifting& lifting);
Json to_json(const SimplicialComplex& complex);
Json to_json(const Subdivision& sub);
Json to_json(const FacetBipartition& parts);
Json to_json(const VertexColoring& coloring);
Json to_json(const ExactPolynomial& poly);
Json to_json(const PolynomialSystem& system);
Json to_json(const CoefficientChoice& c);
Json to_json(const SolveResult& result);

// Each parser throws SchemaError carrying the JSON pointer of the offending node.
Rational rational_from_json(const Json& j, const std::string& at = "");
PointConfiguration points_from_json(const Json& j, const std::string& at = "");
Lifting lifting_from_json(const Json& j, const std::string& at = "");
// The complex schema carries facets only; the configuration is supplied.
SimplicialComplex complex_from_json(const Json& j, const PointConfiguration& config,
                                    const std::string& at = "");
ExactPolynomial polynomial_from_json(const Json& j, const std::string& at = "");
PolynomialSystem system_from_json(const Json& j, const std::string& at = "");
CoefficientChoice coefficients_from_json(const Json& j, const std::string& at = "");
SolveResult solve_result_from_json(const Json& j, const std::string& at = "");

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wronski::io
