#include "wronski/json_io.hpp"

#include "wronski/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace wronski::io {

namespace {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& require(const Json& j, const std::string& key, const std::string& at) {
    if (!j.is_object()) throw SchemaError(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(child(at, key), "missing field");
    return *it;
}

const Json& require_array(const Json& j, const std::string& at) {
    if (!j.is_array()) throw SchemaError(at, "expected an array");
    return j;
}

std::int64_t as_int(const Json& j, const std::string& at) {
    if (!j.is_number_integer()) throw SchemaError(at, "expected an integer");
    return j.get<std::int64_t>();
}

std::size_t as_index(const Json& j, const std::string& at) {
    const auto v = as_int(j, at);
    if (v < 0) throw SchemaError(at, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

bool as_bool(const Json& j, const std::string& at) {
    if (!j.is_boolean()) throw SchemaError(at, "expected a boolean");
    return j.get<bool>();
}

// Non-finite doubles are written as null.
Json real_to_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double as_real(const Json& j, const std::string& at) {
    if (j.is_null()) return std::numeric_limits<double>::infinity();
    if (!j.is_number()) throw SchemaError(at, "expected a number");
    return j.get<double>();
}

std::vector<std::string> vars_from_json(const Json& j, const std::string& at) {
    std::vector<std::string> vars;
    const auto& arr = require_array(j, at);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string()) throw SchemaError(child(at, i), "expected a string");
        vars.push_back(arr[i].get<std::string>());
    }
    return vars;
}

Integer integer_from_string(const Json& j, const std::string& at) {
    std::string text;
    if (j.is_string()) {
        text = j.get<std::string>();
    } else if (j.is_number_integer()) {
        text = std::to_string(j.get<std::int64_t>());
    } else {
        throw SchemaError(at, "expected an integer string");
    }
    const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos)
        throw SchemaError(at, "malformed integer '" + text + "'");
    return Integer(text);
}

}  // namespace

Json to_json(const Rational& q) {
    return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Json to_json(const PointConfiguration& config) {
    Json pts = Json::array();
    for (const auto& p : config.points()) pts.push_back(p);
    return Json{{"d", config.dim()}, {"points", pts}};
}

Json to_json(const Lifting& lifting) { return Json{{"values", lifting.values}}; }

Json to_json(const SimplicialComplex& complex) { return Json{{"facets", complex.facets}}; }

Json to_json(const Subdivision& sub) { return Json{{"cells", sub.cells}}; }

Json to_json(const FacetBipartition& parts) {
    return Json{{"black", parts.black}, {"white", parts.white}};
}

Json to_json(const VertexColoring& coloring) {
    Json colors = Json::array();
    for (const auto& [point, c] : coloring.color) colors.push_back(Json::array({point, c}));
    return Json{{"num_colors", coloring.num_colors}, {"colors", colors}, {"classes", coloring.classes()}};
}

Json to_json(const ExactPolynomial& poly) {
    Json terms = Json::array();
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        terms.push_back(Json{{"coeff", to_json(it->second)}, {"exps", it->first}});
    }
    return Json{{"vars", poly.vars()}, {"terms", terms}};
}

Json to_json(const PolynomialSystem& system) {
    Json polys = Json::array();
    for (const auto& p : system.polynomials()) polys.push_back(to_json(p));
    return Json{{"vars", system.vars()}, {"polynomials", polys}};
}

Json to_json(const CoefficientChoice& c) {
    Json rows = Json::array();
    for (const auto& row : c.rows) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(to_json(q));
        rows.push_back(r);
    }
    return Json{{"rows", rows}};
}

Json to_json(const SolveResult& result) {
    Json sols = Json::array();
    for (const auto& s : result.solutions) {
        Json coords = Json::array();
        for (const auto& c : s.coords) coords.push_back(Json::array({c.real(), c.imag()}));
        sols.push_back(Json{{"coords", coords},
                            {"residual", real_to_json(s.residual)},
                            {"singular", s.singular},
                            {"real", s.real},
                            {"in_torus", s.in_torus},
                            {"multiplicity", s.multiplicity},
                            {"condition", real_to_json(s.condition)}});
    }
    return Json{{"seed", result.seed},
                {"paths_tracked", result.paths_tracked},
                {"paths_diverged", result.paths_diverged},
                {"paths_failed", result.paths_failed},
                {"paths_outside_torus", result.paths_outside_torus},
                {"solutions", sols}};
}

Rational rational_from_json(const Json& j, const std::string& at) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    const Integer num = integer_from_string(require(j, "num", at), child(at, "num"));
    const Integer den = integer_from_string(require(j, "den", at), child(at, "den"));
    if (den == 0) throw SchemaError(child(at, "den"), "zero denominator");
    return Rational(num, den);
}

PointConfiguration points_from_json(const Json& j, const std::string& at) {
    const auto d = as_index(require(j, "d", at), child(at, "d"));
    const auto pts_at = child(at, "points");
    const auto& arr = require_array(require(j, "points", at), pts_at);
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto row_at = child(pts_at, i);
        const auto& row = require_array(arr[i], row_at);
        if (row.size() != d) throw SchemaError(row_at, "point must have d coordinates");
        LatticePoint p;
        for (std::size_t c = 0; c < row.size(); ++c) p.push_back(as_int(row[c], child(row_at, c)));
        pts.push_back(std::move(p));
    }
    try {
        return PointConfiguration(d, std::move(pts));
    } catch (const InvalidConfiguration& e) {
        throw SchemaError(at, e.what());
    }
}

Lifting lifting_from_json(const Json& j, const std::string& at) {
    const auto vals_at = child(at, "values");
    const auto& arr = require_array(require(j, "values", at), vals_at);
    Lifting l;
    for (std::size_t i = 0; i < arr.size(); ++i) l.values.push_back(as_int(arr[i], child(vals_at, i)));
    return l;
}

SimplicialComplex complex_from_json(const Json& j, const PointConfiguration& config,
                                    const std::string& at) {
    const auto facets_at = child(at, "facets");
    const auto& arr = require_array(require(j, "facets", at), facets_at);
    if (arr.empty()) throw SchemaError(facets_at, "complex must be nonempty");
    SimplicialComplex complex{config, {}};
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto f_at = child(facets_at, i);
        const auto& f = require_array(arr[i], f_at);
        if (f.size() != config.dim() + 1) throw SchemaError(f_at, "facet must have d+1 vertices");
        IndexSet facet;
        for (std::size_t k = 0; k < f.size(); ++k) {
            const auto v = as_index(f[k], child(f_at, k));
            if (v >= config.size()) throw SchemaError(child(f_at, k), "vertex index out of range");
            facet.push_back(v);
        }
        std::sort(facet.begin(), facet.end());
        complex.facets.push_back(std::move(facet));
    }
    return complex;
}

ExactPolynomial polynomial_from_json(const Json& j, const std::string& at) {
    auto vars = vars_from_json(require(j, "vars", at), child(at, "vars"));
    ExactPolynomial p(vars);
    const auto terms_at = child(at, "terms");
    const auto& arr = require_array(require(j, "terms", at), terms_at);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto t_at = child(terms_at, i);
        const auto coeff = rational_from_json(require(arr[i], "coeff", t_at), child(t_at, "coeff"));
        const auto exps_at = child(t_at, "exps");
        const auto& exps = require_array(require(arr[i], "exps", t_at), exps_at);
        if (exps.size() != vars.size()) throw SchemaError(exps_at, "exponent length must match vars");
        ExponentVector e;
        for (std::size_t k = 0; k < exps.size(); ++k)
            e.push_back(static_cast<std::uint32_t>(as_index(exps[k], child(exps_at, k))));
        p.add_term(e, coeff);
    }
    return p;
}

PolynomialSystem system_from_json(const Json& j, const std::string& at) {
    auto vars = vars_from_json(require(j, "vars", at), child(at, "vars"));
    const auto polys_at = child(at, "polynomials");
    const auto& arr = require_array(require(j, "polynomials", at), polys_at);
    if (arr.empty()) throw SchemaError(polys_at, "system must be nonempty");
    std::vector<ExactPolynomial> polys;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto p = polynomial_from_json(arr[i], child(polys_at, i));
        if (p.vars() != vars) throw SchemaError(child(polys_at, i), "polynomial vars differ from system vars");
        polys.push_back(std::move(p));
    }
    return PolynomialSystem(std::move(vars), std::move(polys));
}

CoefficientChoice coefficients_from_json(const Json& j, const std::string& at) {
    const auto rows_at = child(at, "rows");
    const auto& rows = require_array(require(j, "rows", at), rows_at);
    CoefficientChoice c;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = require_array(rows[i], child(rows_at, i));
        std::vector<Rational> r;
        for (std::size_t k = 0; k < row.size(); ++k)
            r.push_back(rational_from_json(row[k], child(child(rows_at, i), k)));
        c.rows.push_back(std::move(r));
    }
    return c;
}

SolveResult solve_result_from_json(const Json& j, const std::string& at) {
    SolveResult r;
    const auto& seed = require(j, "seed", at);
    if (!seed.is_number_unsigned() && !seed.is_number_integer())
        throw SchemaError(child(at, "seed"), "expected an integer");
    r.seed = seed.get<std::uint64_t>();
    r.paths_tracked = as_index(require(j, "paths_tracked", at), child(at, "paths_tracked"));
    if (j.contains("paths_diverged")) r.paths_diverged = as_index(j["paths_diverged"], child(at, "paths_diverged"));
    if (j.contains("paths_failed")) r.paths_failed = as_index(j["paths_failed"], child(at, "paths_failed"));
    if (j.contains("paths_outside_torus"))
        r.paths_outside_torus = as_index(j["paths_outside_torus"], child(at, "paths_outside_torus"));
    const auto sols_at = child(at, "solutions");
    const auto& sols = require_array(require(j, "solutions", at), sols_at);
    for (std::size_t i = 0; i < sols.size(); ++i) {
        const auto s_at = child(sols_at, i);
        const auto& sj = sols[i];
        Solution s;
        const auto coords_at = child(s_at, "coords");
        const auto& coords = require_array(require(sj, "coords", s_at), coords_at);
        for (std::size_t k = 0; k < coords.size(); ++k) {
            const auto c_at = child(coords_at, k);
            const auto& pair = require_array(coords[k], c_at);
            if (pair.size() != 2) throw SchemaError(c_at, "complex number must be [re, im]");
            s.coords.emplace_back(as_real(pair[0], child(c_at, 0)), as_real(pair[1], child(c_at, 1)));
        }
        s.residual = as_real(require(sj, "residual", s_at), child(s_at, "residual"));
        s.singular = as_bool(require(sj, "singular", s_at), child(s_at, "singular"));
        s.real = as_bool(require(sj, "real", s_at), child(s_at, "real"));
        s.in_torus = as_bool(require(sj, "in_torus", s_at), child(s_at, "in_torus"));
        if (sj.contains("multiplicity")) s.multiplicity = as_index(sj["multiplicity"], child(s_at, "multiplicity"));
        if (sj.contains("condition")) s.condition = as_real(sj["condition"], child(s_at, "condition"));
        r.solutions.push_back(std::move(s));
    }
    return r;
}

Json read_json_file(const std::string& path) {
    if (path == "-") {
        try {
            return Json::parse(std::cin);
        } catch (const nlohmann::json::parse_error& e) {
            throw IoError(std::string("stdin is not valid JSON: ") + e.what());
        }
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace wronski::io
