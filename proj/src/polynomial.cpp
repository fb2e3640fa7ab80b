#include "wronski/polynomial.hpp"

#include "wronski/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wronski {

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::uint64_t total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

ExactPolynomial::ExactPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

ExactPolynomial ExactPolynomial::constant(std::vector<std::string> vars, const Rational& c) {
    ExactPolynomial p(std::move(vars));
    p.add_term(ExponentVector(p.nvars(), 0), c);
    return p;
}

ExactPolynomial ExactPolynomial::monomial(std::vector<std::string> vars, ExponentVector exps,
                                          const Rational& c) {
    ExactPolynomial p(std::move(vars));
    p.add_term(exps, c);
    return p;
}

std::uint64_t ExactPolynomial::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

void ExactPolynomial::add_term(const ExponentVector& exps, const Rational& c) {
    if (exps.size() != vars_.size()) throw DimensionMismatch("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ExactPolynomial::check_compatible(const ExactPolynomial& o) const {
    if (vars_ != o.vars_) throw DimensionMismatch("polynomials over different variables");
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    a.check_compatible(b);
    ExactPolynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExponentVector e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

ExactPolynomial ExactPolynomial::substitute(std::size_t var, const Rational& value) const {
    if (var >= vars_.size()) throw DimensionMismatch("substitution variable out of range");
    auto vars = vars_;
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(var));
    ExactPolynomial out(std::move(vars));
    for (const auto& [e, c] : terms_) {
        ExponentVector rest = e;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(var));
        out.add_term(rest, c * power(value, e[var]));
    }
    return out;
}

Rational ExactPolynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw DimensionMismatch("evaluation point length mismatch");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) t *= power(point[i], e[i]);
        sum += t;
    }
    return sum;
}

std::string ExactPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        const bool unit_monomial = total_degree(e) > 0;
        if (mag != 1 || !unit_monomial) factors.push_back(mag.str());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    ExactPolynomial run() {
        ExactPolynomial out(vars_);
        skip_ws();
        if (pos_ == text_.size()) fail("empty input");
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Rational coeff = sign;
            ExponentVector exps(vars_.size(), 0);
            parse_term(coeff, exps);
            out.add_term(exps, coeff);
            skip_ws();
        }
        return out;
    }

private:
    void parse_term(Rational& coeff, ExponentVector& exps) {
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Integer num = read_integer();
                Integer den = 1;
                if (peek() == '/') {
                    ++pos_;
                    den = read_integer();
                    if (den == 0) fail("zero denominator");
                }
                coeff *= Rational(num, den);
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                const std::string name = text_.substr(start, pos_ - start);
                auto it = std::find(vars_.begin(), vars_.end(), name);
                if (it == vars_.end()) fail("unknown variable '" + name + "'");
                std::uint32_t power = 1;
                if (peek() == '^') {
                    ++pos_;
                    power = read_integer().convert_to<std::uint32_t>();
                }
                exps[static_cast<std::size_t>(it - vars_.begin())] += power;
            } else {
                fail("expected coefficient or variable");
            }
            skip_ws();
            expect_factor = peek() == '*';
            if (expect_factor) ++pos_;
        }
    }

    Integer read_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

ExactPolynomial ExactPolynomial::parse(const std::string& text, std::vector<std::string> vars) {
    return PolyParser(text, vars).run();
}

PolynomialSystem::PolynomialSystem(std::vector<std::string> vars, std::vector<ExactPolynomial> polys)
    : vars_(std::move(vars)), polys_(std::move(polys)) {
    if (polys_.empty()) throw InvalidConfiguration("polynomial system must be nonempty");
    for (const auto& p : polys_) {
        if (p.vars() != vars_) throw DimensionMismatch("system polynomials must share variables");
    }
}

std::vector<std::string> standard_vars(std::size_t d, bool with_s) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= d; ++i) v.push_back("x" + std::to_string(i));
    if (with_s) v.emplace_back("s");
    return v;
}

}  // namespace wronski
