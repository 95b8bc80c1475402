#pragma once

// Coefficient-wise recovery of exact polynomials from approximate ones, plus
// just enough exact polynomial arithmetic to verify a recovered factorization
// by multiplying it back out.
//
// Text format (line oriented):
//
//     # optional comments
//     vars: x y z
//     1.0000         1 0 0
//     .6250000000067 0 1 0
//
// One term per line: a coefficient in decimal or p/q form followed by one
// exponent per variable. Output mirrors the format with exact coefficients.

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratrec/bounds.hpp"
#include "ratrec/errors.hpp"
#include "ratrec/rational.hpp"
#include "ratrec/recovery.hpp"

namespace ratrec {

struct ApproxTerm {
    std::string coefficient;
    std::vector<unsigned> exponents;
};

struct PolynomialApprox {
    std::vector<std::string> variables;
    std::vector<ApproxTerm> terms;
};

struct ExactTerm {
    Rational coefficient;
    std::vector<unsigned> exponents;

    friend bool operator==(const ExactTerm&, const ExactTerm&) = default;
};

struct ExactPolynomial {
    std::vector<std::string> variables;
    std::vector<ExactTerm> terms;

    // Terms sorted by exponent vector; the order-independent canonical form.
    ExactPolynomial normalized() const {
        ExactPolynomial out = *this;
        std::sort(out.terms.begin(), out.terms.end(),
                  [](const ExactTerm& a, const ExactTerm& b) { return a.exponents < b.exponents; });
        return out;
    }

    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
        return a.variables == b.variables && a.normalized().terms == b.normalized().terms;
    }
};

namespace detail {

template <typename Term>
void check_terms(const std::vector<std::string>& variables, const std::vector<Term>& terms) {
    std::vector<std::vector<unsigned>> seen;
    for (const Term& t : terms) {
        if (t.exponents.size() != variables.size())
            throw std::invalid_argument("polynomial: exponent count does not match variables");
        seen.push_back(t.exponents);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("polynomial: duplicate exponent vector");
}

}  // namespace detail

inline PolynomialApprox parse_polynomial(std::istream& in) {
    PolynomialApprox poly;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string first;
        if (!(words >> first) || first[0] == '#') continue;
        if (!have_header) {
            if (first != "vars:")
                throw ParseError("polynomial: expected 'vars:' header, got \"" + first + "\"",
                                 line_no);
            std::string name;
            while (words >> name) poly.variables.push_back(name);
            if (poly.variables.empty())
                throw ParseError("polynomial: 'vars:' line names no variables", line_no);
            have_header = true;
            continue;
        }
        ApproxTerm term;
        term.coefficient = first;
        long long e;
        while (words >> e) {
            if (e < 0) throw ParseError("polynomial: negative exponent", line_no);
            term.exponents.push_back(static_cast<unsigned>(e));
        }
        if (!words.eof())
            throw ParseError("polynomial: malformed exponent on line", line_no);
        if (term.exponents.size() != poly.variables.size())
            throw ParseError("polynomial: expected " + std::to_string(poly.variables.size()) +
                                 " exponents, got " + std::to_string(term.exponents.size()),
                             line_no);
        poly.terms.push_back(std::move(term));
    }
    if (!have_header) throw ParseError("polynomial: missing 'vars:' header", line_no);
    detail::check_terms(poly.variables, poly.terms);
    return poly;
}

inline PolynomialApprox parse_polynomial(const std::string& text) {
    std::istringstream in(text);
    return parse_polynomial(in);
}

inline std::string format_polynomial(const ExactPolynomial& poly) {
    std::string out = "vars:";
    for (const auto& v : poly.variables) out += " " + v;
    out += "\n";
    for (const ExactTerm& t : poly.terms) {
        out += t.coefficient.to_string();
        for (unsigned e : t.exponents) out += " " + std::to_string(e);
        out += "\n";
    }
    return out;
}

// Renders exact coefficients back to fixed-point decimal text. Useful to
// round-trip a polynomial through recovery.
inline PolynomialApprox to_approx(const ExactPolynomial& poly, std::size_t decimal_places) {
    PolynomialApprox out;
    out.variables = poly.variables;
    for (const ExactTerm& t : poly.terms)
        out.terms.push_back(ApproxTerm{t.coefficient.to_decimal_string(decimal_places), t.exponents});
    return out;
}

struct PolynomialRecovery {
    ExactPolynomial polynomial;
    // False if any coefficient's residual reaches the uniqueness radius.
    bool certified = true;
};

// Recovers every coefficient independently with the same denominator bound.
// Terms that recover to zero are dropped.
inline PolynomialRecovery recover_polynomial(const PolynomialApprox& poly,
                                             const BoundedTarget& bound) {
    detail::check_terms(poly.variables, poly.terms);
    PolynomialRecovery out;
    out.polynomial.variables = poly.variables;
    for (std::size_t i = 0; i < poly.terms.size(); ++i) {
        const ApproxTerm& term = poly.terms[i];
        Rational coeff;
        try {
            coeff = parse_decimal(term.coefficient);
        } catch (const ParseError& e) {
            throw ParseError("term " + std::to_string(i) + " (coefficient \"" +
                                 term.coefficient + "\"): " + e.what(),
                             e.position());
        }
        RecoveryResult rec = recover(coeff, bound);
        out.certified = out.certified && rec.certified;
        if (rec.recovered.is_zero()) continue;
        out.polynomial.terms.push_back(ExactTerm{std::move(rec.recovered), term.exponents});
    }
    return out;
}

// N = max(lcm + 1, 2): one more than the least common multiple of the input
// polynomial's coefficient denominators, which bounds the denominators of its
// monic factors.
inline BoundedTarget suggest_bound(const BigInt& denominator_lcm) {
    if (denominator_lcm < BigInt(1))
        throw std::domain_error("suggest_bound: lcm must be positive");
    BigInt bound = denominator_lcm + BigInt(1);
    if (bound < BigInt(2)) bound = BigInt(2);
    return BoundedTarget(std::move(bound));
}

inline ExactPolynomial multiply(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.variables != b.variables)
        throw std::invalid_argument("multiply: variable lists differ");
    std::map<std::vector<unsigned>, Rational> acc;
    for (const ExactTerm& ta : a.terms) {
        for (const ExactTerm& tb : b.terms) {
            std::vector<unsigned> exps(ta.exponents.size());
            for (std::size_t i = 0; i < exps.size(); ++i)
                exps[i] = ta.exponents[i] + tb.exponents[i];
            acc[std::move(exps)] += ta.coefficient * tb.coefficient;
        }
    }
    ExactPolynomial out;
    out.variables = a.variables;
    for (auto& [exps, coeff] : acc) {
        if (coeff.is_zero()) continue;
        out.terms.push_back(ExactTerm{std::move(coeff), exps});
    }
    return out;
}

inline ExactPolynomial scale(const ExactPolynomial& poly, const Rational& factor) {
    ExactPolynomial out;
    out.variables = poly.variables;
    if (factor.is_zero()) return out;
    for (const ExactTerm& t : poly.terms)
        out.terms.push_back(ExactTerm{t.coefficient * factor, t.exponents});
    return out;
}

}  // namespace ratrec
