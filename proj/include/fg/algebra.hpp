// Exact arithmetic kernel: rationals, sparse multivariate polynomials,
// determinants, resultants and relation rewriting.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace fg {

using Rational = mpq_class;
using Integer = mpz_class;
using cplx = std::complex<double>;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

class MultiPoly {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, Rational>;

    MultiPoly() = default;
    MultiPoly(long c);  // NOLINT(google-explicit-constructor)
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    static MultiPoly var(const std::string& name, int power = 1);
    static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws unless constant
    bool depends_on(const std::string& v) const;
    int degree(const std::string& v) const;  // -1 for the zero polynomial
    int total_degree() const;

    // coefficient of v^d, as a polynomial in the remaining symbols
    MultiPoly coeff(const std::string& v, int d) const;
    std::vector<MultiPoly> coeffs(const std::string& v) const;
    MultiPoly diff(const std::string& v) const;
    MultiPoly subs(const std::string& v, const MultiPoly& value) const;
    MultiPoly subs(const std::map<std::string, MultiPoly>& values) const;
    MultiPoly pow(unsigned e) const;
    // v^d -> value, repeated until deg_v < d
    MultiPoly rewrite(const std::string& v, int d, const MultiPoly& value) const;

    cplx eval(const std::map<std::string, cplx>& at) const;
    // partial numeric evaluation is not supported; all symbols must be bound

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator/=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str() const;
    std::string latex() const;
    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

private:
    std::vector<std::string> vars_;  // sorted, every symbol occurs in some term
    TermMap terms_;

    void canonicalize();
    MultiPoly with_vars(const std::vector<std::string>& vars) const;
    friend std::vector<std::string> merge_vars(const MultiPoly& a, const MultiPoly& b);
};

// "3/4*z^2 - g2*(z + e)^3"; division only by rational constants
MultiPoly parse_poly(const std::string& text);

// accepts either the JSON polynomial object or an expression string
MultiPoly poly_from_json(const nlohmann::json& j);

struct Relation {
    std::string var;
    int degree;
    MultiPoly value;  // var^degree == value
};

MultiPoly reduce(const MultiPoly& p, const std::vector<Relation>& rels);

// generic root e of 4t^3 - g2 t - g3
Relation weierstrass_relation(const std::string& e = "e");
MultiPoly reduce_e(const MultiPoly& p);

// Rewrite a polynomial symmetric in `xs` through the elementary symmetric
// functions, substituting `elementary[k]` for e_{k+1}(xs).
MultiPoly express_symmetric(const MultiPoly& p, const std::vector<std::string>& xs,
                            const std::vector<MultiPoly>& elementary);

struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<MultiPoly> a;

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c)) {}
    MultiPoly& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    const MultiPoly& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i * cols + j)];
    }
    nlohmann::json to_json() const;
};

// det(var*I - M), division free (Berkowitz)
MultiPoly charpoly(const PolyMatrix& m, const std::string& var);
// coefficients of det(x I - M), highest power first
std::vector<MultiPoly> berkowitz(const PolyMatrix& m);
MultiPoly determinant(const PolyMatrix& m);

PolyMatrix sylvester(const MultiPoly& p, const MultiPoly& q, const std::string& var);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// Adjugate column of a square matrix (division free through Berkowitz minors).
std::vector<MultiPoly> adjugate_column(const PolyMatrix& m, int col);

}  // namespace fg
