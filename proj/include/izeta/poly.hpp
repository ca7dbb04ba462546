#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "izeta/rational.hpp"

namespace izeta {

// ---------------------------------------------------------------------------
// UnivariatePoly: dense polynomial in one variable over the rationals.
// Restrictions of pulled-back ideals to exceptional curves are low-degree
// and dense, so a coefficient vector is the right representation.
// ---------------------------------------------------------------------------

class UnivariatePoly {
  public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(Rational c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit UnivariatePoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
        trim();
    }
    UnivariatePoly(std::initializer_list<Rational> ascending)
        : coeffs_(ascending.begin(), ascending.end()) {
        trim();
    }

    static UnivariatePoly variable();                       // v
    static UnivariatePoly monomial(int k, Rational c);      // c * v^k

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const Rational& leading() const;
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UnivariatePoly operator-() const;
    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const Rational& c) const;
    bool operator==(const UnivariatePoly& o) const { return coeffs_ == o.coeffs_; }

    Rational eval(const Rational& v) const;
    UnivariatePoly derivative() const;

    // Quotient and remainder over the field of rationals.
    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;
    // Division that must be exact; returns nullopt when the remainder is nonzero.
    std::optional<UnivariatePoly> divide_exact(const UnivariatePoly& d) const;

    // Scales so coefficients are coprime integers and the leading one is
    // positive. Zero stays zero.
    UnivariatePoly normalized() const;

    int order_at_zero() const;               // multiplicity of the root 0
    UnivariatePoly shift_down(int k) const;  // divide by v^k (must be exact)
    UnivariatePoly translate(const Rational& t) const;  // p(v + t)

    std::string to_string(const std::string& var = "v") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;  // ascending; invariant: back() != 0
};

// gcd normalized per UnivariatePoly::normalized(); gcd(0,0) = 0.
UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly squarefree_part(const UnivariatePoly& p);

// All rational roots (each listed once, ascending) plus the cofactor of the
// squarefree part that carries any remaining non-rational roots. The input
// must be nonzero.
struct RationalRoots {
    std::vector<Rational> roots;
    UnivariatePoly nonrational_cofactor;  // squarefree, degree 0 iff all roots rational
};
RationalRoots rational_roots(const UnivariatePoly& p);

// Sylvester-matrix resultant. Convention (documented and frozen by tests):
// resultant(p, q) = lc(q)^deg(p) * prod over roots b of q of p(b),
// so resultant(v - 2, v - 5) = 3. Errors when both inputs are zero.
Rational resultant(const UnivariatePoly& p, const UnivariatePoly& q);

// ---------------------------------------------------------------------------
// BivariatePoly: sparse exact polynomial in x and y. Blow-up substitutions
// produce high-degree sparse polynomials, hence the term map.
// ---------------------------------------------------------------------------

struct Exponents {
    int x = 0;
    int y = 0;
    // Canonical term order: lexicographic with y taking priority. The
    // leading term under this order fixes all sign normalizations.
    friend auto operator<=>(const Exponents& a, const Exponents& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
    friend bool operator==(const Exponents&, const Exponents&) = default;
};

class BivariatePoly {
  public:
    BivariatePoly() = default;
    explicit BivariatePoly(Rational c);

    static BivariatePoly var_x();
    static BivariatePoly var_y();
    static BivariatePoly monomial(int a, int b, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    int degree_x() const;
    int degree_y() const;
    int total_degree() const;

    BivariatePoly operator-() const;
    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator*(const Rational& c) const;
    BivariatePoly pow(int e) const;
    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

    Rational eval(const Rational& x, const Rational& y) const;
    BivariatePoly subst(const BivariatePoly& X, const BivariatePoly& Y) const;
    BivariatePoly derivative_x() const;
    BivariatePoly derivative_y() const;
    BivariatePoly swap_vars() const;

    // Minimum total degree of a term; errors on zero ("undefined order").
    int order_at_origin() const;

    int order_x() const;  // min exponent of x across terms (0 for zero poly)
    int order_y() const;
    BivariatePoly shift_down_x(int k) const;
    BivariatePoly shift_down_y(int k) const;

    UnivariatePoly at_x_zero() const;  // p(0, v) as a univariate in the y-slot
    UnivariatePoly at_y_zero() const;  // p(v, 0)

    std::optional<BivariatePoly> divide_exact(const BivariatePoly& d) const;

    // Content-1, positive leading coefficient under the canonical order.
    BivariatePoly normalized() const;
    // The positive rational c such that (*this) * 1/c is normalized; sign of
    // the leading coefficient is returned separately.
    std::pair<Rational, BivariatePoly> normal_form() const;  // p == first * second

    static BivariatePoly from_univariate_x(const UnivariatePoly& p);  // variable = x
    static BivariatePoly from_univariate_y(const UnivariatePoly& p);  // variable = y
    std::optional<UnivariatePoly> to_univariate_x() const;
    std::optional<UnivariatePoly> to_univariate_y() const;

    std::string to_string() const;

  private:
    void add_term(const Exponents& e, const Rational& c);
    std::map<Exponents, Rational> terms_;  // invariant: no zero coefficients
};

// Grammar (whitespace insignificant; an optional leading '-' on the first
// term is accepted so serialized output round-trips):
//   poly     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := 'x' | 'y' | rational | '(' poly ')'
//   rational := int ('/' nat)?
BivariatePoly parse_polynomial(const std::string& text);

// gcd over Q[x,y], content 1, positive leading coefficient. Errors when both
// inputs are zero.
BivariatePoly gcd_bivariate(const BivariatePoly& p, const BivariatePoly& q);

struct SquarefreeFactor {
    BivariatePoly factor;  // squarefree, normalized
    int exponent = 1;
};
struct SquarefreeDecomposition {
    Rational unit;  // p == unit * prod factor^exponent
    std::vector<SquarefreeFactor> factors;  // exponents strictly increasing
};
// Errors on zero or constant input.
SquarefreeDecomposition squarefree_decompose(const BivariatePoly& p);

// Resultant with respect to the second variable of polynomials whose
// coefficients are themselves univariate: p, q in Q[v][w], eliminating w.
// Same orientation convention as the scalar resultant.
UnivariatePoly resultant_lifted(const std::vector<UnivariatePoly>& p,
                                const std::vector<UnivariatePoly>& q);

// Resultant in Q[x,y][w] eliminating w; coefficients of w-powers are given
// as bivariate polynomials. Used for implicitizing projective parametrized
// curves (coordinates become x, y after dehomogenization).
BivariatePoly resultant_bivariate_coeffs(const std::vector<BivariatePoly>& p,
                                         const std::vector<BivariatePoly>& q);

}  // namespace izeta
