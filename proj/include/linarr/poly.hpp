#pragma once

#include "linarr/projective.hpp"
#include "linarr/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace linarr {

enum class Var : int { x = 0, y = 1, z = 2 };

/// Number of monomials of total degree k in x,y,z: (k+1)(k+2)/2.
int graded_dim(int k);

/// Graded-lex position (x > y > z) of x^a y^b z^c within its degree block.
int monomial_index(int k, int a, int b);

/// Inverse of monomial_index: exponents (a, b, c) of the idx-th monomial.
std::array<int, 3> monomial_exponents(int k, int idx);

/// Homogeneous polynomial in x,y,z with exact rational coefficients,
/// stored densely in graded-lex order. The zero polynomial keeps an
/// explicit degree tag.
class HomPoly {
public:
    HomPoly() : HomPoly(0) {}
    explicit HomPoly(int degree);
    HomPoly(int degree, std::vector<Rational> coeffs); // coeffs in graded-lex order

    static HomPoly constant(const Rational& c);
    static HomPoly monomial(int a, int b, int c, const Rational& coeff);
    static HomPoly from_linear(const LinearForm& l);

    int degree() const { return deg_; }
    bool is_zero() const;

    const Rational& coeff(int a, int b, int c) const;
    void set_coeff(int a, int b, int c, const Rational& v);
    const std::vector<Rational>& coeffs() const { return coef_; }
    std::vector<Rational>& coeffs() { return coef_; }

    Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;
    Rational evaluate(const ProjPoint& p) const;

    /// Canonical text form, graded-lex order with x > y > z.
    std::string str() const;

    bool operator==(const HomPoly&) const = default;

private:
    int deg_;
    std::vector<Rational> coef_;
};

HomPoly operator+(const HomPoly& f, const HomPoly& g); // throws DimensionMismatch on degree clash
HomPoly operator-(const HomPoly& f, const HomPoly& g);
HomPoly operator*(const HomPoly& f, const HomPoly& g);
HomPoly operator*(const Rational& c, const HomPoly& f);

/// Formal partial derivative; degree drops by one (degree-0 input gives the
/// zero constant).
HomPoly partial(const HomPoly& f, Var v);

/// Parse an expression in x,y,z with integer/rational literals, + - * ^,
/// parentheses, and implicit multiplication by juxtaposition ("2x", "xyz",
/// "x(x+y)"). Throws ParseError (with position) or InhomogeneityError.
HomPoly parse_poly(const std::string& expr);

/// When the expression is structurally a product of linear factors
/// (constants allowed; powers expand to repeated factors), the normalized
/// factor list; nullopt otherwise. Syntax errors still throw.
std::optional<std::vector<LinearForm>> parse_linear_factors(const std::string& expr);

/// Truncated Taylor expansion of a polynomial in the affine chart at a
/// point: coefficients of u^i v^j for i + j < order.
struct LocalJet {
    int order = 0;          // N: stored terms have total degree < N
    int chart = 2;          // index of the coordinate set to 1 (0=x, 1=y, 2=z)
    std::vector<Rational> coef;

    const Rational& at(int i, int j) const;
    Rational& at(int i, int j);
    bool is_zero() const;
};

/// Index of u^i v^j among jets: blocks by total degree, i descending inside.
int jet_index(int i, int j);

/// Chart selection follows the largest-index nonzero coordinate of p
/// (prefer z = 1, then y = 1, then x = 1); p is translated to the origin
/// and f expanded to total degree < order.
LocalJet local_jet(const HomPoly& f, const ProjPoint& p, int order);

/// Truncated product at the coarser of the two orders.
LocalJet jet_mul(const LocalJet& a, const LocalJet& b);

} // namespace linarr
