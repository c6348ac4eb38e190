#pragma once

#include "linarr/arrangement.hpp"
#include "linarr/matrix.hpp"
#include "linarr/poly.hpp"
#include "linarr/projective.hpp"

#include <array>
#include <optional>
#include <vector>

namespace linarr {

/// Six ordered projective points. Sides, diagonals and the derived point
/// sets are recomputed from the vertices on demand; the constructor
/// validates that vertices are pairwise distinct, consecutive triples are
/// non-collinear, and the nine derived lines are pairwise distinct.
class Hexagon {
public:
    explicit Hexagon(std::array<ProjPoint, 6> vertices);

    const std::array<ProjPoint, 6>& vertices() const { return verts_; }

    /// side j passes through vertices j and j+1 (mod 6)
    std::array<LinearForm, 6> sides() const;
    /// diagonal k passes through vertices k and k+3
    std::array<LinearForm, 3> diagonals() const;
    /// B_k = side_k ∩ side_{k+3} (opposite sides)
    std::array<ProjPoint, 3> opposite_side_points() const;
    /// A'_j = side_j ∩ side_{j+2}
    std::array<ProjPoint, 6> secondary_points() const;

    bool operator==(const Hexagon&) const = default;

private:
    std::array<ProjPoint, 6> verts_;
};

enum class ConicClass { Smooth, TwoLines, DoubleLine };

struct ConicResult {
    bool on_conic = false;
    HomPoly conic;              // degree-2 form, primitive, when on_conic
    ConicClass conic_class = ConicClass::Smooth;
};

/// Rank test of the 6x6 Veronese matrix (monomial order x^2, xy, y^2, xz,
/// yz, z^2); rank <= 5 iff a conic passes through all six points. The conic
/// is classified by the rank of its symmetric matrix (doubled form).
ConicResult six_points_on_conic(const std::array<ProjPoint, 6>& pts);

/// The line through B_1, B_2, B_3 when they are collinear; nullopt when the
/// exact 3x3 determinant is nonzero. Throws DegeneracyError if all three
/// coincide.
std::optional<LinearForm> pascal_line(const Hexagon& h);

struct GenericityReport {
    bool generic = false; // exactly 6 triple points (the vertices) + 18 doubles
    int triple_points = 0;
    int double_points = 0;
    std::vector<std::string> extra_incidences;
};

/// The 9-line arrangement of sides and diagonals plus a report on whether
/// the lattice is exactly 6 triples + 18 doubles.
std::pair<Arrangement, GenericityReport> build_arrangement(const Hexagon& h);

/// The three quartics q1 = l2 l3 l5 l6, q2 = l1 l3 l4 l6, q3 = l1 l2 l4 l5
/// (indices 1-based as in the construction); each vanishes at all twelve
/// points A_j, A'_j, and they are linearly independent.
std::array<HomPoly, 3> quartic_basis(const Hexagon& h);

/// Linear form a*u + b*v in the local chart variables.
struct LocalLinear {
    Rational cu, cv;
    bool operator==(const LocalLinear&) const = default;
};

/// Coefficient of du ∧ dv in d(a1) ∧ d(a2 a3): the tangent direction a
/// 2-jet a1*a must have for membership in the local Jacobian ideal of the
/// D4 germ a1 a2 a3. Normalized to primitive integer coefficients, first
/// nonzero positive. Throws DegeneracyError when two branches are
/// proportional.
LocalLinear d4_tangent(const LocalLinear& a1, const LocalLinear& a2, const LocalLinear& a3);

struct TangentSystem {
    RatMatrix m;                                   // 6x3, one row per vertex
    int rank = 0;
    std::optional<std::vector<Rational>> solution; // primitive (c1,c2,c3), rank <= 2
};

/// One row per vertex: the quartic c1 q1 + c2 q2 + c3 q3 must be tangent to
/// the d4_tangent direction there (branches: the diagonal through the
/// vertex, then the two sides). Proportionality is encoded as a 2x2
/// determinant, so each row is linear in (c1,c2,c3).
TangentSystem tangent_system(const Hexagon& h);

struct PascalOctic {
    HomPoly h;                    // degree 8
    HomPoly quartic;              // c1 q1 + c2 q2 + c3 q3, primitive
    LinearForm pascal;            // the Pascal line factor
    std::vector<Rational> coeffs; // (c1,c2,c3)
    int conditions_checked = 0;
    bool in_saturation = false;   // h satisfies every I_8 condition row
    bool outside_jacobian = false;
};

/// h = l * l'_1 l'_2 l'_3 * q, certified against the singular-scheme module.
/// Throws DegeneracyError when the tangent system has rank 3 or the
/// opposite-side points are not collinear.
PascalOctic pascal_octic(const Hexagon& h);

/// All hexagon structures on a 9-line arrangement with 6 triple points:
/// vertex orders (up to rotation/reflection) whose sides and diagonals are
/// exactly the arrangement lines.
std::vector<Hexagon> hexagon_decompositions(const Arrangement& a);

/// Canonical decomposition: the one whose sorted diagonal triple is
/// lexicographically smallest; vertices start at the lex-least vertex and
/// run toward its lex-smaller neighbour. nullopt when no hexagon structure
/// exists.
std::optional<Hexagon> hexagon_from_arrangement(const Arrangement& a);

// Built-in hexagons (paper vertex order): names AZ, AD.
std::optional<Hexagon> builtin_hexagon(const std::string& name);

} // namespace linarr
