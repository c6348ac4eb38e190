#pragma once

#include "linarr/arrangement.hpp"
#include "linarr/matrix.hpp"
#include "linarr/poly.hpp"

#include <optional>
#include <vector>

namespace linarr {

/// Linear conditions cutting out I_k (degree-k piece of the saturated
/// ideal of the singular subscheme) inside S_k: for each singular point,
/// (m-1)^2 rows expressing that the local jet lies in the truncated local
/// Jacobian ideal of the m concurrent lines.
struct ConditionMatrix {
    int k = 0;
    RatMatrix m;                       // rows: conditions, cols: graded_dim(k)
    std::vector<ProjPoint> row_points; // owning singular point of each row
};

/// Rows contributed by one ordinary m-fold point. Throws InvariantViolation
/// if the row count does not come out to exactly (m-1)^2. jet_order = 0
/// selects the standard truncation max(1, 2m-3); higher orders must yield
/// the same row space (soundness of the truncation).
RatMatrix local_conditions(const MultPoint& p, const Arrangement& a, int k, int jet_order = 0);

ConditionMatrix condition_matrix(const Arrangement& a, int k);

/// Basis rows of the degree-k piece of the Jacobian ideal: all monomial
/// multiples of f_x, f_y, f_z written in S_k coordinates (unreduced span).
RatMatrix jacobian_span(const HomPoly& f, int k);

struct IdealDims {
    int dim_I = 0;
    int dim_J = 0;
};

IdealDims ideal_dim(const Arrangement& a, int k);

struct DefectRow {
    int k = 0;
    int dim_I = 0;
    int dim_J = 0;
    int dim_S_mod_I = 0;
    long defect = 0;

    bool operator==(const DefectRow&) const = default;
};

struct DefectReport {
    long tau = 0;
    int mdr = 0;
    int threshold = 0; // 2d - 5 - r
    int degree = 0;
    std::vector<DefectRow> rows; // k = 0 .. 2d

    bool operator==(const DefectReport&) const = default;
};

/// Full defect sequence for k = 0..2d; tau comes from the lattice formula
/// and is cross-checked against the stabilized dim(S_k/I_k) at k = 2d.
DefectReport defect_sequence(const Arrangement& a);

struct GapCertificate {
    int k = 0;
    HomPoly h;                    // representative of I_k \ J_k, canonical form
    int dim_I = 0;
    int dim_J = 0;
    int conditions_checked = 0;   // rows of the condition matrix re-verified on h
    bool conditions_hold = false; // every local membership row annihilates h
    bool independent_of_jacobian = false; // rank(J_k basis + h) = dim_J + 1
};

/// When dim I_k > dim J_k: a certified representative, obtained by reducing
/// the canonical I_k basis against the Jacobian span and normalizing the
/// first survivor. Empty when the gap is trivial.
std::optional<GapCertificate> gap_certificate(const Arrangement& a, int k);

/// h1 = s*h2 mod J_k for some nonzero rational s? (the congruence used for
/// the paper-octic regression checks)
bool congruent_mod_jacobian(const HomPoly& f, int k, const HomPoly& h1, const HomPoly& h2);

} // namespace linarr
