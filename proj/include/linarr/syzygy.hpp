#pragma once

#include "linarr/matrix.hpp"
#include "linarr/poly.hpp"

#include <array>
#include <vector>

namespace linarr {

/// A Jacobian syzygy: a f_x + b f_y + c f_z = 0 with forms of equal degree.
using SyzygyTriple = std::array<HomPoly, 3>;

/// Matrix of the evaluation map S_k^3 -> S_{k+d-1},
/// (a,b,c) |-> a f_x + b f_y + c f_z. Rows are indexed by monomials of the
/// target, columns by the three blocks of S_k monomials.
RatMatrix syzygy_matrix(const HomPoly& f, int k);

/// Canonical basis of D_0(f)_k (exact kernel of syzygy_matrix).
std::vector<SyzygyTriple> syzygy_space(const HomPoly& f, int k);

int syzygy_dim(const HomPoly& f, int k);

/// Least k with D_0(f)_k != 0; k = d-1 always succeeds via the Koszul
/// syzygy (f_y, -f_x, 0).
int mdr(const HomPoly& f);

struct SyzygyProfile {
    int d = 0;                        // degree of f
    std::vector<int> dims;            // dim D_0(f)_k for k = 0..cap
    std::vector<int> generator_degrees; // minimal generator degrees within cap
    int mdr = 0;
    bool free = false;

    int cap() const { return static_cast<int>(dims.size()) - 1; }
    bool operator==(const SyzygyProfile&) const = default;
};

/// Graded generator count: new generators in degree k number
/// dim D_k - dim(S_1 * D_{k-1}); the free flag additionally requires the
/// per-degree dimensions to match the rank-2 free module with the two
/// found generator degrees, over the whole range.
SyzygyProfile minimal_generator_degrees(const HomPoly& f, int cap);

inline int default_generator_cap(int d) { return 2 * d - 3; }

} // namespace linarr
