#pragma once

#include "linarr/poly.hpp"
#include "linarr/projective.hpp"

#include <optional>
#include <vector>

namespace linarr {

/// A finite set of distinct lines, order-preserving.
class Arrangement {
public:
    Arrangement() = default;
    explicit Arrangement(std::vector<LinearForm> lines);

    int size() const { return static_cast<int>(lines_.size()); }
    const LinearForm& line(int i) const { return lines_[i]; }
    const std::vector<LinearForm>& lines() const { return lines_; }

    /// The defining polynomial: product of the line forms, degree = size.
    HomPoly polynomial() const;

    bool operator==(const Arrangement&) const = default;

private:
    std::vector<LinearForm> lines_;
};

/// A multiple point of an arrangement: m >= 2 concurrent lines.
struct MultPoint {
    ProjPoint point;
    std::vector<int> incident; // sorted line indices
    int multiplicity() const { return static_cast<int>(incident.size()); }

    bool operator==(const MultPoint&) const = default;
};

/// All pairwise intersections grouped by coincidence, sorted by point.
struct Lattice {
    std::vector<MultPoint> points;

    int count_of_multiplicity(int m) const;
    const MultPoint* find(const ProjPoint& p) const;

    bool operator==(const Lattice&) const = default;
};

Lattice intersection_lattice(const Arrangement& a);

/// Sum of (m-1)^2 over the lattice (an ordinary m-fold point has Tjurina
/// number (m-1)^2).
long total_tjurina(const Arrangement& a);
long total_tjurina(const Lattice& l);

/// Unlabelled incidence-structure isomorphism; on success the witness maps
/// line i of the first arrangement to line perm[i] of the second.
std::optional<std::vector<int>> lattice_isomorphic(const Lattice& l1, const Lattice& l2);

/// Append a line; throws DegeneracyError on a duplicate.
Arrangement add_line(const Arrangement& a, const LinearForm& l);

/// Move a multiplicity-3 point: every line through p not already through
/// p_new is replaced by the join of p_new with that line's unique other
/// point of multiplicity >= 3. The result must be lattice-isomorphic to
/// the input, else DegeneracyError (combinatorics changed).
Arrangement move_triple_point(const Arrangement& a, const ProjPoint& p, const ProjPoint& p_new);

// Built-in arrangements of the toolkit (resolvable by name in the CLI):
// AZ, AZp, AD, ADp, BZ, BZp, TRIANGLE.
const std::vector<std::string>& builtin_names();
std::optional<Arrangement> builtin_arrangement(const std::string& name);

} // namespace linarr
