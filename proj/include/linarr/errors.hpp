#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linarr {

/// Syntax error in a polynomial expression or a malformed input payload.
/// `position` is a 0-based character offset into the offending text
/// (npos when the error is not tied to a single character).
class ParseError : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ParseError(std::string msg, std::size_t position = npos)
        : std::runtime_error(std::move(msg)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A parsed expression mixes monomials of two different total degrees.
class InhomogeneityError : public ParseError {
public:
    InhomogeneityError(int deg_a, int deg_b)
        : ParseError("inhomogeneous expression: degrees " + std::to_string(deg_a) +
                     " and " + std::to_string(deg_b)),
          deg_a_(deg_a), deg_b_(deg_b) {}

    int first_degree() const { return deg_a_; }
    int second_degree() const { return deg_b_; }

private:
    int deg_a_;
    int deg_b_;
};

/// Geometric degeneracy: duplicate lines, coincident hexagon vertices,
/// combinatorics changed by a mutation, non-generic lattice where a
/// generic one is required.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible matrix/vector dimensions.
class DimensionMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An internal consistency check failed (these indicate a bug, not bad
/// input): condition counts not matching (m-1)^2, lattice pair-count
/// mismatch, a certified value failing its cross-check.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace linarr
