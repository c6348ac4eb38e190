#pragma once

#include "linarr/rational.hpp"

#include <optional>
#include <vector>

namespace linarr {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<Rational>& entries() const { return a_; }
    std::vector<Rational>& entries() { return a_; }

    RatMatrix transposed() const;

    /// Append one row (length must equal cols; sets cols on first row).
    void push_row(const std::vector<Rational>& row);

    bool operator==(const RatMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Rank over Q, computed by fraction-free (Bareiss) forward elimination on
/// denominator-cleared integer rows, pivoting on the smallest-bit-length
/// nonzero candidate.
int rank(const RatMatrix& m);

/// Basis of the right null space, in the canonical form used throughout:
/// one vector per non-pivot column of the reduced echelon form (ascending),
/// pivot coordinates filled back from the reduced rows, then the whole
/// vector cleared to primitive integers with first nonzero entry positive.
/// Entries are returned as (integral) Rationals. dim = cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// One exact solution of m x = b (free coordinates set to zero), or
/// nullopt when the system is inconsistent. Throws DimensionMismatch.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);

// --- integer core, exposed for the modules that build big systems ---

/// Fraction-free Gauss-Jordan reduction: pivot columns plus the surviving
/// reduced integer rows (one per pivot, in pivot order).
struct IntRref {
    std::vector<int> pivot_cols;
    std::vector<std::vector<BigInt>> rows;
    int cols = 0;
};

IntRref rref_fraction_free(std::vector<std::vector<BigInt>> m, int cols);
int rank_fraction_free(std::vector<std::vector<BigInt>> m, int cols);

std::vector<std::vector<BigInt>> to_integer_rows(const RatMatrix& m);
std::vector<std::vector<Rational>> kernel_from_rref(const IntRref& r);

} // namespace linarr
