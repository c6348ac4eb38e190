#pragma once

#include "linarr/rational.hpp"

#include <array>
#include <compare>
#include <string>

namespace linarr {

namespace detail {
/// Normalize a coefficient triple to primitive integers with the first
/// nonzero entry positive. Throws DegeneracyError on the zero triple.
std::array<BigInt, 3> normalize_triple(const std::array<Rational, 3>& t);
} // namespace detail

/// Point of the projective plane in canonical primitive-integer form.
struct ProjPoint {
    std::array<BigInt, 3> coords;

    ProjPoint() : coords{0, 0, 0} {}
    ProjPoint(const Rational& x, const Rational& y, const Rational& z)
        : coords(detail::normalize_triple({x, y, z})) {}
    explicit ProjPoint(const std::array<Rational, 3>& c) : coords(detail::normalize_triple(c)) {}

    auto operator<=>(const ProjPoint&) const = default;

    std::string str() const;
};

/// Line ax + by + cz = 0 in the same canonical form.
struct LinearForm {
    std::array<BigInt, 3> coeffs;

    LinearForm() : coeffs{0, 0, 0} {}
    LinearForm(const Rational& a, const Rational& b, const Rational& c)
        : coeffs(detail::normalize_triple({a, b, c})) {}
    explicit LinearForm(const std::array<Rational, 3>& c) : coeffs(detail::normalize_triple(c)) {}

    auto operator<=>(const LinearForm&) const = default;

    std::string str() const;
};

/// <line, point> incidence pairing (zero iff the point lies on the line).
BigInt pairing(const LinearForm& l, const ProjPoint& p);

/// The line through two distinct points.
LinearForm join(const ProjPoint& p, const ProjPoint& q);

/// The intersection point of two non-proportional lines.
ProjPoint meet(const LinearForm& l, const LinearForm& m);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

} // namespace linarr
