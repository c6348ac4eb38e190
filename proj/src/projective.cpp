#include "linarr/projective.hpp"

#include "linarr/errors.hpp"

namespace linarr {

namespace detail {

std::array<BigInt, 3> normalize_triple(const std::array<Rational, 3>& t) {
    std::vector<BigInt> v = primitive_integer_vector({t[0], t[1], t[2]});
    if (v[0] == 0 && v[1] == 0 && v[2] == 0)
        throw DegeneracyError("zero triple cannot be normalized to a projective object");
    return {v[0], v[1], v[2]};
}

std::array<BigInt, 3> cross(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::string triple_str(const std::array<BigInt, 3>& t, char open, char close, const char* sep) {
    std::string s;
    s += open;
    for (int i = 0; i < 3; ++i) {
        if (i) s += sep;
        s += t[i].get_str();
    }
    s += close;
    return s;
}

} // namespace detail

std::string ProjPoint::str() const { return detail::triple_str(coords, '(', ')', ":"); }
std::string LinearForm::str() const { return detail::triple_str(coeffs, '[', ']', ","); }

BigInt pairing(const LinearForm& l, const ProjPoint& p) {
    return l.coeffs[0] * p.coords[0] + l.coeffs[1] * p.coords[1] + l.coeffs[2] * p.coords[2];
}

LinearForm join(const ProjPoint& p, const ProjPoint& q) {
    auto c = detail::cross(p.coords, q.coords);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0)
        throw DegeneracyError("join of coincident points " + p.str());
    return LinearForm(Rational(c[0]), Rational(c[1]), Rational(c[2]));
}

ProjPoint meet(const LinearForm& l, const LinearForm& m) {
    auto c = detail::cross(l.coeffs, m.coeffs);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0)
        throw DegeneracyError("meet of coincident lines " + l.str());
    return ProjPoint(Rational(c[0]), Rational(c[1]), Rational(c[2]));
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    BigInt det = a.coords[0] * (b.coords[1] * c.coords[2] - b.coords[2] * c.coords[1]) -
                 a.coords[1] * (b.coords[0] * c.coords[2] - b.coords[2] * c.coords[0]) +
                 a.coords[2] * (b.coords[0] * c.coords[1] - b.coords[1] * c.coords[0]);
    return det == 0;
}

} // namespace linarr
