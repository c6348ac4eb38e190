#include "linarr/hexagon.hpp"

#include "linarr/errors.hpp"
#include "linarr/singular_scheme.hpp"

#include <algorithm>
#include <map>

namespace linarr {

namespace {

std::vector<LinearForm> sides_and_diagonals(const Hexagon& h) {
    auto s = h.sides();
    auto d = h.diagonals();
    std::vector<LinearForm> all(s.begin(), s.end());
    all.insert(all.end(), d.begin(), d.end());
    return all;
}

int chart_of(const ProjPoint& p) {
    int chart = 2;
    while (chart >= 0 && p.coords[chart] == 0) --chart;
    return chart;
}

LocalLinear local_linear(const LinearForm& l, const ProjPoint& p) {
    const int chart = chart_of(p);
    const int u_var = (chart == 0) ? 1 : 0;
    const int v_var = (chart == 2) ? 1 : 2;
    return LocalLinear{Rational(l.coeffs[u_var]), Rational(l.coeffs[v_var])};
}

// linear part (gradient) of a polynomial's local jet at p
LocalLinear jet_gradient(const HomPoly& f, const ProjPoint& p) {
    LocalJet j = local_jet(f, p, 2);
    return LocalLinear{j.at(1, 0), j.at(0, 1)};
}

} // namespace

Hexagon::Hexagon(std::array<ProjPoint, 6> vertices) : verts_(std::move(vertices)) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (verts_[i] == verts_[j])
                throw DegeneracyError("hexagon vertices " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " coincide");
    for (int j = 0; j < 6; ++j)
        if (collinear(verts_[j], verts_[(j + 1) % 6], verts_[(j + 2) % 6]))
            throw DegeneracyError("consecutive hexagon vertices " + std::to_string(j + 1) + ".." +
                                  std::to_string(j + 3) + " are collinear");
    std::vector<LinearForm> all = sides_and_diagonals(*this);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j])
                throw DegeneracyError("hexagon sides/diagonals are not pairwise distinct");
}

std::array<LinearForm, 6> Hexagon::sides() const {
    std::array<LinearForm, 6> out;
    for (int j = 0; j < 6; ++j) out[j] = join(verts_[j], verts_[(j + 1) % 6]);
    return out;
}

std::array<LinearForm, 3> Hexagon::diagonals() const {
    std::array<LinearForm, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = join(verts_[k], verts_[k + 3]);
    return out;
}

std::array<ProjPoint, 3> Hexagon::opposite_side_points() const {
    auto s = sides();
    std::array<ProjPoint, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = meet(s[k], s[k + 3]);
    return out;
}

std::array<ProjPoint, 6> Hexagon::secondary_points() const {
    auto s = sides();
    std::array<ProjPoint, 6> out;
    for (int j = 0; j < 6; ++j) out[j] = meet(s[j], s[(j + 2) % 6]);
    return out;
}

ConicResult six_points_on_conic(const std::array<ProjPoint, 6>& pts) {
    RatMatrix v(6, 6);
    for (int i = 0; i < 6; ++i) {
        const BigInt& x = pts[i].coords[0];
        const BigInt& y = pts[i].coords[1];
        const BigInt& z = pts[i].coords[2];
        v.at(i, 0) = Rational(x * x);
        v.at(i, 1) = Rational(x * y);
        v.at(i, 2) = Rational(y * y);
        v.at(i, 3) = Rational(x * z);
        v.at(i, 4) = Rational(y * z);
        v.at(i, 5) = Rational(z * z);
    }
    ConicResult res;
    std::vector<std::vector<Rational>> ker = kernel_basis(v);
    if (ker.empty()) return res;

    res.on_conic = true;
    const std::vector<Rational>& q = ker.front();
    res.conic = HomPoly(2);
    res.conic.set_coeff(2, 0, 0, q[0]);
    res.conic.set_coeff(1, 1, 0, q[1]);
    res.conic.set_coeff(0, 2, 0, q[2]);
    res.conic.set_coeff(1, 0, 1, q[3]);
    res.conic.set_coeff(0, 1, 1, q[4]);
    res.conic.set_coeff(0, 0, 2, q[5]);

    // symmetric matrix of the doubled form: rank 3 smooth, 2 two lines,
    // 1 double line
    RatMatrix sym(3, 3);
    sym.at(0, 0) = 2 * q[0];
    sym.at(1, 1) = 2 * q[2];
    sym.at(2, 2) = 2 * q[5];
    sym.at(0, 1) = sym.at(1, 0) = q[1];
    sym.at(0, 2) = sym.at(2, 0) = q[3];
    sym.at(1, 2) = sym.at(2, 1) = q[4];
    switch (rank(sym)) {
        case 3: res.conic_class = ConicClass::Smooth; break;
        case 2: res.conic_class = ConicClass::TwoLines; break;
        default: res.conic_class = ConicClass::DoubleLine; break;
    }
    return res;
}

std::optional<LinearForm> pascal_line(const Hexagon& h) {
    std::array<ProjPoint, 3> b = h.opposite_side_points();
    if (b[0] == b[1] && b[1] == b[2])
        throw DegeneracyError("opposite-side points all coincide");
    if (!collinear(b[0], b[1], b[2])) return std::nullopt;
    if (!(b[0] == b[1])) return join(b[0], b[1]);
    return join(b[0], b[2]);
}

std::pair<Arrangement, GenericityReport> build_arrangement(const Hexagon& h) {
    Arrangement arr{sides_and_diagonals(h)};
    GenericityReport rep;
    Lattice lat = intersection_lattice(arr);
    rep.triple_points = lat.count_of_multiplicity(3);
    rep.double_points = lat.count_of_multiplicity(2);
    const auto& verts = h.vertices();
    for (const MultPoint& p : lat.points) {
        if (p.multiplicity() == 2) continue;
        const bool is_vertex = std::find(verts.begin(), verts.end(), p.point) != verts.end();
        if (p.multiplicity() != 3 || !is_vertex)
            rep.extra_incidences.push_back(p.point.str() + " has multiplicity " +
                                           std::to_string(p.multiplicity()));
    }
    rep.generic = rep.triple_points == 6 && rep.double_points == 18 && rep.extra_incidences.empty();
    return {std::move(arr), std::move(rep)};
}

std::array<HomPoly, 3> quartic_basis(const Hexagon& h) {
    auto s = h.sides();
    std::array<HomPoly, 6> f;
    for (int i = 0; i < 6; ++i) f[i] = HomPoly::from_linear(s[i]);
    std::array<HomPoly, 3> q = {f[1] * f[2] * f[4] * f[5], f[0] * f[2] * f[3] * f[5],
                                f[0] * f[1] * f[3] * f[4]};
    RatMatrix m(0, graded_dim(4));
    for (const HomPoly& qi : q) m.push_row(qi.coeffs());
    if (rank(m) != 3) throw InvariantViolation("hexagon quartic basis is degenerate");
    return q;
}

LocalLinear d4_tangent(const LocalLinear& a1, const LocalLinear& a2, const LocalLinear& a3) {
    auto proportional = [](const LocalLinear& a, const LocalLinear& b) {
        return a.cu * b.cv - a.cv * b.cu == 0;
    };
    if (proportional(a1, a2) || proportional(a1, a3) || proportional(a2, a3))
        throw DegeneracyError("d4_tangent: branches are proportional");
    // Q = a2*a3; the coefficient of du ∧ dv in d(a1) ∧ dQ is a1_u Q_v - a1_v Q_u
    const Rational qu_u = 2 * a2.cu * a3.cu;
    const Rational mixed = a2.cu * a3.cv + a3.cu * a2.cv;
    const Rational qv_v = 2 * a2.cv * a3.cv;
    Rational gu = a1.cu * mixed - a1.cv * qu_u;
    Rational gv = a1.cu * qv_v - a1.cv * mixed;
    std::vector<BigInt> prim = primitive_integer_vector({gu, gv});
    return LocalLinear{Rational(prim[0]), Rational(prim[1])};
}

TangentSystem tangent_system(const Hexagon& h) {
    auto sides = h.sides();
    auto diags = h.diagonals();
    auto q = quartic_basis(h);
    TangentSystem sys;
    sys.m = RatMatrix(6, 3);
    for (int j = 0; j < 6; ++j) {
        const ProjPoint& p = h.vertices()[j];
        LocalLinear a1 = local_linear(diags[j % 3], p);
        LocalLinear a2 = local_linear(sides[(j + 5) % 6], p);
        LocalLinear a3 = local_linear(sides[j], p);
        LocalLinear t = d4_tangent(a1, a2, a3);
        std::vector<Rational> row(3);
        for (int i = 0; i < 3; ++i) {
            LocalLinear g = jet_gradient(q[i], p);
            row[i] = g.cu * t.cv - g.cv * t.cu;
        }
        std::vector<BigInt> prim = primitive_integer_vector(row);
        for (int i = 0; i < 3; ++i) sys.m.at(j, i) = Rational(prim[i]);
    }
    sys.rank = rank(sys.m);
    if (sys.rank <= 2) {
        std::vector<std::vector<Rational>> ker = kernel_basis(sys.m);
        if (!ker.empty()) {
            std::vector<Rational> c = ker.front();
            // sign convention: c1 > 0 when nonzero, else first nonzero positive
            if (c[0] < 0 || (c[0] == 0 && (c[1] < 0 || (c[1] == 0 && c[2] < 0))))
                for (Rational& v : c) v = -v;
            sys.solution = std::move(c);
        }
    }
    return sys;
}

PascalOctic pascal_octic(const Hexagon& h) {
    TangentSystem sys = tangent_system(h);
    if (!sys.solution)
        throw DegeneracyError("tangent system has rank 3: no quartic with the required tangencies");
    std::optional<LinearForm> ell = pascal_line(h);
    if (!ell)
        throw DegeneracyError("opposite-side points are not collinear (vertices off-conic)");

    auto qb = quartic_basis(h);
    HomPoly q(4);
    for (int i = 0; i < 3; ++i) q = q + (*sys.solution)[i] * qb[i];
    {
        std::vector<BigInt> prim = primitive_integer_vector(q.coeffs());
        for (std::size_t i = 0; i < q.coeffs().size(); ++i) q.coeffs()[i] = Rational(prim[i]);
    }

    auto diags = h.diagonals();
    PascalOctic oct;
    oct.quartic = q;
    oct.pascal = *ell;
    oct.coeffs = *sys.solution;
    oct.h = HomPoly::from_linear(*ell) * HomPoly::from_linear(diags[0]) *
            HomPoly::from_linear(diags[1]) * HomPoly::from_linear(diags[2]) * q;

    // certification is delegated to the saturation machinery
    auto [arr, rep] = build_arrangement(h);
    ConditionMatrix cm = condition_matrix(arr, 8);
    oct.conditions_checked = cm.m.rows();
    oct.in_saturation = true;
    for (int i = 0; i < cm.m.rows(); ++i) {
        Rational acc(0);
        for (int j = 0; j < cm.m.cols(); ++j)
            if (cm.m.at(i, j) != 0) acc += cm.m.at(i, j) * oct.h.coeffs()[j];
        if (acc != 0) {
            oct.in_saturation = false;
            break;
        }
    }
    RatMatrix jac = jacobian_span(arr.polynomial(), 8);
    const int dim_j = rank(jac);
    jac.push_row(oct.h.coeffs());
    oct.outside_jacobian = (rank(jac) == dim_j + 1);
    if (!oct.in_saturation || !oct.outside_jacobian)
        throw InvariantViolation("pascal octic failed certification");
    return oct;
}

std::vector<Hexagon> hexagon_decompositions(const Arrangement& a) {
    if (a.size() != 9) return {};
    Lattice lat = intersection_lattice(a);
    std::vector<ProjPoint> triples;
    for (const MultPoint& p : lat.points)
        if (p.multiplicity() == 3) triples.push_back(p.point);
    if (triples.size() != 6) return {};
    std::sort(triples.begin(), triples.end());

    // every line must join exactly two of the six triple points
    std::map<std::pair<int, int>, int> edge_line;
    for (int li = 0; li < 9; ++li) {
        std::vector<int> on;
        for (int vi = 0; vi < 6; ++vi)
            if (pairing(a.line(li), triples[vi]) == 0) on.push_back(vi);
        if (on.size() != 2) return {};
        edge_line[{on[0], on[1]}] = li;
    }
    auto has_edge = [&](int u, int v) {
        return edge_line.count({std::min(u, v), std::max(u, v)}) > 0;
    };

    std::vector<Hexagon> out;
    std::array<int, 5> rest{1, 2, 3, 4, 5};
    do {
        std::array<int, 6> order{0, rest[0], rest[1], rest[2], rest[3], rest[4]};
        bool ok = true;
        for (int j = 0; j < 6 && ok; ++j) ok = has_edge(order[j], order[(j + 1) % 6]);
        for (int k = 0; k < 3 && ok; ++k) ok = has_edge(order[k], order[k + 3]);
        if (!ok) continue;
        std::array<ProjPoint, 6> vs;
        for (int j = 0; j < 6; ++j) vs[j] = triples[order[j]];
        Hexagon hex(vs);
        // rotations/reflections of one decomposition share the side set
        auto s = hex.sides();
        std::vector<LinearForm> side_set(s.begin(), s.end());
        std::sort(side_set.begin(), side_set.end());
        bool dup = false;
        for (const Hexagon& prev : out) {
            auto ps = prev.sides();
            std::vector<LinearForm> prev_set(ps.begin(), ps.end());
            std::sort(prev_set.begin(), prev_set.end());
            if (prev_set == side_set) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(std::move(hex));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::optional<Hexagon> hexagon_from_arrangement(const Arrangement& a) {
    std::vector<Hexagon> all = hexagon_decompositions(a);
    if (all.empty()) return std::nullopt;

    auto diag_key = [](const Hexagon& h) {
        auto d = h.diagonals();
        std::vector<LinearForm> v(d.begin(), d.end());
        std::sort(v.begin(), v.end());
        return v;
    };
    std::size_t best = 0;
    std::vector<LinearForm> best_key = diag_key(all[0]);
    for (std::size_t i = 1; i < all.size(); ++i) {
        auto key = diag_key(all[i]);
        if (key < best_key) {
            best_key = std::move(key);
            best = i;
        }
    }

    // canonical vertex order within the decomposition: start at the lex-min
    // vertex, run toward the lex-smaller neighbour
    const auto& vs = all[best].vertices();
    int start = 0;
    for (int i = 1; i < 6; ++i)
        if (vs[i] < vs[start]) start = i;
    const ProjPoint& fwd = vs[(start + 1) % 6];
    const ProjPoint& bwd = vs[(start + 5) % 6];
    const int dir = (fwd < bwd) ? 1 : 5;
    std::array<ProjPoint, 6> ordered;
    for (int j = 0; j < 6; ++j) ordered[j] = vs[(start + dir * j) % 6];
    return Hexagon(ordered);
}

std::optional<Hexagon> builtin_hexagon(const std::string& name) {
    if (name == "AZ" || name == "HEXAZ")
        return Hexagon({ProjPoint(0, 1, -1), ProjPoint(1, 0, -2), ProjPoint(1, 1, 0),
                        ProjPoint(0, 1, 1), ProjPoint(1, 0, 1), ProjPoint(1, 2, 0)});
    if (name == "AD" || name == "HEXAD")
        return Hexagon({ProjPoint(0, 1, -1), ProjPoint(1, 0, 1), ProjPoint(3, 4, 5),
                        ProjPoint(0, 1, 1), ProjPoint(1, 0, -1), ProjPoint(5, 12, -13)});
    return std::nullopt;
}

} // namespace linarr
