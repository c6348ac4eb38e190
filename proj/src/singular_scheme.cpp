#include "linarr/singular_scheme.hpp"

#include "linarr/errors.hpp"
#include "linarr/syzygy.hpp"

#include <algorithm>

namespace linarr {

namespace {

// dense bivariate polynomial in the local chart variables u,v, indexed by
// jet_index; degree-homogeneous pieces are what we need so we keep the
// full triangle up to a bound
struct Biv {
    int bound; // stored degrees are < bound
    std::vector<Rational> c;

    explicit Biv(int b) : bound(b), c(graded_dim(b - 1)) {}
    Rational& at(int i, int j) { return c[jet_index(i, j)]; }
    const Rational& at(int i, int j) const { return c[jet_index(i, j)]; }
};

// local linear form of a line through p in the chart at p
std::pair<Rational, Rational> local_line(const LinearForm& l, const ProjPoint& p) {
    int chart = 2;
    while (chart >= 0 && p.coords[chart] == 0) --chart;
    const int u_var = (chart == 0) ? 1 : 0;
    const int v_var = (chart == 2) ? 1 : 2;
    return {Rational(l.coeffs[u_var]), Rational(l.coeffs[v_var])};
}

} // namespace

RatMatrix local_conditions(const MultPoint& p, const Arrangement& a, int k, int jet_order) {
    const int m = p.multiplicity();
    if (m < 2) throw InvariantViolation("singular point with multiplicity < 2");
    const int N = (jet_order > 0) ? jet_order : std::max(1, 2 * m - 3);
    if (N < std::max(1, 2 * m - 3))
        throw DimensionMismatch("jet order below the sound truncation 2m-3");
    const int jet_dim = graded_dim(N - 1);

    // g = product of the m local line forms: homogeneous of degree m in u,v
    Biv g(m + 1);
    g.at(0, 0) = 1;
    int deg = 0;
    for (int li : p.incident) {
        auto [lu, lv] = local_line(a.line(li), p.point);
        Biv next(m + 1);
        for (int i = deg; i >= 0; --i)
            for (int j = deg - i; j >= 0; --j) {
                const Rational& cc = g.at(i, j);
                if (cc == 0) continue;
                next.at(i + 1, j) += cc * lu;
                next.at(i, j + 1) += cc * lv;
            }
        g = std::move(next);
        ++deg;
    }

    // g_u, g_v: homogeneous of degree m-1
    Biv gu(m), gv(m);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j + i <= m; ++j) {
            const Rational& cc = g.at(i, j);
            if (cc == 0) continue;
            if (i > 0) gu.at(i - 1, j) += Rational(i) * cc;
            if (j > 0) gv.at(i, j - 1) += Rational(j) * cc;
        }

    // columns: monomial multiples of g_u, g_v that survive mod m^N
    // (monomial degree t with t + (m-1) < N)
    std::vector<std::vector<Rational>> cols;
    const int tmax = N - m;
    for (const Biv* base : {&gu, &gv}) {
        for (int t = 0; t <= tmax; ++t)
            for (int ii = t; ii >= 0; --ii) {
                const int jj = t - ii;
                std::vector<Rational> col(jet_dim, Rational(0));
                for (int i = 0; i <= m - 1; ++i)
                    for (int j = 0; j + i <= m - 1; ++j) {
                        const Rational& cc = base->at(i, j);
                        if (cc == 0) continue;
                        if (i + ii + j + jj < N) col[jet_index(i + ii, j + jj)] = cc;
                    }
                cols.push_back(std::move(col));
            }
    }

    // left kernel of the column span = functionals vanishing on the local
    // Jacobian image
    RatMatrix bt(0, 0);
    for (const auto& col : cols) bt.push_row(col);
    std::vector<std::vector<Rational>> functionals;
    if (bt.rows() == 0) {
        functionals.assign(jet_dim, std::vector<Rational>(jet_dim, Rational(0)));
        for (int i = 0; i < jet_dim; ++i) functionals[i][i] = 1;
    } else {
        functionals = kernel_basis(bt);
    }
    if (static_cast<int>(functionals.size()) != (m - 1) * (m - 1))
        throw InvariantViolation("ordinary point produced " + std::to_string(functionals.size()) +
                                 " conditions, expected " + std::to_string((m - 1) * (m - 1)));

    // jets of all S_k monomials at p
    const int dk = graded_dim(k);
    RatMatrix jets(jet_dim, dk);
    for (int col = 0; col < dk; ++col) {
        auto [ea, eb, ec] = monomial_exponents(k, col);
        HomPoly mono = HomPoly::monomial(ea, eb, ec, Rational(1));
        LocalJet jet = local_jet(mono, p.point, N);
        for (int r = 0; r < jet_dim; ++r) jets.at(r, col) = jet.coef[r];
    }

    RatMatrix rows(0, 0);
    std::vector<Rational> row(dk);
    for (const auto& phi : functionals) {
        for (int c = 0; c < dk; ++c) {
            Rational acc(0);
            for (int r = 0; r < jet_dim; ++r)
                if (phi[r] != 0) acc += phi[r] * jets.at(r, c);
            row[c] = acc;
        }
        std::vector<BigInt> prim = primitive_integer_vector(row);
        for (int c = 0; c < dk; ++c) row[c] = Rational(prim[c]);
        rows.push_row(row);
    }
    return rows;
}

ConditionMatrix condition_matrix(const Arrangement& a, int k) {
    Lattice lat = intersection_lattice(a);
    ConditionMatrix out;
    out.k = k;
    out.m = RatMatrix(0, graded_dim(k));
    for (const MultPoint& p : lat.points) {
        RatMatrix rows = local_conditions(p, a, k);
        for (int i = 0; i < rows.rows(); ++i) {
            std::vector<Rational> row(rows.cols());
            for (int j = 0; j < rows.cols(); ++j) row[j] = rows.at(i, j);
            out.m.push_row(row);
            out.row_points.push_back(p.point);
        }
    }
    if (out.m.rows() != total_tjurina(a))
        throw InvariantViolation("condition row count != total Tjurina number");
    return out;
}

RatMatrix jacobian_span(const HomPoly& f, int k) {
    const int d = f.degree();
    RatMatrix out(0, graded_dim(k));
    if (k < d - 1) return out;
    const HomPoly fx = partial(f, Var::x), fy = partial(f, Var::y), fz = partial(f, Var::z);
    const int t = k - (d - 1);
    std::vector<Rational> row(graded_dim(k));
    for (int idx = 0; idx < graded_dim(t); ++idx) {
        auto [a, b, c] = monomial_exponents(t, idx);
        HomPoly mono = HomPoly::monomial(a, b, c, Rational(1));
        for (const HomPoly* g : {&fx, &fy, &fz}) {
            HomPoly prod = mono * *g;
            out.push_row(prod.coeffs());
        }
    }
    return out;
}

IdealDims ideal_dim(const Arrangement& a, int k) {
    IdealDims dims;
    ConditionMatrix cm = condition_matrix(a, k);
    dims.dim_I = graded_dim(k) - rank(cm.m);
    RatMatrix jac = jacobian_span(a.polynomial(), k);
    dims.dim_J = (jac.rows() > 0) ? rank(jac) : 0;
    return dims;
}

DefectReport defect_sequence(const Arrangement& a) {
    const HomPoly f = a.polynomial();
    const int d = f.degree();
    DefectReport rep;
    rep.degree = d;
    rep.tau = total_tjurina(a);
    rep.mdr = mdr(f);
    rep.threshold = 2 * d - 5 - rep.mdr;
    for (int k = 0; k <= 2 * d; ++k) {
        IdealDims dims = ideal_dim(a, k);
        DefectRow row;
        row.k = k;
        row.dim_I = dims.dim_I;
        row.dim_J = dims.dim_J;
        row.dim_S_mod_I = graded_dim(k) - dims.dim_I;
        row.defect = rep.tau - row.dim_S_mod_I;
        if (row.defect < 0) throw InvariantViolation("negative defect at k=" + std::to_string(k));
        rep.rows.push_back(row);
    }
    if (rep.rows.back().dim_S_mod_I != rep.tau)
        throw InvariantViolation("dim(S_k/I_k) did not stabilize at tau by k = 2d");
    return rep;
}

namespace {

// reduce v against reduced integer rows (pivot columns cleared), exactly
void reduce_against(std::vector<Rational>& v, const IntRref& rr) {
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        const int pc = rr.pivot_cols[i];
        if (v[pc] == 0) continue;
        Rational factor = v[pc] / Rational(rr.rows[i][pc]);
        for (int j = 0; j < rr.cols; ++j) {
            if (rr.rows[i][j] == 0) continue;
            v[j] -= factor * Rational(rr.rows[i][j]);
        }
    }
}

} // namespace

std::optional<GapCertificate> gap_certificate(const Arrangement& a, int k) {
    ConditionMatrix cm = condition_matrix(a, k);
    std::vector<std::vector<Rational>> ibasis = kernel_basis(cm.m);
    const HomPoly f = a.polynomial();
    RatMatrix jac = jacobian_span(f, k);
    IntRref jrr = (jac.rows() > 0) ? rref_fraction_free(to_integer_rows(jac), jac.cols())
                                   : IntRref{{}, {}, graded_dim(k)};
    const int dim_J = static_cast<int>(jrr.pivot_cols.size());
    const int dim_I = static_cast<int>(ibasis.size());
    if (dim_I <= dim_J) return std::nullopt;

    for (const auto& cand : ibasis) {
        std::vector<Rational> red = cand;
        reduce_against(red, jrr);
        bool nonzero = std::any_of(red.begin(), red.end(), [](const Rational& q) { return q != 0; });
        if (!nonzero) continue;

        std::vector<BigInt> prim = primitive_integer_vector(red);
        GapCertificate cert;
        cert.k = k;
        cert.h = HomPoly(k);
        for (int j = 0; j < graded_dim(k); ++j) cert.h.coeffs()[j] = Rational(prim[j]);
        cert.dim_I = dim_I;
        cert.dim_J = dim_J;

        // re-verify: every local condition annihilates h
        cert.conditions_checked = cm.m.rows();
        cert.conditions_hold = true;
        for (int i = 0; i < cm.m.rows(); ++i) {
            Rational acc(0);
            for (int j = 0; j < cm.m.cols(); ++j)
                if (cm.m.at(i, j) != 0) acc += cm.m.at(i, j) * cert.h.coeffs()[j];
            if (acc != 0) {
                cert.conditions_hold = false;
                break;
            }
        }
        // and h is independent of the Jacobian piece
        RatMatrix with_h = jac;
        with_h.push_row(cert.h.coeffs());
        cert.independent_of_jacobian = (rank(with_h) == dim_J + 1);
        if (!cert.conditions_hold || !cert.independent_of_jacobian)
            throw InvariantViolation("gap certificate failed its own verification");
        return cert;
    }
    throw InvariantViolation("dim I_k > dim J_k but no reduced representative survived");
}

bool congruent_mod_jacobian(const HomPoly& f, int k, const HomPoly& h1, const HomPoly& h2) {
    RatMatrix jac = jacobian_span(f, k);
    const int dim_J = (jac.rows() > 0) ? rank(jac) : 0;
    RatMatrix j1 = jac;
    j1.push_row(h1.coeffs());
    RatMatrix j2 = jac;
    j2.push_row(h2.coeffs());
    RatMatrix j12 = j1;
    j12.push_row(h2.coeffs());
    const int r1 = rank(j1), r2 = rank(j2), r12 = rank(j12);
    if (r1 == dim_J && r2 == dim_J) return true; // both already in J_k
    return r1 == dim_J + 1 && r2 == dim_J + 1 && r12 == dim_J + 1;
}

} // namespace linarr
