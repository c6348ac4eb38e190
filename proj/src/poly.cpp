#include "linarr/poly.hpp"

#include "linarr/errors.hpp"

#include <algorithm>
#include <cctype>

namespace linarr {

int graded_dim(int k) {
    if (k < 0) return 0;
    return (k + 1) * (k + 2) / 2;
}

int monomial_index(int k, int a, int b) {
    const int ra = k - a; // monomials with x-exponent > a come first
    return ra * (ra + 1) / 2 + (ra - b);
}

std::array<int, 3> monomial_exponents(int k, int idx) {
    // invert the triangular layout
    int ra = 0;
    while ((ra + 1) * (ra + 2) / 2 <= idx) ++ra;
    const int a = k - ra;
    const int b = ra - (idx - ra * (ra + 1) / 2);
    return {a, b, k - a - b};
}

HomPoly::HomPoly(int degree) : deg_(degree), coef_(graded_dim(degree)) {
    if (degree < 0) throw DimensionMismatch("negative polynomial degree");
}

HomPoly::HomPoly(int degree, std::vector<Rational> coeffs) : deg_(degree), coef_(std::move(coeffs)) {
    if (static_cast<int>(coef_.size()) != graded_dim(degree))
        throw DimensionMismatch("coefficient vector length does not match degree");
}

HomPoly HomPoly::constant(const Rational& c) {
    HomPoly p(0);
    p.coef_[0] = c;
    return p;
}

HomPoly HomPoly::monomial(int a, int b, int c, const Rational& coeff) {
    HomPoly p(a + b + c);
    p.coef_[monomial_index(p.deg_, a, b)] = coeff;
    return p;
}

HomPoly HomPoly::from_linear(const LinearForm& l) {
    HomPoly p(1);
    p.coef_[0] = Rational(l.coeffs[0]);
    p.coef_[1] = Rational(l.coeffs[1]);
    p.coef_[2] = Rational(l.coeffs[2]);
    return p;
}

bool HomPoly::is_zero() const {
    return std::all_of(coef_.begin(), coef_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& HomPoly::coeff(int a, int b, int c) const {
    if (a < 0 || b < 0 || c < 0 || a + b + c != deg_)
        throw DimensionMismatch("monomial exponents do not match degree");
    return coef_[monomial_index(deg_, a, b)];
}

void HomPoly::set_coeff(int a, int b, int c, const Rational& v) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != deg_)
        throw DimensionMismatch("monomial exponents do not match degree");
    coef_[monomial_index(deg_, a, b)] = v;
}

Rational HomPoly::evaluate(const Rational& x, const Rational& y, const Rational& z) const {
    Rational acc(0);
    for (int idx = 0; idx < static_cast<int>(coef_.size()); ++idx) {
        if (coef_[idx] == 0) continue;
        auto [a, b, c] = monomial_exponents(deg_, idx);
        Rational term = coef_[idx];
        for (int i = 0; i < a; ++i) term *= x;
        for (int i = 0; i < b; ++i) term *= y;
        for (int i = 0; i < c; ++i) term *= z;
        acc += term;
    }
    return acc;
}

Rational HomPoly::evaluate(const ProjPoint& p) const {
    return evaluate(Rational(p.coords[0]), Rational(p.coords[1]), Rational(p.coords[2]));
}

std::string HomPoly::str() const {
    std::string out;
    for (int idx = 0; idx < static_cast<int>(coef_.size()); ++idx) {
        const Rational& c = coef_[idx];
        if (c == 0) continue;
        auto [a, b, cz] = monomial_exponents(deg_, idx);
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        const bool has_vars = (a + b + cz) > 0;
        if (abs_c != 1 || !has_vars) out += abs_c.get_str();
        auto app = [&](const char* v, int e) {
            if (e == 0) return;
            if (!out.empty() && (std::isdigit(static_cast<unsigned char>(out.back())) ||
                                 std::isalpha(static_cast<unsigned char>(out.back())) ||
                                 out.back() == '^'))
                out += "*";
            out += v;
            if (e > 1) out += "^" + std::to_string(e);
        };
        app("x", a);
        app("y", b);
        app("z", cz);
    }
    return out.empty() ? "0" : out;
}

HomPoly operator+(const HomPoly& f, const HomPoly& g) {
    if (f.degree() != g.degree())
        throw DimensionMismatch("cannot add forms of degrees " + std::to_string(f.degree()) +
                                " and " + std::to_string(g.degree()));
    HomPoly r = f;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) r.coeffs()[i] += g.coeffs()[i];
    return r;
}

HomPoly operator-(const HomPoly& f, const HomPoly& g) {
    if (f.degree() != g.degree())
        throw DimensionMismatch("cannot subtract forms of different degrees");
    HomPoly r = f;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) r.coeffs()[i] -= g.coeffs()[i];
    return r;
}

HomPoly operator*(const HomPoly& f, const HomPoly& g) {
    HomPoly r(f.degree() + g.degree());
    const int df = f.degree(), dg = g.degree();
    for (int i = 0; i < static_cast<int>(f.coeffs().size()); ++i) {
        if (f.coeffs()[i] == 0) continue;
        auto [a1, b1, c1] = monomial_exponents(df, i);
        for (int j = 0; j < static_cast<int>(g.coeffs().size()); ++j) {
            if (g.coeffs()[j] == 0) continue;
            auto [a2, b2, c2] = monomial_exponents(dg, j);
            r.coeffs()[monomial_index(df + dg, a1 + a2, b1 + b2)] += f.coeffs()[i] * g.coeffs()[j];
        }
    }
    return r;
}

HomPoly operator*(const Rational& c, const HomPoly& f) {
    HomPoly r = f;
    for (Rational& v : r.coeffs()) v *= c;
    return r;
}

HomPoly partial(const HomPoly& f, Var v) {
    if (f.degree() == 0) return HomPoly(0);
    HomPoly r(f.degree() - 1);
    const int iv = static_cast<int>(v);
    for (int idx = 0; idx < static_cast<int>(f.coeffs().size()); ++idx) {
        if (f.coeffs()[idx] == 0) continue;
        std::array<int, 3> e = monomial_exponents(f.degree(), idx);
        if (e[iv] == 0) continue;
        Rational c = f.coeffs()[idx] * e[iv];
        e[iv] -= 1;
        r.coeffs()[monomial_index(r.degree(), e[0], e[1])] += c;
    }
    return r;
}

// --- local jets ---

int jet_index(int i, int j) {
    const int d = i + j;
    return d * (d + 1) / 2 + (d - i);
}

const Rational& LocalJet::at(int i, int j) const { return coef[jet_index(i, j)]; }
Rational& LocalJet::at(int i, int j) { return coef[jet_index(i, j)]; }

bool LocalJet::is_zero() const {
    return std::all_of(coef.begin(), coef.end(), [](const Rational& c) { return c == 0; });
}

LocalJet local_jet(const HomPoly& f, const ProjPoint& p, int order) {
    if (order < 1) throw DimensionMismatch("jet order must be >= 1");
    int chart = 2;
    while (chart >= 0 && p.coords[chart] == 0) --chart;
    // a projective point always has a nonzero coordinate
    const int u_var = (chart == 0) ? 1 : 0;
    const int v_var = (chart == 2) ? 1 : 2;

    Rational alpha(p.coords[u_var], p.coords[chart]);
    alpha.canonicalize();
    Rational beta(p.coords[v_var], p.coords[chart]);
    beta.canonicalize();

    LocalJet jet;
    jet.order = order;
    jet.chart = chart;
    jet.coef.assign(graded_dim(order - 1), Rational(0));

    // binomial tables up to the polynomial degree
    const int d = f.degree();
    std::vector<std::vector<BigInt>> binom(d + 1, std::vector<BigInt>(d + 1, 0));
    for (int n = 0; n <= d; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + ((k <= n - 1) ? binom[n - 1][k] : BigInt(0));
    }

    std::array<int, 3> e;
    for (int idx = 0; idx < static_cast<int>(f.coeffs().size()); ++idx) {
        const Rational& c = f.coeffs()[idx];
        if (c == 0) continue;
        e = monomial_exponents(d, idx);
        const int au = e[u_var], av = e[v_var];
        // (alpha+u)^au (beta+v)^av, truncated
        Rational pow_a(1);
        std::vector<Rational> apow(au + 1), bpow(av + 1);
        apow[0] = 1;
        for (int i = 1; i <= au; ++i) apow[i] = apow[i - 1] * alpha;
        bpow[0] = 1;
        for (int j = 1; j <= av; ++j) bpow[j] = bpow[j - 1] * beta;
        for (int i = 0; i <= au && i < order; ++i) {
            Rational ci = c * Rational(binom[au][i]) * apow[au - i];
            for (int j = 0; j <= av && i + j < order; ++j)
                jet.coef[jet_index(i, j)] += ci * Rational(binom[av][j]) * bpow[av - j];
        }
    }
    return jet;
}

LocalJet jet_mul(const LocalJet& a, const LocalJet& b) {
    LocalJet r;
    r.order = std::min(a.order, b.order);
    r.chart = a.chart;
    r.coef.assign(graded_dim(r.order - 1), Rational(0));
    for (int da = 0; da < a.order; ++da)
        for (int i = da; i >= 0; --i) {
            const Rational& ca = a.at(i, da - i);
            if (ca == 0) continue;
            for (int db = 0; db + da < r.order && db < b.order; ++db)
                for (int k = db; k >= 0; --k) {
                    const Rational& cb = b.at(k, db - k);
                    if (cb == 0) continue;
                    r.at(i + k, (da - i) + (db - k)) += ca * cb;
                }
        }
    return r;
}

} // namespace linarr
