#include "linarr/syzygy.hpp"

#include "linarr/errors.hpp"

namespace linarr {

namespace {

// columns of multiplication-by-g on S_k, written into blk of a wide matrix
void fill_multiplication_block(RatMatrix& m, const HomPoly& g, int k, int block) {
    const int dk = graded_dim(k);
    const int dg = g.degree();
    for (int col = 0; col < dk; ++col) {
        auto [a, b, c] = monomial_exponents(k, col);
        for (int i = 0; i < static_cast<int>(g.coeffs().size()); ++i) {
            if (g.coeffs()[i] == 0) continue;
            auto [ga, gb, gc] = monomial_exponents(dg, i);
            m.at(monomial_index(k + dg, a + ga, b + gb), block * dk + col) = g.coeffs()[i];
        }
    }
}

} // namespace

RatMatrix syzygy_matrix(const HomPoly& f, int k) {
    if (k < 0) throw DimensionMismatch("negative syzygy degree");
    const int d = f.degree();
    RatMatrix m(graded_dim(k + d - 1), 3 * graded_dim(k));
    fill_multiplication_block(m, partial(f, Var::x), k, 0);
    fill_multiplication_block(m, partial(f, Var::y), k, 1);
    fill_multiplication_block(m, partial(f, Var::z), k, 2);
    return m;
}

std::vector<SyzygyTriple> syzygy_space(const HomPoly& f, int k) {
    const int dk = graded_dim(k);
    std::vector<std::vector<Rational>> ker = kernel_basis(syzygy_matrix(f, k));
    std::vector<SyzygyTriple> out;
    out.reserve(ker.size());
    for (const auto& v : ker) {
        SyzygyTriple t{HomPoly(k), HomPoly(k), HomPoly(k)};
        for (int blk = 0; blk < 3; ++blk)
            for (int i = 0; i < dk; ++i) t[blk].coeffs()[i] = v[blk * dk + i];
        out.push_back(std::move(t));
    }
    return out;
}

int syzygy_dim(const HomPoly& f, int k) {
    return 3 * graded_dim(k) - rank(syzygy_matrix(f, k));
}

int mdr(const HomPoly& f) {
    const int d = f.degree();
    if (d < 1 || f.is_zero()) throw DimensionMismatch("mdr needs a nonzero form of positive degree");
    for (int k = 0; k < d - 1; ++k)
        if (syzygy_dim(f, k) > 0) return k;
    return d - 1; // Koszul guarantee
}

SyzygyProfile minimal_generator_degrees(const HomPoly& f, int cap) {
    const int d = f.degree();
    if (cap < d - 1) throw DimensionMismatch("generator cap below d-1");

    SyzygyProfile prof;
    prof.d = d;
    prof.mdr = -1;

    std::vector<std::vector<Rational>> prev; // kernel vectors of degree k-1
    for (int k = 0; k <= cap; ++k) {
        const int dk = graded_dim(k);
        std::vector<std::vector<Rational>> basis = kernel_basis(syzygy_matrix(f, k));
        prof.dims.push_back(static_cast<int>(basis.size()));
        if (prof.mdr < 0 && !basis.empty()) prof.mdr = k;

        // span of x*rho, y*rho, z*rho over the previous basis
        RatMatrix img;
        const int dk1 = graded_dim(k - 1);
        for (const auto& rho : prev) {
            for (int var = 0; var < 3; ++var) {
                std::vector<Rational> w(3 * dk, Rational(0));
                for (int blk = 0; blk < 3; ++blk)
                    for (int i = 0; i < dk1; ++i) {
                        if (rho[blk * dk1 + i] == 0) continue;
                        std::array<int, 3> e = monomial_exponents(k - 1, i);
                        e[var] += 1;
                        w[blk * dk + monomial_index(k, e[0], e[1])] = rho[blk * dk1 + i];
                    }
                img.push_row(w);
            }
        }
        const int covered = (img.rows() > 0) ? rank(img) : 0;
        const int fresh = static_cast<int>(basis.size()) - covered;
        if (fresh < 0) throw InvariantViolation("graded generator count went negative");
        for (int i = 0; i < fresh; ++i) prof.generator_degrees.push_back(k);
        prev = std::move(basis);
    }
    if (prof.mdr < 0) prof.mdr = d - 1;

    prof.free = false;
    if (prof.generator_degrees.size() == 2) {
        const int d1 = prof.generator_degrees[0], d2 = prof.generator_degrees[1];
        prof.free = true;
        for (int k = 0; k <= cap; ++k)
            if (prof.dims[k] != graded_dim(k - d1) + graded_dim(k - d2)) {
                prof.free = false;
                break;
            }
    }
    return prof;
}

} // namespace linarr
