#include "linarr/matrix.hpp"

#include "linarr/errors.hpp"

#include <algorithm>

namespace linarr {

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void RatMatrix::push_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
        throw DimensionMismatch("push_row: row length " + std::to_string(row.size()) +
                                " != cols " + std::to_string(cols_));
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::vector<BigInt>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(m.rows());
    std::vector<Rational> row(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        out.push_back(primitive_integer_vector(row));
    }
    return out;
}

namespace {

// smallest-bit-length nonzero entry in column c among rows [r, n)
int select_pivot(const std::vector<std::vector<BigInt>>& m, int r, int c) {
    int best = -1;
    std::size_t best_bits = 0;
    for (int i = r; i < static_cast<int>(m.size()); ++i) {
        if (mpz_sgn(m[i][c].get_mpz_t()) == 0) continue;
        std::size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
        if (best < 0 || bits < best_bits) {
            best = i;
            best_bits = bits;
        }
    }
    return best;
}

Rational make_fraction(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// row_i <- (piv*row_i - mic*row_r) / prev, exact at every entry (Bareiss).
// mic is taken by value: it aliases row_i[c], which the loop overwrites.
void eliminate_row(std::vector<BigInt>& row_i, const std::vector<BigInt>& row_r,
                   const BigInt& piv, const BigInt mic, const BigInt& prev,
                   BigInt& tmp) {
    const bool mic_zero = (mpz_sgn(mic.get_mpz_t()) == 0);
    const bool prev_one = (mpz_cmp_ui(prev.get_mpz_t(), 1) == 0);
    for (std::size_t j = 0; j < row_i.size(); ++j) {
        if (mic_zero && mpz_sgn(row_i[j].get_mpz_t()) == 0) continue;
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), row_i[j].get_mpz_t());
        if (!mic_zero)
            mpz_submul(tmp.get_mpz_t(), mic.get_mpz_t(), row_r[j].get_mpz_t());
        if (prev_one)
            mpz_swap(row_i[j].get_mpz_t(), tmp.get_mpz_t());
        else
            mpz_divexact(row_i[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
    }
}

} // namespace

int rank_fraction_free(std::vector<std::vector<BigInt>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    int r = 0;
    BigInt prev = 1, tmp;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = select_pivot(m, r, c);
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const BigInt piv = m[r][c];
        for (int i = r + 1; i < rows; ++i)
            eliminate_row(m[i], m[r], piv, m[i][c], prev, tmp);
        prev = piv;
        ++r;
    }
    return r;
}

IntRref rref_fraction_free(std::vector<std::vector<BigInt>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    IntRref out;
    out.cols = cols;
    int r = 0;
    BigInt prev = 1, tmp;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = select_pivot(m, r, c);
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const BigInt piv = m[r][c];
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            eliminate_row(m[i], m[r], piv, m[i][c], prev, tmp);
        }
        prev = piv;
        out.pivot_cols.push_back(c);
        ++r;
    }
    m.resize(r);
    for (auto& row : m) normalize_primitive(row);
    // keep sign convention: pivot entries positive
    for (int i = 0; i < r; ++i) {
        if (m[i][out.pivot_cols[i]] < 0)
            for (BigInt& x : m[i]) x = -x;
    }
    out.rows = std::move(m);
    return out;
}

int rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rank_fraction_free(to_integer_rows(m), m.cols());
}

std::vector<std::vector<Rational>> kernel_from_rref(const IntRref& r) {
    std::vector<bool> is_pivot(r.cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < r.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(r.cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            const int pc = r.pivot_cols[i];
            if (mpz_sgn(r.rows[i][f].get_mpz_t()) != 0) {
                BigInt num = -r.rows[i][f];
                v[pc] = make_fraction(num, r.rows[i][pc]);
            }
        }
        std::vector<BigInt> iv = primitive_integer_vector(v);
        for (int j = 0; j < r.cols; ++j) v[j] = Rational(iv[j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    if (m.cols() == 0) return {};
    if (m.rows() == 0) {
        std::vector<std::vector<Rational>> basis(m.cols(), std::vector<Rational>(m.cols(), Rational(0)));
        for (int j = 0; j < m.cols(); ++j) basis[j][j] = 1;
        return basis;
    }
    return kernel_from_rref(rref_fraction_free(to_integer_rows(m), m.cols()));
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw DimensionMismatch("solve: rhs length " + std::to_string(b.size()) +
                                " != rows " + std::to_string(m.rows()));
    // reduce the augmented matrix [m | b]
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    IntRref r = rref_fraction_free(to_integer_rows(aug), aug.cols());
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] == m.cols()) return std::nullopt; // pivot in b: inconsistent
        x[r.pivot_cols[i]] = make_fraction(r.rows[i][m.cols()], r.rows[i][r.pivot_cols[i]]);
    }
    return x;
}

} // namespace linarr
