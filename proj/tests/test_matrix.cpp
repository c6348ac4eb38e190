#include "linarr/errors.hpp"
#include "linarr/matrix.hpp"
#include "linarr/search.hpp"

#include <doctest.h>

using namespace linarr;

namespace {

RatMatrix from_ints(std::vector<std::vector<int>> rows) {
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// naive unreduced big-integer fraction: the independent oracle for the
// reduced mpq arithmetic
struct NaiveFrac {
    BigInt num, den; // den may be negative and unreduced

    static NaiveFrac of(long n, long d) { return {BigInt(n), BigInt(d)}; }
    NaiveFrac add(const NaiveFrac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    NaiveFrac mul(const NaiveFrac& o) const { return {num * o.num, den * o.den}; }
    NaiveFrac sub(const NaiveFrac& o) const { return {num * o.den - o.num * den, den * o.den}; }
    bool equals(const Rational& q) const {
        // cross-multiplication, no reduction anywhere
        const BigInt qnum(mpq_class(q).get_num());
        const BigInt qden(mpq_class(q).get_den());
        return num * qden == qnum * den;
    }
};

} // namespace

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(rational_from_string("3/4")) == "3/4");
    CHECK(rational_to_string(rational_from_string("-6/4")) == "-3/2");
    CHECK(rational_to_string(rational_from_string("0")) == "0");
    CHECK(rational_to_string(rational_from_string("12")) == "12");
    CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1e3"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
}

TEST_CASE("reduced arithmetic matches the naive cross-multiplication oracle") {
    SearchRng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Rational q(rng.range(-20, 20), rng.range(1, 15));
        q.canonicalize();
        NaiveFrac n{BigInt(mpq_numref(q.get_mpq_t())), BigInt(mpq_denref(q.get_mpq_t()))};
        for (int step = 0; step < 25; ++step) {
            const long a = rng.range(-9, 9);
            long b = rng.range(1, 9);
            Rational rhs(a, b);
            rhs.canonicalize();
            switch (rng.range(0, 2)) {
                case 0:
                    q += rhs;
                    n = n.add(NaiveFrac::of(a, b));
                    break;
                case 1:
                    q -= rhs;
                    n = n.sub(NaiveFrac::of(a, b));
                    break;
                default:
                    q *= rhs;
                    n = n.mul(NaiveFrac::of(a, b));
                    break;
            }
            // mpq must stay canonical: reduced, positive denominator
            BigInt g;
            mpz_gcd(g.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
            CHECK(mpz_sgn(mpq_denref(q.get_mpq_t())) > 0);
            CHECK(g == 1);
            REQUIRE(n.equals(q));
        }
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1); // proportional rows
    CHECK(rank(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(RatMatrix(0, 0)) == 0);
}

TEST_CASE("kernel examples and canonical form") {
    SUBCASE("one row, two free columns") {
        auto k = kernel_basis(from_ints({{1, 1, 0}}));
        REQUIRE(k.size() == 2);
        // canonical: primitive integer entries, first nonzero positive
        CHECK(k[0] == std::vector<Rational>{1, -1, 0});
        CHECK(k[1] == std::vector<Rational>{0, 0, 1});
    }
    SUBCASE("full-rank identity has empty kernel") {
        CHECK(kernel_basis(from_ints({{1, 0}, {0, 1}})).empty());
    }
}

TEST_CASE("solve examples") {
    SUBCASE("identity") {
        auto x = solve(from_ints({{1, 0}, {0, 1}}), {Rational(5), Rational(-7)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 5);
        CHECK((*x)[1] == -7);
    }
    SUBCASE("underdetermined: any solution with coordinate sum 2") {
        auto x = solve(from_ints({{1, 1}}), {Rational(2)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] + (*x)[1] == 2);
    }
    SUBCASE("inconsistent") {
        auto x = solve(from_ints({{1}, {1}}), {Rational(0), Rational(1)});
        CHECK(!x.has_value());
    }
    SUBCASE("dimension mismatch throws") {
        CHECK_THROWS_AS(solve(from_ints({{1, 0}}), {Rational(1), Rational(2)}), DimensionMismatch);
    }
}

TEST_CASE("rank/kernel properties on random matrices") {
    SearchRng rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = rng.range(1, 7), m = rng.range(1, 7);
        RatMatrix a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                Rational q(rng.range(-6, 6), rng.range(1, 4));
                q.canonicalize();
                a.at(i, j) = q;
            }
        const int r = rank(a);
        CHECK(r == rank(a.transposed()));
        auto ker = kernel_basis(a);
        CHECK(static_cast<int>(ker.size()) == m - r);
        for (const auto& v : ker) {
            // exact annihilation, no tolerance
            for (int i = 0; i < n; ++i) {
                Rational acc(0);
                for (int j = 0; j < m; ++j) acc += a.at(i, j) * v[j];
                REQUIRE(acc == 0);
            }
            // primitive integer entries, first nonzero positive
            BigInt g = 0;
            bool first_seen = false;
            for (const Rational& e : v) {
                CHECK(mpz_cmp_ui(mpq_denref(e.get_mpq_t()), 1) == 0);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpq_numref(e.get_mpq_t()));
                if (!first_seen && e != 0) {
                    CHECK(e > 0);
                    first_seen = true;
                }
            }
            CHECK(g == 1);
        }
    }
}
