#include "linarr/arrangement.hpp"
#include "linarr/search.hpp"
#include "linarr/syzygy.hpp"

#include <doctest.h>

using namespace linarr;

namespace {

HomPoly builtin_poly(const std::string& name) { return builtin_arrangement(name)->polynomial(); }

bool is_syzygy(const HomPoly& f, const SyzygyTriple& t) {
    HomPoly s = t[0] * partial(f, Var::x) + t[1] * partial(f, Var::y) + t[2] * partial(f, Var::z);
    return s.is_zero();
}

} // namespace

TEST_CASE("syzygy spaces of the Ziegler arrangement") {
    HomPoly f = builtin_poly("AZ");
    CHECK(syzygy_space(f, 4).empty());
    auto s5 = syzygy_space(f, 5);
    REQUIRE(s5.size() == 1);
    CHECK(is_syzygy(f, s5[0]));
}

TEST_CASE("triangle syzygies in degree one") {
    HomPoly f = builtin_poly("TRIANGLE");
    auto basis = syzygy_space(f, 1);
    REQUIRE(basis.size() == 2);
    for (const auto& t : basis) CHECK(is_syzygy(f, t));
}

TEST_CASE("every returned triple satisfies the relation exactly") {
    SearchRng rng(31);
    for (const std::string& name : {"AZ", "TRIANGLE", "AD"}) {
        HomPoly f = builtin_poly(name);
        const int k = (f.degree() >= 9) ? 5 : 2;
        for (const auto& t : syzygy_space(f, k)) CHECK(is_syzygy(f, t));
    }
}

TEST_CASE("the Euler triple is never a syzygy") {
    for (const std::string& name : builtin_names()) {
        HomPoly f = builtin_poly(name);
        HomPoly e = HomPoly::monomial(1, 0, 0, 1) * partial(f, Var::x) +
                    HomPoly::monomial(0, 1, 0, 1) * partial(f, Var::y) +
                    HomPoly::monomial(0, 0, 1, 1) * partial(f, Var::z);
        CHECK(!e.is_zero());
    }
}

TEST_CASE("mdr regression on every built-in") {
    CHECK(mdr(builtin_poly("AZ")) == 5);
    CHECK(mdr(builtin_poly("AZp")) == 6);
    CHECK(mdr(builtin_poly("AD")) == 5);
    CHECK(mdr(builtin_poly("ADp")) == 6);
    CHECK(mdr(builtin_poly("BZ")) == 5);
    CHECK(mdr(builtin_poly("BZp")) == 6);
    CHECK(mdr(builtin_poly("TRIANGLE")) == 1);
}

TEST_CASE("Koszul guarantee: degree d-1 always carries a syzygy") {
    SearchRng rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<LinearForm> lines;
        while (static_cast<int>(lines.size()) < 4) {
            int a = rng.range(-3, 3), b = rng.range(-3, 3), c = rng.range(-3, 3);
            if (a == 0 && b == 0 && c == 0) continue;
            LinearForm l(a, b, c);
            bool dup = false;
            for (const LinearForm& e : lines) dup = dup || e == l;
            if (!dup) lines.push_back(l);
        }
        HomPoly f = Arrangement(lines).polynomial();
        CHECK(syzygy_dim(f, f.degree() - 1) > 0);
        CHECK(mdr(f) <= f.degree() - 1);
    }
}

TEST_CASE("mdr is invariant under projective coordinate changes") {
    SearchRng rng(13);
    for (const std::string& name : {"AZ", "AD"}) {
        Arrangement base = *builtin_arrangement(name);
        for (int trial = 0; trial < 2; ++trial) {
            std::array<std::array<int, 3>, 3> m;
            long det = 0;
            do {
                for (auto& row : m)
                    for (int& v : row) v = rng.range(-3, 3);
                det = static_cast<long>(m[0][0]) * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      static_cast<long>(m[0][1]) * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      static_cast<long>(m[0][2]) * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            } while (det == 0);
            std::vector<LinearForm> lines;
            for (const LinearForm& l : base.lines()) {
                std::array<Rational, 3> c;
                for (int j = 0; j < 3; ++j)
                    c[j] = Rational(m[0][j]) * Rational(l.coeffs[0]) +
                           Rational(m[1][j]) * Rational(l.coeffs[1]) +
                           Rational(m[2][j]) * Rational(l.coeffs[2]);
                lines.emplace_back(c);
            }
            CHECK(mdr(Arrangement(lines).polynomial()) == 5);
        }
    }
}

TEST_CASE("mdr cannot decrease when a line is added") {
    SearchRng rng(301);
    int done = 0;
    while (done < 20) {
        std::vector<LinearForm> lines;
        const int n = rng.range(3, 7);
        while (static_cast<int>(lines.size()) < n) {
            int a = rng.range(-4, 4), b = rng.range(-4, 4), c = rng.range(-4, 4);
            if (a == 0 && b == 0 && c == 0) continue;
            LinearForm l(a, b, c);
            bool dup = false;
            for (const LinearForm& e : lines) dup = dup || e == l;
            if (!dup) lines.push_back(l);
        }
        LinearForm extra(rng.range(-4, 4), rng.range(-4, 4), rng.range(1, 4));
        bool dup = false;
        for (const LinearForm& e : lines) dup = dup || e == extra;
        if (dup) continue;
        Arrangement a(lines);
        CHECK(mdr(add_line(a, extra).polynomial()) >= mdr(a.polynomial()));
        ++done;
    }
}

TEST_CASE("minimal generator degrees") {
    SUBCASE("the triangle is free with exponents (1,1)") {
        SyzygyProfile p = minimal_generator_degrees(builtin_poly("TRIANGLE"), 4);
        CHECK(p.generator_degrees == std::vector<int>{1, 1});
        CHECK(p.free);
        CHECK(p.mdr == 1);
        CHECK(p.dims == std::vector<int>{0, 2, 6, 12, 20});
    }
    SUBCASE("f_Z is a 4-syzygy curve, not free") {
        SyzygyProfile p = minimal_generator_degrees(builtin_poly("AZ"), 10);
        CHECK(p.mdr == 5);
        REQUIRE(!p.generator_degrees.empty());
        CHECK(p.generator_degrees.front() == 5);
        CHECK(p.generator_degrees == std::vector<int>{5, 6, 6, 6});
        CHECK(!p.free);
        CHECK(p.dims == std::vector<int>{0, 0, 0, 0, 0, 1, 6, 14, 24, 36, 50});
    }
    SUBCASE("f'_Z has smallest generator degree 6") {
        SyzygyProfile p = minimal_generator_degrees(builtin_poly("AZp"), 10);
        CHECK(p.mdr == 6);
        REQUIRE(!p.generator_degrees.empty());
        CHECK(p.generator_degrees.front() == 6);
        CHECK(!p.free);
    }
    SUBCASE("per-degree dimensions never drop below the shifted image") {
        SyzygyProfile p = minimal_generator_degrees(builtin_poly("TRIANGLE"), 5);
        for (std::size_t k = 1; k < p.dims.size(); ++k)
            CHECK(p.dims[k] >= p.dims[k - 1]); // dims only grow for these modules
    }
}
