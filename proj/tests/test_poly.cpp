#include "linarr/arrangement.hpp"
#include "linarr/errors.hpp"
#include "linarr/poly.hpp"
#include "linarr/search.hpp"

#include <doctest.h>

#include <algorithm>

using namespace linarr;

TEST_CASE("graded dimensions") {
    CHECK(graded_dim(0) == 1);
    CHECK(graded_dim(4) == 15);
    CHECK(graded_dim(8) == 45);
    // index <-> exponents round trip
    for (int k = 0; k <= 9; ++k)
        for (int idx = 0; idx < graded_dim(k); ++idx) {
            auto [a, b, c] = monomial_exponents(k, idx);
            CHECK(a + b + c == k);
            CHECK(monomial_index(k, a, b) == idx);
        }
}

TEST_CASE("parse basics and canonical print") {
    CHECK(parse_poly("x^2+y^2-z^2").str() == "x^2 + y^2 - z^2");
    CHECK(parse_poly("(x+y)^2").str() == "x^2 + 2*x*y + y^2");
    CHECK(parse_poly("xyz").degree() == 3);
    CHECK(parse_poly("2x-2y+z").str() == "2*x - 2*y + z");
    CHECK(parse_poly("1/2x + 1/2x").str() == "x");
    CHECK(parse_poly("x - x").is_zero());

    SUBCASE("parse -> print -> parse is the identity") {
        SearchRng rng(3);
        for (int trial = 0; trial < 40; ++trial) {
            const int d = rng.range(0, 5);
            HomPoly p(d);
            for (int i = 0; i < graded_dim(d); ++i) {
                Rational q(rng.range(-9, 9), rng.range(1, 5));
                q.canonicalize();
                p.coeffs()[i] = q;
            }
            CHECK(parse_poly(p.str()) == p);
        }
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_poly("x + y^2"), InhomogeneityError);
    try {
        parse_poly("x + y^2");
    } catch (const InhomogeneityError& e) {
        const int lo = std::min(e.first_degree(), e.second_degree());
        const int hi = std::max(e.first_degree(), e.second_degree());
        CHECK(lo == 1);
        CHECK(hi == 2);
    }
    CHECK_THROWS_AS(parse_poly("x + "), ParseError);
    CHECK_THROWS_AS(parse_poly("x + $"), ParseError);
    try {
        parse_poly("xy + @z^2");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5); // points at the bad character
    }
    CHECK_THROWS_AS(parse_poly("x/y"), ParseError);
}

TEST_CASE("the paper product expands to a degree-9 form") {
    HomPoly f = parse_poly("xyz(x+y-z)(x-y+z)(2x-2y+z)(2x-y-2z)(2x+y+z)(2x-y-z)");
    CHECK(f.degree() == 9);
    // matches the factor-by-factor product of the builtin line set
    CHECK(f == builtin_arrangement("AZ")->polynomial());
}

TEST_CASE("partial derivatives and the Euler relation") {
    CHECK(partial(parse_poly("xyz"), Var::x).str() == "y*z");
    CHECK(partial(parse_poly("x^2+y^2-z^2"), Var::z).str() == "-2*z");

    // x f_x + y f_y + z f_z = d f for every builtin arrangement polynomial
    for (const std::string& name : builtin_names()) {
        HomPoly f = builtin_arrangement(name)->polynomial();
        HomPoly eul = HomPoly::monomial(1, 0, 0, 1) * partial(f, Var::x) +
                      HomPoly::monomial(0, 1, 0, 1) * partial(f, Var::y) +
                      HomPoly::monomial(0, 0, 1, 1) * partial(f, Var::z);
        CHECK(eul == Rational(f.degree()) * f);
    }
}

TEST_CASE("homogeneity is preserved by ring operations") {
    SearchRng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int d1 = rng.range(0, 4), d2 = rng.range(0, 4);
        HomPoly a(d1), b(d2);
        for (auto& c : a.coeffs()) c = rng.range(-5, 5);
        for (auto& c : b.coeffs()) c = rng.range(-5, 5);
        CHECK((a * b).degree() == d1 + d2);
        if (d1 == d2) CHECK((a + b).degree() == d1);
        if (d1 > 0 && !a.is_zero()) CHECK(partial(a, Var::y).degree() == d1 - 1);
    }
    CHECK_THROWS_AS(parse_poly("x") + parse_poly("x^2"), DimensionMismatch);
}

TEST_CASE("local jets") {
    SUBCASE("constant jet of a chart coordinate") {
        LocalJet j = local_jet(parse_poly("z"), ProjPoint(0, 0, 1), 3);
        CHECK(j.chart == 2);
        CHECK(j.at(0, 0) == 1);
        CHECK(j.at(1, 0) == 0);
        CHECK(j.at(0, 1) == 0);
    }
    SUBCASE("linear jet of a line at its own zero") {
        // chart z=1 with x = 1+u, y = v
        LocalJet j = local_jet(parse_poly("x+y-z"), ProjPoint(1, 0, 1), 2);
        CHECK(j.chart == 2);
        CHECK(j.at(0, 0) == 0);
        CHECK(j.at(1, 0) == 1);
        CHECK(j.at(0, 1) == 1);
    }
    SUBCASE("triple point of the Ziegler arrangement") {
        // constant, linear and quadratic parts vanish; the cubic part is
        // nonzero (three concurrent branches)
        HomPoly f = builtin_arrangement("AZ")->polynomial();
        LocalJet j = local_jet(f, ProjPoint(0, 1, 1), 4);
        for (int d = 0; d < 3; ++d)
            for (int i = 0; i <= d; ++i) CHECK(j.at(i, d - i) == 0);
        bool cubic_nonzero = false;
        for (int i = 0; i <= 3; ++i)
            if (j.at(i, 3 - i) != 0) cubic_nonzero = true;
        CHECK(cubic_nonzero);
    }
    SUBCASE("cubic part factors into the three local line forms") {
        // jet of f at a triple point = unit * product of the 3 incident
        // local lines; compare degree-3 parts after scaling by the unit
        Arrangement az = *builtin_arrangement("AZ");
        ProjPoint p(0, 1, 1);
        Lattice lat = intersection_lattice(az);
        const MultPoint* mp = lat.find(p);
        REQUIRE(mp != nullptr);
        REQUIRE(mp->multiplicity() == 3);
        HomPoly unit_part = HomPoly::constant(1);
        HomPoly sing_part = HomPoly::constant(1);
        for (int li = 0; li < az.size(); ++li) {
            const bool through = std::find(mp->incident.begin(), mp->incident.end(), li) !=
                                 mp->incident.end();
            (through ? sing_part : unit_part) = (through ? sing_part : unit_part) *
                                                HomPoly::from_linear(az.line(li));
        }
        Rational unit = unit_part.evaluate(Rational(0), Rational(1), Rational(1));
        REQUIRE(unit != 0);
        LocalJet full = local_jet(az.polynomial(), p, 4);
        LocalJet lines3 = local_jet(sing_part, p, 4);
        for (int i = 0; i <= 3; ++i)
            CHECK(full.at(i, 3 - i) == unit * lines3.at(i, 3 - i));
    }
    SUBCASE("chart preference order z, then y, then x") {
        CHECK(local_jet(parse_poly("x"), ProjPoint(1, 1, 1), 2).chart == 2);
        CHECK(local_jet(parse_poly("x"), ProjPoint(1, 1, 0), 2).chart == 1);
        CHECK(local_jet(parse_poly("y"), ProjPoint(1, 0, 0), 2).chart == 0);
    }
    SUBCASE("jet of a product is the truncated product of jets") {
        SearchRng rng(23);
        for (int trial = 0; trial < 25; ++trial) {
            HomPoly a(rng.range(1, 3)), b(rng.range(1, 3));
            for (auto& c : a.coeffs()) c = rng.range(-4, 4);
            for (auto& c : b.coeffs()) c = rng.range(-4, 4);
            if (a.is_zero() || b.is_zero()) continue;
            ProjPoint p(rng.range(-3, 3), rng.range(-3, 3), rng.range(1, 3));
            const int order = rng.range(1, 4);
            LocalJet lhs = local_jet(a * b, p, order);
            LocalJet rhs = jet_mul(local_jet(a, p, order), local_jet(b, p, order));
            CHECK(lhs.coef == rhs.coef);
        }
    }
}

TEST_CASE("factored-product recognition") {
    auto lines = parse_linear_factors("xyz(x+y-z)");
    REQUIRE(lines.has_value());
    CHECK(lines->size() == 4);
    CHECK((*lines)[3] == LinearForm(1, 1, -1));

    CHECK(!parse_linear_factors("x^2+y^2-z^2").has_value()); // sum, not product
    auto squared = parse_linear_factors("x^2y");
    REQUIRE(squared.has_value()); // expands to x, x, y
    CHECK(squared->size() == 3);
    CHECK_THROWS_AS(Arrangement(*squared), DegeneracyError); // non-reduced

    auto scaled = parse_linear_factors("3x(2y)");
    REQUIRE(scaled.has_value());
    CHECK(scaled->size() == 2); // scalars dropped by normalization
}
