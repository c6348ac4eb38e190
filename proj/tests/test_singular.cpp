#include "linarr/arrangement.hpp"
#include "linarr/errors.hpp"
#include "linarr/poly.hpp"
#include "linarr/singular_scheme.hpp"
#include "linarr/syzygy.hpp"

#include <doctest.h>

using namespace linarr;

namespace {

const MultPoint& point_of_multiplicity(const Lattice& l, int m) {
    for (const MultPoint& p : l.points)
        if (p.multiplicity() == m) return p;
    throw std::runtime_error("no point of requested multiplicity");
}

} // namespace

TEST_CASE("local condition counts per multiplicity") {
    SUBCASE("node: one condition, evaluation at the point") {
        Arrangement tri = *builtin_arrangement("TRIANGLE");
        Lattice lat = intersection_lattice(tri);
        RatMatrix rows = local_conditions(point_of_multiplicity(lat, 2), tri, 4);
        CHECK(rows.rows() == 1);
        // the single functional is evaluation at the node: check it
        // annihilates exactly the quartics vanishing there
        const MultPoint& p = point_of_multiplicity(lat, 2);
        HomPoly probe = HomPoly::from_linear(join(p.point, ProjPoint(1, 2, 3)));
        HomPoly q = probe * probe * probe * probe;
        Rational acc(0);
        for (int j = 0; j < rows.cols(); ++j) acc += rows.at(0, j) * q.coeffs()[j];
        CHECK(acc == 0);
        // and a quartic that does not vanish there is caught
        HomPoly non_vanishing = parse_poly("x^4 + y^4 + z^4");
        acc = 0;
        for (int j = 0; j < rows.cols(); ++j) acc += rows.at(0, j) * non_vanishing.coeffs()[j];
        CHECK(acc != 0);
    }
    SUBCASE("triple point: four conditions") {
        Arrangement az = *builtin_arrangement("AZ");
        Lattice lat = intersection_lattice(az);
        RatMatrix rows = local_conditions(point_of_multiplicity(lat, 3), az, 8);
        CHECK(rows.rows() == 4);
    }
    SUBCASE("quadruple point: nine conditions, against the local dimension oracle") {
        Arrangement bz = *builtin_arrangement("BZ");
        Lattice lat = intersection_lattice(bz);
        const MultPoint& p = point_of_multiplicity(lat, 4);
        RatMatrix rows = local_conditions(p, bz, 9);
        CHECK(rows.rows() == 9);
        // dimension-count oracle at truncation N = 5: dim R/m^5 = 15, and
        // the truncated local Jacobian image of two cubics in general
        // position has dimension 15 - 9 (Hilbert 1,2,3,2,1 for R/J_g)
        CHECK(graded_dim(4) - rows.rows() == 6);
    }
    SUBCASE("triple-point conditions are truncation-stable (order 4 vs 3)") {
        // membership rows at N = 2m-3 = 3 and at N = 4 cut the same
        // subspace of S_8: m^3 lies in the local Jacobian ideal
        Arrangement az = *builtin_arrangement("AZ");
        Lattice lat = intersection_lattice(az);
        const MultPoint& p = point_of_multiplicity(lat, 3);
        RatMatrix r3 = local_conditions(p, az, 8);
        RatMatrix r4 = local_conditions(p, az, 8, 4);
        CHECK(r3.rows() == 4);
        CHECK(r4.rows() == 4);
        RatMatrix stacked = r3;
        for (int i = 0; i < r4.rows(); ++i) {
            std::vector<Rational> row(r4.cols());
            for (int j = 0; j < r4.cols(); ++j) row[j] = r4.at(i, j);
            stacked.push_row(row);
        }
        CHECK(rank(stacked) == rank(r3));
        CHECK(rank(stacked) == rank(r4));
    }
}

TEST_CASE("condition matrix row count equals tau") {
    for (const std::string& name : {"AZ", "AD", "BZ", "TRIANGLE"}) {
        Arrangement a = *builtin_arrangement(name);
        for (int k : {3, 8}) {
            ConditionMatrix cm = condition_matrix(a, k);
            CHECK(cm.m.rows() == total_tjurina(a));
            CHECK(cm.m.cols() == graded_dim(k));
        }
    }
}

TEST_CASE("ideal dimensions at degree 8") {
    SUBCASE("A_Z: dim J_8 = 3, dim I_8 = 4") {
        IdealDims d = ideal_dim(*builtin_arrangement("AZ"), 8);
        CHECK(d.dim_J == 3);
        CHECK(d.dim_I == 4);
    }
    SUBCASE("A_D matches") {
        IdealDims d = ideal_dim(*builtin_arrangement("AD"), 8);
        CHECK(d.dim_J == 3);
        CHECK(d.dim_I == 4);
    }
    SUBCASE("the moved arrangements have maximal-rank condition systems") {
        IdealDims dz = ideal_dim(*builtin_arrangement("AZp"), 8);
        CHECK(dz.dim_I == 3);
        CHECK(dz.dim_J == 3);
        IdealDims dd = ideal_dim(*builtin_arrangement("ADp"), 8);
        CHECK(dd.dim_I == 3);
        CHECK(dd.dim_J == 3);
    }
}

TEST_CASE("Jacobian piece sits inside the saturation") {
    // every row of jacobian_span satisfies every condition row
    for (const std::string& name : {"AZ", "TRIANGLE"}) {
        Arrangement a = *builtin_arrangement(name);
        const int d = a.polynomial().degree();
        for (int k : {d - 1, d + 1}) {
            ConditionMatrix cm = condition_matrix(a, k);
            RatMatrix jac = jacobian_span(a.polynomial(), k);
            for (int r = 0; r < jac.rows(); ++r) {
                for (int i = 0; i < cm.m.rows(); ++i) {
                    Rational acc(0);
                    for (int j = 0; j < cm.m.cols(); ++j) acc += cm.m.at(i, j) * jac.at(r, j);
                    REQUIRE(acc == 0);
                }
            }
        }
    }
}

TEST_CASE("defect sequences") {
    SUBCASE("triangle: defect_0 = 2, zero afterwards") {
        DefectReport rep = defect_sequence(*builtin_arrangement("TRIANGLE"));
        CHECK(rep.tau == 3);
        CHECK(rep.mdr == 1);
        CHECK(rep.threshold == 0);
        CHECK(rep.rows[0].defect == 2);
        for (std::size_t k = 1; k < rep.rows.size(); ++k) CHECK(rep.rows[k].defect == 0);
    }
    SUBCASE("A_Z: defect_8 = 1, threshold 8, stabilization at tau") {
        DefectReport rep = defect_sequence(*builtin_arrangement("AZ"));
        CHECK(rep.tau == 42);
        CHECK(rep.mdr == 5);
        CHECK(rep.threshold == 8);
        CHECK(rep.rows[8].defect == 1);
        for (int k = 9; k <= 18; ++k) CHECK(rep.rows[k].defect == 0);
        CHECK(rep.rows[18].dim_S_mod_I == 42);
        // theorem consistency: defect_k = 0 iff k > 2d-5-r
        for (const DefectRow& row : rep.rows)
            CHECK((row.defect == 0) == (row.k > rep.threshold));
        // dim(S_k/I_k) is nondecreasing
        for (std::size_t k = 1; k < rep.rows.size(); ++k)
            CHECK(rep.rows[k].dim_S_mod_I >= rep.rows[k - 1].dim_S_mod_I);
    }
}

TEST_CASE("gap certificates") {
    SUBCASE("A_Z carries an octic gap element congruent to the printed one") {
        Arrangement az = *builtin_arrangement("AZ");
        auto cert = gap_certificate(az, 8);
        REQUIRE(cert.has_value());
        CHECK(cert->dim_I == 4);
        CHECK(cert->dim_J == 3);
        CHECK(cert->conditions_hold);
        CHECK(cert->independent_of_jacobian);
        CHECK(cert->conditions_checked == 42);

        HomPoly qz = parse_poly(
            "12x^4-12x^3y+3x^2y^2-6xy^3+3y^4-4x^3z+12x^2yz-2xy^2z+3y^3z"
            "-13x^2z^2+6xyz^2-6y^2z^2+2xz^3-3yz^3+3z^4");
        HomPoly hz = parse_poly("xyz(y-3z)") * qz;
        CHECK(congruent_mod_jacobian(az.polynomial(), 8, cert->h, hz));
    }
    SUBCASE("A_D matches its printed octic") {
        Arrangement ad = *builtin_arrangement("AD");
        auto cert = gap_certificate(ad, 8);
        REQUIRE(cert.has_value());
        HomPoly qd = parse_poly(
            "51x^4+8x^3y+29x^2y^2+17xy^3+75y^4+12x^3z-13x^2yz+19xy^2z-15y^3z"
            "-186x^2z^2+26xyz^2-210y^2z^2-12xz^3+15yz^3+135z^4");
        HomPoly hd = parse_poly("xy(7x-4y-z)(x-y-19z)") * qd;
        CHECK(congruent_mod_jacobian(ad.polynomial(), 8, cert->h, hd));
    }
    SUBCASE("the moved arrangement has no gap at degree 8") {
        CHECK(!gap_certificate(*builtin_arrangement("AZp"), 8).has_value());
        CHECK(!gap_certificate(*builtin_arrangement("ADp"), 8).has_value());
    }
}

TEST_CASE("tau stabilization at k = 2d for every built-in") {
    for (const std::string& name : builtin_names()) {
        Arrangement a = *builtin_arrangement(name);
        const int d = a.polynomial().degree();
        ConditionMatrix cm = condition_matrix(a, 2 * d);
        CHECK(rank(cm.m) == total_tjurina(a));
    }
}
