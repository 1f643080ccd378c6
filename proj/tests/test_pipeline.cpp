#include <doctest.h>

#include <random>

#include "../tests/helpers.hpp"
#include "cwres/json_io.hpp"
#include "cwres/pipeline.hpp"

using namespace cwres;
using namespace cwres::testing;

namespace {

BasisChange identity_change(const CWChainData& x, Scalar p) {
    BasisChange change;
    for (const auto& level : x.cells) {
        int n = static_cast<int>(level.size());
        change.mbar.push_back(FpMatrix::identity(n, p));
        change.t.push_back(IntMatrix::identity(n));
    }
    return change;
}

std::vector<int> fp_ranks(const CWChainData& x, Scalar p) {
    std::vector<int> out;
    for (int d = 1; d < static_cast<int>(x.cells.size()); ++d) out.push_back(rank(x.boundary(d).mod(p)));
    return out;
}

std::vector<int> q_ranks(const CWChainData& x) {
    std::vector<int> out;
    for (int d = 1; d < static_cast<int>(x.cells.size()); ++d) out.push_back(rank_over_q(x.boundary(d)));
    return out;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("conjugating by the identity returns the input") {
    CWChainData x = scarf4_cw();
    CHECK(conjugate_boundaries(x, identity_change(x, 2)) == x);
}

TEST_CASE("conjugation preserves boundary composition and ranks") {
    std::mt19937_64 rng(53);
    CWChainData x = scarf4_cw();
    for (int trial = 0; trial < 10; ++trial) {
        BasisChange change = identity_change(x, 3);
        change.t[3] = random_unimodular(rng, static_cast<int>(x.cells[3].size()));
        change.mbar[3] = change.t[3].mod(3);
        CWChainData y = conjugate_boundaries(x, change);
        CHECK(validate_cw(y).ok);  // includes boundary-of-boundary over Z
        CHECK(fp_ranks(y, 3) == fp_ranks(x, 3));
        CHECK(q_ranks(y) == q_ranks(x));
    }
}

TEST_CASE("conjugation on a toy complex with two 3-cells") {
    std::mt19937_64 rng(59);
    CWChainData x = simplicial_cw({{0, 1, 2, 3}, {0, 1, 2, 4}});
    REQUIRE(x.cells[3].size() == 2);
    for (Scalar p : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            BasisChange change = identity_change(x, p);
            change.t[3] = random_unimodular(rng, 2);
            change.mbar[3] = change.t[3].mod(p);
            CWChainData y = conjugate_boundaries(x, change);
            CHECK(validate_cw(y).ok);
            CHECK(fp_ranks(y, p) == fp_ranks(x, p));
            CHECK(q_ranks(y) == q_ranks(x));
            // B'_3 mod p is the boundary in the new basis
            FpMatrix direct = change.mbar[2] * x.boundary(3).mod(p) * inverse(change.mbar[3]);
            CHECK(y.boundary(3).mod(p) == direct);
        }
    }
}

TEST_CASE("conjugation rejects bad input") {
    CWChainData x = scarf4_cw();
    BasisChange change = identity_change(x, 2);
    SUBCASE("wrong size") {
        change.t.pop_back();
        CHECK_THROWS_AS(conjugate_boundaries(x, change), SizeMismatch);
    }
    SUBCASE("non-identity in low degrees") {
        std::mt19937_64 rng(1);
        change.t[1] = random_unimodular(rng, static_cast<int>(x.cells[1].size()));
        CHECK_THROWS_AS(conjugate_boundaries(x, change), Error);
    }
    SUBCASE("non-unimodular") {
        change.t[3].at(0, 0) = 2;
        CHECK_THROWS_AS(conjugate_boundaries(x, change), NotUnimodular);
    }
}

TEST_CASE("normalize_det fixes the determinant by scaling the last element") {
    BasedChainComplex bc = cellular_chain_complex(scarf4_cw(), 3);
    BasedBasis basis = standard_basis(bc);
    SUBCASE("already 1: identity transformation") {
        CHECK(normalize_det(basis, 3) == basis);
    }
    SUBCASE("det d: last element scaled by 1/d") {
        basis.levels[3][0].coords = {2};  // det 2 over GF(3)
        BasedBasis fixed = normalize_det(basis, 3);
        CHECK(fixed.levels[3][0].coords == FpVector{1});  // 2 * inv(2) = 1
        CHECK(det(basis_matrix(fixed, 3, 3)) == 1);
    }
    SUBCASE("incidence poset unchanged") {
        GradedFreeComplex res = homogenize(scarf4_cw(), 3);
        BasedChainComplex dc = dehomogenize(res);
        BasedBasis b2 = standard_basis(dc);
        b2.levels[3][0].coords = {2};
        LabeledPoset before = incidence_poset_of_based_complex(dc, b2);
        LabeledPoset after = incidence_poset_of_based_complex(dc, normalize_det(b2, 3));
        CHECK(before == after);
    }
}

TEST_CASE("main theorem on the Koszul 2-simplex: Y equals X bit for bit") {
    MonomialIdeal i = koszul3_ideal();
    CWChainData x = koszul3_cw();
    for (Scalar p : {2, 3}) {
        Certificate cert = run_main_theorem(i, x, p);
        REQUIRE(cert.ok());
        CHECK(cert.stage_reached == "complete");
        CHECK(cert.resolution_is_minimal);
        CHECK(cert.x_regular);
        CHECK(cert.support_x.supported);
        CHECK(cert.thm47.posetSupports);
        CHECK(cert.poset_equal);
        CHECK(cert.y == x);
        CHECK(to_json(cert.y).dump() == to_json(x).dump());
    }
}

TEST_CASE("main theorem on the 3-dimensional Scarf complex") {
    MonomialIdeal i = scarf4_ideal();
    CWChainData x = scarf4_cw();
    for (Scalar p : {2, 3}) {
        Certificate cert = run_main_theorem(i, x, p);
        REQUIRE(cert.ok());
        CHECK(cert.poset_equal);
        CHECK(cert.support_y.supported);
        CHECK(cert.y_validation.ok);
        CHECK(validate_cw(cert.y).ok);
        // the standard basis is already minimal here, so Y = X
        CHECK(cert.y == x);
        for (const auto& lift : cert.lifts) {
            CHECK(lift.det_one);
            CHECK(lift.reduces_to_mbar);
        }
    }
}

TEST_CASE("main theorem aborts on a loop edge without running later stages") {
    MonomialIdeal i = ideal("x, y", {"x", "y"});
    CWChainData x = loop_edge();
    x.cells[0][0].mdeg = Multidegree({1, 0});
    x.cells[1][0].mdeg = Multidegree({1, 1});
    Certificate cert = run_main_theorem(i, x, 2);
    CHECK(cert.status == "NotRegular");
    CHECK(cert.stage_reached == "regularity");
    CHECK(!cert.basis_found);
    CHECK(!cert.y_built);
}

TEST_CASE("main theorem aborts when X does not support the resolution") {
    MonomialIdeal i = ideal("x, y", {"x", "y"});
    CWChainData x = koszul3_cw();  // labeled for (x,y,z), wrong ideal
    Certificate cert = run_main_theorem(i, x, 2);
    CHECK(cert.status == "NotSupported");
    CHECK(cert.stage_reached == "support-x");
}

TEST_CASE("certificates are deterministic") {
    MonomialIdeal i = scarf4_ideal();
    CWChainData x = scarf4_cw();
    Certificate a = run_main_theorem(i, x, 2);
    Certificate b = run_main_theorem(i, x, 2);
    CHECK(to_json(a).dump(2) == to_json(b).dump(2));
}

}
