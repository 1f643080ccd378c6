#include <doctest.h>

#include "../tests/helpers.hpp"
#include "cwres/cwposet.hpp"
#include "cwres/json_io.hpp"

using namespace cwres;
using namespace cwres::testing;

namespace {

// digon with a 2-cell attached twice around the circle (coefficients +-2)
CWChainData doubled_attachment() {
    CWChainData data;
    data.cells.push_back({{"v0", {}}, {"v1", {}}});
    data.cells.push_back({{"e1", {}}, {"e2", {}}});
    data.cells.push_back({{"f", {}}});
    IntMatrix b1(2, 2);
    b1.at(0, 0) = -1; b1.at(1, 0) = 1;
    b1.at(0, 1) = -1; b1.at(1, 1) = 1;
    IntMatrix b2(2, 1);
    b2.at(0, 0) = 2; b2.at(1, 0) = -2;
    data.boundaries = {b1, b2};
    return data;
}

// regular digon: two vertices, two parallel edges, one bigon 2-cell
CWChainData bigon() {
    CWChainData data = doubled_attachment();
    data.boundaries[1].at(0, 0) = 1;
    data.boundaries[1].at(1, 0) = -1;
    return data;
}

}  // namespace

TEST_SUITE("cwposet") {

TEST_CASE("validate accepts the hollow triangle and the solid square") {
    CHECK(validate_cw(hollow_triangle()).ok);
    CHECK(validate_cw(solid_square()).ok);
}

TEST_CASE("validate names a broken boundary composition") {
    CWChainData data = solid_square();
    data.boundaries[1].at(0, 0) = -1;  // breaks B1*B2 = 0
    ValidationReport rep = validate_cw(data);
    CHECK(!rep.ok);
    REQUIRE(!rep.issues.empty());
    CHECK(rep.issues[0].check == "boundary-composition");
    CHECK(rep.issues[0].dim == 2);
}

TEST_CASE("validate rejects bad edge columns but accepts loop columns") {
    CHECK(validate_cw(loop_edge()).ok);
    CWChainData data = hollow_triangle();
    data.boundaries[0].at(0, 0) = 1;  // +1,+1 endpoints
    ValidationReport rep = validate_cw(data);
    CHECK(!rep.ok);
    CHECK(rep.issues[0].check == "edge-column");
}

TEST_CASE("validate rejects partial grading") {
    CWChainData data = hollow_triangle();
    data.cells[0][0].mdeg = Multidegree({1, 0});
    ValidationReport rep = validate_cw(data);
    CHECK(!rep.ok);
    CHECK(rep.issues[0].check == "grading");
}

TEST_CASE("regularity proxy") {
    CHECK(check_regular_two_skeleton(hollow_triangle()));
    CHECK(check_regular_two_skeleton(solid_triangle()));
    CHECK(check_regular_two_skeleton(solid_square()));
    CHECK(check_regular_two_skeleton(scarf4_cw()));
    CHECK(check_regular_two_skeleton(bigon()));
    CHECK(!check_regular_two_skeleton(loop_edge()));
    CHECK(!check_regular_two_skeleton(doubled_attachment()));

    // paired edges traversed twice: every cycle vertex meets four support edges
    CWChainData quad;
    quad.cells.push_back({{"v0", {}}, {"v1", {}}});
    quad.cells.push_back({{"e1", {}}, {"e2", {}}, {"e3", {}}, {"e4", {}}});
    quad.cells.push_back({{"f", {}}});
    IntMatrix b1(2, 4);
    for (int c = 0; c < 4; ++c) {
        b1.at(0, c) = -1;
        b1.at(1, c) = 1;
    }
    IntMatrix b2(4, 1);
    b2.at(0, 0) = 1; b2.at(1, 0) = -1; b2.at(2, 0) = 1; b2.at(3, 0) = -1;
    quad.boundaries = {b1, b2};
    CHECK(validate_cw(quad).ok);
    CHECK(!check_regular_two_skeleton(quad));
}

TEST_CASE("cellular chain complex reduces mod p") {
    BasedChainComplex bc = cellular_chain_complex(hollow_triangle(), 2);
    for (const auto& [rc, v] : bc.differential(1).entries()) {
        (void)rc;
        CHECK(v == 1);  // every incidence is +-1, so 1 mod 2
    }
    BasedChainComplex sq = cellular_chain_complex(solid_square(), 3);
    CHECK(sq.differential(2).get(0, 0) == 1);

    BasedChainComplex empty = cellular_chain_complex(CWChainData{}, 2);
    CHECK(empty.length() == 0);
}

TEST_CASE("face poset of the hollow triangle") {
    LabeledPoset poset = face_poset(hollow_triangle(), 2);
    CHECK(poset.elements.size() == 6);
    CHECK(poset.covers.size() == 6);
}

TEST_CASE("face poset covers depend on the characteristic") {
    CWChainData data = doubled_attachment();
    LabeledPoset mod2 = face_poset(data, 2);
    LabeledPoset mod3 = face_poset(data, 3);
    auto face_covers = [](const LabeledPoset& poset) {
        int n = 0;
        for (const auto& [lo, hi] : poset.covers)
            if (hi == "f") {
                (void)lo;
                ++n;
            }
        return n;
    };
    CHECK(face_covers(mod2) == 0);  // 2 = 0 mod 2 deletes the covers
    CHECK(face_covers(mod3) == 2);
}

TEST_CASE("face poset equals the incidence poset of the standard basis") {
    for (Scalar p : {2, 3}) {
        for (const CWChainData& data : {hollow_triangle(), solid_square(), koszul3_cw(), scarf4_cw()}) {
            BasedChainComplex bc = cellular_chain_complex(data, p);
            CHECK(face_poset(data, p) == incidence_poset_of_based_complex(bc, standard_basis(bc)));
        }
    }
}

TEST_CASE("check_supports_cw matches the Koszul resolution of (x,y)") {
    MonomialIdeal i = ideal("x, y", {"x", "y"});
    CWChainData segment = lcm_labeled_simplicial_cw(i, {{0, 1}});
    GradedFreeComplex f = minimize(taylor_complex(i, 2));
    SupportReport rep = check_supports_cw(segment, f);
    REQUIRE(rep.supported);
    REQUIRE(rep.eta.size() == 2);
    CHECK(rep.eta[0] == std::vector<std::pair<std::string, std::string>>{{"t0", "c0"}, {"t1", "c1"}});
    CHECK(rep.eta[1] == std::vector<std::pair<std::string, std::string>>{{"t0.1", "c0.1"}});
}

TEST_CASE("check_supports_cw failure certificates") {
    MonomialIdeal i = ideal("x, y", {"x", "y"});
    GradedFreeComplex f = minimize(taylor_complex(i, 3));
    SUBCASE("cardinality") {
        CWChainData tri = lcm_labeled_simplicial_cw(ideal("x, y, z", {"x", "y", "z"}), {{0, 1, 2}});
        SupportReport rep = check_supports_cw(tri, f);
        CHECK(!rep.supported);
        CHECK(rep.reason == "cardinality");
    }
    SUBCASE("ungraded") {
        CWChainData segment = simplicial_cw({{0, 1}});
        SupportReport rep = check_supports_cw(segment, f);
        CHECK(!rep.supported);
        CHECK(rep.reason == "ungraded");
    }
    SUBCASE("degree multiset") {
        CWChainData segment = lcm_labeled_simplicial_cw(i, {{0, 1}});
        segment.cells[0][0].mdeg = Multidegree({2, 0});
        SupportReport rep = check_supports_cw(segment, f);
        CHECK(!rep.supported);
        CHECK(rep.reason == "degree-multiset");
        CHECK(rep.degree == 0);
    }
    SUBCASE("incidence: sign-inconsistent with no relabeling fix") {
        CWChainData segment = lcm_labeled_simplicial_cw(i, {{0, 1}});
        segment.boundaries[0].at(0, 0) = 1;  // both endpoints +1
        SupportReport rep = check_supports_cw(segment, f);
        CHECK(!rep.supported);
        CHECK(rep.reason == "incidence");
    }
}

TEST_CASE("homogenize and dehomogenize") {
    MonomialIdeal i = ideal("x, y", {"x", "y"});
    CWChainData segment = lcm_labeled_simplicial_cw(i, {{0, 1}});
    GradedFreeComplex res = homogenize(segment, 2);
    CHECK(res.frames.size() == 2);
    CHECK(res.frames[1][0].mdeg == Multidegree({1, 1}));
    CHECK_NOTHROW(validate_complex(res));
    // mutually inverse on frame-form data
    CHECK(dehomogenize(res) == cellular_chain_complex(segment, 2));

    SUBCASE("grading violations") {
        CWChainData bad = segment;
        bad.cells[0][0].mdeg = Multidegree({1, 1});  // vertex xy under edge labeled... still fine
        bad.cells[1][0].mdeg = Multidegree({1, 0});  // edge x cannot dominate vertex xy
        CHECK_THROWS_AS(homogenize(bad, 2), GradingViolation);
        CWChainData ungraded = simplicial_cw({{0, 1}});
        CHECK_THROWS_AS(homogenize(ungraded, 2), GradingViolation);
    }
}

TEST_CASE("support of vectors in a based complex") {
    BasedChainComplex bc = cellular_chain_complex(hollow_triangle(), 3);
    BasedBasis basis = standard_basis(bc);
    CHECK(support({0, 0, 0}, basis, 0, 3).empty());
    CHECK(support({0, 1, 0}, basis, 0, 3) == std::set<std::string>{"c1"});
    CHECK(support({1, 1, 0}, basis, 0, 3) == std::set<std::string>{"c0", "c1"});
}

TEST_CASE("minimal support: zero vector and simple cycles") {
    CWChainData tri = solid_triangle();
    BasedChainComplex bc = cellular_chain_complex(tri, 3);
    BasedBasis basis = standard_basis(bc);
    CHECK(!is_minimal_support({0, 0, 0}, bc, 1, basis));
    // the boundary of the single 2-cell spans the kernel line
    FpVector z = bc.differential(2).apply({1});
    CHECK(is_minimal_support(z, bc, 1, basis));
    CHECK(is_minimal_support_bruteforce(z, bc, 1, basis));
}

TEST_CASE("minimal support: sum of two disjoint 2-cell boundaries fails") {
    CWChainData two = simplicial_cw({{0, 1, 2}, {3, 4, 5}});
    BasedChainComplex bc = cellular_chain_complex(two, 2);
    BasedBasis basis = standard_basis(bc);
    FpVector z = bc.differential(2).apply({1, 1});
    CHECK(!is_minimal_support(z, bc, 1, basis));
    CHECK(!is_minimal_support_bruteforce(z, bc, 1, basis));
    FpVector single = bc.differential(2).apply({1, 0});
    CHECK(is_minimal_support(single, bc, 1, basis));
    CHECK(is_minimal_support_bruteforce(single, bc, 1, basis));
}

TEST_CASE("minimal support agrees with brute force on corpus complexes") {
    for (Scalar p : {2, 3}) {
        for (const CWChainData& data : {hollow_triangle(), solid_triangle(), solid_square(), scarf4_cw()}) {
            BasedChainComplex bc = cellular_chain_complex(data, p);
            BasedBasis basis = standard_basis(bc);
            for (int level = 1; level < bc.length(); ++level) {
                const FpMatrix& d = bc.differential(level);
                for (int c = 0; c < d.cols(); ++c) {
                    FpVector e(static_cast<std::size_t>(d.cols()), 0);
                    e[static_cast<std::size_t>(c)] = 1;
                    FpVector z = d.apply(e);
                    CHECK(is_minimal_support(z, bc, level - 1, basis) ==
                          is_minimal_support_bruteforce(z, bc, level - 1, basis));
                }
            }
        }
    }
}

TEST_CASE("standard elements of regular complexes are minimal in degrees 1 and 2") {
    for (const CWChainData& data : {hollow_triangle(), solid_triangle(), solid_square(), scarf4_cw(), bigon()}) {
        REQUIRE(check_regular_two_skeleton(data));
        for (Scalar p : {2, 3, 5}) {
            BasedChainComplex bc = cellular_chain_complex(data, p);
            BasedBasis basis = standard_basis(bc);
            for (int level = 1; level <= 2 && level < bc.length(); ++level) {
                const FpMatrix& d = bc.differential(level);
                for (int c = 0; c < d.cols(); ++c) {
                    FpVector e(static_cast<std::size_t>(d.cols()), 0);
                    e[static_cast<std::size_t>(c)] = 1;
                    CHECK(is_minimal_support(d.apply(e), bc, level - 1, basis));
                }
            }
        }
    }
}

TEST_CASE("incidence poset reacts to basis changes") {
    SUBCASE("a change of basis can delete a cover") {
        // one edge u with du = -a + b over GF(3); basis {2a+b, b} expresses du
        // with zero coefficient on the second vector
        CWChainData data;
        data.cells.push_back({{"a", {}}, {"b", {}}});
        data.cells.push_back({{"u", {}}});
        IntMatrix b1(2, 1);
        b1.at(0, 0) = -1;
        b1.at(1, 0) = 1;
        data.boundaries = {b1};
        BasedChainComplex bc = cellular_chain_complex(data, 3);
        CHECK(face_poset(data, 3).covers.size() == 2);
        BasedBasis basis = standard_basis(bc);
        basis.levels[0][0] = {"w1", std::nullopt, {2, 1}, 0};
        basis.levels[0][1] = {"w2", std::nullopt, {0, 1}, 0};
        LabeledPoset poset = incidence_poset_of_based_complex(bc, basis);
        CHECK(poset.covers == std::vector<std::pair<std::string, std::string>>{{"w1", "u"}});
    }
    SUBCASE("zero differential gives an antichain") {
        CWChainData data = loop_edge();
        BasedChainComplex bc = cellular_chain_complex(data, 2);
        LabeledPoset poset = incidence_poset_of_based_complex(bc, standard_basis(bc));
        CHECK(poset.covers.empty());
        CHECK(poset.elements.size() == 2);
    }
}

TEST_CASE("find_minimal_support_basis keeps low dimensions standard") {
    MonomialIdeal i = koszul3_ideal();
    GradedFreeComplex res = homogenize(koszul3_cw(), 2);
    MinimalBasisResult result = find_minimal_support_basis(res);
    BasedBasis expected = standard_basis(dehomogenize(res));
    CHECK(result.basis == expected);
    CHECK(result.provenance.empty());
}

TEST_CASE("find_minimal_support_basis keeps a already-minimal 3-cell standard") {
    GradedFreeComplex res = homogenize(scarf4_cw(), 2);
    MinimalBasisResult result = find_minimal_support_basis(res);
    REQUIRE(result.provenance.size() == 1);
    CHECK(result.provenance[0].degree == 3);
    CHECK(result.provenance[0].stage == 1);
    CHECK(result.provenance[0].ncandidates == 1);  // the standard vector comes first and wins
    const auto& level3 = result.basis.levels[3];
    REQUIRE(level3.size() == 1);
    CHECK(level3[0].coords == FpVector{1});
    CHECK(level3[0].stage == 1);
}

TEST_CASE("find_minimal_support_basis repairs a non-minimal 3-frame") {
    GradedFreeComplex res = crooked_level3_complex();
    BasedChainComplex bc = dehomogenize(res);
    BasedBasis std_basis = standard_basis(bc);
    // the standard g1 boundary is not minimal: f1 is a smaller-support cycle
    CHECK(!is_minimal_support(bc.differential(3).apply({1, 0}), bc, 2, std_basis));
    CHECK(!is_minimal_support_bruteforce(bc.differential(3).apply({1, 0}), bc, 2, std_basis));

    MinimalBasisResult result = find_minimal_support_basis(res);
    const auto& level3 = result.basis.levels[3];
    REQUIRE(level3.size() == 2);
    CHECK(level3[0].coords == FpVector{0, 1});  // g2 kept
    CHECK(level3[1].coords == FpVector{1, 1});  // g1 replaced by g1+g2
    for (const auto& v : level3)
        CHECK(is_minimal_support(bc.differential(3).apply(v.coords), bc, 2, result.basis));
    REQUIRE(result.provenance.size() == 1);
    CHECK(result.provenance[0].stage == 1);
}

TEST_CASE("find_minimal_support_basis reports exhaustion under a tiny bound") {
    GradedFreeComplex res = crooked_level3_complex();
    CHECK_THROWS_AS(find_minimal_support_basis(res, {false, 1}), SearchExhausted);
}

TEST_CASE("theorem 4.7 verdicts") {
    SUBCASE("Koszul of (x,y,z) with the standard basis") {
        GradedFreeComplex res = minimize(taylor_complex(koszul3_ideal(), 2));
        Theorem47Verdict v = check_theorem_4_7(res, standard_basis(dehomogenize(res)));
        CHECK(v.posetSupports);
        CHECK(v.degMorphism);
        CHECK(v.minimalSupport);
        CHECK(v.poset.elements.size() == 7);
    }
    SUBCASE("length-0 resolution is vacuously supported") {
        GradedFreeComplex res = taylor_complex(ideal("x^2*y", {"x", "y"}), 2);
        Theorem47Verdict v = check_theorem_4_7(res, standard_basis(dehomogenize(res)));
        CHECK(v.posetSupports);
        CHECK(v.poset.elements.size() == 1);
        CHECK(v.poset.covers.empty());
    }
    SUBCASE("a redundant combination breaks minimal support") {
        // (xy, xz, yz) at p=3: both first syzygies live in degree xyz, so a
        // combination with full support is homogeneous but not minimal
        MonomialIdeal i = ideal("x*y, x*z, y*z", {"x", "y", "z"});
        GradedFreeComplex res = minimize(taylor_complex(i, 3));
        REQUIRE(res.frames[1].size() == 2);
        BasedChainComplex bc = dehomogenize(res);
        BasedBasis basis = standard_basis(bc);
        CHECK(check_theorem_4_7(res, basis).posetSupports);
        Fp f(3);
        bool found = false;
        for (Scalar c : {1, 2}) {
            FpVector combo = {1, c};
            FpVector z = bc.differential(1).apply(combo);
            int nz = 0;
            for (Scalar x : z)
                if (x != 0) ++nz;
            if (nz == 3) {
                basis.levels[1][0] = {"w", res.frames[1][0].mdeg, combo, 0};
                found = true;
                break;
            }
        }
        REQUIRE(found);
        Theorem47Verdict v = check_theorem_4_7(res, basis);
        CHECK(!v.minimalSupport);
        CHECK(!v.posetSupports);
    }
    SUBCASE("non-minimal input is rejected") {
        GradedFreeComplex taylor = taylor_complex(ideal("x*y, y*z, x*z", {"x", "y", "z"}), 2);
        CHECK_THROWS_AS(check_theorem_4_7(taylor, standard_basis(dehomogenize(taylor))),
                        NotMinimalResolution);
    }
}

TEST_CASE("cw json round trip") {
    CWChainData data = scarf4_cw();
    CHECK(cw_from_json(to_json(data)) == data);
    CWChainData plain = hollow_triangle();
    CHECK(cw_from_json(to_json(plain)) == plain);
}

}
