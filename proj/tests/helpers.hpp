#pragma once

#include <random>

#include "cwres/cwposet.hpp"
#include "cwres/monoid.hpp"
#include "cwres/rescomplex.hpp"

namespace cwres::testing {

inline MonomialIdeal ideal(const std::string& text, const std::vector<std::string>& vars) {
    return parse_ideal(text, vars);
}

inline FpMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, Scalar p) {
    FpMatrix m(rows, cols, p);
    std::uniform_int_distribution<Scalar> dist(0, p - 1);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, dist(rng));
    return m;
}

// random invertible matrix via rejection
inline FpMatrix random_invertible(std::mt19937_64& rng, int n, Scalar p) {
    while (true) {
        FpMatrix m = random_matrix(rng, n, n, p);
        if (det(m) != 0) return m;
    }
}

// random element of SL_n(GF(p)): rescale one row of an invertible sample
inline FpMatrix random_sl(std::mt19937_64& rng, int n, Scalar p) {
    FpMatrix m = random_invertible(rng, n, p);
    Fp f(p);
    Scalar fix = f.inv(det(m));
    for (int c = 0; c < n; ++c) m.set(0, c, f.mul(m.get(0, c), fix));
    return m;
}

inline FpMatrix transvection_matrix(const Transvection& t, int n, Scalar p) {
    FpMatrix e = FpMatrix::identity(n, p);
    e.set(t.i, t.j, t.a);
    return e;
}

inline FpMatrix multiply_back(const std::vector<Transvection>& factors, int n, Scalar p) {
    FpMatrix prod = FpMatrix::identity(n, p);
    for (const auto& t : factors) prod = prod * transvection_matrix(t, n, p);
    return prod;
}

// random unimodular integer matrix: a short product of integer transvections
inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int nops = 8) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<int> row(0, n - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int k = 0; k < nops; ++k) {
        int i = row(rng), j = row(rng);
        if (i == j) continue;
        Int a = coeff(rng);
        for (int c = 0; c < n; ++c) m.at(i, c) += a * m.at(j, c);
    }
    return m;
}

inline CWChainData hollow_triangle() { return simplicial_cw({{0, 1}, {0, 2}, {1, 2}}); }

inline CWChainData solid_triangle() { return simplicial_cw({{0, 1, 2}}); }

// 4 vertices, 4 edges oriented around the cycle, one square 2-cell
inline CWChainData solid_square() {
    CWChainData data;
    data.cells.push_back({{"v0", {}}, {"v1", {}}, {"v2", {}}, {"v3", {}}});
    data.cells.push_back({{"e01", {}}, {"e12", {}}, {"e23", {}}, {"e30", {}}});
    data.cells.push_back({{"f", {}}});
    IntMatrix b1(4, 4);
    b1.at(0, 0) = -1; b1.at(1, 0) = 1;
    b1.at(1, 1) = -1; b1.at(2, 1) = 1;
    b1.at(2, 2) = -1; b1.at(3, 2) = 1;
    b1.at(3, 3) = -1; b1.at(0, 3) = 1;
    IntMatrix b2(4, 1);
    b2.at(0, 0) = 1; b2.at(1, 0) = 1; b2.at(2, 0) = 1; b2.at(3, 0) = 1;
    data.boundaries = {b1, b2};
    return data;
}

// single vertex with a loop edge (zero boundary column)
inline CWChainData loop_edge() {
    CWChainData data;
    data.cells.push_back({{"v", {}}});
    data.cells.push_back({{"loop", {}}});
    data.boundaries.push_back(IntMatrix(1, 1));
    return data;
}

inline void label_all(CWChainData& data, const std::vector<std::vector<Multidegree>>& labels) {
    for (std::size_t d = 0; d < data.cells.size(); ++d)
        for (std::size_t j = 0; j < data.cells[d].size(); ++j)
            data.cells[d][j].mdeg = labels[d][j];
}

inline MonomialIdeal koszul3_ideal() { return ideal("x, y, z", {"x", "y", "z"}); }

// full 2-simplex labeled by lcms, supporting the Koszul resolution of (x,y,z)
inline CWChainData koszul3_cw() {
    return lcm_labeled_simplicial_cw(koszul3_ideal(), {{0, 1, 2}});
}

// strongly generic 4-generator ideal whose Scarf complex is the full 3-simplex
inline MonomialIdeal scarf4_ideal() {
    return ideal("a*b^2, b*c^2, c*d^2, d*a^2", {"a", "b", "c", "d"});
}

inline CWChainData scarf4_cw() {
    return lcm_labeled_simplicial_cw(scarf4_ideal(), {{0, 1, 2, 3}});
}

// graded complex with a non-minimal standard boundary at level 3 over GF(2):
// d3(g1) = f1+f2+f3 where f1 is itself a cycle, so {f1} beats the support
inline GradedFreeComplex crooked_level3_complex() {
    GradedFreeComplex c;
    c.p = 2;
    c.variables = {"x", "y"};
    c.frames = {
        {{"z0", Multidegree({0, 0})}},
        {{"e1", Multidegree({0, 0})}, {"e2", Multidegree({0, 0})}},
        {{"f1", Multidegree({1, 0})}, {"f2", Multidegree({0, 1})}, {"f3", Multidegree({0, 1})}},
        {{"g1", Multidegree({1, 1})}, {"g2", Multidegree({1, 1})}},
    };
    FpMatrix d1(1, 2, 2);
    FpMatrix d2(2, 3, 2);
    d2.set(0, 1, 1);  // d(f2) = e1
    d2.set(0, 2, 1);  // d(f3) = e1
    FpMatrix d3(3, 2, 2);
    d3.set(0, 0, 1); d3.set(1, 0, 1); d3.set(2, 0, 1);  // d(g1) = f1+f2+f3
    d3.set(1, 1, 1); d3.set(2, 1, 1);                   // d(g2) = f2+f3
    c.diffs = {d1, d2, d3};
    return c;
}

}  // namespace cwres::testing
