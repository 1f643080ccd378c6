#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cwres/exactlin.hpp"
#include "cwres/monoid.hpp"
#include "cwres/rescomplex.hpp"

namespace cwres {

struct Cell {
    std::string id;
    std::optional<Multidegree> mdeg;
    bool operator==(const Cell&) const = default;
};

/// Combinatorial stand-in for a CW-complex: cells per dimension and integer
/// incidence coefficients with boundary-of-boundary zero.
struct CWChainData {
    std::vector<std::vector<Cell>> cells;      // cells[d] = d-cells
    std::vector<IntMatrix> boundaries;         // boundaries[d-1] = B_d : d-cells -> (d-1)-cells

    int dim() const { return static_cast<int>(cells.size()) - 1; }
    const IntMatrix& boundary(int d) const { return boundaries.at(static_cast<std::size_t>(d) - 1); }
    bool graded() const;
    bool operator==(const CWChainData&) const = default;
};

struct ValidationIssue {
    std::string check;  // "shape", "boundary-composition", "edge-column", "grading"
    int dim = -1;
    int row = -1;
    int col = -1;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

/// Reports every invariant pass/fail with locations; never throws.
ValidationReport validate_cw(const CWChainData& data);

/// Combinatorial regularity proxy for the 2-skeleton: every 1-cell has two
/// distinct endpoints with coefficients +1 and -1; every 2-cell boundary
/// column has entries in {-1,0,+1} whose support is a single simple closed
/// edge-cycle in which each cycle vertex meets exactly two support edges.
bool check_regular_two_skeleton(const CWChainData& data);

/// Chain complex with a remembered standard basis (cell ids, optional grading).
struct BasedChainComplex {
    Scalar p = 2;
    std::vector<std::vector<Cell>> cells;
    std::vector<FpMatrix> d;  // d[k-1] : k-cells -> (k-1)-cells, mod p

    int length() const { return static_cast<int>(cells.size()); }
    const FpMatrix& differential(int k) const { return d.at(static_cast<std::size_t>(k) - 1); }
    bool operator==(const BasedChainComplex&) const = default;
};

BasedChainComplex cellular_chain_complex(const CWChainData& data, Scalar p);

struct PosetElement {
    std::string id;
    int rank = 0;
    std::optional<Multidegree> mdeg;
    bool operator==(const PosetElement&) const = default;
};

/// Elements with ranks/labels plus cover relations between consecutive ranks.
struct LabeledPoset {
    std::vector<PosetElement> elements;                      // sorted by (rank, id)
    std::vector<std::pair<std::string, std::string>> covers; // (lower, upper), sorted
    bool operator==(const LabeledPoset&) const = default;
};

/// Face poset over GF(p): covers are the incidences that are nonzero mod p.
LabeledPoset face_poset(const CWChainData& data, Scalar p);

/// Result of matching a resolution onto CW data: the bijections per degree,
/// or the first reason none exists.
struct SupportReport {
    bool supported = false;
    std::string reason;  // "ungraded", "cardinality", "degree-multiset", "incidence"
    int degree = -1;     // degree at which matching failed
    // eta[i]: (generator id -> cell id), in frame order
    std::vector<std::vector<std::pair<std::string, std::string>>> eta;
};

/// Searches for degree-respecting bijections eta_i between the basis of
/// frame i and the i-cells under which the scalar incidence matrices agree
/// mod p. Deterministic: returns the lexicographically first solution.
SupportReport check_supports_cw(const CWChainData& data, const GradedFreeComplex& res);

/// Graded CW data as a free complex in frame form. Throws GradingViolation
/// when a cell lacks a multidegree or a nonzero (mod p) incidence fails
/// componentwise domination.
GradedFreeComplex homogenize(const CWChainData& data, Scalar p);

/// Frame-form data with degrees ignored; inverse of homogenize on the nose.
BasedChainComplex dehomogenize(const GradedFreeComplex& res);

struct BasisVector {
    std::string id;
    std::optional<Multidegree> mdeg;
    FpVector coords;  // in the standard frame of its degree
    int stage = 0;    // 0 standard, 1 same-degree search, 2 extended search
    bool operator==(const BasisVector&) const = default;
};

/// Per homological degree, an ordered basis given in standard coordinates.
struct BasedBasis {
    std::vector<std::vector<BasisVector>> levels;
    bool operator==(const BasedBasis&) const = default;
};

BasedBasis standard_basis(const BasedChainComplex& bc);

/// Matrix whose columns are the level-i basis vectors.
FpMatrix basis_matrix(const BasedBasis& basis, int level, Scalar p);

/// Ids of basis elements carrying z with nonzero coefficient, after change
/// of basis. Throws SingularMatrix if the level is not a basis.
std::set<std::string> support(const FpVector& z, const BasedBasis& basis, int level, Scalar p);

/// True iff z != 0, z lies in the image of the next differential, and no
/// nonzero kernel element of the outgoing differential has support strictly
/// inside supp(z). At level 0 the kernel is taken to be the image of the
/// incoming differential (the bottom map is the projection onto its cokernel).
bool is_minimal_support(const FpVector& z, const BasedChainComplex& bc, int level,
                        const BasedBasis& basis);

/// Exhaustive reference check for is_minimal_support; feasible when the
/// level dimension is small. Enumerates every kernel vector.
bool is_minimal_support_bruteforce(const FpVector& z, const BasedChainComplex& bc, int level,
                                   const BasedBasis& basis);

/// Poset on the basis elements: covers given by nonzero coefficients of
/// boundaries expressed in the basis.
LabeledPoset incidence_poset_of_based_complex(const BasedChainComplex& bc, const BasedBasis& basis);

struct SearchOptions {
    bool stage2 = false;
    long bound = 200000;  // candidates examined per (degree, multidegree)
};

struct BasisProvenance {
    int degree;
    Multidegree mdeg;
    int ncandidates;  // candidates examined
    int stage;        // stage that succeeded
};

struct MinimalBasisResult {
    BasedBasis basis;
    std::vector<BasisProvenance> provenance;
};

/// Basis with minimal boundary support: standard in degrees <= 2, searched
/// per multidegree in degrees >= 3. Candidates are enumerated by support
/// size then lexicographic coefficients, scalar multiples deduplicated, so
/// standard vectors are preferred. Throws SearchExhausted when no system is
/// found within the bound.
MinimalBasisResult find_minimal_support_basis(const GradedFreeComplex& res,
                                              const SearchOptions& opts = {});

struct Theorem47Verdict {
    bool posetSupports = false;
    LabeledPoset poset;
    bool degMorphism = false;
    bool minimalSupport = false;
};

/// Certifies the minimal-support hypothesis on (res, basis) and reports the
/// incidence poset together with the degree-monotonicity of its covers.
/// Throws NotMinimalResolution unless res is an exact minimal resolution of
/// the ideal generated by its frame-0 degrees.
Theorem47Verdict check_theorem_4_7(const GradedFreeComplex& res, const BasedBasis& basis);

/// Chain data of the simplicial complex generated by the given facets
/// (vertex index lists). Cells are ordered lexicographically per dimension.
CWChainData simplicial_cw(const std::vector<std::vector<int>>& facets);

/// Same, with every face labeled by the lcm of the generators at its vertices.
CWChainData lcm_labeled_simplicial_cw(const MonomialIdeal& ideal,
                                      const std::vector<std::vector<int>>& facets);

}  // namespace cwres
