#pragma once

#include <map>
#include <string>
#include <vector>

#include "cwres/exactlin.hpp"
#include "cwres/monoid.hpp"

namespace cwres {

struct Generator {
    std::string id;
    Multidegree mdeg;
    bool operator==(const Generator&) const = default;
};

/// Chain complex of multigraded free modules in frame form: generator lists
/// with multidegrees plus scalar matrices over GF(p). The monomial part of
/// each differential entry is implied by the degree difference, so a nonzero
/// entry requires mdeg(row) <= mdeg(col) componentwise.
struct GradedFreeComplex {
    Scalar p = 2;
    std::vector<std::string> variables;
    std::vector<std::vector<Generator>> frames;
    std::vector<FpMatrix> diffs;  // diffs[i-1] = D_i : frame i -> frame i-1

    int length() const { return static_cast<int>(frames.size()); }
    const FpMatrix& differential(int i) const { return diffs.at(static_cast<std::size_t>(i) - 1); }
    bool operator==(const GradedFreeComplex&) const = default;
};

/// Structural checks: frame/matrix shapes, unique ids, degree compatibility.
void validate_complex(const GradedFreeComplex& c);

/// Taylor complex of the ideal: frame i is the (i+1)-subsets of generators
/// labeled by their lcm, with alternating-sign incidence scalars.
GradedFreeComplex taylor_complex(const MonomialIdeal& ideal, Scalar p);

/// Degree-alpha strand: per homological degree, the generators with
/// mdeg <= alpha, and the corresponding scalar submatrices.
struct Strand {
    std::vector<std::vector<int>> members;  // frame indices per degree
    std::vector<FpMatrix> mats;             // mats[i-1]: strand i -> strand i-1
};
Strand restrict_at_degree(const GradedFreeComplex& c, const Multidegree& alpha);

/// D(i-1) * D(i) = 0 in every strand at the lcm-closure of frame degrees.
bool is_complex(const GradedFreeComplex& c);

/// Strand exactness at one degree: homology vanishes in positions >= 1 and
/// has dimension [x^alpha in I] at position 0.
bool exact_at_degree(const GradedFreeComplex& c, const MonomialIdeal& ideal, const Multidegree& alpha);

/// Exactness at every lcm-lattice degree of the ideal.
bool is_exact(const GradedFreeComplex& c, const MonomialIdeal& ideal);

/// No unit entries: no nonzero scalar between generators of equal mdeg.
bool is_minimal(const GradedFreeComplex& c);

/// Iterated cancellation of unit entries (Gaussian splitting of trivial
/// two-term summands) until minimal. Deterministic: always cancels the unit
/// entry with lexicographically smallest (degree, row id, col id).
/// Throws NotExact unless the input is a resolution of the ideal generated
/// by its frame-0 multidegrees.
GradedFreeComplex minimize(const GradedFreeComplex& c);

struct BettiKeyLess {
    bool operator()(const std::pair<int, Multidegree>& a, const std::pair<int, Multidegree>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return graded_lex_less(a.second, b.second);
    }
};

struct BettiTable {
    std::map<std::pair<int, Multidegree>, int, BettiKeyLess> beta;
    bool operator==(const BettiTable&) const = default;
};

/// Betti numbers read off the frames of a (minimal) complex.
BettiTable betti_table(const GradedFreeComplex& c);

/// Independent oracle: beta_{i,alpha} as the GF(p)-dimension of reduced
/// simplicial homology in degree i-1 of the complex of generator subsets
/// whose lcm strictly divides x^alpha. Used for testing; does not share
/// code with taylor_complex or minimize.
BettiTable betti_oracle(const MonomialIdeal& ideal, Scalar p);

}  // namespace cwres
