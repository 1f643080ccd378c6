#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cwres/cwposet.hpp"

namespace cwres {

/// Change of basis per homological degree: mbar[i] carries standard
/// coordinates to E_i coordinates over GF(p); t[i] is a unimodular integer
/// lift of mbar[i], the identity in degrees <= 2.
struct BasisChange {
    std::vector<FpMatrix> mbar;
    std::vector<IntMatrix> t;
};

/// B'_d = T_{d-1} * B_d * T_d^{-1} over the integers. Cell lists are copied
/// unchanged. Throws SizeMismatch on shape errors, NotUnimodular when some
/// T_d has determinant outside {+1,-1}, Error when T_d != identity for d <= 2.
CWChainData conjugate_boundaries(const CWChainData& x, const BasisChange& change);

/// Rescales the last basis element of each level >= 3 by the inverse of the
/// determinant of the columns-of-basis matrix, making that determinant 1.
/// Supports and the incidence poset are unchanged.
BasedBasis normalize_det(const BasedBasis& e, Scalar p);

struct RunOptions {
    bool stage2 = false;
    long bound = 200000;
};

struct LiftRecord {
    int degree;
    bool det_one;
    bool reduces_to_mbar;
};

/// Machine-checkable record of a full pipeline run: every verdict names the
/// check that produced it and failure aborts carry the furthest stage reached.
struct Certificate {
    Scalar p = 2;
    std::string inputs_digest;
    std::string status = "ok";  // ok | NotSupported | NotRegular | SearchExhausted | PosetMismatch
    std::string stage_reached;
    std::string message;

    bool resolution_is_complex = false;
    bool resolution_is_exact = false;
    bool resolution_is_minimal = false;
    BettiTable betti;

    ValidationReport x_validation;
    bool x_regular = false;
    SupportReport support_x;

    std::vector<BasisProvenance> basis_provenance;
    BasedBasis basis;
    bool basis_found = false;

    Theorem47Verdict thm47;
    bool thm47_ran = false;

    std::vector<std::pair<int, Scalar>> det_scalings;  // (degree, unit applied)
    std::vector<LiftRecord> lifts;
    BasisChange change;
    bool change_built = false;

    CWChainData y;
    bool y_built = false;
    ValidationReport y_validation;
    SupportReport support_y;

    LabeledPoset poset_fa;
    LabeledPoset poset_y;
    bool poset_equal = false;

    bool ok() const { return status == "ok"; }
};

/// End-to-end procedure: minimal resolution of the ideal, verification that
/// the CW data is regular-2-skeleton and supports it, minimal-support basis,
/// unimodular basis change, transformed complex Y, and the poset-equality
/// verdict comparing the face poset of Y with the incidence poset of the
/// based resolution. Nothing is assumed: every hypothesis is checked and the
/// first failure aborts with a typed status.
Certificate run_main_theorem(const MonomialIdeal& ideal, const CWChainData& x, Scalar p,
                             const RunOptions& opts = {});

}  // namespace cwres
