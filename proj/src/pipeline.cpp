#include "cwres/pipeline.hpp"

#include "cwres/json_io.hpp"

namespace cwres {

CWChainData conjugate_boundaries(const CWChainData& x, const BasisChange& change) {
    const int levels = static_cast<int>(x.cells.size());
    if (static_cast<int>(change.t.size()) != levels)
        throw SizeMismatch("basis change has " + std::to_string(change.t.size()) +
                           " degrees, complex has " + std::to_string(levels));
    for (int i = 0; i < levels; ++i) {
        const IntMatrix& t = change.t[static_cast<std::size_t>(i)];
        const int n = static_cast<int>(x.cells[static_cast<std::size_t>(i)].size());
        if (t.rows() != n || t.cols() != n)
            throw SizeMismatch("T_" + std::to_string(i) + " is " + std::to_string(t.rows()) + "x" +
                               std::to_string(t.cols()) + ", expected " + std::to_string(n));
        if (i <= 2 && !(t == IntMatrix::identity(n)))
            throw Error("T_" + std::to_string(i) + " must be the identity in degrees <= 2");
        Int d = det(t);
        if (d != 1 && d != -1)
            throw NotUnimodular("T_" + std::to_string(i) + " has determinant " + d.str());
    }
    CWChainData y;
    y.cells = x.cells;
    for (int d = 1; d < levels; ++d)
        y.boundaries.push_back(change.t[static_cast<std::size_t>(d) - 1] * x.boundary(d) *
                               int_inverse_unimodular(change.t[static_cast<std::size_t>(d)]));
    return y;
}

BasedBasis normalize_det(const BasedBasis& e, Scalar p) {
    Fp f(p);
    BasedBasis out = e;
    for (std::size_t i = 3; i < out.levels.size(); ++i) {
        auto& level = out.levels[i];
        if (level.empty()) continue;
        Scalar d = det(basis_matrix(out, static_cast<int>(i), p));
        if (d == 0) throw SingularMatrix("level " + std::to_string(i) + " is not a basis");
        if (d == 1) continue;
        Scalar unit = f.inv(d);
        for (Scalar& v : level.back().coords) v = f.mul(v, unit);
    }
    return out;
}

namespace {

std::string input_digest(const MonomialIdeal& ideal, const CWChainData& x, Scalar p) {
    Json j{{"p", p}, {"ideal", to_json(ideal)}, {"cw", to_json(x)}};
    return digest(j.dump());
}

}  // namespace

Certificate run_main_theorem(const MonomialIdeal& ideal, const CWChainData& x, Scalar p,
                             const RunOptions& opts) {
    Certificate cert;
    cert.p = p;
    cert.inputs_digest = input_digest(ideal, x, p);

    cert.stage_reached = "resolution";
    GradedFreeComplex f = minimize(taylor_complex(ideal, p));
    cert.resolution_is_complex = is_complex(f);
    cert.resolution_is_exact = is_exact(f, ideal);
    cert.resolution_is_minimal = is_minimal(f);
    cert.betti = betti_table(f);
    if (!cert.resolution_is_complex || !cert.resolution_is_exact || !cert.resolution_is_minimal)
        throw Error("internal: minimize(taylor) is not a minimal resolution");

    // intrinsic well-formedness of X comes before the relational checks
    cert.stage_reached = "regularity";
    cert.x_validation = validate_cw(x);
    cert.x_regular = cert.x_validation.ok && check_regular_two_skeleton(x);
    if (!cert.x_regular) {
        cert.status = "NotRegular";
        cert.message = cert.x_validation.ok ? "the 2-skeleton fails the regularity proxy"
                                            : "the chain data fails validation";
        return cert;
    }

    cert.stage_reached = "support-x";
    cert.support_x = check_supports_cw(x, f);
    if (!cert.support_x.supported) {
        cert.status = "NotSupported";
        cert.message = "X does not support the minimal free resolution (" + cert.support_x.reason +
                       " at degree " + std::to_string(cert.support_x.degree) + ")";
        return cert;
    }

    // the resolution in the coordinates of X's cells
    GradedFreeComplex fx = homogenize(x, p);

    cert.stage_reached = "minimal-basis";
    MinimalBasisResult search;
    try {
        search = find_minimal_support_basis(fx, {opts.stage2, opts.bound});
    } catch (const SearchExhausted& e) {
        cert.status = "SearchExhausted";
        cert.message = e.what();
        return cert;
    }
    cert.basis_provenance = search.provenance;
    cert.basis = search.basis;
    cert.basis_found = true;

    cert.stage_reached = "theorem-4.7";
    cert.thm47 = check_theorem_4_7(fx, search.basis);
    cert.thm47_ran = true;
    if (!cert.thm47.posetSupports)
        throw Error("internal: minimal-support search produced a basis failing the theorem hypothesis");

    cert.stage_reached = "basis-change";
    BasedBasis e = search.basis;  // dehomogenized view: same coordinates, degrees along for the ride
    for (std::size_t i = 3; i < e.levels.size(); ++i) {
        if (e.levels[i].empty()) continue;
        Scalar d = det(basis_matrix(e, static_cast<int>(i), p));
        if (d != 1) cert.det_scalings.push_back({static_cast<int>(i), Fp(p).inv(d)});
    }
    e = normalize_det(e, p);

    for (int i = 0; i < static_cast<int>(e.levels.size()); ++i) {
        const int n = static_cast<int>(e.levels[static_cast<std::size_t>(i)].size());
        FpMatrix m = basis_matrix(e, i, p);
        FpMatrix mbar = inverse(m);
        IntMatrix t;
        if (i <= 2) {
            if (!(m == FpMatrix::identity(n, p)))
                throw Error("internal: basis must be standard in degrees <= 2");
            t = IntMatrix::identity(n);
        } else {
            t = lift_sl(mbar);
        }
        cert.lifts.push_back({i, det(t) == 1, t.mod(p) == mbar});
        if (!cert.lifts.back().det_one || !cert.lifts.back().reduces_to_mbar)
            throw Error("internal: unimodular lift failed its reduction checks at degree " +
                        std::to_string(i));
        cert.change.mbar.push_back(std::move(mbar));
        cert.change.t.push_back(std::move(t));
    }
    cert.change_built = true;

    cert.stage_reached = "transform";
    cert.y = conjugate_boundaries(x, cert.change);
    // Y's cells are in bijection with E; positions pair same multidegrees
    for (std::size_t i = 0; i < cert.y.cells.size(); ++i)
        for (std::size_t j = 0; j < cert.y.cells[i].size(); ++j) {
            const auto& tag = e.levels[i][j].mdeg;
            if (!tag || !(*tag == *cert.y.cells[i][j].mdeg))
                throw Error("internal: basis degrees disagree with cell degrees");
        }
    cert.y_built = true;

    cert.stage_reached = "verify-y";
    cert.y_validation = validate_cw(cert.y);
    cert.support_y = check_supports_cw(cert.y, f);
    if (!cert.y_validation.ok || !cert.support_y.supported) {
        cert.status = "NotSupported";
        cert.message = "transformed complex failed re-verification";
        return cert;
    }

    cert.stage_reached = "poset-equality";
    cert.poset_fa = cert.thm47.poset;
    cert.poset_y = face_poset(cert.y, p);
    cert.poset_equal = cert.poset_fa == cert.poset_y;
    if (!cert.poset_equal) {
        cert.status = "PosetMismatch";
        cert.message = "face poset of Y differs from the incidence poset of (F, A)";
        return cert;
    }

    cert.stage_reached = "complete";
    return cert;
}

}  // namespace cwres
