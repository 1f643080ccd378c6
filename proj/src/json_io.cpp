#include "cwres/json_io.hpp"

#include <cstdint>
#include <sstream>

namespace cwres {

Json to_json(const Multidegree& m) { return Json(m.exponents()); }

Json to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators) gens.push_back(to_json(g));
    return Json{{"variables", ideal.variables}, {"generators", gens}};
}

Json to_json(const FpMatrix& m) {
    Json entries = Json::array();
    for (const auto& [rc, v] : m.entries()) entries.push_back(Json::array({rc.first, rc.second, v}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

namespace {

std::int64_t checked_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) throw Error("integer matrix entry " + v.str() + " exceeds the int64 range");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Json to_json(const IntMatrix& m) {
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) entries.push_back(Json::array({r, c, checked_int64(m.at(r, c))}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const GradedFreeComplex& c) {
    Json frames = Json::array();
    for (const auto& frame : c.frames) {
        Json f = Json::array();
        for (const auto& g : frame) f.push_back(Json{{"id", g.id}, {"mdeg", to_json(g.mdeg)}});
        frames.push_back(f);
    }
    Json diffs = Json::array();
    for (const auto& d : c.diffs) diffs.push_back(to_json(d));
    return Json{{"p", c.p}, {"variables", c.variables}, {"frames", frames}, {"differentials", diffs}};
}

Json to_json(const BettiTable& t) {
    Json entries = Json::array();
    for (const auto& [key, v] : t.beta)
        entries.push_back(Json{{"i", key.first}, {"mdeg", to_json(key.second)}, {"beta", v}});
    return Json{{"entries", entries}};
}

Json to_json(const CWChainData& data) {
    Json cells = Json::array();
    for (const auto& level : data.cells) {
        Json l = Json::array();
        for (const auto& cell : level) {
            Json c{{"id", cell.id}};
            if (cell.mdeg) c["mdeg"] = to_json(*cell.mdeg);
            l.push_back(c);
        }
        cells.push_back(l);
    }
    Json boundaries = Json::array();
    for (const auto& b : data.boundaries) boundaries.push_back(to_json(b));
    return Json{{"cells", cells}, {"boundaries", boundaries}};
}

Json to_json(const ValidationReport& rep) {
    Json issues = Json::array();
    for (const auto& i : rep.issues)
        issues.push_back(Json{{"check", i.check},
                              {"dim", i.dim},
                              {"row", i.row},
                              {"col", i.col},
                              {"message", i.message}});
    return Json{{"ok", rep.ok}, {"issues", issues}};
}

Json to_json(const LabeledPoset& poset) {
    Json elements = Json::array();
    for (const auto& e : poset.elements) {
        Json el{{"id", e.id}, {"rank", e.rank}};
        if (e.mdeg) el["mdeg"] = to_json(*e.mdeg);
        elements.push_back(el);
    }
    Json covers = Json::array();
    for (const auto& [lo, hi] : poset.covers) covers.push_back(Json::array({lo, hi}));
    return Json{{"elements", elements}, {"covers", covers}};
}

Json to_json(const SupportReport& rep) {
    Json out{{"supported", rep.supported}, {"check", "check_supports_cw"}};
    if (!rep.supported) {
        out["reason"] = rep.reason;
        out["degree"] = rep.degree;
    } else {
        Json eta = Json::array();
        for (const auto& level : rep.eta) {
            Json l = Json::array();
            for (const auto& [gen, cell] : level) l.push_back(Json::array({gen, cell}));
            eta.push_back(l);
        }
        out["eta"] = eta;
    }
    return out;
}

Json to_json(const BasedBasis& basis) {
    Json levels = Json::array();
    for (const auto& level : basis.levels) {
        Json l = Json::array();
        for (const auto& v : level) {
            Json jv{{"id", v.id}, {"vector", v.coords}, {"stage", v.stage}};
            if (v.mdeg) jv["mdeg"] = to_json(*v.mdeg);
            l.push_back(jv);
        }
        levels.push_back(l);
    }
    return Json{{"levels", levels}};
}

Json to_json(const MinimalBasisResult& result) {
    Json prov = Json::array();
    for (const auto& p : result.provenance)
        prov.push_back(Json{{"degree", p.degree},
                            {"mdeg", to_json(p.mdeg)},
                            {"candidates", p.ncandidates},
                            {"stage", p.stage}});
    Json out = to_json(result.basis);
    out["provenance"] = prov;
    return out;
}

Json to_json(const Theorem47Verdict& verdict) {
    return Json{{"posetSupports", verdict.posetSupports},
                {"degMorphism", verdict.degMorphism},
                {"minimalSupport", verdict.minimalSupport},
                {"poset", to_json(verdict.poset)},
                {"check", "check_theorem_4_7"}};
}

Json to_json(const Certificate& cert) {
    Json stages;
    stages["resolution"] = Json{{"is_complex", cert.resolution_is_complex},
                                {"is_exact", cert.resolution_is_exact},
                                {"is_minimal", cert.resolution_is_minimal},
                                {"betti", to_json(cert.betti)},
                                {"check", "is_complex/is_exact/is_minimal"}};
    stages["regularity"] = Json{{"validation", to_json(cert.x_validation)},
                                {"regular_two_skeleton", cert.x_regular},
                                {"check", "validate_cw/check_regular_two_skeleton"}};
    stages["support_x"] = to_json(cert.support_x);
    if (cert.basis_found) {
        Json prov = Json::array();
        for (const auto& p : cert.basis_provenance)
            prov.push_back(Json{{"degree", p.degree},
                                {"mdeg", to_json(p.mdeg)},
                                {"candidates", p.ncandidates},
                                {"stage", p.stage}});
        stages["minimal_basis"] = Json{{"found", true},
                                       {"provenance", prov},
                                       {"basis", to_json(cert.basis)},
                                       {"check", "find_minimal_support_basis/is_minimal_support"}};
    }
    if (cert.thm47_ran) stages["theorem_4_7"] = to_json(cert.thm47);
    if (cert.change_built) {
        Json scalings = Json::array();
        for (const auto& [deg, unit] : cert.det_scalings)
            scalings.push_back(Json{{"degree", deg}, {"unit", unit}});
        Json lifts = Json::array();
        for (const auto& l : cert.lifts)
            lifts.push_back(Json{{"degree", l.degree},
                                 {"det_one", l.det_one},
                                 {"reduces_to_mbar", l.reduces_to_mbar}});
        Json t = Json::array();
        for (const auto& m : cert.change.t) t.push_back(to_json(m));
        Json mbar = Json::array();
        for (const auto& m : cert.change.mbar) mbar.push_back(to_json(m));
        stages["basis_change"] = Json{{"det_scalings", scalings},
                                      {"lifts", lifts},
                                      {"t", t},
                                      {"mbar", mbar},
                                      {"check", "normalize_det/lift_sl/int_inverse_unimodular"}};
    }
    if (cert.y_built) {
        stages["transform"] = Json{{"y", to_json(cert.y)}, {"check", "conjugate_boundaries"}};
        stages["verify_y"] = Json{{"validation", to_json(cert.y_validation)},
                                  {"support", to_json(cert.support_y)},
                                  {"check", "validate_cw/check_supports_cw"}};
        stages["poset_equality"] = Json{{"equal", cert.poset_equal},
                                        {"face_poset_y", to_json(cert.poset_y)},
                                        {"incidence_poset", to_json(cert.poset_fa)},
                                        {"check", "face_poset == incidence_poset_of_based_complex"}};
    }
    Json out{{"p", cert.p},
             {"inputs_digest", cert.inputs_digest},
             {"status", cert.status},
             {"stage_reached", cert.stage_reached},
             {"stages", stages}};
    if (!cert.message.empty()) out["message"] = cert.message;
    return out;
}

namespace {

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw Error(std::string("missing key '") + key + "'");
    return *it;
}

}  // namespace

Multidegree multidegree_from_json(const Json& j) {
    if (!j.is_array()) throw Error("multidegree must be an array");
    std::vector<int> exps;
    for (const auto& v : j) exps.push_back(v.get<int>());
    return Multidegree(std::move(exps));
}

MonomialIdeal ideal_from_json(const Json& j) {
    std::vector<std::string> variables = require(j, "variables").get<std::vector<std::string>>();
    if (j.contains("ideal")) return parse_ideal(j.at("ideal").get<std::string>(), variables);
    std::vector<Multidegree> gens;
    for (const auto& g : require(j, "generators")) gens.push_back(multidegree_from_json(g));
    return make_ideal(std::move(variables), std::move(gens));
}

FpMatrix fpmatrix_from_json(const Json& j, Scalar p) {
    FpMatrix m(require(j, "rows").get<int>(), require(j, "cols").get<int>(), p);
    for (const auto& e : require(j, "entries")) {
        if (!e.is_array() || e.size() != 3) throw Error("matrix entry must be [row, col, value]");
        m.set(e[0].get<int>(), e[1].get<int>(), e[2].get<Scalar>());
    }
    return m;
}

IntMatrix intmatrix_from_json(const Json& j) {
    IntMatrix m(require(j, "rows").get<int>(), require(j, "cols").get<int>());
    for (const auto& e : require(j, "entries")) {
        if (!e.is_array() || e.size() != 3) throw Error("matrix entry must be [row, col, value]");
        int r = e[0].get<int>(), c = e[1].get<int>();
        if (r < 0 || r >= m.rows() || c < 0 || c >= m.cols())
            throw Error("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
        m.at(r, c) = Int(e[2].get<std::int64_t>());
    }
    return m;
}

GradedFreeComplex complex_from_json(const Json& j) {
    GradedFreeComplex c;
    c.p = require(j, "p").get<Scalar>();
    c.variables = require(j, "variables").get<std::vector<std::string>>();
    for (const auto& frame : require(j, "frames")) {
        std::vector<Generator> f;
        for (const auto& g : frame)
            f.push_back({require(g, "id").get<std::string>(), multidegree_from_json(require(g, "mdeg"))});
        c.frames.push_back(std::move(f));
    }
    for (const auto& d : require(j, "differentials")) c.diffs.push_back(fpmatrix_from_json(d, c.p));
    validate_complex(c);
    return c;
}

CWChainData cw_from_json(const Json& j) {
    CWChainData data;
    for (const auto& level : require(j, "cells")) {
        std::vector<Cell> cells;
        for (const auto& c : level) {
            Cell cell;
            cell.id = require(c, "id").get<std::string>();
            if (c.contains("mdeg")) cell.mdeg = multidegree_from_json(c.at("mdeg"));
            cells.push_back(std::move(cell));
        }
        data.cells.push_back(std::move(cells));
    }
    for (const auto& b : require(j, "boundaries")) data.boundaries.push_back(intmatrix_from_json(b));
    return data;
}

std::string betti_text(const BettiTable& t, const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "i  mdeg  beta  monomial\n";
    std::map<int, int> totals;
    for (const auto& [key, v] : t.beta) {
        out << key.first << "  (";
        const auto& e = key.second.exponents();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k) out << ",";
            out << e[k];
        }
        out << ")  " << v << "  " << render_monomial(ideal, key.second) << "\n";
        totals[key.first] += v;
    }
    out << "totals:";
    for (const auto& [i, total] : totals) out << " beta_" << i << "=" << total;
    out << "\n";
    return out.str();
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace cwres
