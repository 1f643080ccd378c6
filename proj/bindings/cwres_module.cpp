#include <pybind11/pybind11.h>

#include "cwres/json_io.hpp"

namespace py = pybind11;
using namespace cwres;

namespace {

// the bindings speak JSON strings; the python package wraps them in dicts

std::string resolve_json(const std::string& ideal, Scalar p) {
    MonomialIdeal i = ideal_from_json(Json::parse(ideal));
    GradedFreeComplex res = minimize(taylor_complex(i, p));
    Json out{{"p", p}, {"betti", to_json(betti_table(res))}, {"resolution", to_json(res)}};
    return out.dump();
}

std::string betti_oracle_json(const std::string& ideal, Scalar p) {
    return to_json(betti_oracle(ideal_from_json(Json::parse(ideal)), p)).dump();
}

std::string taylor_json(const std::string& ideal, Scalar p) {
    return to_json(taylor_complex(ideal_from_json(Json::parse(ideal)), p)).dump();
}

std::string minimize_json(const std::string& complex_doc) {
    return to_json(minimize(complex_from_json(Json::parse(complex_doc)))).dump();
}

std::string validate_cw_json(const std::string& cw) {
    return to_json(validate_cw(cw_from_json(Json::parse(cw)))).dump();
}

bool regular_two_skeleton(const std::string& cw) {
    return check_regular_two_skeleton(cw_from_json(Json::parse(cw)));
}

std::string face_poset_json(const std::string& cw, Scalar p) {
    Json out = to_json(face_poset(cw_from_json(Json::parse(cw)), p));
    out["p"] = p;
    return out.dump();
}

std::string check_support_json(const std::string& cw, const std::string& ideal, Scalar p) {
    MonomialIdeal i = ideal_from_json(Json::parse(ideal));
    GradedFreeComplex res = minimize(taylor_complex(i, p));
    Json out = to_json(check_supports_cw(cw_from_json(Json::parse(cw)), res));
    out["p"] = p;
    return out.dump();
}

std::string find_basis_json(const std::string& cw, Scalar p, bool stage2, long bound) {
    GradedFreeComplex res = homogenize(cw_from_json(Json::parse(cw)), p);
    Json out = to_json(find_minimal_support_basis(res, {stage2, bound}));
    out["p"] = p;
    return out.dump();
}

std::string transform_json(const std::string& ideal, const std::string& cw, Scalar p, bool stage2,
                           long bound) {
    Certificate cert = run_main_theorem(ideal_from_json(Json::parse(ideal)),
                                        cw_from_json(Json::parse(cw)), p, {stage2, bound});
    return to_json(cert).dump();
}

std::string parse_ideal_json(const std::string& text, const std::vector<std::string>& variables) {
    return to_json(parse_ideal(text, variables)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "chain-level toolkit for CW-supported resolutions of monomial ideals";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnknownVariable>(m, "UnknownVariable", PyExc_ValueError);
    py::register_exception<GradingViolation>(m, "GradingViolation", PyExc_ValueError);
    py::register_exception<SearchExhausted>(m, "SearchExhaustedError", PyExc_RuntimeError);
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    m.def("parse_ideal", &parse_ideal_json, py::arg("text"), py::arg("variables"),
          "parse the textual ideal grammar; returns ideal JSON");
    m.def("resolve", &resolve_json, py::arg("ideal"), py::arg("p"),
          "minimal free resolution in frame form plus its Betti table");
    m.def("betti_oracle", &betti_oracle_json, py::arg("ideal"), py::arg("p"),
          "independent Betti numbers via simplicial homology");
    m.def("taylor", &taylor_json, py::arg("ideal"), py::arg("p"));
    m.def("minimize", &minimize_json, py::arg("complex"));
    m.def("validate_cw", &validate_cw_json, py::arg("cw"));
    m.def("regular_two_skeleton", &regular_two_skeleton, py::arg("cw"));
    m.def("face_poset", &face_poset_json, py::arg("cw"), py::arg("p"));
    m.def("check_support", &check_support_json, py::arg("cw"), py::arg("ideal"), py::arg("p"));
    m.def("find_basis", &find_basis_json, py::arg("cw"), py::arg("p"), py::arg("stage2") = false,
          py::arg("bound") = 200000L);
    m.def("transform", &transform_json, py::arg("ideal"), py::arg("cw"), py::arg("p"),
          py::arg("stage2") = false, py::arg("bound") = 200000L,
          "full pipeline; returns the certificate JSON");
}
