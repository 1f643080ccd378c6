#pragma once

#include <string>

#include <json.hpp>

#include "cwres/cwposet.hpp"
#include "cwres/monoid.hpp"
#include "cwres/pipeline.hpp"
#include "cwres/rescomplex.hpp"

namespace cwres {

using Json = nlohmann::json;

Json to_json(const Multidegree& m);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const FpMatrix& m);
Json to_json(const IntMatrix& m);  // throws Error when an entry exceeds the int64 range
Json to_json(const GradedFreeComplex& c);
Json to_json(const BettiTable& t);
Json to_json(const CWChainData& data);
Json to_json(const ValidationReport& rep);
Json to_json(const LabeledPoset& poset);
Json to_json(const SupportReport& rep);
Json to_json(const BasedBasis& basis);
Json to_json(const MinimalBasisResult& result);
Json to_json(const Theorem47Verdict& verdict);
Json to_json(const Certificate& cert);

Multidegree multidegree_from_json(const Json& j);
/// Accepts {"variables":[...], "generators":[[...],...]} or
/// {"variables":[...], "ideal":"x*y, z^2"}.
MonomialIdeal ideal_from_json(const Json& j);
FpMatrix fpmatrix_from_json(const Json& j, Scalar p);
IntMatrix intmatrix_from_json(const Json& j);
GradedFreeComplex complex_from_json(const Json& j);
CWChainData cw_from_json(const Json& j);

std::string betti_text(const BettiTable& t, const MonomialIdeal& ideal);

/// FNV-1a 64-bit hex digest; used to fingerprint certificate inputs.
std::string digest(const std::string& bytes);

}  // namespace cwres
