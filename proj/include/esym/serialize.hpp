#pragma once

// JSON encodings of representations and reports.

#include <json.hpp>

#include "esym/border.hpp"
#include "esym/certificate.hpp"
#include "esym/formula.hpp"
#include "esym/symfunc.hpp"
#include "esym/symmodel.hpp"
#include "esym/v2space.hpp"

namespace esym {

using Json = nlohmann::ordered_json;

/// {field, base_field, degree, nvars, forms: [[coeff, ...], ...], target}
Json to_json(const SymRepresentation& rep);
/// Inverse of to_json; base_field and target are optional.
SymRepresentation sym_from_json(const Json& j);

Json to_json(const IdentityReport& r);
Json to_json(const NewtonDecomposition& d);
Json to_json(const CertificateReport& r);
Json to_json(const V2PointSet& s);
Json to_json(const WitnessFamily& w);
Json to_json(const DimensionEstimate& e);
Json to_json(const PeelDecomposition& d, const Formula& original);
Json to_json(const LowerBoundReport& r);
Json to_json(const BorderWitness& w);
Json to_json(const EpsSymTerm& t);

Json point_json(const Point& p);

}  // namespace esym
