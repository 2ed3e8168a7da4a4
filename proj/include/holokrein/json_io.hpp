#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "holokrein/krein_rep.hpp"
#include "holokrein/multimode.hpp"
#include "holokrein/orbits.hpp"
#include "holokrein/pcf.hpp"
#include "holokrein/truncfn.hpp"

namespace holokrein {

using Json = nlohmann::json;

/// Serializes with sorted keys and every floating value as "%.17g", so equal inputs give
/// byte-identical text. Non-finite doubles become null.
std::string dump_json(const Json& j, int indent = 2);

/// Complex numbers are [re, im]; a plain number is accepted on input.
Json complex_to_json(cplx c);
cplx complex_from_json(const Json& j);
/// A real number when the imaginary part vanishes, [re, im] otherwise.
Json compact_complex(cplx c);

Json to_json(const TruncFn& f);
TruncFn truncfn_from_json(const Json& j);

Json to_json(const BasisRep& rep);
BasisRep basisrep_from_json(const Json& j);

/// {"modes": M, "degree_cap": D, "coefficients": {"n1,...,nM": [re, im], ...}}
Json to_json(const MultiIndexState& f);
MultiIndexState state_from_json(const Json& j);
std::string multi_index_key(const MultiIndex& n);
MultiIndex parse_multi_index_key(const std::string& key);

Json to_json(const RepVerification& v);
Json to_json(const CanonicalForm& c);
Json to_json(const NullDiagnosis& d);
Json to_json(const OrbitClassification& c);
Json to_json(const PcfValue& v);
Json to_json(const CMat2& m);

}  // namespace holokrein
