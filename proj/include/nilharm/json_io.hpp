#pragma once

#include <string>

#include <json.hpp>

#include "nilharm/group.hpp"
#include "nilharm/lie_algebra.hpp"
#include "nilharm/spectrum.hpp"

namespace nilharm {

using Json = nlohmann::json;

// Algebra schema: { "dim": n, "basis": [names], "brackets": [ {"i": i, "j": j,
// "coeffs": {"k": "p/q", ...}} ] }, 1-based indices with i > j.
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra load_algebra_file(const std::string& path);

Json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j, int n);

Json rat_vec_to_json(const RatVec& v);
Json int_vec_to_json(const ZVec& v);
Json matrix_to_json(const RatMatrix& m);

Json spectrum_to_json(const std::vector<SpectrumEntry>& entries);

}  // namespace nilharm
