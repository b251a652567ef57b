#pragma once

#include "json.hpp"

#include "idlat/dagger.hpp"

namespace idlat {

/// Flat key-value serialization of a verification report; counterexample
/// vectors as integer arrays, timing isolated under the "timing" key so
/// report diffing can exclude it. Key order is fixed so identical runs
/// serialize byte-identically.
nlohmann::ordered_json dagger_report_json(const DaggerReport& report);

nlohmann::ordered_json exponent_vector_json(const ExponentVector& v);

} // namespace idlat
