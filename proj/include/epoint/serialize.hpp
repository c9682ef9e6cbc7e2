#pragma once

// JSON / CSV encodings of the library's value types.

#include "epoint/eplocate.hpp"
#include "epoint/epvector.hpp"
#include "epoint/matkit.hpp"
#include "epoint/monodromy.hpp"
#include "epoint/spectral.hpp"

#include <json.hpp>

#include <string>

namespace epoint {

inline constexpr const char* kSchema = "epoint/1";

nlohmann::json to_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CVector2& v);
nlohmann::json to_json(const ModelParams& p);

/// Reads the flat model object. Angles may be given in degrees with a "_deg"
/// suffix (e.g. "phi1_deg"); giving both spellings is an error. Throws
/// Error(config).
ModelParams params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const PhaseTriple& ph);
nlohmann::json to_json(const EPSolution& ep);
nlohmann::json to_json(const PolarizationDescriptor& pd);
nlohmann::json summary_json(const LoopTrace& t);

/// Columns: step, re_lambda, im_lambda, re_E1, im_E1, re_E2, im_E2.
std::string to_csv(const LoopTrace& t);

/// %.17g
std::string format_double(double x);

/// Sorted-key JSON text with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace epoint
