#pragma once

#include <string>

#include "lfe/evaluator.hpp"
#include "lfe/model.hpp"

namespace lfe {

// Instance document schema (strict; unknown fields rejected):
//   { "label": str, "m": int, "d": int, "N": int,
//     "kappa": {"re": float, "im": float},
//     "mu": [{"re": float, "im": float}, ...],
//     "coefficients": [{"re": float, "im": float}, ...] }
// or a builtin fixture reference:
//   { "label": str?, "builtin": "dirichlet-5:length=8000:twist=100" }
// Complex numbers are always {re, im} objects: locale-proof and bit-exact
// at 17 significant digits.
LFunctionInstance parse_instance(const std::string& text);

std::string serialize_instance(const LFunctionInstance& inst);

// Result document:
//   { "value": {re, im}, "method": str, "terms_used": int,
//     "error_estimate": float, "C": float, "eta": float, "lambda": {re, im} }
// Deterministic: fixed key order, shortest round-trip doubles, no
// timestamps, LF line endings.
std::string serialize_result(const CentralValueResult& result);

// Locale-independent shortest-round-trip formatting for CSV cells.
std::string format_double(double v);

}  // namespace lfe
