#pragma once

#include <json.hpp>

#include "chanent/choi.hpp"
#include "chanent/decomposition.hpp"

namespace chanent {

using nlohmann::json;

// Complex scalars serialize as two-element arrays [re, im].
// Channel specification schema:
//   {"kind": "superop"|"kraus"|"stochastic"|"state", "dim": n, "data": ...}
// where data is an n^2 x n^2 complex matrix, a list of n x n complex
// matrices, a plain real n x n matrix, or an n x n complex matrix
// respectively. A wrapper object carrying a "channel" member (as written by
// the choi command) is accepted anywhere a channel is expected.

/// Round to 12 significant digits for stable, readable output.
double round_sig(double x, int digits = 12);

json complex_to_json(const Complex& z);
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json stochastic_to_json(const StochasticMatrix& s);
StochasticMatrix stochastic_from_json(const json& j);

json channel_to_json(const Channel& t);
Channel channel_from_json(const json& j);

/// Parses a channel spec from text; throws ValidationError with a diagnostic
/// for malformed JSON or schema violations.
Channel channel_from_text(const std::string& text);

json rho_to_json(const RepresentativeOperator& rho);
json properties_to_json(const PropertyReport& rep);
json entropy_report_to_json(const EntropyReport& rep, bool bits);

} // namespace chanent
