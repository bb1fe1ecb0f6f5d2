#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sniep/classify.hpp"
#include "sniep/guo.hpp"
#include "sniep/matrix.hpp"
#include "sniep/spectrum.hpp"
#include "sniep/verify.hpp"

namespace sniep {

/// %.17g, enough digits to round-trip any double.
std::string format_number(double v);

/// Five lines of five space-separated numbers.
std::string format_matrix_text(const SymMatrix5& m);

nlohmann::json to_json(const Values& values);
nlohmann::json to_json(const SymMatrix5& m);
/// {pass, max_deviation, eigenvalues, target}
nlohmann::json to_json(const VerificationReport& report);
/// {verdict, certificate?, reason?, g?, details: {e1, r, u, mn_sum}}
nlohmann::json to_json(const RealizabilityDecision& decision);
/// The decision fields plus {rule, perturbed, matrix?}.
nlohmann::json to_json(const PerturbedDecision& decision);

/// Reads a matrix either as a JSON array of five five-element arrays or as
/// 25 numbers separated by whitespace or commas (row-major). Throws
/// std::invalid_argument on malformed or asymmetric input.
SymMatrix5 parse_matrix(std::string_view text);

}  // namespace sniep
