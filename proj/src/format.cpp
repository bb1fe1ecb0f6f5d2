#include "sniep/format.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace sniep {

using nlohmann::json;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_matrix_text(const SymMatrix5& m) {
  std::string out;
  for (std::size_t i = 0; i < kOrder; ++i) {
    for (std::size_t j = 0; j < kOrder; ++j) {
      if (j > 0) out += ' ';
      out += format_number(m(i, j));
    }
    out += '\n';
  }
  return out;
}

json to_json(const Values& values) {
  json out = json::array();
  for (double v : values) out.push_back(v);
  return out;
}

json to_json(const SymMatrix5& m) {
  json out = json::array();
  for (const auto& row : m.entries()) out.push_back(to_json(row));
  return out;
}

json to_json(const VerificationReport& report) {
  return json{{"pass", report.pass},
              {"max_deviation", report.max_deviation},
              {"eigenvalues", to_json(report.eigenvalues)},
              {"target", to_json(report.target)}};
}

json to_json(const RealizabilityDecision& decision) {
  json out{{"verdict", std::string(to_string(decision.verdict()))}};
  if (decision.certificate()) out["certificate"] = std::string(to_string(*decision.certificate()));
  if (decision.reason()) out["reason"] = std::string(to_string(*decision.reason()));
  if (decision.parameter()) out["g"] = *decision.parameter();
  const DecisionDetails& d = decision.details();
  out["details"] = json{{"e1", d.e1}, {"r", d.r}, {"u", d.u}, {"mn_sum", d.mn_sum}};
  return out;
}

json to_json(const PerturbedDecision& decision) {
  json out = to_json(decision.decision);
  out["rule"] = std::string(to_string(decision.rule));
  out["perturbed"] = to_json(decision.perturbed.values());
  if (decision.matrix) out["matrix"] = to_json(*decision.matrix);
  return out;
}

namespace {

SymMatrix5 parse_json_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.size() != kOrder) {
    throw std::invalid_argument("matrix JSON must be an array of 5 rows");
  }
  SymMatrix5::Entries entries{};
  for (std::size_t i = 0; i < kOrder; ++i) {
    const json& row = doc[i];
    if (!row.is_array() || row.size() != kOrder) {
      throw std::invalid_argument("every matrix row must hold 5 numbers");
    }
    for (std::size_t j = 0; j < kOrder; ++j) {
      if (!row[j].is_number()) throw std::invalid_argument("matrix entries must be numbers");
      entries[i][j] = row[j].get<double>();
    }
  }
  return SymMatrix5::from_entries(entries);
}

SymMatrix5 parse_text_matrix(std::string_view text) {
  std::vector<double> numbers;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    if (std::isspace(static_cast<unsigned char>(*p)) || *p == ',') {
      ++p;
      continue;
    }
    if (*p == '+') ++p;
    double v = 0.0;
    const auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc()) throw std::invalid_argument("malformed number in matrix text");
    numbers.push_back(v);
    p = next;
  }
  if (numbers.size() != kOrder * kOrder) {
    throw std::invalid_argument("matrix text must hold exactly 25 numbers");
  }
  SymMatrix5::Entries entries{};
  for (std::size_t k = 0; k < numbers.size(); ++k) entries[k / kOrder][k % kOrder] = numbers[k];
  return SymMatrix5::from_entries(entries);
}

}  // namespace

SymMatrix5 parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return parse_json_matrix(text);
  return parse_text_matrix(text);
}

}  // namespace sniep
