#include "coxlab/report.hpp"

#include <sstream>

#include "coxlab/words.hpp"

namespace coxlab {

using nlohmann::json;

void to_json(json& j, const GroupSpec& spec) {
  j = json{{"family", std::string(family_code(spec.family()))}, {"n", spec.rank()}};
}

void to_json(json& j, const PatternWitness& w) {
  j = json{{"i", w.i}, {"j", w.j}, {"k", w.k}, {"wi", w.wi}, {"wj", w.wj}, {"wk", w.wk}};
}

void to_json(json& j, const QPolynomial& p) { j = p.coefficients(); }

void to_json(json& j, const ElementVerdict& v) {
  j = json{{"window", format_window(v.window)},
           {"length", v.length},
           {"disarray", v.disarray},
           {"tight", v.tight},
           {"separated", v.separated},
           {"avoids_321", v.avoids_321}};
  if (v.no_braid_factor) j["no_braid_factor"] = *v.no_braid_factor;
}

void to_json(json& j, const TheoremReport& r) {
  json layers = json::array();
  for (const auto& l : r.layers) {
    layers.push_back({{"length", l.length},
                      {"count", l.count},
                      {"tight", l.tight},
                      {"avoiding", l.avoiding},
                      {"separated", l.separated},
                      {"no_braid_factor", l.no_braid_factor}});
  }
  j = json{{"spec", r.spec},
           {"L", r.max_length},
           {"saturated", r.saturated},
           {"nondegenerate", r.spec.is_nondegenerate()},
           {"elements", r.elements()},
           {"layers", layers},
           {"disagreements", r.disagreements},
           {"uniformly_true", r.uniformly_true},
           {"passed", r.passed()}};
}

void to_json(json& j, const IsomorphismReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"source", format_window(m.source)},
                          {"image", format_window(m.image)},
                          {"what", m.what}});
  }
  j = json{{"L", r.max_length},
           {"checked", r.checked},
           {"mismatches", mismatches},
           {"passed", r.passed()}};
}

void to_json(json& j, const RecurrenceReport& r) {
  j = json{{"spec", GroupSpec(r.family, r.rank)},
           {"census", r.from_census},
           {"recurrence", r.from_recurrence},
           {"passed", r.passed()}};
  if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
}

void to_json(json& j, const PositiveRoot& r) {
  j = json{{"coeffs", r.root.coefficients},
           {"height", height(r.root)},
           {"reflection_window", format_window(r.reflection)},
           {"witness_word", format_word(r.witness)}};
}

void to_json(json& j, const DisHeightReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json entry = row.root;
    entry["half_disarray"] = row.half_disarray;
    entry["matches"] = row.matches();
    rows.push_back(std::move(entry));
  }
  j = json{{"spec", r.spec},
           {"variant", std::string(variant_code(r.variant))},
           {"H", r.max_height},
           {"roots", rows},
           {"mismatches", r.mismatches()},
           {"passed", r.passed()}};
}

void to_json(json& j, const Prop43Report& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"window", format_window(v.window)}, {"what", v.what}});
  }
  json candidates = json::array();
  for (const auto& c : r.converse_candidates) candidates.push_back(format_window(c));
  j = json{{"spec", r.spec},
           {"variant", std::string(variant_code(r.variant))},
           {"L", r.max_length},
           {"elements", r.elements},
           {"cost_tight", r.cost_tight},
           {"violations", violations},
           {"converse_candidates", candidates},
           {"passed", r.passed()}};
}

json census_json(const LengthCensus& census, const AvoiderPolynomial& avoiders) {
  json layers = json::array();
  for (std::size_t len = 0; len < census.layers.size(); ++len) {
    layers.push_back({{"length", len},
                      {"count", census.layers[len].size()},
                      {"avoiding", avoiders.polynomial.coefficient(static_cast<int>(len))}});
  }
  return json{{"spec", census.spec},
              {"L", census.max_length},
              {"saturated", census.saturated},
              {"truncated", avoiders.truncated},
              {"elements", census.total()},
              {"layers", layers},
              {"avoider_polynomial", avoiders.polynomial},
              {"avoider_total", avoiders.polynomial.evaluate(1)}};
}

std::string theorem_csv(const TheoremReport& r) {
  std::ostringstream out;
  out << "length,count,tight,avoiding,separated,no_braid_factor\n";
  for (const auto& l : r.layers) {
    out << l.length << ',' << l.count << ',' << l.tight << ',' << l.avoiding << ','
        << l.separated << ',' << l.no_braid_factor << '\n';
  }
  return out.str();
}

std::string census_csv(const LengthCensus& census, const AvoiderPolynomial& avoiders) {
  std::ostringstream out;
  out << "length,count,avoiding\n";
  for (std::size_t len = 0; len < census.layers.size(); ++len) {
    out << len << ',' << census.layers[len].size() << ','
        << avoiders.polynomial.coefficient(static_cast<int>(len)) << '\n';
  }
  return out.str();
}

std::string root_table_csv(const DisHeightReport& r) {
  std::ostringstream out;
  out << "coeffs,height,reflection_window,witness_word,half_disarray,matches\n";
  for (const auto& row : r.rows) {
    std::string coeffs;
    for (std::size_t i = 0; i < row.root.root.coefficients.size(); ++i) {
      if (i) coeffs += ' ';
      coeffs += std::to_string(row.root.root.coefficients[i]);
    }
    out << coeffs << ',' << height(row.root.root) << ",\"" << format_window(row.root.reflection)
        << "\"," << format_word(row.root.witness) << ',' << row.half_disarray << ','
        << (row.matches() ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace coxlab
