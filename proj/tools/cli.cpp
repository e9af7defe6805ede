#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coxlab/coxlab.hpp"

namespace coxlab::cli {

namespace {

using nlohmann::json;

std::size_t resolve_budget(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("COXLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ParseError("COXLAB_BUDGET must be a positive integer, got '" + std::string(env) + "'");
  }
  return kDefaultBudget;
}

json config_json(const RunConfig& c) {
  json j{{"command", c.command}, {"family", c.family}, {"n", c.n},
         {"format", c.format},   {"budget", c.budget}, {"variant", c.variant}};
  if (c.max_length) j["L"] = *c.max_length;
  if (c.command == "roots") j["H"] = c.max_height;
  if (!c.out.empty()) j["out"] = c.out;
  if (!c.window.empty()) j["window"] = c.window;
  if (!c.word.empty()) j["word"] = c.word;
  return j;
}

// JSON / CSV payloads go to --out when given.
void emit(const RunConfig& c, std::ostream& out, const std::string& payload) {
  if (c.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw ParseError("cannot open output file '" + c.out + "'");
  file << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int max_length_or_default(const RunConfig& c, const GroupSpec& spec) {
  if (c.max_length) return *c.max_length;
  return spec.longest_length().value_or(8);
}

int cmd_verify(const RunConfig& c, const GroupSpec& spec, std::ostream& out) {
  const int L = max_length_or_default(c, spec);
  const TheoremReport report = verify_main_theorem(spec, L, c.budget);
  std::optional<IsomorphismReport> iso;
  if (!spec.is_nondegenerate()) iso = degenerate_isomorphism_check(L, c.budget);
  const bool ok = report.passed() && (!iso || iso->passed());

  if (c.format == "json") {
    json j{{"config", config_json(c)}, {"report", report}, {"passed", ok}};
    if (iso) j["isomorphism"] = *iso;
    if (report.uniformly_true) j["note"] = "all predicates uniformly true";
    emit(c, out, dump(j));
  } else if (c.format == "csv") {
    emit(c, out, theorem_csv(report));
  } else {
    out << "verify " << spec.to_string() << " L=" << L
        << (report.saturated ? " (whole group)" : "") << "\n";
    out << "length  count  tight  avoiding  separated"
        << (spec.is_nondegenerate() ? "  no-braid" : "") << "\n";
    for (const auto& l : report.layers) {
      out << std::setw(6) << l.length << std::setw(7) << l.count << std::setw(7) << l.tight
          << std::setw(10) << l.avoiding << std::setw(11) << l.separated;
      if (spec.is_nondegenerate()) out << std::setw(10) << l.no_braid_factor;
      out << "\n";
    }
    out << "elements: " << report.elements() << ", disagreements: " << report.disagreements.size()
        << "\n";
    for (const auto& d : report.disagreements) {
      out << "  disagreement at " << format_window(d.window) << "\n";
    }
    if (report.uniformly_true) out << "all predicates uniformly true\n";
    if (iso) {
      out << "degenerate isomorphism f(z) = 2z + 1: " << iso->checked << " elements, "
          << iso->mismatches.size() << " mismatches\n";
    }
    out << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kDisagreement;
}

int cmd_enumerate(const RunConfig& c, const GroupSpec& spec, std::ostream& out) {
  const int L = max_length_or_default(c, spec);
  const LengthCensus census = bfs_by_length(spec, L, c.budget);
  const AvoiderPolynomial avoiders = avoider_polynomial(census);
  std::optional<RecurrenceReport> rec;
  if (!spec.is_affine() && census.saturated) rec = verify_recurrence(spec, c.budget);
  const bool ok = !rec || rec->passed();

  if (c.format == "json") {
    json j{{"config", config_json(c)}, {"census", census_json(census, avoiders)}, {"passed", ok}};
    if (rec) j["recurrence"] = *rec;
    emit(c, out, dump(j));
  } else if (c.format == "csv") {
    emit(c, out, census_csv(census, avoiders));
  } else {
    out << "enumerate " << spec.to_string() << " L=" << L
        << (avoiders.truncated ? " (truncated)" : " (whole group)") << "\n";
    out << "length  count  avoiding\n";
    for (std::size_t len = 0; len < census.layers.size(); ++len) {
      out << std::setw(6) << len << std::setw(7) << census.layers[len].size() << std::setw(10)
          << avoiders.polynomial.coefficient(static_cast<int>(len)) << "\n";
    }
    out << "elements: " << census.total() << "\n";
    out << "avoider polynomial: " << avoiders.polynomial.to_string()
        << (avoiders.truncated ? " + O(q^" + std::to_string(L + 1) + ")" : "") << "\n";
    out << "avoiders at q=1: " << avoiders.polynomial.evaluate(1) << "\n";
    if (rec) {
      out << "recurrence: " << rec->from_recurrence.to_string() << "\n";
      out << "recurrence check: " << (rec->passed() ? "PASS" : "FAIL");
      if (rec->first_mismatch) out << " (first mismatch at q^" << *rec->first_mismatch << ")";
      out << "\n";
    }
  }
  return ok ? kOk : kDisagreement;
}

int cmd_inspect(const RunConfig& c, const GroupSpec& spec, std::ostream& out) {
  if (c.window.empty() == c.word.empty()) {
    throw ParseError("inspect needs exactly one of --window or --word");
  }
  Element w = Element::identity(spec);
  if (!c.window.empty()) {
    w = Element::from_window(spec, parse_window(c.window));
  } else {
    std::string joined;
    for (const auto& tok : c.word) joined += tok + " ";
    w = word_to_element(spec, parse_word(spec, joined));
  }
  const int length = coxeter_length(w);
  const std::int64_t dis = disarray(w);
  const auto witness = contains_global_321(w);
  const bool sep = condition_B(w);
  const std::optional<bool> braid =
      spec.is_nondegenerate() ? std::optional<bool>(condition_Bprime(w)) : std::nullopt;
  const std::uint64_t count = reduced_word_count(w);
  const ReducedWords sample = reduced_words(w, c.word_cap);
  const DescentSet descents = right_descents(w);

  if (c.format == "json" || c.format == "csv") {
    json words = json::array();
    for (const auto& wd : sample.words) words.push_back(format_word(wd));
    json j{{"config", config_json(c)},
           {"window", format_window(w)},
           {"length", length},
           {"disarray", dis},
           {"gap", length - dis / 2},
           {"tight", length == dis / 2},
           {"separated", sep},
           {"fully_commutative", is_fully_commutative(w)},
           {"descents", descents.letters},
           {"reduced_word_count", count},
           {"reduced_words", words},
           {"reduced_words_truncated", sample.truncated},
           {"witness_321", witness ? json(*witness) : json(nullptr)}};
    if (braid) j["no_braid_factor"] = *braid;
    if (spec.family() == Family::B || spec.family() == Family::A) j["avoids_P"] = avoids_P(w);
    emit(c, out, dump(j));
    return kOk;
  }
  out << "element " << format_window(w) << " in " << spec.to_string() << "\n";
  out << "length: " << length << "\n";
  out << "disarray: " << dis << " (dis/2 = " << dis / 2 << ")\n";
  out << "gap: " << length - dis / 2 << "\n";
  out << "tight: " << (length == dis / 2 ? "yes" : "no") << "\n";
  out << "condition B (separation): " << (sep ? "yes" : "no") << "\n";
  if (braid) out << "condition B' (no i(i+-1)i factor): " << (*braid ? "yes" : "no") << "\n";
  out << "fully commutative: " << (is_fully_commutative(w) ? "yes" : "no") << "\n";
  if (witness) {
    out << "321 witness: (" << witness->i << "," << witness->j << "," << witness->k
        << ") values (" << witness->wi << "," << witness->wj << "," << witness->wk << ")\n";
  } else {
    out << "321 witness: none\n";
  }
  out << "right descents: {" << format_word(descents.letters) << "}\n";
  out << "reduced words: " << count << "\n";
  for (const auto& wd : sample.words) out << "  " << (wd.empty() ? "(empty)" : format_word(wd)) << "\n";
  if (sample.truncated) out << "  ...\n";
  return kOk;
}

int cmd_roots(const RunConfig& c, const GroupSpec& spec, std::ostream& out) {
  const RootVariant variant = parse_variant(c.variant);
  const DisHeightReport table = check_dis_equals_height(spec, c.max_height, variant, c.budget);
  std::optional<Prop43Report> prop;
  if (c.check_prop43) {
    prop = check_prop_4_3(spec, max_length_or_default(c, spec), variant, c.budget);
  }
  const bool ok = (!c.check_dis || table.passed()) && (!prop || prop->passed());

  if (c.format == "json") {
    json j{{"config", config_json(c)}, {"roots", table}, {"passed", ok}};
    if (prop) j["cost_tight_check"] = *prop;
    emit(c, out, dump(j));
  } else if (c.format == "csv") {
    emit(c, out, root_table_csv(table));
  } else {
    out << "positive roots of " << spec.to_string() << " (" << variant_code(variant)
        << ") up to height " << c.max_height << ": " << table.rows.size() << "\n";
    for (const auto& row : table.rows) {
      std::string coeffs;
      for (std::size_t i = 0; i < row.root.root.coefficients.size(); ++i) {
        coeffs += (i ? " " : "") + std::to_string(row.root.root.coefficients[i]);
      }
      out << "  [" << coeffs << "] height " << height(row.root.root) << "  t = "
          << format_window(row.root.reflection) << "  dis/2 = " << row.half_disarray
          << (row.matches() ? "" : "  MISMATCH") << "\n";
    }
    if (c.check_dis) {
      out << "dis(t)/2 = height: " << (table.passed() ? "PASS" : "FAIL") << " ("
          << table.mismatches() << " mismatches)\n";
    }
    if (prop) {
      out << "cost-tight elements: " << prop->cost_tight << " of " << prop->elements
          << ", violations: " << prop->violations.size()
          << ", converse candidates: " << prop->converse_candidates.size() << "\n";
      for (const auto& v : prop->violations) {
        out << "  violation at " << format_window(v.window) << ": " << v.what << "\n";
      }
    }
  }
  return ok ? kOk : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter length, disarray and global 321 patterns in unbranched George groups",
               "coxlab"};
  app.require_subcommand(1);
  RunConfig c;
  std::size_t budget_flag = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "Group family")
        ->required()
        ->check(CLI::IsMember({"a", "b", "affa", "affc"}));
    sub->add_option("--n", c.n, "Rank (window size)")->required()->check(CLI::PositiveNumber);
    sub->add_option("--max-length", c.max_length, "Maximum Coxeter length")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--budget", budget_flag, "Element budget (default: $COXLAB_BUDGET or 1e6)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out, "Write json/csv output to this file");
  };

  auto* verify = app.add_subcommand("verify", "Check the length / reduced-word / 321 equivalence");
  add_common(verify);
  auto* enumerate = app.add_subcommand("enumerate", "Layer counts and the 321-avoider polynomial");
  add_common(enumerate);
  auto* inspect = app.add_subcommand("inspect", "Statistics of a single element");
  add_common(inspect);
  inspect->add_option("--window", c.window, "Window, e.g. -1,-2")->allow_extra_args(false);
  inspect->add_option("--word", c.word, "Word letters, e.g. 1 0 1");
  inspect->add_option("--cap", c.word_cap, "Number of reduced words to list");
  auto* roots = app.add_subcommand("roots", "Positive roots, dis(t)/2 = height, height-cost");
  add_common(roots);
  roots->add_option("--max-height", c.max_height, "Maximum root height")
      ->check(CLI::PositiveNumber);
  roots->add_option("--variant", c.variant, "Root-system variant")
      ->check(CLI::IsMember({"standard", "short-zero", "long-zero"}));
  roots->add_flag("--check-dis", c.check_dis, "Fail unless dis(t)/2 = height for every root");
  roots->add_flag("--check-prop43", c.check_prop43,
                  "Check the middle-root condition for cost-tight elements up to --max-length");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    c.budget = resolve_budget(budget_flag);
    const GroupSpec spec(parse_family(c.family), c.n);
    if (c.command == "verify") return cmd_verify(c, spec, out);
    if (c.command == "enumerate") return cmd_enumerate(c, spec, out);
    if (c.command == "inspect") return cmd_inspect(c, spec, out);
    return cmd_roots(c, spec, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
  } catch (const WindowInvalid& e) {
    err << "error: " << e.what() << "\n";
  } catch (const LetterOutOfAlphabet& e) {
    err << "error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace coxlab::cli
