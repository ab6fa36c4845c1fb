#include "dsmt/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsmt/fusion.hpp"
#include "dsmt/pignistic.hpp"
#include "dsmt/problem_io.hpp"

namespace dsmt {

namespace {

using nlohmann::json;

std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;  // never print -0
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

std::string format_set(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < s.pieces().size(); ++i) {
    const auto& p = s.pieces()[i];
    if (i > 0) out += " u ";
    if (p.lo == p.hi) {
      out += "{" + fmt6(p.lo) + "}";
      continue;
    }
    out += p.lo_closed ? '[' : '(';
    out += fmt6(p.lo) + ", " + fmt6(p.hi);
    out += p.hi_closed ? ']' : ')';
  }
  return out;
}

template <typename V>
std::vector<Proposition> ordered_keys(const std::map<Proposition, V>& masses, std::size_t n) {
  std::vector<Proposition> keys;
  keys.reserve(masses.size());
  for (const auto& [p, v] : masses) keys.push_back(p);
  std::sort(keys.begin(), keys.end(),
            [n](const Proposition& a, const Proposition& b) { return canonical_less(a, b, n); });
  return keys;
}

struct Options {
  std::string file;
  std::string rule;
  std::string format = "table";
  std::string quasi;
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rule parse_rule(const std::string& name) {
  auto rule = rule_from_name(name);
  if (!rule) throw CliError("unknown rule '" + name + "'");
  return *rule;
}

// Single-source commands skip fusion; the source is then re-validated
// against the problem model (it was loaded against the free lattice).
Bba rebind_to_model(const Bba& b, const std::shared_ptr<const Model>& model) {
  Bba bound = b;
  bound.model = model;
  BbaCheck check = validate(bound);
  if (!check.ok()) {
    std::string msg = "source is not valid under the problem model:";
    for (const auto& v : check.violations) msg += " " + v + ";";
    throw CliError(msg);
  }
  return check.canonical;
}

FusionReport fuse_or_passthrough(const Problem& problem, Rule rule) {
  if (problem.precise.size() == 1) {
    FusionReport report;
    report.rule = rule;
    report.result = rebind_to_model(problem.precise[0], problem.model);
    return report;
  }
  return fuse(rule, problem.precise, problem.model);
}

// ---------------------------------------------------------------- output

json precise_masses_json(const Bba& b, const Frame& frame) {
  json masses = json::object();
  for (const auto& [p, v] : b.masses) masses[format(p, frame)] = v;
  return masses;
}

json report_json(const Problem& problem, const FusionReport& report) {
  json src{{"name", "result"}, {"masses", precise_masses_json(report.result, problem.frame)}};
  if (report.result.unnormalized) src["unnormalized"] = true;
  return json{{"frame", problem.frame.names()},
              {"model", problem.model_json},
              {"mode", "precise"},
              {"sources", json::array({src})},
              {"report",
               {{"rule", std::string(rule_name(report.rule))},
                {"total_conflict", report.total_conflict},
                {"mass_deficit", report.mass_deficit}}}};
}

void print_report(const FusionReport& report, const Frame& frame, std::ostream& out) {
  for (const auto& p : ordered_keys(report.result.masses, frame.size()))
    out << "m(" << format(p, frame) << ") = " << fmt6(report.result.masses.at(p)) << "\n";
  out << "total conflict = " << fmt6(report.total_conflict) << "\n";
  if (report.mass_deficit > kMassTolerance)
    out << "mass deficit = " << fmt6(report.mass_deficit) << "\n";
}

// ---------------------------------------------------------------- lattice

int cmd_lattice(const Problem& problem, const Options& opt, std::ostream& out) {
  if (problem.frame.size() > 5)
    throw CliError("lattice: frames with more than 5 hypotheses are not supported");
  std::vector<Proposition> elements = surviving_elements(*problem.model);
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& p : elements)
      rows.push_back(json{{"proposition", format(p, problem.frame)},
                          {"cardinality", problem.model->cardinality(p)}});
    out << json{{"frame", problem.frame.names()},
                {"model", problem.model_json},
                {"elements", rows}}
               .dump(2)
        << "\n";
    return 0;
  }
  for (const auto& p : elements)
    out << std::setw(2) << problem.model->cardinality(p) << "  " << format(p, problem.frame)
        << "\n";
  return 0;
}

// ------------------------------------------------------------------- fuse

int cmd_fuse_precise(const Problem& problem, Rule rule, const Options& opt, std::ostream& out) {
  FusionReport report = fuse_or_passthrough(problem, rule);
  if (opt.format == "json") {
    out << report_json(problem, report).dump(2) << "\n";
    return 0;
  }
  out << "rule: " << rule_name(rule) << "\n";
  print_report(report, problem.frame, out);
  return 0;
}

int cmd_fuse_imprecise(const Problem& problem, Rule rule, const Options& opt,
                       std::ostream& out) {
  ImpreciseBba result;
  if (problem.imprecise.size() == 1) {
    result = problem.imprecise[0];
    result.model = problem.model;
  } else if (rule == Rule::Conjunctive) {
    result = imprecise_classic(problem.imprecise);
  } else if (rule == Rule::DsmHybrid) {
    result = imprecise_hybrid(problem.imprecise, problem.model);
  } else {
    throw CliError("rule '" + std::string(rule_name(rule)) +
                   "' is not available in imprecise mode (use conjunctive or dsmh)");
  }
  if (opt.format == "json") {
    json masses = json::object();
    for (const auto& [p, s] : result.masses)
      masses[format(p, problem.frame)] = interval_set_to_json(s);
    json src{{"name", "result"}, {"masses", masses}};
    out << json{{"frame", problem.frame.names()},
                {"model", problem.model_json},
                {"mode", "imprecise"},
                {"sources", json::array({src})},
                {"report", {{"rule", std::string(rule_name(rule))}}}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "rule: " << rule_name(rule) << "\n";
  for (const auto& p : ordered_keys(result.masses, problem.frame.size()))
    out << "m(" << format(p, problem.frame) << ") = " << format_set(result.masses.at(p)) << "\n";
  return 0;
}

struct QOutcome {
  QBba result;
  Label conflict{0};
};

QOutcome run_qualitative(const Problem& problem, Rule rule) {
  if (problem.qualitative.size() == 1) return {problem.qualitative[0], Label{0}};
  QFusionReport report;
  switch (rule) {
    case Rule::Conjunctive: report = qcr(problem.qualitative); break;
    case Rule::DsmHybrid: report = qdsmh(problem.qualitative, problem.model); break;
    case Rule::Pcr5:
      if (problem.qualitative.size() != 2)
        throw CliError("qualitative pcr5 is defined for exactly two sources");
      report = qpcr5_two(problem.qualitative[0], problem.qualitative[1], problem.model);
      break;
    default:
      throw CliError("rule '" + std::string(rule_name(rule)) +
                     "' is not available in qualitative mode (use conjunctive, dsmh or pcr5)");
  }
  return {report.result, report.conflict};
}

int cmd_fuse_qualitative(const Problem& problem, Rule rule, const Options& opt,
                         std::ostream& out) {
  QOutcome outcome = run_qualitative(problem, rule);
  if (!opt.quasi.empty()) {
    Label c = parse_label(opt.quasi, problem.scale);
    outcome.result = quasi_normalize(outcome.result, c);
  }
  if (opt.format == "json") {
    json masses = json::object();
    for (const auto& [p, l] : outcome.result.masses)
      masses[format(p, problem.frame)] = label_name(l);
    json src{{"name", "result"}, {"masses", masses}};
    out << json{{"frame", problem.frame.names()},
                {"model", problem.model_json},
                {"mode", "qualitative"},
                {"scale", {{"m", problem.scale.m}}},
                {"sources", json::array({src})},
                {"report",
                 {{"rule", std::string(rule_name(rule))},
                  {"conflict", label_name(outcome.conflict)}}}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "rule: " << rule_name(rule) << "\n";
  for (const auto& p : ordered_keys(outcome.result.masses, problem.frame.size()))
    out << "qm(" << format(p, problem.frame)
        << ") = " << label_name(outcome.result.masses.at(p)) << "\n";
  out << "conflict = " << label_name(outcome.conflict) << "\n";
  return 0;
}

int cmd_fuse(const Problem& problem, const Options& opt, std::ostream& out) {
  Rule rule = parse_rule(opt.rule);
  if (problem.source_count() == 0) throw CliError("the problem file provides no sources");
  if (!opt.quasi.empty() && problem.mode != Mode::Qualitative)
    throw CliError("--quasi-normalize applies only in qualitative mode");
  switch (problem.mode) {
    case Mode::Precise: return cmd_fuse_precise(problem, rule, opt, out);
    case Mode::Imprecise: return cmd_fuse_imprecise(problem, rule, opt, out);
    case Mode::Qualitative: return cmd_fuse_qualitative(problem, rule, opt, out);
  }
  return 1;
}

// ---------------------------------------------------------------- compare

// Column width in code points, not bytes (the empty proposition prints as
// a multi-byte glyph).
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = display_width(header[c]);
    for (const auto& row : rows) width[c] = std::max(width[c], display_width(row[c]));
  }
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      line.append(width[c] - display_width(row[c]), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

int cmd_compare_precise(const Problem& problem, const Options& opt, std::ostream& out) {
  std::vector<Rule> rules{Rule::Conjunctive, Rule::DsmHybrid, Rule::Pcr5,
                          Rule::Dempster,    Rule::Smets,     Rule::Yager};
  if (problem.precise.size() == 2) rules.push_back(Rule::DuboisPrade);

  std::map<Rule, FusionReport> reports;
  std::map<Rule, std::string> errors;
  for (Rule r : rules) {
    try {
      reports.emplace(r, fuse(r, problem.precise, problem.model));
    } catch (const RuleUndefined& e) {
      errors.emplace(r, e.what());
    }
  }

  std::vector<Proposition> rows_keys;
  {
    std::map<Proposition, bool> seen;
    for (const auto& [r, rep] : reports)
      for (const auto& [p, v] : rep.result.masses) seen.emplace(p, true);
    for (const auto& [p, b] : seen) rows_keys.push_back(p);
    std::sort(rows_keys.begin(), rows_keys.end(),
              [&](const Proposition& a, const Proposition& b) {
                return canonical_less(a, b, problem.frame.size());
              });
  }

  if (opt.format == "json") {
    json columns = json::object();
    for (const auto& [r, rep] : reports) {
      json col{{"masses", precise_masses_json(rep.result, problem.frame)},
               {"total_conflict", rep.total_conflict},
               {"mass_deficit", rep.mass_deficit}};
      columns[std::string(rule_name(r))] = col;
    }
    json errs = json::object();
    for (const auto& [r, msg] : errors) errs[std::string(rule_name(r))] = msg;
    out << json{{"frame", problem.frame.names()},
                {"model", problem.model_json},
                {"columns", columns},
                {"errors", errs}}
               .dump(2)
        << "\n";
    return 0;
  }

  std::vector<std::string> header{"proposition"};
  for (Rule r : rules) header.emplace_back(rule_name(r));
  std::vector<std::vector<std::string>> table;
  for (const auto& p : rows_keys) {
    std::vector<std::string> row{format(p, problem.frame)};
    for (Rule r : rules) {
      if (errors.count(r)) {
        row.push_back("undefined");
        continue;
      }
      const auto& masses = reports.at(r).result.masses;
      auto it = masses.find(p);
      row.push_back(it == masses.end() ? "-" : fmt6(it->second));
    }
    table.push_back(std::move(row));
  }
  print_table(header, table, out);

  double conflict = 0.0;
  if (!reports.empty()) conflict = reports.begin()->second.total_conflict;
  out << "total conflict = " << fmt6(conflict) << "\n";
  for (Rule r : rules) {
    auto it = reports.find(r);
    if (it != reports.end() && it->second.mass_deficit > kMassTolerance)
      out << "note: " << rule_name(r) << " mass deficit = " << fmt6(it->second.mass_deficit)
          << "\n";
    if (errors.count(r)) out << "note: " << rule_name(r) << ": " << errors.at(r) << "\n";
  }
  return 0;
}

int cmd_compare_qualitative(const Problem& problem, const Options& opt, std::ostream& out) {
  std::vector<Rule> rules{Rule::Conjunctive, Rule::DsmHybrid};
  if (problem.qualitative.size() == 2) rules.push_back(Rule::Pcr5);
  std::map<Rule, QOutcome> outcomes;
  for (Rule r : rules) outcomes.emplace(r, run_qualitative(problem, r));

  std::map<Proposition, bool> seen;
  for (const auto& [r, o] : outcomes)
    for (const auto& [p, l] : o.result.masses) seen.emplace(p, true);
  std::vector<Proposition> keys;
  for (const auto& [p, b] : seen) keys.push_back(p);
  std::sort(keys.begin(), keys.end(), [&](const Proposition& a, const Proposition& b) {
    return canonical_less(a, b, problem.frame.size());
  });

  if (opt.format == "json") {
    json columns = json::object();
    for (const auto& [r, o] : outcomes) {
      json masses = json::object();
      for (const auto& [p, l] : o.result.masses) masses[format(p, problem.frame)] = label_name(l);
      columns[std::string(rule_name(r))] =
          json{{"masses", masses}, {"conflict", label_name(o.conflict)}};
    }
    out << json{{"frame", problem.frame.names()},
                {"model", problem.model_json},
                {"columns", columns}}
               .dump(2)
        << "\n";
    return 0;
  }

  std::vector<std::string> header{"proposition"};
  for (Rule r : rules) header.emplace_back(rule_name(r));
  std::vector<std::vector<std::string>> table;
  for (const auto& p : keys) {
    std::vector<std::string> row{format(p, problem.frame)};
    for (Rule r : rules) {
      const auto& masses = outcomes.at(r).result.masses;
      auto it = masses.find(p);
      row.push_back(it == masses.end() ? "-" : label_name(it->second));
    }
    table.push_back(std::move(row));
  }
  print_table(header, table, out);
  for (Rule r : rules)
    out << "conflict(" << rule_name(r) << ") = " << label_name(outcomes.at(r).conflict) << "\n";
  return 0;
}

int cmd_compare_imprecise(const Problem& problem, const Options& opt, std::ostream& out) {
  ImpreciseBba classic = imprecise_classic(problem.imprecise);
  ImpreciseBba hybrid = imprecise_hybrid(problem.imprecise, problem.model);

  std::map<Proposition, bool> seen;
  for (const auto& [p, s] : classic.masses) seen.emplace(p, true);
  for (const auto& [p, s] : hybrid.masses) seen.emplace(p, true);
  std::vector<Proposition> keys;
  for (const auto& [p, b] : seen) keys.push_back(p);
  std::sort(keys.begin(), keys.end(), [&](const Proposition& a, const Proposition& b) {
    return canonical_less(a, b, problem.frame.size());
  });

  if (opt.format == "json") {
    auto masses_json = [&](const ImpreciseBba& b) {
      json masses = json::object();
      for (const auto& [p, s] : b.masses)
        masses[format(p, problem.frame)] = interval_set_to_json(s);
      return masses;
    };
    out << json{{"frame", problem.frame.names()},
                {"model", problem.model_json},
                {"columns",
                 {{"conjunctive", {{"masses", masses_json(classic)}}},
                  {"dsmh", {{"masses", masses_json(hybrid)}}}}}}
               .dump(2)
        << "\n";
    return 0;
  }

  std::vector<std::string> header{"proposition", "conjunctive", "dsmh"};
  std::vector<std::vector<std::string>> table;
  for (const auto& p : keys) {
    auto cell = [&](const ImpreciseBba& b) {
      auto it = b.masses.find(p);
      return it == b.masses.end() ? std::string("-") : format_set(it->second);
    };
    table.push_back({format(p, problem.frame), cell(classic), cell(hybrid)});
  }
  print_table(header, table, out);
  return 0;
}

int cmd_compare(const Problem& problem, const Options& opt, std::ostream& out) {
  switch (problem.mode) {
    case Mode::Precise: return cmd_compare_precise(problem, opt, out);
    case Mode::Imprecise: return cmd_compare_imprecise(problem, opt, out);
    case Mode::Qualitative: return cmd_compare_qualitative(problem, opt, out);
  }
  return 1;
}

// -------------------------------------------------------------- pignistic

int cmd_pignistic(const Problem& problem, const Options& opt, std::ostream& out) {
  if (problem.mode != Mode::Precise)
    throw CliError("pignistic requires a precise-mode problem");
  if (problem.source_count() == 0) throw CliError("the problem file provides no sources");
  Rule rule = opt.rule.empty() ? Rule::DsmHybrid : parse_rule(opt.rule);
  FusionReport report = fuse_or_passthrough(problem, rule);
  if (report.result.unnormalized)
    throw CliError("pignistic requires a normalized fusion result; rule '" +
                   std::string(rule_name(rule)) + "' left mass on the empty set or unassigned");
  PignisticResult pig = generalized_pignistic(report.result);

  std::vector<std::pair<std::string, double>> singletons;
  for (std::size_t i = 0; i < problem.frame.size(); ++i) {
    Proposition s = problem.model->reduce(Proposition::singleton(i));
    if (s.is_empty()) continue;
    singletons.emplace_back(problem.frame.name(i), pig.values.at(s));
  }

  if (opt.format == "json") {
    json values = json::object();
    for (const auto& [name, v] : singletons) values[name] = v;
    json arg = json::array();
    for (const auto& p : pig.argmax) arg.push_back(format(p, problem.frame));
    out << json{{"frame", problem.frame.names()},
                {"model", problem.model_json},
                {"rule", std::string(rule_name(rule))},
                {"pignistic", values},
                {"argmax", arg}}
               .dump(2)
        << "\n";
    return 0;
  }

  out << "rule: " << rule_name(rule) << "\n";
  for (const auto& [name, v] : singletons) out << "P(" << name << ") = " << fmt6(v) << "\n";
  out << "argmax:";
  for (std::size_t i = 0; i < pig.argmax.size(); ++i)
    out << (i ? ", " : " ") << format(pig.argmax[i], problem.frame);
  if (pig.argmax.size() > 1) out << " (tie)";
  out << "\n";
  return 0;
}

// ------------------------------------------------------------- sequential

int cmd_sequential(const Problem& problem, const Options& opt, std::ostream& out,
                   std::ostream& err) {
  if (problem.mode != Mode::Precise)
    throw CliError("sequential requires a precise-mode problem");
  if (problem.precise.size() < 2)
    throw CliError("sequential requires at least two sources");
  Rule rule = parse_rule(opt.rule);

  json steps_json = json::array();
  bool table = opt.format != "json";
  if (table) out << "rule: " << rule_name(rule) << "\n";

  Bba acc = problem.precise[0];
  for (std::size_t i = 1; i < problem.precise.size(); ++i) {
    FusionReport step;
    try {
      step = fuse(rule, {acc, problem.precise[i]}, problem.model);
    } catch (const RuleUndefined& e) {
      if (!table) out << json{{"steps", steps_json}}.dump(2) << "\n";
      err << "step " << i << " (" << (i == 1 ? problem.source_names[0] : "accumulated")
          << " (+) " << problem.source_names[i] << "): " << e.what() << "\n";
      return 2;
    }
    for (auto it = step.result.masses.begin(); it != step.result.masses.end();)
      it = (it->second == 0.0) ? step.result.masses.erase(it) : std::next(it);
    if (table) {
      out << "step " << i << ": "
          << (i == 1 ? problem.source_names[0] : std::string("accumulated")) << " (+) "
          << problem.source_names[i] << "\n";
      print_report(step, problem.frame, out);
    } else {
      json jstep = report_json(problem, step);
      jstep["step"] = i;
      steps_json.push_back(std::move(jstep));
    }
    acc = step.result;
  }
  if (!table) out << json{{"steps", steps_json}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Belief fusion over hyper-power sets: lattice inspection, "
               "combination rules, rule comparison, pignistic decisions"};
  app.require_subcommand(1);

  Options opt;
  std::string command;
  for (const char* name : {"lattice", "fuse", "compare", "pignistic", "sequential"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", opt.file, "problem file (JSON)")->required();
    sub->add_option("--format", opt.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    if (std::string(name) == "fuse" || std::string(name) == "sequential")
      sub->add_option("--rule", opt.rule, "combination rule")->required();
    if (std::string(name) == "pignistic")
      sub->add_option("--rule", opt.rule, "combination rule (default dsmh)");
    if (std::string(name) == "fuse")
      sub->add_option("--quasi-normalize", opt.quasi,
                      "label subtracted from every fused mass (qualitative mode)");
    sub->callback([&command, name]() { command = name; });
  }

  std::vector<const char*> argv;
  argv.push_back("dsmt");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Problem problem = load_problem_file(opt.file);
    if (command == "lattice") return cmd_lattice(problem, opt, out);
    if (command == "fuse") return cmd_fuse(problem, opt, out);
    if (command == "compare") return cmd_compare(problem, opt, out);
    if (command == "pignistic") return cmd_pignistic(problem, opt, out);
    if (command == "sequential") return cmd_sequential(problem, opt, out, err);
    err << "error: no command\n";
    return 1;
  } catch (const RuleUndefined& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ProblemError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dsmt
