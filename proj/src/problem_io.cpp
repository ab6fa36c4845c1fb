#include "dsmt/problem_io.hpp"

#include <fstream>

namespace dsmt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ProblemError(msg); }

const json& require(const json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

Proposition parse_expr(const std::string& text, const Frame& frame, const std::string& where) {
  try {
    return parse(text, frame);
  } catch (const ParseError& e) {
    fail(where + ": '" + text + "': " + e.what() + " (column " + std::to_string(e.position()) +
         ")");
  }
}

std::shared_ptr<const Model> build_model(const json& block, Frame frame) {
  std::string type = block.value("type", "free");
  std::vector<Proposition> constraints;
  if (auto it = block.find("empty"); it != block.end()) {
    if (!it->is_array()) fail("model: \"empty\" must be a list of expressions");
    for (const auto& e : *it)
      constraints.push_back(parse_expr(e.get<std::string>(), frame, "model constraint"));
  }
  try {
    if (type == "free" && constraints.empty()) return Model::make_free(std::move(frame));
    if (type == "shafer") {
      if (constraints.empty()) return Model::make_shafer(std::move(frame));
      auto pairwise = Model::make_shafer(frame)->constraints();
      constraints.insert(constraints.end(), pairwise.begin(), pairwise.end());
      return std::make_shared<Model>(std::move(frame), Model::Kind::Shafer,
                                     std::move(constraints));
    }
    if (type == "hybrid" || type == "free")
      return Model::make_hybrid(std::move(frame), std::move(constraints));
  } catch (const std::invalid_argument& e) {
    fail(std::string("model: ") + e.what());
  }
  fail("model: unknown type \"" + type + "\" (expected free, shafer or hybrid)");
}

Mode parse_mode(const json& doc) {
  std::string mode = doc.value("mode", "precise");
  if (mode == "precise") return Mode::Precise;
  if (mode == "imprecise") return Mode::Imprecise;
  if (mode == "qualitative") return Mode::Qualitative;
  fail("unknown mode \"" + mode + "\"");
}

}  // namespace

std::size_t Problem::source_count() const {
  switch (mode) {
    case Mode::Precise: return precise.size();
    case Mode::Imprecise: return imprecise.size();
    case Mode::Qualitative: return qualitative.size();
  }
  return 0;
}

nlohmann::json interval_set_to_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& p : s.pieces()) {
    if (p.lo == p.hi) {
      out.push_back(json{{"point", p.lo}});
      continue;
    }
    json piece{{"lo", p.lo}, {"hi", p.hi}};
    if (!p.lo_closed) piece["lo_open"] = true;
    if (!p.hi_closed) piece["hi_open"] = true;
    out.push_back(std::move(piece));
  }
  return out;
}

IntervalSet interval_set_from_json(const nlohmann::json& value) {
  if (!value.is_array()) fail("imprecise mass must be a list of interval pieces");
  std::vector<IntervalPiece> pieces;
  for (const auto& item : value) {
    if (!item.is_object()) fail("interval piece must be an object");
    IntervalPiece p;
    if (auto it = item.find("point"); it != item.end()) {
      p.lo = p.hi = it->get<double>();
    } else {
      p.lo = require(item, "lo", "interval piece").get<double>();
      p.hi = require(item, "hi", "interval piece").get<double>();
      p.lo_closed = !item.value("lo_open", false);
      p.hi_closed = !item.value("hi_open", false);
    }
    pieces.push_back(p);
  }
  try {
    return IntervalSet::from_pieces(std::move(pieces));
  } catch (const std::invalid_argument& e) {
    fail(std::string("imprecise mass: ") + e.what());
  }
}

Problem load_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("problem document must be a JSON object");

  const json& frame_json = require(doc, "frame", "problem");
  if (!frame_json.is_array() || frame_json.empty())
    fail("\"frame\" must be a non-empty list of hypothesis names");
  std::vector<std::string> names;
  for (const auto& n : frame_json) names.push_back(n.get<std::string>());

  Problem problem;
  try {
    problem.frame = Frame(std::move(names));
  } catch (const std::invalid_argument& e) {
    fail(std::string("frame: ") + e.what());
  }
  problem.model_json = doc.value("model", json{{"type", "free"}});
  problem.model = build_model(problem.model_json, problem.frame);
  problem.mode = parse_mode(doc);

  if (problem.mode == Mode::Qualitative) {
    const json& scale = require(doc, "scale", "qualitative problem");
    int m = require(scale, "m", "scale").get<int>();
    if (m < 2) fail("scale: m must be at least 2");
    problem.scale = LabelScale{m};
  }

  json sources = doc.value("sources", json::array());
  if (!sources.is_array()) fail("\"sources\" must be a list");

  // Source masses live on the free lattice; the problem model constrains
  // the fusion step, not what the sources were allowed to commit to.
  auto free_model = Model::make_free(problem.frame);

  std::size_t index = 0;
  for (const auto& src : sources) {
    ++index;
    std::string name = src.value("name", "m" + std::to_string(index));
    const json& masses = require(src, "masses", "source '" + name + "'");
    if (!masses.is_object()) fail("source '" + name + "': \"masses\" must be an object");

    switch (problem.mode) {
      case Mode::Precise: {
        Bba b;
        b.model = free_model;
        b.unnormalized = src.value("unnormalized", false);
        for (const auto& [expr, value] : masses.items()) {
          if (!value.is_number()) fail("source '" + name + "': mass of '" + expr +
                                       "' must be a number in precise mode");
          b.masses[parse_expr(expr, problem.frame, "source '" + name + "'")] +=
              value.get<double>();
        }
        BbaCheck check = validate(b);
        if (!check.ok()) {
          std::string msg = "source '" + name + "' is not a valid belief assignment:";
          for (const auto& v : check.violations) msg += " " + v + ";";
          fail(msg);
        }
        problem.precise.push_back(std::move(check.canonical));
        break;
      }
      case Mode::Imprecise: {
        ImpreciseBba b;
        b.model = free_model;
        for (const auto& [expr, value] : masses.items()) {
          Proposition p = parse_expr(expr, problem.frame, "source '" + name + "'");
          IntervalSet s = interval_set_from_json(value);
          auto it = b.masses.find(p);
          if (it == b.masses.end())
            b.masses.emplace(std::move(p), std::move(s));
          else
            it->second = box_add(it->second, s);
        }
        if (!check_admissibility(b).admissible)
          fail("source '" + name + "' is not admissible (no selection sums to 1)");
        problem.imprecise.push_back(std::move(b));
        break;
      }
      case Mode::Qualitative: {
        QBba b;
        b.model = problem.model;
        b.scale = problem.scale;
        for (const auto& [expr, value] : masses.items()) {
          if (!value.is_string())
            fail("source '" + name + "': mass of '" + expr + "' must be a label string");
          Proposition p = parse_expr(expr, problem.frame, "source '" + name + "'");
          Label l;
          try {
            l = parse_label(value.get<std::string>(), problem.scale);
          } catch (const std::invalid_argument& e) {
            fail("source '" + name + "': " + e.what());
          }
          auto [it, inserted] = b.masses.emplace(std::move(p), l);
          if (!inserted) it->second = qadd(it->second, l, problem.scale);
        }
        problem.qualitative.push_back(std::move(b));
        break;
      }
    }
    problem.source_names.push_back(std::move(name));
  }
  return problem;
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open problem file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail("problem file '" + path + "' is not valid JSON: " + e.what());
  }
  return load_problem(doc);
}

}  // namespace dsmt
