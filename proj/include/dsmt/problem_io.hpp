#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dsmt/bba.hpp"
#include "dsmt/imprecise.hpp"
#include "dsmt/model.hpp"
#include "dsmt/qualitative.hpp"

namespace dsmt {

enum class Mode { Precise, Imprecise, Qualitative };

class ProblemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fusion problem as described by one JSON document:
//   {
//     "frame":  ["t1", "t2", ...],
//     "model":  {"type": "free"|"shafer"|"hybrid", "empty": ["expr", ...]},
//     "mode":   "precise" | "imprecise" | "qualitative",
//     "scale":  {"m": 4},                      // qualitative only
//     "sources": [{"name": "m1", "masses": {"expr": value, ...}}, ...]
//   }
// A precise value is a number, an imprecise value is a list of
// {"lo","hi","lo_open","hi_open"} or {"point"} objects, a qualitative value
// is a label string "L<k>". Sources are validated on load; their masses are
// kept over the free lattice so that constraints of the problem model act
// at fusion time (mass committed to a proposition the model later empties
// is handled by the rules, not rejected).
struct Problem {
  Frame frame;
  std::shared_ptr<const Model> model;
  Mode mode = Mode::Precise;
  LabelScale scale{2};
  nlohmann::json model_json;  // as given, echoed into JSON output
  std::vector<std::string> source_names;
  std::vector<Bba> precise;
  std::vector<ImpreciseBba> imprecise;
  std::vector<QBba> qualitative;

  std::size_t source_count() const;
};

Problem load_problem(const nlohmann::json& doc);
Problem load_problem_file(const std::string& path);

nlohmann::json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& value);

}  // namespace dsmt
