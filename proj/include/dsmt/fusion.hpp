#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsmt/bba.hpp"
#include "dsmt/model.hpp"

namespace dsmt {

enum class Rule { Conjunctive, DsmHybrid, Pcr5, Dempster, Smets, Yager, DuboisPrade };

std::string_view rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);

// Thrown when a rule has no defined result, e.g. normalizing under total
// conflict.
class RuleUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FusionReport {
  Bba result;
  Rule rule = Rule::Conjunctive;
  // Total product mass landing on propositions empty under the model.
  double total_conflict = 0.0;
  // Conflicting tuples (one focal element per source) with their products.
  std::vector<std::pair<std::vector<Proposition>, double>> partial_conflicts;
  // Mass a rule loses by design (union-of-conflict empty under the model,
  // or a conflict none of whose members survives).
  double mass_deficit = 0.0;
};

// Conjunctive consensus. Result keys are conjunctions computed in the free
// lattice and reduced under the model; products whose conjunction is empty
// are reported as conflict and excluded from the result (the result is
// flagged unnormalized when that happens). Commutative and associative.
FusionReport conjunctive(const std::vector<Bba>& sources, std::shared_ptr<const Model> model);

// Conflict-adaptive rule: consensus mass where the conjunction survives,
// degenerate mass to the union of the hypotheses involved (or total
// ignorance), remaining conflicts to the reduced disjunction of the tuple.
// Always sums to one.
FusionReport dsm_hybrid(const std::vector<Bba>& sources, std::shared_ptr<const Model> model);

// Proportional conflict redistribution, two sources: each conflicting
// product m1(X)m2(Y) returns to X and Y in proportion to the masses those
// sources committed; shares targeting empty propositions are given to the
// surviving side, and a conflict with no surviving side is recorded as
// deficit.
FusionReport pcr5_two(const Bba& b1, const Bba& b2, std::shared_ptr<const Model> model);

// Proportional conflict redistribution for two or more sources, fused
// jointly: every conflicting tuple's product is split over the distinct
// propositions in the tuple, proportionally to the product of the masses
// each proposition contributed. Coincides with pcr5_two for two sources.
FusionReport pcr5(const std::vector<Bba>& sources, std::shared_ptr<const Model> model);

// Conjunctive consensus normalized by 1-k. Throws RuleUndefined when the
// conflict is total.
FusionReport dempster(const std::vector<Bba>& sources, std::shared_ptr<const Model> model);

// Conjunctive consensus with the conflicting mass kept on the empty set.
FusionReport smets(const std::vector<Bba>& sources, std::shared_ptr<const Model> model);

// Conjunctive consensus with the conflicting mass moved to total ignorance.
FusionReport yager(const std::vector<Bba>& sources, std::shared_ptr<const Model> model);

// Two-source disjunctive repair: each conflicting product goes to the
// reduced union of the pair. When that union is empty the product is lost
// and recorded in mass_deficit rather than patched.
FusionReport dubois_prade(const Bba& b1, const Bba& b2, std::shared_ptr<const Model> model);

// Joint fusion dispatch. Dubois-Prade accepts exactly two sources.
FusionReport fuse(Rule rule, const std::vector<Bba>& sources,
                  std::shared_ptr<const Model> model);

// Quasi-associative chaining ((1+2)+3)+...; one report per step. Rule
// errors (e.g. Dempster under total conflict) propagate from the failing
// step.
std::vector<FusionReport> sequential(Rule rule, const std::vector<Bba>& sources,
                                     std::shared_ptr<const Model> model);

}  // namespace dsmt
