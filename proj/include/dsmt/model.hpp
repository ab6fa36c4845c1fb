#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dsmt/frame.hpp"
#include "dsmt/proposition.hpp"

namespace dsmt {

// A frame plus the propositions forced to be empty. Emptiness is semantic:
// each constraint erases its Venn regions from the part universe, and every
// query (emptiness, cardinality, subset, intersection, reduction) is
// answered on the surviving parts. A model that leaves no part alive is
// rejected, since total ignorance must stay non-empty.
class Model {
 public:
  enum class Kind { Free, Shafer, Hybrid };

  Model(Frame frame, Kind kind, std::vector<Proposition> constraints);

  static std::shared_ptr<const Model> make_free(Frame frame);
  // All hypotheses pairwise exclusive; the lattice collapses to the power set.
  static std::shared_ptr<const Model> make_shafer(Frame frame);
  static std::shared_ptr<const Model> make_hybrid(Frame frame,
                                                  std::vector<Proposition> constraints);

  const Frame& frame() const { return frame_; }
  Kind kind() const { return kind_; }
  const std::vector<Proposition>& constraints() const { return constraints_; }
  std::uint64_t surviving_parts() const { return surviving_; }

  // Venn parts of p that survive the constraints, as a bit set.
  std::uint64_t regions(const Proposition& p) const;
  bool is_empty(const Proposition& p) const;

  // Number of surviving parts of p.
  std::size_t cardinality(const Proposition& p) const;

  // Canonical representative of p modulo the constraints: terms with no
  // surviving region are dropped and absorption re-applied, so two
  // propositions reduce to the same value exactly when their regions agree.
  Proposition reduce(const Proposition& p) const;

  bool subset(const Proposition& a, const Proposition& b) const;
  bool intersects(const Proposition& a, const Proposition& b) const;

  // Reduced union of the whole frame.
  Proposition total_ignorance() const;

 private:
  Frame frame_;
  Kind kind_;
  std::vector<Proposition> constraints_;
  std::uint64_t surviving_ = 0;
};

// Distinct surviving propositions (empty one first), ordered by model
// cardinality, then free-model cardinality, then structurally. This is the
// listing order used for lattice tables.
std::vector<Proposition> surviving_elements(const Model& model);

}  // namespace dsmt
