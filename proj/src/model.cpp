#include "dsmt/model.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace dsmt {

Model::Model(Frame frame, Kind kind, std::vector<Proposition> constraints)
    : frame_(std::move(frame)), kind_(kind), constraints_(std::move(constraints)) {
  std::size_t n = frame_.size();
  if (n == 0) throw std::invalid_argument("model: frame must have at least one hypothesis");
  if (n > 6) throw std::invalid_argument("model: at most 6 hypotheses supported");
  surviving_ = free_regions(dsmt::total_ignorance(frame_), n);
  for (const auto& c : constraints_) surviving_ &= ~free_regions(c, n);
  if (surviving_ == 0)
    throw std::invalid_argument("model: constraints empty the whole frame (degenerate model)");
}

std::shared_ptr<const Model> Model::make_free(Frame frame) {
  return std::make_shared<Model>(std::move(frame), Kind::Free, std::vector<Proposition>{});
}

std::shared_ptr<const Model> Model::make_shafer(Frame frame) {
  std::vector<Proposition> constraints;
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = i + 1; j < frame.size(); ++j)
      constraints.push_back(meet(Proposition::singleton(i), Proposition::singleton(j)));
  return std::make_shared<Model>(std::move(frame), Kind::Shafer, std::move(constraints));
}

std::shared_ptr<const Model> Model::make_hybrid(Frame frame,
                                                std::vector<Proposition> constraints) {
  return std::make_shared<Model>(std::move(frame), Kind::Hybrid, std::move(constraints));
}

std::uint64_t Model::regions(const Proposition& p) const {
  return free_regions(p, frame_.size()) & surviving_;
}

bool Model::is_empty(const Proposition& p) const { return regions(p) == 0; }

std::size_t Model::cardinality(const Proposition& p) const {
  return static_cast<std::size_t>(std::popcount(regions(p)));
}

Proposition Model::reduce(const Proposition& p) const {
  std::vector<Term> kept;
  for (Term t : p.terms()) {
    Proposition one = Proposition::from_terms({t});
    if (!is_empty(one)) kept.push_back(t);
  }
  return Proposition::from_terms(std::move(kept));
}

bool Model::subset(const Proposition& a, const Proposition& b) const {
  std::uint64_t ra = regions(a);
  return (ra & regions(b)) == ra;
}

bool Model::intersects(const Proposition& a, const Proposition& b) const {
  return (regions(a) & regions(b)) != 0;
}

Proposition Model::total_ignorance() const { return reduce(dsmt::total_ignorance(frame_)); }

std::vector<Proposition> surviving_elements(const Model& model) {
  std::size_t n = model.frame().size();
  std::set<Proposition> seen;
  std::vector<Proposition> out;
  for (const auto& p : generate(model.frame())) {
    Proposition r = model.reduce(p);
    if (seen.insert(r).second) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [&](const Proposition& a, const Proposition& b) {
    std::size_t ca = model.cardinality(a), cb = model.cardinality(b);
    if (ca != cb) return ca < cb;
    return canonical_less(a, b, n);
  });
  return out;
}

}  // namespace dsmt
