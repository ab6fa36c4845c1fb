#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dsmt {

// Finite set of exhaustive hypotheses. The empty frame is allowed so the
// degenerate one-element lattice can be enumerated, but models and fusion
// require at least one hypothesis.
class Frame {
 public:
  Frame() = default;
  explicit Frame(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  // Index of the hypothesis with this name, or -1 when unknown.
  int index_of(std::string_view name) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace dsmt
