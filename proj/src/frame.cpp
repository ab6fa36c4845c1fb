#include "dsmt/frame.hpp"

#include <stdexcept>
#include <unordered_set>

namespace dsmt {

Frame::Frame(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("frame: hypothesis names must be non-empty");
    if (!seen.insert(n).second)
      throw std::invalid_argument("frame: duplicate hypothesis name '" + n + "'");
  }
}

int Frame::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace dsmt
