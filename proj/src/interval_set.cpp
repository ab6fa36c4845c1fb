#include "dsmt/interval_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsmt {

namespace {

void check_piece(const IntervalPiece& p) {
  if (p.lo > p.hi) {
    std::ostringstream os;
    os << "interval piece has lo " << p.lo << " > hi " << p.hi;
    throw std::invalid_argument(os.str());
  }
  if (p.lo == p.hi && !(p.lo_closed && p.hi_closed))
    throw std::invalid_argument("degenerate interval piece must be closed");
}

// Union-merge of sorted pieces. Two pieces join when they overlap or abut
// with at least one closed endpoint at the junction.
std::vector<IntervalPiece> merged(std::vector<IntervalPiece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const IntervalPiece& a, const IntervalPiece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<IntervalPiece> out;
  for (const IntervalPiece& q : pieces) {
    if (!out.empty()) {
      IntervalPiece& c = out.back();
      bool joins = q.lo < c.hi || (q.lo == c.hi && (c.hi_closed || q.lo_closed));
      if (joins) {
        if (q.hi > c.hi) {
          c.hi = q.hi;
          c.hi_closed = q.hi_closed;
        } else if (q.hi == c.hi) {
          c.hi_closed = c.hi_closed || q.hi_closed;
        }
        continue;
      }
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace

IntervalSet IntervalSet::point(double x) { return interval(x, x, true, true); }

IntervalSet IntervalSet::interval(double lo, double hi, bool lo_closed, bool hi_closed) {
  return from_pieces({IntervalPiece{lo, hi, lo_closed, hi_closed}});
}

IntervalSet IntervalSet::from_pieces(std::vector<IntervalPiece> pieces) {
  for (const auto& p : pieces) check_piece(p);
  IntervalSet s;
  s.pieces_ = merged(std::move(pieces));
  return s;
}

bool IntervalSet::contains(double x, double tol) const {
  for (const auto& p : pieces_) {
    if (tol > 0.0) {
      if (x >= p.lo - tol && x <= p.hi + tol) return true;
    } else {
      bool above = p.lo_closed ? x >= p.lo : x > p.lo;
      bool below = p.hi_closed ? x <= p.hi : x < p.hi;
      if (above && below) return true;
    }
  }
  return false;
}

double IntervalSet::inf() const {
  if (empty()) throw std::logic_error("inf of empty interval set");
  return pieces_.front().lo;
}

double IntervalSet::sup() const {
  if (empty()) throw std::logic_error("sup of empty interval set");
  return pieces_.back().hi;
}

bool IntervalSet::inf_closed() const {
  if (empty()) throw std::logic_error("inf of empty interval set");
  return pieces_.front().lo_closed;
}

bool IntervalSet::sup_closed() const {
  if (empty()) throw std::logic_error("sup of empty interval set");
  return pieces_.back().hi_closed;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<IntervalPiece> out;
  for (const auto& a : pieces_) {
    for (const auto& b : other.pieces_) {
      IntervalPiece r;
      if (a.lo > b.lo) {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed;
      } else if (a.lo < b.lo) {
        r.lo = b.lo;
        r.lo_closed = b.lo_closed;
      } else {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed && b.lo_closed;
      }
      if (a.hi < b.hi) {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed;
      } else if (a.hi > b.hi) {
        r.hi = b.hi;
        r.hi_closed = b.hi_closed;
      } else {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed && b.hi_closed;
      }
      if (r.lo > r.hi) continue;
      if (r.lo == r.hi && !(r.lo_closed && r.hi_closed)) continue;
      out.push_back(r);
    }
  }
  IntervalSet s;
  s.pieces_ = merged(std::move(out));
  return s;
}

IntervalSet IntervalSet::clipped(double lo, double hi) const {
  return intersect(interval(lo, hi));
}

namespace {

template <typename Fn>
IntervalSet pairwise(const IntervalSet& a, const IntervalSet& b, Fn&& combine) {
  std::vector<IntervalPiece> out;
  out.reserve(a.pieces().size() * b.pieces().size());
  for (const auto& pa : a.pieces())
    for (const auto& pb : b.pieces()) {
      IntervalPiece r = combine(pa, pb);
      if (r.lo == r.hi) r.lo_closed = r.hi_closed = true;  // attained value
      out.push_back(r);
    }
  return IntervalSet::from_pieces(std::move(out));
}

}  // namespace

IntervalSet box_add(const IntervalSet& a, const IntervalSet& b) {
  return pairwise(a, b, [](const IntervalPiece& x, const IntervalPiece& y) {
    return IntervalPiece{x.lo + y.lo, x.hi + y.hi, x.lo_closed && y.lo_closed,
                         x.hi_closed && y.hi_closed};
  });
}

IntervalSet box_sub(const IntervalSet& a, const IntervalSet& b) {
  return pairwise(a, b, [](const IntervalPiece& x, const IntervalPiece& y) {
    return IntervalPiece{x.lo - y.hi, x.hi - y.lo, x.lo_closed && y.hi_closed,
                         x.hi_closed && y.lo_closed};
  });
}

IntervalSet box_mul(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& p : a.pieces())
    if (p.lo < 0.0) throw std::invalid_argument("box_mul: negative operand");
  for (const auto& p : b.pieces())
    if (p.lo < 0.0) throw std::invalid_argument("box_mul: negative operand");
  return pairwise(a, b, [](const IntervalPiece& x, const IntervalPiece& y) {
    return IntervalPiece{x.lo * y.lo, x.hi * y.hi, x.lo_closed && y.lo_closed,
                         x.hi_closed && y.hi_closed};
  });
}

}  // namespace dsmt
