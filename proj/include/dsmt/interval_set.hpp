#pragma once

#include <vector>

namespace dsmt {

struct IntervalPiece {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  friend bool operator==(const IntervalPiece&, const IntervalPiece&) = default;
};

// Finite union of intervals and points on the real line, kept sorted and
// maximal (overlapping or compatibly abutting pieces are merged, e.g.
// (a,b] followed by (b,c) becomes (a,c)). Points are degenerate closed
// intervals. Values outside [0,1] are allowed; masses are clipped to the
// unit interval only when installed in a belief assignment.
class IntervalSet {
 public:
  IntervalSet() = default;  // the empty set

  static IntervalSet point(double x);
  static IntervalSet interval(double lo, double hi, bool lo_closed = true,
                              bool hi_closed = true);
  // Normalizes: sorts and merges. Throws on lo > hi and on a degenerate
  // piece with an open endpoint.
  static IntervalSet from_pieces(std::vector<IntervalPiece> pieces);

  const std::vector<IntervalPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  // With tol == 0 endpoint openness is honored exactly; with tol > 0 the
  // test is closed with that much slack.
  bool contains(double x, double tol = 0.0) const;

  double inf() const;
  double sup() const;
  bool inf_closed() const;
  bool sup_closed() const;

  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet clipped(double lo, double hi) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<IntervalPiece> pieces_;
};

// Piecewise sums/differences/products over all piece pairs. A result
// endpoint is closed only when both contributing endpoints are closed
// (a degenerate result piece is made a closed point, since the value is
// attained). Multiplication requires non-negative operands.
IntervalSet box_add(const IntervalSet& a, const IntervalSet& b);
IntervalSet box_sub(const IntervalSet& a, const IntervalSet& b);
IntervalSet box_mul(const IntervalSet& a, const IntervalSet& b);

}  // namespace dsmt
