#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dsmt/frame.hpp"

namespace dsmt {

// A term is one intersection of hypotheses, stored as a bit set over frame
// indices (bit i set means hypothesis i participates in the intersection).
using Term = std::uint32_t;

// Element of the lattice generated from a frame by & (intersection) and
// | (union). A proposition is the union of the intersections listed in
// `terms`, kept as an antichain: no term's index set contains another's,
// so absorption is already applied and equality is structural. Terms are
// ordered with the narrower intersections (more factors) first, ties broken
// by the smallest participating hypothesis index. The empty term list is
// the empty proposition.
class Proposition {
 public:
  Proposition() = default;

  static Proposition empty() { return Proposition(); }
  static Proposition singleton(std::size_t index);
  // Canonicalizes: drops superset terms, dedupes, sorts.
  static Proposition from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_empty() const { return terms_.empty(); }

  friend bool operator==(const Proposition&, const Proposition&) = default;
  // Structural order; usable as a map key. Display order is canonical_less.
  friend bool operator<(const Proposition& a, const Proposition& b);

 private:
  std::vector<Term> terms_;
};

// Lattice operations. Both arguments must be over the same frame.
Proposition meet(const Proposition& a, const Proposition& b);
Proposition join(const Proposition& a, const Proposition& b);

// Union of every hypothesis in the frame.
Proposition total_ignorance(const Frame& frame);

// Union of all hypotheses appearing anywhere in p's terms.
Proposition hypothesis_union(const Proposition& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }  // 1-based column

 private:
  std::size_t position_;
};

// expr := term ('|' term)* ; term := factor ('&' factor)* ; factor := IDENT
// | '(' expr ')'. '&' binds tighter than '|'; whitespace is insignificant.
// The empty proposition is written "∅" or "empty" (hypothesis names shadow
// the keyword). Throws ParseError on bad syntax or unknown identifiers.
Proposition parse(std::string_view text, const Frame& frame);

// Inverse of parse up to canonical form: parse(format(p, f), f) == p.
std::string format(const Proposition& p, const Frame& frame);

// Bit set of the free-model Venn parts covered by p. Part masks run over
// 1..2^n-1; part P occupies bit P-1. Requires frame size <= 6.
std::uint64_t free_regions(const Proposition& p, std::size_t n);

// Display/enumeration order: free-model part count, then structural.
bool canonical_less(const Proposition& a, const Proposition& b, std::size_t n);

// Every distinct lattice element over the frame, empty proposition
// included, in canonical order. Sizes follow the Dedekind numbers
// 1, 2, 5, 19, 167, 7580 for 0..5 hypotheses. Supports up to 6 hypotheses
// (enumeration cost grows with the Dedekind numbers).
std::vector<Proposition> generate(const Frame& frame);

}  // namespace dsmt
