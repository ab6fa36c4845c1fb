#include "dsmt/proposition.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_set>

namespace dsmt {

namespace {

// Lexicographic comparison of the ascending index sequences of two terms.
// The lowest differing index decides; the term holding it comes first.
bool term_lex_less(Term a, Term b) {
  if (a == b) return false;
  Term diff = a ^ b;
  Term low = diff & (~diff + 1u);
  return (a & low) != 0;
}

bool term_less(Term a, Term b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa > pb;
  return term_lex_less(a, b);
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  // Absorption: a term is redundant if another term's index set is a strict
  // subset of it (smaller intersection covers a larger region).
  std::vector<Term> kept;
  kept.reserve(terms.size());
  for (Term t : terms) {
    bool absorbed = false;
    for (Term s : terms) {
      if (s != t && (s & t) == s) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(t);
  }
  std::sort(kept.begin(), kept.end(), term_less);
  terms = std::move(kept);
}

}  // namespace

bool operator<(const Proposition& a, const Proposition& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                      b.terms_.end(), term_less);
}

Proposition Proposition::singleton(std::size_t index) {
  Proposition p;
  p.terms_.push_back(Term{1} << index);
  return p;
}

Proposition Proposition::from_terms(std::vector<Term> terms) {
  for (Term t : terms)
    if (t == 0) throw std::invalid_argument("proposition: empty term");
  canonicalize(terms);
  Proposition p;
  p.terms_ = std::move(terms);
  return p;
}

Proposition meet(const Proposition& a, const Proposition& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (Term s : a.terms())
    for (Term t : b.terms()) terms.push_back(s | t);
  return Proposition::from_terms(std::move(terms));
}

Proposition join(const Proposition& a, const Proposition& b) {
  std::vector<Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Proposition::from_terms(std::move(terms));
}

Proposition total_ignorance(const Frame& frame) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < frame.size(); ++i) terms.push_back(Term{1} << i);
  return Proposition::from_terms(std::move(terms));
}

Proposition hypothesis_union(const Proposition& p) {
  Term all = 0;
  for (Term t : p.terms()) all |= t;
  std::vector<Term> singles;
  for (std::size_t i = 0; all >> i; ++i)
    if (all & (Term{1} << i)) singles.push_back(Term{1} << i);
  return Proposition::from_terms(std::move(singles));
}

namespace {

struct Token {
  enum Kind { Ident, And, Or, LParen, RParen, End } kind;
  std::string text;
  std::size_t pos;  // 1-based column of first byte
};

bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;  // non-ASCII allowed in names
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t pos = i + 1;
    if (c == '&') {
      out.push_back({Token::And, "&", pos});
      ++i;
    } else if (c == '|') {
      out.push_back({Token::Or, "|", pos});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", pos});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", pos});
      ++i;
    } else if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Ident, std::string(text.substr(i, j - i)), pos});
      i = j;
    } else {
      throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", pos);
    }
  }
  out.push_back({Token::End, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Frame& frame)
      : tokens_(std::move(tokens)), frame_(frame) {}

  Proposition run() {
    Proposition p = expr();
    if (cur().kind != Token::End)
      throw ParseError("unexpected '" + cur().text + "'", cur().pos);
    return p;
  }

 private:
  const Token& cur() const { return tokens_[at_]; }
  void advance() { ++at_; }

  Proposition expr() {
    Proposition p = term();
    while (cur().kind == Token::Or) {
      advance();
      p = join(p, term());
    }
    return p;
  }

  Proposition term() {
    Proposition p = factor();
    while (cur().kind == Token::And) {
      advance();
      p = meet(p, factor());
    }
    return p;
  }

  Proposition factor() {
    if (cur().kind == Token::LParen) {
      std::size_t open = cur().pos;
      advance();
      Proposition p = expr();
      if (cur().kind != Token::RParen) throw ParseError("missing ')' for '(' here", open);
      advance();
      return p;
    }
    if (cur().kind == Token::Ident) {
      const Token& tok = cur();
      advance();
      int idx = frame_.index_of(tok.text);
      if (idx >= 0) return Proposition::singleton(static_cast<std::size_t>(idx));
      if (tok.text == "empty" || tok.text == "∅") return Proposition::empty();
      throw ParseError("unknown identifier '" + tok.text + "'", tok.pos);
    }
    throw ParseError("expected an identifier or '('", cur().pos);
  }

  std::vector<Token> tokens_;
  const Frame& frame_;
  std::size_t at_ = 0;
};

}  // namespace

Proposition parse(std::string_view text, const Frame& frame) {
  return Parser(lex(text), frame).run();
}

std::string format(const Proposition& p, const Frame& frame) {
  if (p.is_empty()) return "∅";
  std::string out;
  for (std::size_t k = 0; k < p.terms().size(); ++k) {
    if (k > 0) out += " | ";
    Term t = p.terms()[k];
    bool parens = p.terms().size() > 1 && std::popcount(t) > 1;
    if (parens) out += '(';
    bool first = true;
    for (std::size_t i = 0; t >> i; ++i) {
      if (!(t & (Term{1} << i))) continue;
      if (!first) out += " & ";
      out += frame.name(i);
      first = false;
    }
    if (parens) out += ')';
  }
  return out;
}

std::uint64_t free_regions(const Proposition& p, std::size_t n) {
  if (n > 6) throw std::invalid_argument("free_regions: at most 6 hypotheses supported");
  std::uint64_t mask = 0;
  std::uint32_t parts = (n == 0) ? 0 : ((std::uint32_t{1} << n) - 1);
  for (std::uint32_t part = 1; part <= parts; ++part)
    for (Term t : p.terms())
      if ((part & t) == t) {
        mask |= std::uint64_t{1} << (part - 1);
        break;
      }
  return mask;
}

bool canonical_less(const Proposition& a, const Proposition& b, std::size_t n) {
  int ca = std::popcount(free_regions(a, n));
  int cb = std::popcount(free_regions(b, n));
  if (ca != cb) return ca < cb;
  return a < b;
}

namespace {

// Region bit set -> antichain of its minimal parts.
Proposition regions_to_proposition(std::uint64_t mask, std::size_t n) {
  std::uint32_t parts = (n == 0) ? 0 : ((std::uint32_t{1} << n) - 1);
  std::vector<Term> terms;
  for (std::uint32_t part = 1; part <= parts; ++part) {
    if (!(mask & (std::uint64_t{1} << (part - 1)))) continue;
    bool minimal = true;
    for (std::uint32_t sub = 1; sub < part && minimal; ++sub)
      if ((sub & part) == sub && (mask & (std::uint64_t{1} << (sub - 1)))) minimal = false;
    if (minimal) terms.push_back(part);
  }
  return Proposition::from_terms(std::move(terms));
}

}  // namespace

std::vector<Proposition> generate(const Frame& frame) {
  std::size_t n = frame.size();
  if (n > 6) throw std::invalid_argument("generate: at most 6 hypotheses supported");

  // Closure from the singletons under meet/join, computed on region bit
  // sets where meet is AND and join is OR; the region map is an injective
  // lattice homomorphism, so closing masks closes the lattice.
  std::vector<std::uint64_t> elems;
  std::unordered_set<std::uint64_t> seen;
  auto add = [&](std::uint64_t m) {
    if (seen.insert(m).second) elems.push_back(m);
  };
  seen.reserve(1 << 14);
  add(0);  // empty proposition
  for (std::size_t i = 0; i < n; ++i)
    add(free_regions(Proposition::singleton(i), n));
  for (std::size_t i = 1; i < elems.size(); ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      std::uint64_t a = elems[i], b = elems[j];
      std::uint64_t lo = a & b;
      if (lo == a || lo == b) continue;  // comparable pair adds nothing
      add(lo);
      add(a | b);
    }
  }

  std::vector<Proposition> out;
  out.reserve(elems.size());
  for (std::uint64_t m : elems) out.push_back(regions_to_proposition(m, n));
  std::sort(out.begin(), out.end(),
            [n](const Proposition& a, const Proposition& b) { return canonical_less(a, b, n); });
  return out;
}

}  // namespace dsmt
