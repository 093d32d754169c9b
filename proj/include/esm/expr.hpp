#pragma once

// Expressions for G-sets and representations.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*'? unary)*        juxtaposition multiplies: 2[C4/C2], 3L
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | '[' G ('/' H)? ']' | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// Whitespace is ignored. [G] abbreviates [G/e]. In G-set expressions `h` is
// [G/e] and products are Burnside products. In representation expressions
// the names are L, W, H, reg, rreg, sigma, the irreducible names (chi0,
// rho1, ...) and psi(l, expr).

#include <memory>
#include <string>
#include <vector>

#include "esm/burnside.hpp"
#include "esm/numeric.hpp"
#include "esm/repring.hpp"

namespace esm {

struct ExprAST {
  enum class Kind { Integer, Orbit, Name, Call, Negate, Add, Subtract, Multiply, Power };

  Kind kind = Kind::Integer;
  size_t pos = 0;  // offset in the source text
  Integer value;   // Integer literal, Power exponent
  std::string name;       // Name, Call; Orbit: the group part
  std::string subgroup;   // Orbit; empty for [G]
  std::vector<std::unique_ptr<ExprAST>> args;
};

// Throws InputError("syntax error at position ...") on malformed text.
std::unique_ptr<ExprAST> parse_expression(const std::string& text);

VirtualGSet parse_gset(const std::string& text, const LatticePtr& lattice);

struct ParsedRep {
  VirtualRep value;
  std::vector<std::string> notes;  // e.g. the real-to-complex reading of sigma
};

ParsedRep parse_rep_with_notes(const std::string& text, const RingPtr& ring);
VirtualRep parse_rep(const std::string& text, const RingPtr& ring);

// Renderings that parse back to the same value.
std::string render_gset(const VirtualGSet& x);  // "2*[C4/C2] - [C4/e]"
std::string render_rep(const VirtualRep& v);    // "2 + L + 3*L^2"

}  // namespace esm
