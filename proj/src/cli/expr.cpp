#include "esm/expr.hpp"

#include <cctype>

#include "esm/error.hpp"

namespace esm {

namespace {

[[noreturn]] void syntax_error(size_t pos, const std::string& what) {
  fail_input("syntax error at position " + std::to_string(pos) + ": " + what);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::unique_ptr<ExprAST> parse() {
    skip();
    if (i_ == s_.size()) syntax_error(i_, "empty expression");
    auto e = expr();
    skip();
    if (i_ != s_.size()) syntax_error(i_, std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_atom() {
    skip();
    if (i_ == s_.size()) return false;
    const char c = s_[i_];
    return c == '[' || c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  static std::unique_ptr<ExprAST> node(ExprAST::Kind k, size_t pos) {
    auto n = std::make_unique<ExprAST>();
    n->kind = k;
    n->pos = pos;
    return n;
  }
  static std::unique_ptr<ExprAST> binary(ExprAST::Kind k, size_t pos, std::unique_ptr<ExprAST> a,
                                         std::unique_ptr<ExprAST> b) {
    auto n = node(k, pos);
    n->args.push_back(std::move(a));
    n->args.push_back(std::move(b));
    return n;
  }

  std::unique_ptr<ExprAST> expr() {
    auto lhs = term();
    while (at('+') || at('-')) {
      const size_t pos = i_;
      const char op = s_[i_++];
      lhs = binary(op == '+' ? ExprAST::Kind::Add : ExprAST::Kind::Subtract, pos, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<ExprAST> term() {
    auto lhs = unary();
    for (;;) {
      if (at('*')) {
        const size_t pos = i_++;
        lhs = binary(ExprAST::Kind::Multiply, pos, std::move(lhs), unary());
      } else if (starts_atom()) {
        lhs = binary(ExprAST::Kind::Multiply, i_, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<ExprAST> unary() {
    if (at('-')) {
      auto n = node(ExprAST::Kind::Negate, i_++);
      n->args.push_back(unary());
      return n;
    }
    auto base = atom();
    if (at('^')) {
      auto n = node(ExprAST::Kind::Power, i_++);
      skip();
      if (i_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
        syntax_error(i_, "exponent must be a nonnegative integer literal");
      n->value = integer();
      n->args.push_back(std::move(base));
      return n;
    }
    return base;
  }

  Integer integer() {
    const size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return Integer(s_.substr(start, i_ - start));
  }

  std::unique_ptr<ExprAST> atom() {
    skip();
    if (i_ == s_.size()) syntax_error(i_, "unexpected end of expression");
    const size_t pos = i_;
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = node(ExprAST::Kind::Integer, pos);
      n->value = integer();
      return n;
    }
    if (c == '(') {
      ++i_;
      auto e = expr();
      if (!at(')')) syntax_error(i_, "expected ')'");
      ++i_;
      return e;
    }
    if (c == '[') {
      const size_t close = s_.find(']', i_);
      if (close == std::string::npos) syntax_error(i_, "unterminated '['");
      std::string body;
      for (size_t k = i_ + 1; k < close; ++k)
        if (!std::isspace(static_cast<unsigned char>(s_[k]))) body += s_[k];
      i_ = close + 1;
      auto n = node(ExprAST::Kind::Orbit, pos);
      const size_t slash = body.find('/');
      n->name = body.substr(0, slash);
      if (slash != std::string::npos) {
        n->subgroup = body.substr(slash + 1);
        if (n->subgroup.empty()) syntax_error(pos, "empty subgroup label");
      }
      if (n->name.empty()) syntax_error(pos, "empty group label");
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string name = s_.substr(pos, i_ - pos);
      if (at('(')) {
        auto n = node(ExprAST::Kind::Call, pos);
        n->name = name;
        ++i_;
        n->args.push_back(expr());
        while (at(',')) {
          ++i_;
          n->args.push_back(expr());
        }
        if (!at(')')) syntax_error(i_, "expected ')'");
        ++i_;
        return n;
      }
      auto n = node(ExprAST::Kind::Name, pos);
      n->name = name;
      return n;
    }
    syntax_error(pos, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  size_t i_ = 0;
};

std::string at_pos(const ExprAST& e) { return " (position " + std::to_string(e.pos) + ")"; }

unsigned long exponent_of(const ExprAST& e) {
  if (!e.value.fits_ulong_p() || e.value > 4096) fail_input("exponent too large" + at_pos(e));
  return e.value.get_ui();
}

void check_group(const ExprAST& e, const SubgroupLattice& lat) {
  const auto& d = lat.group().descriptor();
  bool same = e.name == lat.group().label();
  if (!same && d) {
    try {
      same = GroupDescriptor::parse(e.name) == *d;
    } catch (const InputError&) {
    }
  }
  if (!same) fail_input("orbit [" + e.name + "/...] does not belong to " + lat.group().label() + at_pos(e));
}

size_t orbit_class(const ExprAST& e, const SubgroupLattice& lat) {
  check_group(e, lat);
  if (e.subgroup.empty()) return 0;
  const auto h = lat.find_class(e.subgroup);
  if (!h) fail_input("unknown subgroup '" + e.subgroup + "' of " + lat.group().label() + at_pos(e));
  return static_cast<size_t>(*h);
}

VirtualGSet eval_gset(const ExprAST& e, const LatticePtr& lat) {
  using K = ExprAST::Kind;
  switch (e.kind) {
    case K::Integer: return VirtualGSet::unit(lat) * Rational(e.value);
    case K::Orbit: return VirtualGSet::orbit(lat, orbit_class(e, *lat));
    case K::Name:
      if (e.name == "h") return VirtualGSet::free_orbit(lat);
      fail_input("unknown G-set name '" + e.name + "'" + at_pos(e));
    case K::Call: fail_input("unknown function '" + e.name + "' for G-sets" + at_pos(e));
    case K::Negate: return -eval_gset(*e.args[0], lat);
    case K::Add: return eval_gset(*e.args[0], lat) + eval_gset(*e.args[1], lat);
    case K::Subtract: return eval_gset(*e.args[0], lat) - eval_gset(*e.args[1], lat);
    case K::Multiply: return bmul(eval_gset(*e.args[0], lat), eval_gset(*e.args[1], lat));
    case K::Power: return bpow(eval_gset(*e.args[0], lat), exponent_of(e));
  }
  fail_internal("unhandled expression kind");
}

// A complex representation plus a multiple of the real sign representation of C_2.
struct RepValue {
  VirtualRep v;
  Integer sigma = 0;

  bool is_scalar() const {
    if (sigma != 0) return false;
    for (size_t i = 1; i < v.coeffs().size(); ++i)
      if (v.coeff(i) != 0) return false;
    return true;
  }
};

RepValue eval_rep(const ExprAST& e, const RingPtr& ring);

RepValue rep_name(const ExprAST& e, const RingPtr& ring) {
  const auto& d = ring->descriptor();
  const bool cyclic = ring->is_cyclic();
  if (e.name == "W") {
    if (!cyclic) fail_input("W needs a cyclic group; use H over " + ring->group().label() + at_pos(e));
    return {rep_W(ring, d.order())};
  }
  if (e.name == "H") {
    if (cyclic) fail_input("H needs a quaternion or dicyclic group; use W over " + ring->group().label() + at_pos(e));
    return {rep_H(ring, d.param)};
  }
  if (e.name == "reg") return {rep_regular(ring)};
  if (e.name == "rreg") return {rep_reduced_regular(ring)};
  if (e.name == "sigma") {
    if (!(cyclic && d.order() == 2)) fail_input("sigma is only defined over C2" + at_pos(e));
    return {VirtualRep(ring), 1};
  }
  if (const auto i = ring->find_irrep(e.name)) return {VirtualRep::irreducible(ring, *i)};
  fail_input("unknown representation '" + e.name + "' for " + ring->group().label() + at_pos(e));
}

RepValue eval_rep(const ExprAST& e, const RingPtr& ring) {
  using K = ExprAST::Kind;
  switch (e.kind) {
    case K::Integer: return {VirtualRep::one(ring) * Rational(e.value)};
    case K::Orbit: fail_input("orbit terms are G-sets, not representations" + at_pos(e));
    case K::Name: return rep_name(e, ring);
    case K::Call: {
      if (e.name != "psi") fail_input("unknown function '" + e.name + "'" + at_pos(e));
      if (e.args.size() != 2) fail_input("psi takes (l, expr)" + at_pos(e));
      const RepValue l = eval_rep(*e.args[0], ring);
      if (!l.is_scalar() || l.v.coeff(0) < 1 || !l.v.coeff(0).get_den().fits_slong_p() ||
          !l.v.coeff(0).get_num().fits_slong_p())
        fail_input("psi index must be a positive integer" + at_pos(e));
      const RepValue x = eval_rep(*e.args[1], ring);
      if (x.sigma != 0) fail_input("psi of sigma is not supported" + at_pos(e));
      return {adams(l.v.coeff(0).get_num().get_si(), x.v)};
    }
    case K::Negate: {
      RepValue a = eval_rep(*e.args[0], ring);
      return {-a.v, -a.sigma};
    }
    case K::Add:
    case K::Subtract: {
      RepValue a = eval_rep(*e.args[0], ring);
      const RepValue b = eval_rep(*e.args[1], ring);
      if (e.kind == K::Add) return {a.v + b.v, a.sigma + b.sigma};
      return {a.v - b.v, a.sigma - b.sigma};
    }
    case K::Multiply: {
      const RepValue a = eval_rep(*e.args[0], ring);
      const RepValue b = eval_rep(*e.args[1], ring);
      if (a.sigma == 0 && b.sigma == 0) return {a.v * b.v};
      const RepValue& scalar = a.is_scalar() ? a : b;
      const RepValue& other = a.is_scalar() ? b : a;
      if (!scalar.is_scalar()) fail_input("sigma can only be scaled by integers" + at_pos(e));
      const Rational k = scalar.v.coeff(0);
      return {other.v * k, other.sigma * to_integer(k)};
    }
    case K::Power: {
      const RepValue a = eval_rep(*e.args[0], ring);
      if (a.sigma != 0) fail_input("powers of sigma are not supported" + at_pos(e));
      VirtualRep out = VirtualRep::one(ring);
      for (unsigned long k = exponent_of(e); k > 0; --k) out = out * a.v;
      return {out};
    }
  }
  fail_internal("unhandled expression kind");
}

}  // namespace

std::unique_ptr<ExprAST> parse_expression(const std::string& text) { return Parser(text).parse(); }

VirtualGSet parse_gset(const std::string& text, const LatticePtr& lattice) {
  return eval_gset(*parse_expression(text), lattice);
}

ParsedRep parse_rep_with_notes(const std::string& text, const RingPtr& ring) {
  const RepValue r = eval_rep(*parse_expression(text), ring);
  ParsedRep out{r.v, {}};
  if (r.sigma != 0) {
    if (r.sigma % 2 != 0)
      fail_input("real sign multiplicity " + r.sigma.get_str() + " is odd and has no complex form");
    const Integer half = r.sigma / 2;
    out.value += rep_line(ring, 1) * Rational(half);
    out.notes.push_back(r.sigma.get_str() + "*sigma read as the complex representation " +
                        (rep_line(ring, 1) * Rational(half)).to_string());
  }
  return out;
}

VirtualRep parse_rep(const std::string& text, const RingPtr& ring) { return parse_rep_with_notes(text, ring).value; }

std::string render_gset(const VirtualGSet& x) {
  if (!x.is_integral()) fail_input("only integral G-sets have an expression form");
  std::string out;
  const auto& lat = x.lat();
  for (size_t h = 0; h < lat.size(); ++h) {
    const Rational& c = x.coeff(h);
    if (c == 0) continue;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (abs(c) != 1) out += to_string(abs(c)) + "*";
    out += "[" + lat.group().label() + "/" + lat.at(h).label + "]";
  }
  return out.empty() ? "0" : out;
}

std::string render_rep(const VirtualRep& v) {
  if (!v.is_integral()) fail_input("only integral representations have an expression form");
  return v.to_string();
}

}  // namespace esm
