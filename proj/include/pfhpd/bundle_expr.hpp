#pragma once

// A small expression language for equivariant bundles:
//
//   expr   := term { "+" term }
//   term   := atom [ "*" ] [ "(" twist ")" ] [ "[" int "]" ]
//   atom   := "O" | "U" | "Q" | "K" | "Kperp" | "W" | "E_" digit | "F_" digit
//           | ("S^" int | "L^" int | "Sigma[" weight "]") "(" expr ")"
//           | "(" expr ")"
//   twist  := int [ "G" [ ("+"|"-") int "Y" ] | "Y" ]
//
// Whitespace is ignored. On gr(k,n) a bare twist "(t)" is t times the
// Plücker class; on ty(n) it is t·H_Y.

#include "pfhpd/cohom.hpp"
#include "pfhpd/objects.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfhpd {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
      : std::runtime_error(make_message(offset, expected, found)),
        offset_(offset),
        expected_(std::move(expected)) {}

  /// 1-based byte offset; input length + 1 at end of input.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string make_message(std::size_t offset, const std::vector<std::string>& expected,
                                  const std::string& found) {
    std::string s = "parse error at offset " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) s += i + 1 == expected.size() ? " or " : ", ";
      s += "'" + expected[i] + "'";
    }
    s += ", found " + found;
    return s;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Well-formed expression that does not denote a supported object.
class ElaborationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Twist {
  enum class Form { Plain, G, GY, Y };
  Form form = Form::Plain;
  Entry g = 0;
  Entry y = 0;
  Entry plain = 0;

  friend bool operator==(const Twist&, const Twist&) = default;
};

struct BundleExpr;
using ExprPtr = std::shared_ptr<const BundleExpr>;

struct BundleExpr {
  enum class Kind { Atom, Sym, Wedge, Schur, Sum };
  Kind kind = Kind::Atom;
  std::string atom;                // Atom
  Entry power = 0;                 // Sym, Wedge
  std::vector<Entry> weight;       // Schur
  std::vector<ExprPtr> children;   // one argument, or the summands of a Sum
  bool dual = false;
  std::optional<Twist> twist;
  std::optional<Entry> shift;

  bool has_suffix() const { return dual || twist.has_value() || shift.has_value(); }
};

inline bool operator==(const BundleExpr& a, const BundleExpr& b) {
  if (a.kind != b.kind || a.atom != b.atom || a.power != b.power || a.weight != b.weight ||
      a.dual != b.dual || a.twist != b.twist || a.shift != b.shift ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(*a.children[i] == *b.children[i])) return false;
  }
  return true;
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail({"+", "end of input"});
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(const std::string& tok) {
    skip();
    return s_.compare(pos_, tok.size(), tok) == 0;
  }

  bool accept(const std::string& tok) {
    if (!at(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(const std::string& tok) {
    if (!accept(tok)) fail({tok});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip();
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(pos_ + 1, std::move(expected), found);
  }

  Entry integer(bool allow_sign) {
    skip();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    skip();
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = digits;
      fail({"integer"});
    }
    if (pos_ - digits > 12) {
      pos_ = digits;
      fail({"integer of at most 12 digits"});
    }
    const Entry v = std::stoll(s_.substr(digits, pos_ - digits));
    return s_[start] == '-' ? -v : v;
  }

  ExprPtr expr() {
    std::vector<ExprPtr> terms{term()};
    while (accept("+")) terms.push_back(term());
    if (terms.size() == 1) return terms.front();
    auto sum = std::make_shared<BundleExpr>();
    sum->kind = BundleExpr::Kind::Sum;
    sum->children = std::move(terms);
    return sum;
  }

  static const std::vector<std::string>& atom_starts() {
    static const std::vector<std::string> v{"O",  "U",  "Q",  "K",      "Kperp", "W",
                                            "E_", "F_", "S^", "L^", "Sigma[", "("};
    return v;
  }

  ExprPtr term() {
    auto node = std::make_shared<BundleExpr>(atom());
    if (accept("*")) node->dual = true;
    if (accept("(")) {
      node->twist = twist();
      expect(")");
    }
    if (accept("[")) {
      node->shift = integer(true);
      expect("]");
    }
    return node;
  }

  Twist twist() {
    Twist t;
    const Entry first = integer(true);
    if (accept("G")) {
      t.g = first;
      t.form = Twist::Form::G;
      skip();
      if (at("+") || at("-")) {
        const bool minus = s_[pos_] == '-';
        ++pos_;
        const Entry y = integer(false);
        expect("Y");
        t.y = minus ? -y : y;
        t.form = Twist::Form::GY;
      }
    } else if (accept("Y")) {
      t.y = first;
      t.form = Twist::Form::Y;
    } else {
      t.plain = first;
    }
    return t;
  }

  BundleExpr atom() {
    BundleExpr a;
    if (accept("(")) {
      ExprPtr inner = expr();
      expect(")");
      skip();
      const bool suffix_follows = pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '(' ||
                                                       s_[pos_] == '[');
      if (!suffix_follows) return *inner;
      a.kind = BundleExpr::Kind::Sum;
      if (inner->kind == BundleExpr::Kind::Sum && !inner->has_suffix()) {
        a.children = inner->children;
      } else {
        a.children = {inner};
      }
      return a;
    }
    const bool sym = accept("S^");
    if (sym || accept("L^")) {
      a.kind = sym ? BundleExpr::Kind::Sym : BundleExpr::Kind::Wedge;
      a.power = integer(false);
      expect("(");
      a.children = {expr()};
      expect(")");
      return a;
    }
    if (accept("Sigma[")) {
      a.kind = BundleExpr::Kind::Schur;
      a.weight.push_back(integer(true));
      while (accept(",")) a.weight.push_back(integer(true));
      expect("]");
      expect("(");
      a.children = {expr()};
      expect(")");
      return a;
    }
    for (const char* name : {"Kperp", "E_", "F_", "O", "U", "Q", "K", "W"}) {
      if (accept(name)) {
        a.atom = name;
        if (a.atom == "E_" || a.atom == "F_") {
          skip();
          if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            fail({"digit"});
          }
          a.atom += s_[pos_++];
        }
        return a;
      }
    }
    fail(atom_starts());
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline std::string format_twist(const Twist& t) {
  switch (t.form) {
    case Twist::Form::Plain: return std::to_string(t.plain);
    case Twist::Form::G: return std::to_string(t.g) + "G";
    case Twist::Form::GY:
      return std::to_string(t.g) + "G " + (t.y < 0 ? "- " : "+ ") +
             std::to_string(t.y < 0 ? -t.y : t.y) + "Y";
    case Twist::Form::Y: return std::to_string(t.y) + "Y";
  }
  return "";
}

inline std::string format_suffixes(const BundleExpr& e) {
  std::string s;
  if (e.dual) s += "*";
  if (e.twist) s += "(" + format_twist(*e.twist) + ")";
  if (e.shift) s += "[" + std::to_string(*e.shift) + "]";
  return s;
}

std::string format_term(const BundleExpr& e);

inline std::string format_expr(const BundleExpr& e) {
  if (e.kind == BundleExpr::Kind::Sum && !e.has_suffix()) {
    std::string s;
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      if (i) s += " + ";
      s += format_term(*e.children[i]);
    }
    return s;
  }
  return format_term(e);
}

inline std::string format_term(const BundleExpr& e) {
  std::string s;
  switch (e.kind) {
    case BundleExpr::Kind::Atom: s = e.atom; break;
    case BundleExpr::Kind::Sym: s = "S^" + std::to_string(e.power) + "(" + format_expr(*e.children[0]) + ")"; break;
    case BundleExpr::Kind::Wedge: s = "L^" + std::to_string(e.power) + "(" + format_expr(*e.children[0]) + ")"; break;
    case BundleExpr::Kind::Schur: {
      s = "Sigma[";
      for (std::size_t i = 0; i < e.weight.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.weight[i]);
      }
      s += "](" + format_expr(*e.children[0]) + ")";
      break;
    }
    case BundleExpr::Kind::Sum: {
      s = "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += " + ";
        s += format_term(*e.children[i]);
      }
      s += ")";
      break;
    }
  }
  return s + format_suffixes(e);
}

}  // namespace detail

inline ExprPtr parse_bundle_expr(const std::string& text) {
  return detail::ExprParser(text).parse();
}

/// Canonical text; reparses to an equal tree.
inline std::string format_bundle_expr(const BundleExpr& e) { return detail::format_expr(e); }

/// "gr(k,n)" or "ty(n)".
inline Space parse_space(const std::string& text) {
  static const std::regex gr(R"(^\s*gr\(\s*(\d{1,3})\s*,\s*(\d{1,3})\s*\)\s*$)");
  static const std::regex ty(R"(^\s*ty\(\s*(\d{1,3})\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, gr)) return Space::gr(std::stoul(m[1].str()), std::stoul(m[2].str()));
  if (std::regex_match(text, m, ty)) return Space::ty(std::stoul(m[1].str()));
  throw std::invalid_argument("space must be gr(k,n) or ty(n), got '" + text + "'");
}

struct Elaborated {
  EquivariantObject object;
  std::vector<std::string> warnings;
};

namespace detail {

/// A tautological bundle, W, or O, possibly dualized and twisted by a line
/// bundle: the arguments Schur functors are applied to.
struct Atomic {
  enum class Slot { Beta, Gamma, Coeff, Line };
  Slot slot = Slot::Line;
  bool dual = false;  // true when the bundle is the dual of the slot's natural one
  std::size_t rank = 1;
  Entry g = 0;
  Entry y = 0;
};

struct Value {
  EquivariantObject object;
  std::optional<std::vector<Atomic>> atomics;  // set when the value is a sum of atomics
};

class Elaborator {
 public:
  explicit Elaborator(Space space) : space_(space) {}

  Value eval(const BundleExpr& e) {
    Value v = eval_core(e);
    if (e.dual) {
      v.object = v.object.dual();
      if (v.atomics) {
        for (auto& a : *v.atomics) {
          a.dual = !a.dual;
          a.g = -a.g;
          a.y = -a.y;
        }
      }
    }
    if (e.twist) {
      const auto [g, y] = twist_classes(*e.twist);
      v.object = v.object.twisted(g, y);
      if (v.atomics) {
        for (auto& a : *v.atomics) {
          a.g += g;
          a.y += y;
        }
      }
    }
    if (e.shift && *e.shift != 0) {
      v.object = v.object.shifted(*e.shift);
      v.atomics.reset();
    }
    return v;
  }

  std::vector<std::string> warnings;

 private:
  std::pair<Entry, Entry> twist_classes(const Twist& t) const {
    switch (t.form) {
      case Twist::Form::Plain:
        return space_.is_ty() ? std::make_pair(Entry(0), t.plain) : std::make_pair(t.plain, Entry(0));
      case Twist::Form::G: return {t.g, 0};
      case Twist::Form::GY:
      case Twist::Form::Y:
        if (!space_.is_ty() && t.y != 0) {
          throw ElaborationError("H_Y twists only exist on ty(n), not on " + space_.name());
        }
        return {t.g, t.y};
    }
    return {0, 0};
  }

  std::size_t k() const { return space_.base.k; }
  std::size_t n() const { return space_.n(); }

  EquivariantObject build(const Atomic& a, const std::vector<Entry>& lambda) const {
    // lambda has length a.rank
    const DominantWeight w(lambda);
    const DominantWeight wd = a.dual ? dual_weight(w) : w;
    Entry size = 0;
    for (Entry x : lambda) size += x;
    EquivariantObject o(space_);
    const SchurBundle triv = trivial_bundle(space_.base);
    switch (a.slot) {
      case Atomic::Slot::Beta: o.add_term(SchurBundle{wd, triv.gamma}, 0, 0, VirtualRep::trivial(n())); break;
      case Atomic::Slot::Gamma: o.add_term(SchurBundle{triv.beta, wd}, 0, 0, VirtualRep::trivial(n())); break;
      case Atomic::Slot::Coeff: o.add_term(triv, 0, 0, VirtualRep::irreducible(wd)); break;
      case Atomic::Slot::Line: o.add_term(triv, 0, 0, VirtualRep::trivial(n())); break;
    }
    // For a line bundle Σ^{(m)} of the underlying trivial bundle is itself.
    return o.twisted(a.g * size, a.y * size);
  }

  EquivariantObject atomic_object(const Atomic& a) const {
    std::vector<Entry> lambda(a.rank, 0);
    lambda[0] = 1;
    return build(a, lambda);
  }

  /// Σ^λ(a); zero (with a warning) when λ has more rows than rank a.
  EquivariantObject schur(const Atomic& a, std::vector<Entry> lambda, const std::string& what) {
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
      if (lambda[i] < lambda[i + 1]) throw ElaborationError(what + ": weight is not nonincreasing");
    }
    if (lambda.size() > a.rank) {
      for (std::size_t i = a.rank; i < lambda.size(); ++i) {
        if (lambda[i] < 0) {
          throw ElaborationError(what + ": weight longer than the rank " + std::to_string(a.rank) +
                                 " with negative entries");
        }
        if (lambda[i] > 0) {
          warnings.push_back(what + " vanishes: more than " + std::to_string(a.rank) +
                             " nonzero rows on a bundle of rank " + std::to_string(a.rank));
          return EquivariantObject::zero(space_);
        }
      }
      lambda.resize(a.rank);
    } else if (lambda.size() < a.rank) {
      if (!lambda.empty() && lambda.back() < 0) {
        throw ElaborationError(what + ": weights with negative entries need the full rank " +
                               std::to_string(a.rank));
      }
      lambda.resize(a.rank, 0);
    }
    return build(a, lambda);
  }

  /// S^m or Λ^m of a sum of atomics.
  EquivariantObject power_of_sum(bool sym, Entry m, const std::vector<Atomic>& parts,
                                 std::size_t from, const std::string& what) {
    if (parts.size() == 1) return power(sym, m, parts[from], what, false);
    if (from + 1 == parts.size()) return power(sym, m, parts[from], what);
    EquivariantObject out(space_);
    for (Entry i = 0; i <= m; ++i) {
      EquivariantObject head = power(sym, i, parts[from], what);
      if (head.is_zero()) continue;
      out += tensor(head, power_of_sum(sym, m - i, parts, from + 1, what));
    }
    return out;
  }

  EquivariantObject power(bool sym, Entry m, const Atomic& a, const std::string& what,
                          bool quiet = true) {
    if (m == 0) return EquivariantObject::structure_sheaf(space_);
    if (sym) return schur(a, {m}, what);
    if (static_cast<std::size_t>(m) > a.rank && quiet) return EquivariantObject::zero(space_);
    return schur(a, std::vector<Entry>(static_cast<std::size_t>(m), 1), what);
  }

  Value eval_core(const BundleExpr& e) {
    switch (e.kind) {
      case BundleExpr::Kind::Atom: return atom(e.atom);
      case BundleExpr::Kind::Sum: {
        Value v{EquivariantObject(space_), std::vector<Atomic>{}};
        for (const auto& c : e.children) {
          Value part = eval(*c);
          v.object += part.object;
          if (v.atomics && part.atomics) {
            v.atomics->insert(v.atomics->end(), part.atomics->begin(), part.atomics->end());
          } else {
            v.atomics.reset();
          }
        }
        return v;
      }
      case BundleExpr::Kind::Sym:
      case BundleExpr::Kind::Wedge:
      case BundleExpr::Kind::Schur: {
        const std::string what = format_term(e);
        Value arg = eval(*e.children[0]);
        if (!arg.atomics || arg.atomics->empty()) {
          throw ElaborationError(what + ": Schur functors apply to O, W, U, Q, K, Kperp, their "
                                 "duals and twists, and (for S^m, L^m) sums of these");
        }
        if (e.kind == BundleExpr::Kind::Schur) {
          if (arg.atomics->size() != 1) {
            throw ElaborationError(what + ": Sigma[...] of a sum is not supported");
          }
          return {schur(arg.atomics->front(), e.weight, what), std::nullopt};
        }
        if (e.power < 0) throw ElaborationError(what + ": negative power");
        return {power_of_sum(e.kind == BundleExpr::Kind::Sym, e.power, *arg.atomics, 0, what),
                std::nullopt};
      }
    }
    throw std::logic_error("unreachable");
  }

  Value atomic_value(Atomic a) const { return {atomic_object(a), std::vector<Atomic>{a}}; }

  Value atom(const std::string& name) const {
    using Slot = Atomic::Slot;
    if (name == "O") return atomic_value({Slot::Line, false, 1, 0, 0});
    if (name == "U" || name == "K") return atomic_value({Slot::Beta, true, k(), 0, 0});
    if (name == "Q") return atomic_value({Slot::Gamma, true, space_.base.perp_rank(), 0, 0});
    if (name == "Kperp") return atomic_value({Slot::Gamma, false, space_.base.perp_rank(), 0, 0});
    if (name == "W") return atomic_value({Slot::Coeff, true, n(), 0, 0});
    if (name[0] == 'E') {
      const int idx = name[2] - '0';
      if (space_.is_ty() || k() != 2 || idx > 2) {
        throw ElaborationError(name + " is defined on gr(2,n) for indices 0, 1, 2");
      }
      return {object_E(n(), idx), std::nullopt};
    }
    if (name[0] == 'F') {
      const int idx = name[2] - '0';
      if (!space_.is_ty() || idx > 2) {
        throw ElaborationError(name + " is defined on ty(n) for indices 0, 1, 2");
      }
      return {object_F(n(), idx), std::nullopt};
    }
    throw ElaborationError("unknown atom " + name);
  }

  Space space_;
};

}  // namespace detail

inline Elaborated elaborate(const BundleExpr& e, const Space& space) {
  detail::Elaborator el(space);
  detail::Value v = el.eval(e);
  return {std::move(v.object), std::move(el.warnings)};
}

inline Elaborated parse_bundle(const std::string& text, const Space& space) {
  return elaborate(*parse_bundle_expr(text), space);
}

}  // namespace pfhpd
