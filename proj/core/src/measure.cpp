#include "ihstar/measure.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace ihstar {

std::string MeasureTuple::str() const {
  std::ostringstream os;
  os << '(' << d << ", " << i << ", " << c << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MeasureTuple& m) {
  return os << m.str();
}

std::uint32_t box_depth(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return 0;
    case Kind::Box:
      return 1 + box_depth(f.body());
    default:
      return std::max(box_depth(f.left()), box_depth(f.right()));
  }
}

namespace {

// Implication subformulas of f with an occurrence outside every box.
void outer_imps(const Formula& f, std::unordered_set<Formula, FormulaHash>& out) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
    case Kind::Box:
      return;
    case Kind::Imp:
      out.insert(f);
      outer_imps(f.left(), out);
      outer_imps(f.right(), out);
      return;
    default:
      outer_imps(f.left(), out);
      outer_imps(f.right(), out);
  }
}

std::uint32_t outer_connectives(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
    case Kind::Box:
      return 0;
    default:
      return 1 + outer_connectives(f.left()) + outer_connectives(f.right());
  }
}

}  // namespace

MeasureTuple measure(const Formula& f) {
  MeasureTuple m;
  m.d = box_depth(f);
  m.c = outer_connectives(f);
  std::unordered_set<Formula, FormulaHash> imps;
  outer_imps(f, imps);
  std::uint32_t i = 0;
  for (const Formula& e : imps) {
    std::unordered_set<Formula, FormulaHash> inner;
    outer_imps(e, inner);
    i = std::max<std::uint32_t>(i, static_cast<std::uint32_t>(inner.size()));
  }
  m.i = i;
  return m;
}

std::uint32_t rho(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
    case Kind::Box:
      return 0;
    case Kind::And:
    case Kind::Or:
      return std::max(rho(f.left()), rho(f.right()));
    case Kind::Imp:
      return std::max(rho(f.left()) + 1, rho(f.right()));
  }
  throw std::logic_error("unreachable");
}

bool is_noi(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
    case Kind::Box:
      return true;
    case Kind::Imp:
      return false;
    default:
      return is_noi(f.left()) && is_noi(f.right());
  }
}

bool is_nnil(const Formula& f) { return is_box_free(f) && rho(f) <= 1; }

bool is_nnil_box(const Formula& f) { return rho(f) <= 1; }

bool is_tnnil(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return true;
    case Kind::Box:
      return is_tnnil(f.body());
    case Kind::And:
    case Kind::Or:
      return is_tnnil(f.left()) && is_tnnil(f.right());
    case Kind::Imp:
      return is_noi(f.left()) && is_tnnil(f.left()) && is_tnnil(f.right());
  }
  throw std::logic_error("unreachable");
}

bool is_tnnil_box(const Formula& f) {
  // skeleton outside boxes may be arbitrary non-modal; each box body TNNIL
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return true;
    case Kind::Box:
      return is_tnnil(f.body());
    default:
      return is_tnnil_box(f.left()) && is_tnnil_box(f.right());
  }
}

ClassSet classify(const Formula& f) {
  ClassSet s;
  auto add = [&s](SyntaxClass c) { s.bits |= static_cast<std::uint8_t>(c); };
  if (is_nnil(f)) add(SyntaxClass::NNIL);
  if (is_nnil_box(f)) add(SyntaxClass::NNIL_Box);
  if (is_tnnil(f)) add(SyntaxClass::TNNIL);
  if (is_tnnil_box(f)) add(SyntaxClass::TNNIL_Box);
  if (is_noi(f)) add(SyntaxClass::NOI);
  return s;
}

}  // namespace ihstar
