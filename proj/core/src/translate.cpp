#include "ihstar/translate.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "ihstar/measure.hpp"

namespace ihstar {

Formula box_translate(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return Formula::boxdot(f);
    case Kind::Bot:
    case Kind::Top:
      return f;
    case Kind::And:
      return Formula::conj(box_translate(f.left()), box_translate(f.right()));
    case Kind::Or:
      return Formula::disj(box_translate(f.left()), box_translate(f.right()));
    case Kind::Imp:
      return Formula::boxdot(
          Formula::imp(box_translate(f.left()), box_translate(f.right())));
    case Kind::Box:
      return Formula::box(box_translate(f.body()));
  }
  throw std::logic_error("unreachable");
}

std::optional<Formula> un_box_translate(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Top:
      return f;
    case Kind::Atom:
    case Kind::Imp:
      return std::nullopt;
    case Kind::Box: {
      auto inner = un_box_translate(f.body());
      if (!inner) return std::nullopt;
      return Formula::box(*inner);
    }
    case Kind::Or: {
      auto l = un_box_translate(f.left());
      if (!l) return std::nullopt;
      auto r = un_box_translate(f.right());
      if (!r) return std::nullopt;
      return Formula::disj(*l, *r);
    }
    case Kind::And: {
      // boxdot shapes first: p & #p and (I & #I) with I an implication
      Formula l = f.left(), r = f.right();
      if (r.is_box() && r.body() == l) {
        if (l.is_atom()) return l;
        if (l.is_imp()) {
          auto a = un_box_translate(l.left());
          auto b = a ? un_box_translate(l.right()) : std::nullopt;
          if (a && b) return Formula::imp(*a, *b);
          return std::nullopt;
        }
      }
      auto a = un_box_translate(l);
      if (!a) return std::nullopt;
      auto b = un_box_translate(r);
      if (!b) return std::nullopt;
      return Formula::conj(*a, *b);
    }
  }
  throw std::logic_error("unreachable");
}

Formula leivant_translate(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
    case Kind::Box:
      return f;
    case Kind::And:
      return Formula::conj(leivant_translate(f.left()),
                           leivant_translate(f.right()));
    case Kind::Or:
      return Formula::disj(Formula::boxdot(leivant_translate(f.left())),
                           Formula::boxdot(leivant_translate(f.right())));
    case Kind::Imp:
      if (is_noi(f.left()))
        return Formula::imp(f.left(), leivant_translate(f.right()));
      return f;
  }
  throw std::logic_error("unreachable");
}

Formula bracket(const Formula& a, const Formula& b) {
  switch (b.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
    case Kind::Box:
      return b;
    case Kind::And:
      return Formula::conj(bracket(a, b.left()), bracket(a, b.right()));
    case Kind::Or:
      return Formula::disj(bracket(a, b.left()), bracket(a, b.right()));
    case Kind::Imp:
      return Formula::imp(a, b);
  }
  throw std::logic_error("unreachable");
}

Formula bracket_prime(const Formula& a, const Formula& b) {
  switch (b.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
    case Kind::Box:
      return b;
    case Kind::And:
      return Formula::conj(bracket_prime(a, b.left()), bracket_prime(a, b.right()));
    case Kind::Or:
      return Formula::disj(bracket_prime(a, b.left()), bracket_prime(a, b.right()));
    case Kind::Imp: {
      Formula a_prime = replace_subformula(a, b, b.right());
      return Formula::imp(Formula::conj(a_prime, b.left()), b.right());
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

Formula disjoin_images(const Formula& a, const std::vector<Formula>& z,
                       Formula (*op)(const Formula&, const Formula&),
                       const char* what) {
  if (z.empty()) throw std::invalid_argument(std::string(what) + ": empty set");
  std::vector<Formula> parts;
  parts.reserve(z.size());
  for (const Formula& e : z) parts.push_back(op(a, e));
  return unflatten_or(std::move(parts));
}

}  // namespace

Formula bracket_set(const Formula& a, const std::vector<Formula>& z) {
  return disjoin_images(a, z, &bracket, "bracket_set");
}

Formula bracket_prime_set(const Formula& a, const std::vector<Formula>& z) {
  return disjoin_images(a, z, &bracket_prime, "bracket_prime_set");
}

Formula brace(const Formula& a, const Formula& b) {
  switch (b.kind()) {
    case Kind::Box:
    case Kind::Bot:
      return b;
    case Kind::And:
      return Formula::conj(brace(a, b.left()), brace(a, b.right()));
    case Kind::Or:
      return Formula::disj(brace(a, b.left()), brace(a, b.right()));
    default:
      return Formula::imp(a, b);
  }
}

Formula brace_set(const Formula& a, const std::vector<Formula>& gamma) {
  return disjoin_images(a, gamma, &brace, "brace_set");
}

int schema_arity(AxiomSchema s) {
  switch (s) {
    case AxiomSchema::K:
    case AxiomSchema::Le:
    case AxiomSchema::TP:
      return 2;
    default:
      return 1;
  }
}

std::string schema_name(AxiomSchema s) {
  switch (s) {
    case AxiomSchema::K: return "K";
    case AxiomSchema::Four: return "4";
    case AxiomSchema::L: return "L";
    case AxiomSchema::CP: return "CP";
    case AxiomSchema::CPa: return "CPa";
    case AxiomSchema::Le: return "Le";
    case AxiomSchema::LePlus: return "Le+";
    case AxiomSchema::TP: return "TP";
  }
  throw std::logic_error("unreachable");
}

std::optional<AxiomSchema> schema_by_name(const std::string& name) {
  static const std::unordered_map<std::string, AxiomSchema> m = {
      {"K", AxiomSchema::K},    {"4", AxiomSchema::Four},
      {"L", AxiomSchema::L},    {"CP", AxiomSchema::CP},
      {"CPa", AxiomSchema::CPa},{"Le", AxiomSchema::Le},
      {"Le+", AxiomSchema::LePlus}, {"TP", AxiomSchema::TP},
  };
  auto it = m.find(name);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

Formula instantiate(AxiomSchema s, const std::vector<Formula>& args) {
  if (static_cast<int>(args.size()) != schema_arity(s))
    throw std::invalid_argument("instantiate: arity mismatch for schema " +
                                schema_name(s));
  using F = Formula;
  switch (s) {
    case AxiomSchema::K:
      return F::imp(F::box(F::imp(args[0], args[1])),
                    F::imp(F::box(args[0]), F::box(args[1])));
    case AxiomSchema::Four:
      return F::imp(F::box(args[0]), F::box(F::box(args[0])));
    case AxiomSchema::L:
      return F::imp(F::box(F::imp(F::box(args[0]), args[0])), F::box(args[0]));
    case AxiomSchema::CP:
    case AxiomSchema::CPa:
      return F::imp(args[0], F::box(args[0]));
    case AxiomSchema::Le:
      return F::imp(F::box(F::disj(args[0], args[1])),
                    F::box(F::disj(F::box(args[0]), args[1])));
    case AxiomSchema::LePlus:
      return F::imp(F::box(args[0]), F::box(leivant_translate(args[0])));
    case AxiomSchema::TP:
      return F::imp(F::box(F::imp(args[0], args[1])),
                    F::disj(args[0], F::imp(args[0], args[1])));
  }
  throw std::logic_error("unreachable");
}

}  // namespace ihstar
