#include "ihstar/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ihstar {

namespace {

std::size_t hash_mix(std::size_t h, std::size_t v) {
  // 64-bit splitmix-style combine; fixed constants keep hashes stable
  // across runs so canonical orderings are reproducible.
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_string(const std::string& s) {
  std::size_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Formula Formula::make(Kind k, std::string name, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  std::size_t h = static_cast<std::size_t>(k) * 0x2545F4914F6CDD1DULL + 11;
  std::size_t sz = 1;
  if (!n->name.empty()) h = hash_mix(h, hash_string(n->name));
  if (n->a) {
    h = hash_mix(h, n->a->hash);
    sz += n->a->size;
  }
  if (n->b) {
    h = hash_mix(h, n->b->hash);
    sz += n->b->size;
  }
  n->hash = h;
  n->size = sz;
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name) {
  return make(Kind::Atom, std::move(name), nullptr, nullptr);
}
Formula Formula::bot() {
  static const Formula f = make(Kind::Bot, "", nullptr, nullptr);
  return f;
}
Formula Formula::top() {
  static const Formula f = make(Kind::Top, "", nullptr, nullptr);
  return f;
}
Formula Formula::conj(Formula a, Formula b) {
  return make(Kind::And, "", std::move(a.node_), std::move(b.node_));
}
Formula Formula::disj(Formula a, Formula b) {
  return make(Kind::Or, "", std::move(a.node_), std::move(b.node_));
}
Formula Formula::imp(Formula a, Formula b) {
  return make(Kind::Imp, "", std::move(a.node_), std::move(b.node_));
}
Formula Formula::box(Formula a) {
  return make(Kind::Box, "", std::move(a.node_), nullptr);
}

const std::string& Formula::atom_name() const {
  if (!is_atom()) throw std::logic_error("atom_name on non-atom");
  return node_->name;
}
Formula Formula::left() const {
  if (!node_->a || node_->kind == Kind::Box)
    throw std::logic_error("left() on non-binary formula");
  return Formula(node_->a);
}
Formula Formula::right() const {
  if (!node_->b) throw std::logic_error("right() on non-binary formula");
  return Formula(node_->b);
}
Formula Formula::body() const {
  if (!is_box()) throw std::logic_error("body() on non-box formula");
  return Formula(node_->a);
}

bool Formula::operator==(const Formula& o) const {
  const Node* x = node_.get();
  const Node* y = o.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  if (x->kind == Kind::Atom) return x->name == y->name;
  if (x->a && !(Formula(node_->a) == Formula(o.node_->a))) return false;
  if (x->b && !(Formula(node_->b) == Formula(o.node_->b))) return false;
  return true;
}

std::strong_ordering Formula::cmp(const Formula& a, const Formula& b) {
  if (a.node_.get() == b.node_.get()) return std::strong_ordering::equal;
  if (a.size() != b.size()) return a.size() <=> b.size();
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) <=> static_cast<int>(b.kind());
  switch (a.kind()) {
    case Kind::Atom:
      return a.atom_name().compare(b.atom_name()) <=> 0;
    case Kind::Bot:
    case Kind::Top:
      return std::strong_ordering::equal;
    case Kind::Box:
      return cmp(a.body(), b.body());
    default: {
      auto c = cmp(a.left(), b.left());
      if (c != 0) return c;
      return cmp(a.right(), b.right());
    }
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// precedence levels: imp 1 (right assoc), or 2, and 3, prefix 4
void print_rec(const Formula& f, int ctx, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out += f.atom_name();
      return;
    case Kind::Bot:
      out += "false";
      return;
    case Kind::Top:
      out += "true";
      return;
    case Kind::Box:
      out += '#';
      print_rec(f.body(), 4, out);
      return;
    case Kind::Imp:
      if (f.right().is_bot()) {  // print as negation
        out += '~';
        print_rec(f.left(), 4, out);
        return;
      }
      if (ctx > 1) out += '(';
      print_rec(f.left(), 2, out);
      out += " -> ";
      print_rec(f.right(), 1, out);
      if (ctx > 1) out += ')';
      return;
    case Kind::Or:
      if (ctx > 2) out += '(';
      print_rec(f.left(), 2, out);
      out += " | ";
      print_rec(f.right(), 3, out);
      if (ctx > 2) out += ')';
      return;
    case Kind::And:
      if (ctx > 3) out += '(';
      print_rec(f.left(), 3, out);
      out += " & ";
      print_rec(f.right(), 4, out);
      if (ctx > 3) out += ')';
      return;
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print_rec(*this, 1, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(std::string msg, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error(std::move(msg)),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = parse_imp();
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input", "'->'", "'|'", "'&'"});
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::ostringstream os;
    os << "syntax error at byte " << pos_ << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    throw ParseError(os.str(), pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (eat("->")) return Formula::imp(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (true) {
      skip_ws();
      // '|' but not part of another token
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        f = Formula::disj(std::move(f), parse_and());
      } else {
        return f;
      }
    }
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (eat("&")) f = Formula::conj(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail({"a formula"});
    char c = text_[pos_];
    if (c == '#') {
      ++pos_;
      return Formula::box(parse_unary());
    }
    if (c == '~') {
      ++pos_;
      return Formula::neg(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = parse_imp();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail({"')'"});
      ++pos_;
      return f;
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '_') {
      // reserved namespace: only generated names `_v<digits>` round-trip
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != 'v') {
        pos_ = start;
        fail({"an atom (atoms may not start with '_')"});
      }
      ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == digits) {
        pos_ = start;
        fail({"an atom (atoms may not start with '_')"});
      }
      return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) {
      fail({"an atom", "'true'", "'false'", "'('", "'#'", "'~'"});
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name == "true") return Formula::top();
    if (name == "false") return Formula::bot();
    return Formula::atom(std::move(name));
  }
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Structural operations

Formula substitute(const Formula& f,
                   const std::vector<std::pair<std::string, Formula>>& map) {
  switch (f.kind()) {
    case Kind::Atom:
      for (const auto& [name, g] : map)
        if (name == f.atom_name()) return g;
      return f;
    case Kind::Bot:
    case Kind::Top:
      return f;
    case Kind::Box:
      return Formula::box(substitute(f.body(), map));
    case Kind::And:
      return Formula::conj(substitute(f.left(), map), substitute(f.right(), map));
    case Kind::Or:
      return Formula::disj(substitute(f.left(), map), substitute(f.right(), map));
    case Kind::Imp:
      return Formula::imp(substitute(f.left(), map), substitute(f.right(), map));
  }
  throw std::logic_error("unreachable");
}

Formula replace_subformula(const Formula& f, const Formula& target,
                           const Formula& replacement) {
  if (f == target) return replacement;
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return f;
    case Kind::Box:
      return Formula::box(replace_subformula(f.body(), target, replacement));
    case Kind::And:
      return Formula::conj(replace_subformula(f.left(), target, replacement),
                           replace_subformula(f.right(), target, replacement));
    case Kind::Or:
      return Formula::disj(replace_subformula(f.left(), target, replacement),
                           replace_subformula(f.right(), target, replacement));
    case Kind::Imp:
      return Formula::imp(replace_subformula(f.left(), target, replacement),
                          replace_subformula(f.right(), target, replacement));
  }
  throw std::logic_error("unreachable");
}

bool contains_subformula(const Formula& f, const Formula& target) {
  if (f == target) return true;
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return false;
    case Kind::Box:
      return contains_subformula(f.body(), target);
    default:
      return contains_subformula(f.left(), target) ||
             contains_subformula(f.right(), target);
  }
}

bool contains_atom(const Formula& f, std::string_view name) {
  switch (f.kind()) {
    case Kind::Atom:
      return f.atom_name() == name;
    case Kind::Bot:
    case Kind::Top:
      return false;
    case Kind::Box:
      return contains_atom(f.body(), name);
    default:
      return contains_atom(f.left(), name) || contains_atom(f.right(), name);
  }
}

bool is_box_free(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return true;
    case Kind::Box:
      return false;
    default:
      return is_box_free(f.left()) && is_box_free(f.right());
  }
}

namespace {

void atoms_rec(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Kind::Bot:
    case Kind::Top:
      return;
    case Kind::Box:
      atoms_rec(f.body(), out);
      return;
    default:
      atoms_rec(f.left(), out);
      atoms_rec(f.right(), out);
  }
}

void sub_rec(const Formula& f, std::vector<Formula>& out,
             std::unordered_set<Formula, FormulaHash>& seen) {
  if (!seen.insert(f).second) return;
  out.push_back(f);
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return;
    case Kind::Box:
      sub_rec(f.body(), out, seen);
      return;
    default:
      sub_rec(f.left(), out, seen);
      sub_rec(f.right(), out, seen);
  }
}

}  // namespace

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  atoms_rec(f, s);
  return {s.begin(), s.end()};
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  sub_rec(f, out, seen);
  std::sort(out.begin(), out.end(),
            [](const Formula& a, const Formula& b) { return Formula::cmp(a, b) < 0; });
  return out;
}

std::vector<Formula> flatten_and(const Formula& f) {
  std::vector<Formula> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.is_and()) {
      stack.push_back(g.right());
      stack.push_back(g.left());
    } else {
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Formula> flatten_or(const Formula& f) {
  std::vector<Formula> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.is_or()) {
      stack.push_back(g.right());
      stack.push_back(g.left());
    } else {
      out.push_back(g);
    }
  }
  return out;
}

namespace {

std::vector<Formula> canonical_set(std::vector<Formula> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const Formula& a, const Formula& b) { return Formula::cmp(a, b) < 0; });
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return parts;
}

}  // namespace

Formula unflatten_and(std::vector<Formula> parts) {
  parts = canonical_set(std::move(parts));
  if (parts.empty()) return Formula::top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = Formula::conj(std::move(acc), parts[i]);
  return acc;
}

Formula unflatten_or(std::vector<Formula> parts) {
  parts = canonical_set(std::move(parts));
  if (parts.empty()) return Formula::bot();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = Formula::disj(std::move(acc), parts[i]);
  return acc;
}

Formula imp_of(std::vector<Formula> antecedents, const Formula& c) {
  if (antecedents.empty()) return c;
  return Formula::imp(unflatten_and(std::move(antecedents)), c);
}

// ---------------------------------------------------------------------------
// Boxed abstraction

namespace {

void collect_outer_boxes(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return;
    case Kind::Box: {
      for (const Formula& g : out)
        if (g == f) return;
      out.push_back(f);
      return;
    }
    default:
      collect_outer_boxes(f.left(), out);
      collect_outer_boxes(f.right(), out);
  }
}

// Smallest N such that _vN, _vN+1, ... are unused in f.
std::size_t fresh_index_above(const Formula& f) {
  std::size_t next = 1;
  for (const std::string& a : atoms_of(f)) {
    if (a.size() > 2 && a[0] == '_' && a[1] == 'v') {
      std::size_t v = 0;
      bool ok = true;
      for (std::size_t i = 2; i < a.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(a[i]))) { ok = false; break; }
        v = v * 10 + static_cast<std::size_t>(a[i] - '0');
      }
      if (ok && v + 1 > next) next = v + 1;
    }
  }
  return next;
}

Formula abstract_rec(const Formula& f,
                     const std::vector<std::pair<Formula, Formula>>& box_to_atom) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return f;
    case Kind::Box:
      for (const auto& [boxed, at] : box_to_atom)
        if (boxed == f) return at;
      throw std::logic_error("boxed_abstraction: unmapped boxed subformula");
    case Kind::And:
      return Formula::conj(abstract_rec(f.left(), box_to_atom),
                           abstract_rec(f.right(), box_to_atom));
    case Kind::Or:
      return Formula::disj(abstract_rec(f.left(), box_to_atom),
                           abstract_rec(f.right(), box_to_atom));
    case Kind::Imp:
      return Formula::imp(abstract_rec(f.left(), box_to_atom),
                          abstract_rec(f.right(), box_to_atom));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

BoxedAbstraction boxed_abstraction(const Formula& f) {
  std::vector<Formula> boxes;
  collect_outer_boxes(f, boxes);
  std::size_t next = fresh_index_above(f);
  std::vector<std::pair<Formula, Formula>> box_to_atom;
  std::vector<std::pair<std::string, Formula>> bindings;
  for (const Formula& b : boxes) {
    std::string name = "_v" + std::to_string(next++);
    box_to_atom.emplace_back(b, Formula::atom(name));
    bindings.emplace_back(name, b);
  }
  return BoxedAbstraction{abstract_rec(f, box_to_atom), std::move(bindings)};
}

}  // namespace ihstar
