#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ihstar {

enum class Kind : std::uint8_t { Atom, Bot, Top, And, Or, Imp, Box };

/// Immutable modal propositional formula. Values are shared handles to
/// refcounted nodes; copying is cheap and every operation on formulas is
/// pure, so formulas can be shared freely between threads.
class Formula {
 public:
  Formula() = delete;

  static Formula atom(std::string name);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula box(Formula a);

  // Sugar. neg(A) is A -> false, boxdot(A) is A & #A.
  static Formula neg(Formula a) { return imp(std::move(a), bot()); }
  static Formula boxdot(Formula a) { return conj(a, box(a)); }

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_bot() const { return kind() == Kind::Bot; }
  bool is_top() const { return kind() == Kind::Top; }
  bool is_and() const { return kind() == Kind::And; }
  bool is_or() const { return kind() == Kind::Or; }
  bool is_imp() const { return kind() == Kind::Imp; }
  bool is_box() const { return kind() == Kind::Box; }
  /// Atoms and the constants true/false.
  bool is_atomic() const { return is_atom() || is_bot() || is_top(); }

  const std::string& atom_name() const;
  Formula left() const;   // And/Or/Imp
  Formula right() const;  // And/Or/Imp
  Formula body() const;   // Box

  std::size_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }  // number of AST nodes

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  /// Total structural order used wherever a canonical ordering of formulas
  /// is needed (multiset canonicalization, countermodel valuations, ...).
  static std::strong_ordering cmp(const Formula& a, const Formula& b);
  bool operator<(const Formula& o) const { return cmp(*this, o) < 0; }

  /// Rendering in the concrete grammar with minimal parentheses.
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;  // Atom
    std::shared_ptr<const Node> a, b;
    std::size_t hash = 0;
    std::size_t size = 1;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Formula(NodePtr n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, NodePtr a, NodePtr b);

  NodePtr node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Syntax error raised by the parser; `offset` is a byte offset into the
/// input and `expected` lists the token classes that would have been legal.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t offset, std::vector<std::string> expected);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Parses the concrete syntax: '->' (right assoc), '|', '&', prefix '#'
/// (box) and '~' (negation, desugared to -> false), 'true', 'false',
/// lowercase atoms. Atoms starting with '_' are reserved for generated
/// names; only the internal shape `_v<digits>` is accepted back.
Formula parse_formula(std::string_view text);

/// Simultaneous substitution of formulas for atoms.
Formula substitute(const Formula& f,
                   const std::vector<std::pair<std::string, Formula>>& map);

/// Replaces every occurrence of `target` (as a subtree) by `replacement`
/// in one outside-in pass; replaced subtrees are not revisited.
Formula replace_subformula(const Formula& f, const Formula& target,
                           const Formula& replacement);

bool contains_subformula(const Formula& f, const Formula& target);
bool contains_atom(const Formula& f, std::string_view name);
bool is_box_free(const Formula& f);

/// All atom names occurring in `f`, sorted.
std::vector<std::string> atoms_of(const Formula& f);

/// Subformula closure (each distinct subformula once, canonically ordered).
std::vector<Formula> subformulas(const Formula& f);

// Conjunctions and disjunctions are binary in the AST; these helpers view
// them as canonically ordered multisets. Flattening splits the top-level
// spine only; rebuilding sorts, deduplicates, and maps the empty
// conjunction to true and the empty disjunction to false.
std::vector<Formula> flatten_and(const Formula& f);
std::vector<Formula> flatten_or(const Formula& f);
Formula unflatten_and(std::vector<Formula> parts);
Formula unflatten_or(std::vector<Formula> parts);

/// ((/\X) -> c) with the empty antecedent collapsing to `c` itself.
Formula imp_of(std::vector<Formula> antecedents, const Formula& c);

/// Result of abstracting the outermost boxed subformulas by fresh atoms:
/// `skeleton` is box-free and substituting `bindings` back reproduces the
/// original formula exactly. Identical boxed subformulas share one atom.
struct BoxedAbstraction {
  Formula skeleton;
  std::vector<std::pair<std::string, Formula>> bindings;  // atom -> boxed

  Formula restore() const { return substitute(skeleton, bindings); }
};

BoxedAbstraction boxed_abstraction(const Formula& f);

}  // namespace ihstar
