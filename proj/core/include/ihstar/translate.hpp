#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihstar/formula.hpp"

namespace ihstar {

/// Box translation: atoms become p & #p, implications gain their own box,
/// everything else distributes. true maps to true (empty conjunction).
Formula box_translate(const Formula& f);

/// Structural inverse of box_translate; empty when `f` is not in its image.
std::optional<Formula> un_box_translate(const Formula& f);

/// Leivant translation: disjunctions become boxdotted, implications keep
/// their consequent translated only when the antecedent has no outside
/// implication.
Formula leivant_translate(const Formula& f);

/// [A]B. Atoms, constants and boxed formulas are fixed, conjunction and
/// disjunction distribute, and [A](B1 -> B2) = A -> (B1 -> B2).
Formula bracket(const Formula& a, const Formula& b);

/// [A]'B. As bracket, except [A]'(B1 -> B2) = (A' & B1) -> B2 where A'
/// replaces each occurrence of B1 -> B2 in A by B2.
Formula bracket_prime(const Formula& a, const Formula& b);

/// [A]Z: disjunction of [A]E over E in Z, in canonical order. Z nonempty.
Formula bracket_set(const Formula& a, const std::vector<Formula>& z);
Formula bracket_prime_set(const Formula& a, const std::vector<Formula>& z);

/// {A}(B): boxes and false are fixed, conjunction and disjunction
/// distribute, otherwise {A}(B) = A -> B.
Formula brace(const Formula& a, const Formula& b);

/// {A}Gamma: disjunction of {A}(B) over B in Gamma. Gamma nonempty.
Formula brace_set(const Formula& a, const std::vector<Formula>& gamma);

enum class AxiomSchema { K, Four, L, CP, CPa, Le, LePlus, TP };

int schema_arity(AxiomSchema s);
std::string schema_name(AxiomSchema s);
std::optional<AxiomSchema> schema_by_name(const std::string& name);

/// Literal substitution of the arguments into the schema template; no side
/// conditions are enforced here.
Formula instantiate(AxiomSchema s, const std::vector<Formula>& args);

}  // namespace ihstar
