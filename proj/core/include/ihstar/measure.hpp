#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "ihstar/formula.hpp"

namespace ihstar {

/// Lexicographic complexity measure (d, i, c) driving termination of the
/// approximation algorithms: d = maximum box nesting, i = maximal number of
/// implications visible inside one outer implication, c = number of
/// connective occurrences outside every box.
struct MeasureTuple {
  std::uint32_t d = 0;
  std::uint32_t i = 0;
  std::uint32_t c = 0;

  friend std::strong_ordering operator<=>(const MeasureTuple&,
                                          const MeasureTuple&) = default;
  std::string str() const;
};

std::ostream& operator<<(std::ostream&, const MeasureTuple&);

MeasureTuple measure(const Formula& f);

/// Nesting-of-implications-on-the-left measure, extended to the modal
/// language by rho(#A) = 0.
std::uint32_t rho(const Formula& f);

/// Maximum number of nested boxes (the d component on its own).
std::uint32_t box_depth(const Formula& f);

enum class SyntaxClass : std::uint8_t {
  NNIL = 1 << 0,      // box-free and rho <= 1
  NNIL_Box = 1 << 1,  // rho <= 1 under the extended rho
  TNNIL = 1 << 2,
  TNNIL_Box = 1 << 3,  // non-modal combination of boxed TNNIL formulas
  NOI = 1 << 4,        // every implication under a box
};

struct ClassSet {
  std::uint8_t bits = 0;
  bool contains(SyntaxClass c) const {
    return bits & static_cast<std::uint8_t>(c);
  }
};

ClassSet classify(const Formula& f);

bool is_noi(const Formula& f);
bool is_nnil(const Formula& f);
bool is_nnil_box(const Formula& f);
bool is_tnnil(const Formula& f);
bool is_tnnil_box(const Formula& f);

}  // namespace ihstar
