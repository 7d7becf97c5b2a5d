#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pint/rulebase.hpp"

namespace pint {

// Definability closure over the 14 explicit relations, per class. A class
// inherits every rule of its ancestor classes (Lin is an ancestor of all;
// Den, Dis and Unb only of themselves).
class ClosureEngine {
 public:
  explicit ClosureEngine(const Rulebase& rb);

  // Cl(s): least superset of s closed under the class's rules.
  ExplicitSet closure(ClassTag cls, ExplicitSet s) const;

  // All 16384 closures, indexed by set mask.
  const std::array<uint16_t, 1u << kExplicitCount>& table(ClassTag cls) const;

 private:
  struct Step {
    uint16_t premises;
    uint16_t target;
  };
  std::array<std::vector<Step>, 4> steps_;  // by ClassTag
  mutable std::array<std::array<uint16_t, 1u << kExplicitCount>, 4> memo_;
  mutable std::array<bool, 4> filled_{};
  void fill(ClassTag cls) const;
};

// Minimal consequence sets and maximal independent sets of a target
// relation within a vocabulary universe:
//   mcs: minimal S ⊆ U \ {r} with r ∈ Cl(S);
//   mis: maximal S ⊆ U \ {r} with r ∉ Cl(S).
struct Spectrum {
  std::vector<ExplicitSet> mcs;
  std::vector<ExplicitSet> mis;
};
Spectrum spectrum(const ClosureEngine& eng, ClassTag cls, Rel target,
                  Vocab vocab);

// Generating-set harvest over a universe:
//   minimal_generating: minimal S ⊆ U with Cl(S) = R+;
//   maximal_non: maximal S ⊆ U with Cl(S) ≠ R+.
struct Harvest {
  std::vector<ExplicitSet> minimal_generating;
  std::vector<ExplicitSet> maximal_non;
};
Harvest harvest(const ClosureEngine& eng, ClassTag cls, Vocab vocab);

}  // namespace pint
