#pragma once

#include <optional>
#include <span>
#include <vector>

#include "itercurves/factor.hpp"
#include "itercurves/number.hpp"

namespace itc {

// Nonzero rational modulo squares. The representative is kept lazily;
// the squarefree kernel is computed only on request.
class SquareClass {
 public:
  explicit SquareClass(BigRat value);
  const BigRat& value() const { return value_; }

  bool is_trivial() const;  // value is a square
  bool same_class(const SquareClass& o) const;
  SquareClass operator*(const SquareClass& o) const;

  // signed squarefree integer in the class; nullopt if factoring runs out of budget
  std::optional<BigInt> kernel(const FactorBudget& budget = {}) const;

 private:
  BigRat value_;
};

// Indices S into gens with target * prod(gens[S]) a square, first found in
// increasing subset-mask order. Empty vector iff target is itself a square.
std::optional<std::vector<std::size_t>> class_membership(const SquareClass& target,
                                                         std::span<const SquareClass> gens);

}  // namespace itc
