#include "itercurves/squareclass.hpp"

#include "itercurves/error.hpp"

namespace itc {

SquareClass::SquareClass(BigRat value) : value_(std::move(value)) {
  value_.canonicalize();
  require(value_ != 0, ErrorCode::InvalidArgument, "square class of zero");
}

bool SquareClass::is_trivial() const { return is_square(value_); }

bool SquareClass::same_class(const SquareClass& o) const { return is_square(value_ * o.value_); }

SquareClass SquareClass::operator*(const SquareClass& o) const { return SquareClass(value_ * o.value_); }

std::optional<BigInt> SquareClass::kernel(const FactorBudget& budget) const {
  // num/den lies in the class of num*den
  BigInt n = value_.get_num() * value_.get_den();
  Factorization f = factor_bounded(n, budget);
  if (!f.complete) return std::nullopt;
  BigInt k(f.sign);
  for (const auto& [p, e] : f.factors)
    if (e & 1u) k *= p;
  return k;
}

std::optional<std::vector<std::size_t>> class_membership(const SquareClass& target,
                                                         std::span<const SquareClass> gens) {
  require(gens.size() <= 24, ErrorCode::CapExceeded, "too many generators for subset search");
  const std::uint32_t total = std::uint32_t{1} << gens.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    BigRat prod = target.value();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mask >> i & 1u) prod *= gens[i].value();
    if (is_square(prod)) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask >> i & 1u) subset.push_back(i);
      return subset;
    }
  }
  return std::nullopt;
}

}  // namespace itc
