#include <string>

#include "itercurves/error.hpp"
#include "itercurves/galois.hpp"

namespace itc {

std::string_view to_string(StageStatus s) {
  switch (s) {
    case StageStatus::Maximal: return "Maximal";
    case StageStatus::NonMaximal: return "NonMaximal";
    case StageStatus::ReducibleObstruction: return "ReducibleObstruction";
    case StageStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

BigInt tree_order(unsigned n) {
  require(n >= 1 && n < 40, ErrorCode::InvalidArgument, "tree order needs 1 <= n < 40");
  return pow(BigInt(2), (1ul << n) - 1);
}

std::vector<SquareClass> subfield_generators(const Orbit& o, unsigned m) {
  require(m >= 1 && m <= o.size(), ErrorCode::InvalidArgument, "m outside orbit");
  std::vector<SquareClass> gens;
  require(o.c != 0, ErrorCode::InvalidArgument, "generator -c is zero");
  gens.emplace_back(-o.c);
  for (unsigned j = 2; j <= m; ++j) {
    require(o.at(j) != 0, ErrorCode::InvalidArgument,
            "generator f^" + std::to_string(j) + "(0) is zero");
    gens.emplace_back(o.at(j));
  }
  return gens;
}

std::vector<SquareClass> subfield_generators(const BigRat& c, unsigned m, const Limits& limits) {
  return subfield_generators(orbit(c, m, limits), m);
}

StageReport stage_status(const BigRat& c, unsigned n, const Limits& limits) {
  Orbit o = orbit(c, n, limits);
  StageReport rep;
  rep.c = c;
  rep.n = n;
  rep.tree_order = tree_order(n);
  bool broken = false;
  std::vector<SquareClass> gens;
  for (unsigned k = 1; k <= n; ++k) {
    Stage st;
    st.k = k;
    if (broken) {
      st.status = StageStatus::Unknown;
      rep.stages.push_back(std::move(st));
      continue;
    }
    // stage 1 asks whether -c is a square, stage k >= 2 whether f^k(0) lies in
    // the square-class group spanned by the earlier generators
    const BigRat target = k == 1 ? BigRat(-c) : o.at(k);
    if (target == 0) {
      st.status = StageStatus::ReducibleObstruction;
    } else if (auto subset = class_membership(SquareClass(target), gens)) {
      if (subset->empty()) {
        st.status = StageStatus::ReducibleObstruction;
      } else {
        st.status = StageStatus::NonMaximal;
        for (std::size_t i : *subset) st.witness.push_back(static_cast<unsigned>(i + 1));
      }
    } else {
      st.status = StageStatus::Maximal;
      st.certified = k <= 4;
      gens.emplace_back(target);
    }
    if (st.status != StageStatus::Maximal) broken = true;
    rep.stages.push_back(std::move(st));
  }
  rep.index_lower_bound = broken ? BigInt(2) : BigInt(1);
  return rep;
}

bool newly_small_at(const BigRat& c, unsigned n, const Limits& limits) {
  StageReport rep = stage_status(c, n, limits);
  for (unsigned k = 0; k + 1 < n; ++k)
    if (rep.stages[k].status != StageStatus::Maximal) return false;
  StageStatus last = rep.stages[n - 1].status;
  return last == StageStatus::NonMaximal || last == StageStatus::ReducibleObstruction;
}

}  // namespace itc
