#pragma once

#include <algorithm>
#include <vector>

#include "pcanon/group_alg.hpp"

namespace testing_oracle {

// Every multiplicity vector, in vector order, bounded by what the residual
// still allows. Shares nothing with the branch and bound search.
inline bool exhaustive_feasible(const pcanon::GroupAlgElt& residual, const std::vector<pcanon::GroupAlgElt>& vectors,
                                std::size_t i = 0) {
  if (i == vectors.size()) return residual.is_zero();
  std::int64_t bound = residual.mass();
  for (const auto& [u, c] : vectors[i].terms()) bound = std::min(bound, residual.coeff(u) / c);
  for (std::int64_t m = 0; m <= bound; ++m)
    if (exhaustive_feasible(residual - m * vectors[i], vectors, i + 1)) return true;
  return false;
}

}  // namespace testing_oracle
