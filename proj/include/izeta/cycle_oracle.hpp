#pragma once

#include <cstdint>
#include <vector>

#include "izeta/edge_matrix.hpp"
#include "izeta/types.hpp"

namespace izeta {

// One equivalence class of primitive closed non-backtracking tailless paths,
// represented by the lexicographically least rotation of its arc sequence.
struct PrimeClass {
  std::vector<int> arcs;

  int length() const { return static_cast<int>(arcs.size()); }
};

inline constexpr std::uint64_t default_oracle_budget = 200'000'000ull;

// Exhaustive depth-first enumeration of all prime classes of length <= max_len.
// This is the independent route against which the Moebius-inversion census is
// checked: it never touches matrix powers.  Work is bounded up front by
// dim * (max_degree - 1)^max_len (BudgetExceeded).
std::vector<PrimeClass> enumerate_prime_classes(const OrientedEdgeSet& oriented,
                                                int max_len,
                                                std::uint64_t budget = default_oracle_budget);

// Number of prime classes of exactly length n, by enumeration.
long oracle_prime_count(const OrientedEdgeSet& oriented, int n,
                        std::uint64_t budget = default_oracle_budget);

}  // namespace izeta
