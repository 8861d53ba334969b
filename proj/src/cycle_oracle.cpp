#include "izeta/cycle_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "izeta/errors.hpp"

namespace izeta {

namespace {

// Is s its own lexicographically least rotation?  (Ties broken toward the
// unrotated sequence, so every class is counted exactly once.)
bool is_least_rotation(const std::vector<int>& s) {
  const size_t L = s.size();
  for (size_t t = 1; t < L; ++t) {
    if (s[t] != s[0]) continue;
    for (size_t i = 0; i < L; ++i) {
      const int a = s[(t + i) % L];
      if (a != s[i]) {
        if (a < s[i]) return false;
        break;
      }
    }
  }
  return true;
}

// Minimal rotational period; equals s.size() iff the cycle is primitive.
size_t minimal_period(const std::vector<int>& s) {
  const size_t L = s.size();
  for (size_t p = 1; p < L; ++p) {
    if (L % p != 0) continue;
    bool periodic = true;
    for (size_t i = p; i < L; ++i) {
      if (s[i] != s[i - p]) {
        periodic = false;
        break;
      }
    }
    if (periodic) return p;
  }
  return L;
}

struct Search {
  const OrientedEdgeSet& oriented;
  std::vector<std::vector<int>> succ;
  int max_len;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<int> path;
  std::vector<PrimeClass> found;

  void run() {
    const int d = oriented.dim();
    for (int a0 = 0; a0 < d; ++a0) {
      path.assign(1, a0);
      extend(a0);
    }
    std::sort(found.begin(), found.end(), [](const PrimeClass& a, const PrimeClass& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.arcs < b.arcs;
    });
  }

  void extend(int a0) {
    if (++visited > budget) {
      fail_budget("BudgetExceeded",
                  "cycle enumeration exceeded its work budget of " +
                      std::to_string(budget) + " nodes");
    }
    const int last = path.back();
    // Close the cycle if the start arc continues the last one.  Closure via
    // the successor relation already rules out a backtracking seam (tail).
    if (succ_contains(last, a0) && is_least_rotation(path) &&
        minimal_period(path) == path.size()) {
      found.push_back(PrimeClass{path});
    }
    if (static_cast<int>(path.size()) == max_len) return;
    for (int nxt : succ[static_cast<size_t>(last)]) {
      if (nxt < a0) continue;  // only least-start rotations are explored
      path.push_back(nxt);
      extend(a0);
      path.pop_back();
    }
  }

  bool succ_contains(int a, int b) const {
    const auto& s = succ[static_cast<size_t>(a)];
    return std::find(s.begin(), s.end(), b) != s.end();
  }
};

// Successor lists recomputed from the arc set alone, so the oracle shares no
// counting machinery with the matrix-power route it is checking.
std::vector<std::vector<int>> successor_lists(const OrientedEdgeSet& oriented) {
  const int d = oriented.dim();
  std::vector<std::vector<int>> succ(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (j == oriented.inverse(i)) continue;
      if (oriented.arcs[static_cast<size_t>(i)].terminus ==
          oriented.arcs[static_cast<size_t>(j)].origin) {
        succ[static_cast<size_t>(i)].push_back(j);
      }
    }
  }
  return succ;
}

}  // namespace

std::vector<PrimeClass> enumerate_prime_classes(const OrientedEdgeSet& oriented,
                                                int max_len, std::uint64_t budget) {
  if (max_len < 1) fail_validation("DomainError", "max_len must be >= 1");
  auto succ = successor_lists(oriented);
  size_t max_out = 0;
  for (const auto& s : succ) max_out = std::max(max_out, s.size());

  const double estimate = static_cast<double>(oriented.dim()) *
                          std::pow(static_cast<double>(std::max<size_t>(max_out, 1)),
                                   static_cast<double>(max_len));
  if (estimate > static_cast<double>(budget)) {
    fail_budget("BudgetExceeded",
                "cycle enumeration to length " + std::to_string(max_len) +
                    " is bounded by ~" + std::to_string(estimate) +
                    " nodes; budget is " + std::to_string(budget));
  }

  Search search{oriented, std::move(succ), max_len, budget};
  search.run();
  return std::move(search.found);
}

long oracle_prime_count(const OrientedEdgeSet& oriented, int n, std::uint64_t budget) {
  long count = 0;
  for (const auto& cls : enumerate_prime_classes(oriented, n, budget)) {
    if (cls.length() == n) ++count;
  }
  return count;
}

}  // namespace izeta
