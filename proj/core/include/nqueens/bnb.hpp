#ifndef NQUEENS_BNB_HPP_
#define NQUEENS_BNB_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "nqueens/board.hpp"
#include "nqueens/deadline.hpp"
#include "nqueens/linear.hpp"
#include "nqueens/lp.hpp"
#include "nqueens/model.hpp"

namespace nqueens {

using CutCounts = std::array<int64_t, kNumCutKinds>;

struct BnbLimits {
  // Nodes processed after the root; 0 stops once the root is done.
  std::optional<int64_t> node_limit;
  const Deadline* deadline = nullptr;
  // Tie-breaking among equally fractional branching candidates; 0 keeps the
  // first one in row-major order.
  uint64_t seed = 0;
  bool root_cuts = true;
  int max_cut_rounds = 20;
  // A known lower bound on the optimum: an incumbent reaching it ends the
  // search.
  std::optional<Rational> cutoff;
};

enum class BnbStatus { kOptimal, kInfeasible, kTruncated, kTimeout };

std::string to_string(BnbStatus s);

struct BnbResult {
  BnbStatus status = BnbStatus::kInfeasible;
  // Valid lower bound on the optimum; equals the incumbent value at kOptimal.
  // Absent only when infeasibility is proven.
  std::optional<Rational> lower_bound;
  std::optional<Permutation> incumbent;
  std::optional<Rational> incumbent_value;
  int64_t nodes = 0;
  int64_t lp_pivots = 0;
  CutCounts cuts_added{};
};

// Depth-first 0/1 branch-and-bound minimising `objective` (one coefficient per
// row-major cell index) over the placements satisfying `state`. Clique
// propagation at every node, a clique/odd-cycle cut loop at the root, most
// fractional branching with the 1-branch first. Bounds of integral objectives
// are rounded up.
template <class Num>
BnbResult bnb_minimize(const ModelState& state, const SparseVector& objective,
                       const BnbLimits& limits = {}, const Tolerances& tol = {});

extern template BnbResult bnb_minimize<double>(const ModelState&,
                                               const SparseVector&,
                                               const BnbLimits&,
                                               const Tolerances&);
extern template BnbResult bnb_minimize<Rational>(const ModelState&,
                                                 const SparseVector&,
                                                 const BnbLimits&,
                                                 const Tolerances&);

}  // namespace nqueens

#endif  // NQUEENS_BNB_HPP_
