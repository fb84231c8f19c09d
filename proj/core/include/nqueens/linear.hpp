#ifndef NQUEENS_LINEAR_HPP_
#define NQUEENS_LINEAR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nqueens/board.hpp"

namespace nqueens {

enum class CutKind {
  kCliquePlus,
  kCliqueX,
  kCliqueSquare,
  kOddCycle,
  kLexNogood,
  kCardinality,
};

inline constexpr int kNumCutKinds = 6;

std::string to_string(CutKind kind);

struct CutTerm {
  Cell cell;
  int64_t coef = 1;

  friend bool operator==(const CutTerm&, const CutTerm&) = default;
};

// sum(coef * x[cell]) <= rhs. All families used here have integer data.
struct Cut {
  std::vector<CutTerm> terms;
  int64_t rhs = 0;
  CutKind kind = CutKind::kCliquePlus;

  friend bool operator==(const Cut&, const Cut&) = default;
};

// sum(coef * x[cell]) == rhs; the pinned level counts of the beauty solver.
struct LinearEquality {
  std::vector<CutTerm> terms;
  int64_t rhs = 0;
  CutKind kind = CutKind::kCardinality;
};

// Left-hand side of `terms` at a 0/1 placement.
int64_t evaluate(const std::vector<CutTerm>& terms, const Permutation& p);

}  // namespace nqueens

#endif  // NQUEENS_LINEAR_HPP_
