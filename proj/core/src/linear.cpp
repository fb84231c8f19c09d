#include "nqueens/linear.hpp"

namespace nqueens {

std::string to_string(CutKind kind) {
  switch (kind) {
    case CutKind::kCliquePlus:
      return "clique-plus";
    case CutKind::kCliqueX:
      return "clique-x";
    case CutKind::kCliqueSquare:
      return "clique-square";
    case CutKind::kOddCycle:
      return "odd-cycle";
    case CutKind::kLexNogood:
      return "lex-nogood";
    case CutKind::kCardinality:
      return "cardinality";
  }
  return "unknown";
}

int64_t evaluate(const std::vector<CutTerm>& terms, const Permutation& p) {
  int64_t lhs = 0;
  for (const CutTerm& t : terms) {
    if (p[t.cell.row] == t.cell.col) lhs += t.coef;
  }
  return lhs;
}

}  // namespace nqueens
