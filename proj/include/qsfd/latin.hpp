#ifndef QSFD_LATIN_HPP
#define QSFD_LATIN_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qsfd/error.hpp"
#include "qsfd/report.hpp"

namespace qsfd {

/// An order-v square over the symbol set {0,...,v-1} in which every symbol
/// occurs once per row and once per column. Construction goes through
/// validate_latin(), so a held value is always valid.
class LatinSquare {
 public:
  int order() const { return static_cast<int>(grid_.rows()); }
  const Eigen::MatrixXi& grid() const { return grid_; }
  int operator()(int row, int col) const { return grid_(row, col); }

  friend LatinSquare validate_latin(Eigen::MatrixXi grid);

 private:
  explicit LatinSquare(Eigen::MatrixXi grid) : grid_(std::move(grid)) {}
  Eigen::MatrixXi grid_;
};

/// Row/column Latin check on any integer matrix expression, reporting the
/// first offending row and column. Symbols must lie in [0, rows).
template <typename Derived>
VerificationReport check_latin(const Eigen::MatrixBase<Derived>& grid) {
  VerificationReport report;
  report.check = "latin";
  const auto v = grid.rows();
  if (v == 0 || grid.cols() != v) {
    report.fail("shape", "grid is not a non-empty square matrix");
    return report;
  }
  for (Eigen::Index i = 0; i < v; ++i) {
    for (Eigen::Index j = 0; j < v; ++j) {
      const int sym = grid(i, j);
      if (sym < 0 || sym >= v) {
        report.fail("cell (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    "symbol " + std::to_string(sym) + " outside [0," +
                        std::to_string(v) + ")");
        return report;
      }
    }
  }
  std::vector<char> seen(static_cast<size_t>(v));
  for (Eigen::Index i = 0; i < v; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Eigen::Index j = 0; j < v; ++j) {
      const int sym = grid(i, j);
      if (seen[sym]) {
        report.fail("row " + std::to_string(i),
                    "symbol " + std::to_string(sym) + " repeats");
        return report;
      }
      seen[sym] = 1;
    }
  }
  for (Eigen::Index j = 0; j < v; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Eigen::Index i = 0; i < v; ++i) {
      const int sym = grid(i, j);
      if (seen[sym]) {
        report.fail("column " + std::to_string(j),
                    "symbol " + std::to_string(sym) + " repeats");
        return report;
      }
      seen[sym] = 1;
    }
  }
  return report;
}

/// Validates a grid and wraps it. Throws Error with the first violation:
/// NotSquare, SymbolOutOfRange, RepeatInRow or RepeatInColumn.
LatinSquare validate_latin(Eigen::MatrixXi grid);

/// True iff superimposing A on B yields every ordered symbol pair exactly
/// once. Exhaustive pair counting; this is the orthogonality oracle used
/// throughout. Throws OrderMismatch when orders differ.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// An ordered set of mutually (pairwise) orthogonal Latin squares of one
/// order. Generators guarantee the pairwise property; mols_pairwise_report
/// re-derives it exhaustively.
struct MolsSet {
  int order = 0;
  std::vector<LatinSquare> squares;
};

/// Exhaustively re-checks that every square is Latin and every unordered
/// pair is orthogonal.
VerificationReport mols_pairwise_report(const MolsSet& set);

}  // namespace qsfd

#endif
