#include "qsfd/latin.hpp"

#include <algorithm>

namespace qsfd {

LatinSquare validate_latin(Eigen::MatrixXi grid) {
  const Eigen::Index v = grid.rows();
  if (v == 0 || grid.cols() != v) {
    throw Error(Errc::NotSquare,
                "grid is " + std::to_string(grid.rows()) + "x" +
                    std::to_string(grid.cols()));
  }
  for (Eigen::Index i = 0; i < v; ++i) {
    for (Eigen::Index j = 0; j < v; ++j) {
      const int sym = grid(i, j);
      if (sym < 0 || sym >= v) {
        throw Error(Errc::SymbolOutOfRange,
                    "cell (" + std::to_string(i) + "," + std::to_string(j) +
                        ") holds " + std::to_string(sym));
      }
    }
  }
  std::vector<char> seen(static_cast<size_t>(v));
  for (Eigen::Index i = 0; i < v; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Eigen::Index j = 0; j < v; ++j) {
      const int sym = grid(i, j);
      if (seen[sym]) {
        throw Error(Errc::RepeatInRow,
                    "row " + std::to_string(i) + ", symbol " +
                        std::to_string(sym));
      }
      seen[sym] = 1;
    }
  }
  for (Eigen::Index j = 0; j < v; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Eigen::Index i = 0; i < v; ++i) {
      const int sym = grid(i, j);
      if (seen[sym]) {
        throw Error(Errc::RepeatInColumn,
                    "column " + std::to_string(j) + ", symbol " +
                        std::to_string(sym));
      }
      seen[sym] = 1;
    }
  }
  return LatinSquare(std::move(grid));
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::OrderMismatch, std::to_string(a.order()) + " vs " +
                                         std::to_string(b.order()));
  }
  const int v = a.order();
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(v, v);
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < v; ++j) {
      if (++counts(a(i, j), b(i, j)) > 1) return false;
    }
  }
  // v*v cells, no pair twice: every pair exactly once.
  return true;
}

VerificationReport mols_pairwise_report(const MolsSet& set) {
  VerificationReport report;
  report.check = "mols";
  for (size_t i = 0; i < set.squares.size(); ++i) {
    if (set.squares[i].order() != set.order) {
      report.fail("square " + std::to_string(i), "order mismatch");
      continue;
    }
    VerificationReport latin = check_latin(set.squares[i].grid());
    if (!latin.pass) {
      report.fail("square " + std::to_string(i), latin.findings[0].message);
    }
  }
  long pairs = 0;
  for (size_t i = 0; i < set.squares.size(); ++i) {
    for (size_t j = i + 1; j < set.squares.size(); ++j) {
      ++pairs;
      if (!are_orthogonal(set.squares[i], set.squares[j])) {
        report.fail("squares (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    "not orthogonal");
      }
    }
  }
  report.stats["squares"] = static_cast<long>(set.squares.size());
  report.stats["pairs"] = pairs;
  return report;
}

}  // namespace qsfd
