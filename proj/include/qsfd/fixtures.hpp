#ifndef QSFD_FIXTURES_HPP
#define QSFD_FIXTURES_HPP

#include <Eigen/Dense>
#include <vector>

namespace qsfd::fixtures {

/// Planes of a grid whose cells are symbol pairs (a,b).
struct PairTable {
  Eigen::MatrixXi first;
  Eigen::MatrixXi second;
};

/// Component squares behind the bundled order-12 example: three pairwise
/// orthogonal squares of order 4 and two of order 3, in catalog order.
/// The order-12 pipeline pairs the first and last order-4 squares.
const std::vector<Eigen::MatrixXi>& order4_squares();
const std::vector<Eigen::MatrixXi>& order3_squares();

/// Order-12 direct products (row order np+s, columns nq+t).
const PairTable& product_first();
const PairTable& product_second();

/// The same squares with rows reordered into quasi-Sudoku form (row ms+p).
const PairTable& reordered_first();
const PairTable& reordered_second();

/// Modular projection images of the reordered squares: first collapsed to
/// [4], second to [3].
const Eigen::MatrixXi& projected_first();
const Eigen::MatrixXi& projected_second();

/// Superimposed projections of the reordered pair, modular and coordinate.
const PairTable& overlay_modular();
const PairTable& overlay_coordinate();

/// Slice q=0 of the unstacked order-12 array after level collapsing:
/// 36 rows, 4 columns, levels {3,3,4,3}.
const Eigen::MatrixXi& slice0_collapsed();

}  // namespace qsfd::fixtures

#endif
