#ifndef QSFD_GALOIS_HPP
#define QSFD_GALOIS_HPP

#include <Eigen/Dense>

#include "qsfd/error.hpp"

namespace qsfd {

/// GF(p^d) with full addition/multiplication tables over [0, q). Element i
/// encodes the polynomial whose base-p digits, lowest degree first, are the
/// coefficients. Extension fields are reduced by a fixed irreducible
/// polynomial bundled per order, so tables are deterministic.
///
/// Bundled extension orders: 4, 8, 9, 16, 25, 27. Any prime order works
/// directly (d = 1, plain modular arithmetic).
class GaloisField {
 public:
  /// Throws NotPrimePower for a non prime power, UnsupportedOrder for a
  /// prime power without a bundled polynomial.
  explicit GaloisField(int q);

  int size() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return d_; }

  int add(int a, int b) const { return add_(a, b); }
  int mul(int a, int b) const { return mul_(a, b); }

  const Eigen::MatrixXi& add_table() const { return add_; }
  const Eigen::MatrixXi& mul_table() const { return mul_; }

 private:
  int q_, p_, d_;
  Eigen::MatrixXi add_, mul_;
};

bool is_prime(int v);

/// Writes p and d with v = p^d; false when v is not a prime power.
bool factor_prime_power(int v, int& p, int& d);

}  // namespace qsfd

#endif
