#include "qsfd/galois.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsfd {

namespace {

// Irreducible polynomials for the bundled extension orders, coefficients in
// base-p digits lowest degree first (constant term first, leading 1 last).
const std::map<int, std::vector<int>>& bundled_polynomials() {
  static const std::map<int, std::vector<int>> polys = {
      {4, {1, 1, 1}},      // x^2 + x + 1 over GF(2)
      {8, {1, 1, 0, 1}},   // x^3 + x + 1 over GF(2)
      {9, {1, 0, 1}},      // x^2 + 1 over GF(3)
      {16, {1, 1, 0, 0, 1}},  // x^4 + x + 1 over GF(2)
      {25, {2, 0, 1}},     // x^2 + 2 over GF(5)
      {27, {1, 2, 0, 1}},  // x^3 + 2x + 1 over GF(3)
  };
  return polys;
}

std::vector<int> digits_base_p(int value, int p, int width) {
  std::vector<int> digits(width, 0);
  for (int i = 0; i < width && value > 0; ++i) {
    digits[i] = value % p;
    value /= p;
  }
  return digits;
}

int from_digits(const std::vector<int>& digits, int p) {
  int value = 0;
  for (size_t i = digits.size(); i-- > 0;) value = value * p + digits[i];
  return value;
}

// Polynomial product reduced by the degree-d modulus, coefficients mod p.
int poly_mul_mod(int a, int b, int p, int d, const std::vector<int>& modulus) {
  std::vector<int> da = digits_base_p(a, p, d);
  std::vector<int> db = digits_base_p(b, p, d);
  std::vector<int> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
  }
  for (int deg = 2 * d - 2; deg >= d; --deg) {
    const int coeff = prod[deg];
    if (coeff == 0) continue;
    prod[deg] = 0;
    // x^deg = -modulus_tail * x^(deg-d) since the modulus is monic.
    for (int i = 0; i < d; ++i) {
      prod[deg - d + i] = ((prod[deg - d + i] - coeff * modulus[i]) % p + p) % p;
    }
  }
  prod.resize(d);
  return from_digits(prod, p);
}

}  // namespace

bool is_prime(int v) {
  if (v < 2) return false;
  for (int f = 2; f * f <= v; ++f) {
    if (v % f == 0) return false;
  }
  return true;
}

bool factor_prime_power(int v, int& p, int& d) {
  if (v < 2) return false;
  for (int f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      p = f;
      d = 0;
      while (v % f == 0) {
        v /= f;
        ++d;
      }
      return v == 1;
    }
  }
  p = v;
  d = 1;
  return true;
}

GaloisField::GaloisField(int q) : q_(q) {
  if (!factor_prime_power(q, p_, d_)) {
    throw Error(Errc::NotPrimePower, std::to_string(q));
  }
  std::vector<int> modulus;
  if (d_ > 1) {
    auto it = bundled_polynomials().find(q);
    if (it == bundled_polynomials().end()) {
      throw Error(Errc::UnsupportedOrder,
                  "no bundled irreducible polynomial for order " +
                      std::to_string(q));
    }
    modulus = it->second;
  }
  add_.resize(q, q);
  mul_.resize(q, q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (d_ == 1) {
        add_(a, b) = (a + b) % p_;
        mul_(a, b) = (a * b) % p_;
      } else {
        std::vector<int> da = digits_base_p(a, p_, d_);
        std::vector<int> db = digits_base_p(b, p_, d_);
        for (int i = 0; i < d_; ++i) da[i] = (da[i] + db[i]) % p_;
        add_(a, b) = from_digits(da, p_);
        mul_(a, b) = poly_mul_mod(a, b, p_, d_, modulus);
      }
    }
  }
}

}  // namespace qsfd
