#pragma once

#include <vector>

#include "edcrg/rational.hpp"

namespace edcrg {

// GF(q) for prime powers q. Elements are integers in [0, q) encoding the
// coefficient vector of a polynomial over GF(l) in base l (so for prime q
// an element is just its residue). Prime-power fields are limited to
// q <= 128 and use a deterministic least-lexicographic irreducible
// modulus; prime fields have no size cap beyond int range.
class Field {
 public:
  explicit Field(int q);

  int q() const { return q_; }
  int characteristic() const { return ell_; }
  int exponent() const { return e_; }
  // Modulus coefficients c_0..c_e (monic, c_e = 1); {0,1} for e = 1
  // meaning the trivial modulus x.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // throws on 0
  int pow(int a, long long e) const;

  // Smallest element generating the multiplicative group.
  int generator() const { return generator_; }

  // The unique multiplicative subgroup of order m (requires m | q-1),
  // returned sorted.
  std::vector<int> subgroup_of_order(int m) const;

  // Quadratic residue test; throws on 0. Every element is a square in
  // characteristic 2.
  bool is_square(int a) const;

 private:
  int q_, ell_, e_, generator_;
  std::vector<int> modulus_;
  std::vector<int> multable_;  // q*q, only for e > 1
};

bool is_prime(int n);
// Returns (l, e) with n = l^e for prime l, or (0, 0) if n is not a
// prime power (or n < 2).
std::pair<int, int> prime_power_decompose(int n);

}  // namespace edcrg
