#include "edcrg/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace edcrg {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power_decompose(int n) {
  if (n < 2) return {0, 0};
  int ell = n;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) {
      ell = d;
      break;
    }
  int e = 0, m = n;
  while (m % ell == 0) {
    m /= ell;
    ++e;
  }
  if (m != 1) return {0, 0};
  return {ell, e};
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over GF(l) as coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int ell) {
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) > dm) {
    const int lead = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    if (lead != 0)
      for (int i = 0; i <= dm; ++i) {
        int& c = a[shift + i];
        c = ((c - lead * m[i]) % ell + ell) % ell;
      }
    a.pop_back();
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int ell) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % ell;
  return c;
}

int encode(const Poly& a, int ell, int e) {
  int v = 0;
  for (int i = e - 1; i >= 0; --i) v = v * ell + (i < static_cast<int>(a.size()) ? a[i] : 0);
  return v;
}

Poly decode(int v, int ell, int e) {
  Poly a(e, 0);
  for (int i = 0; i < e; ++i) {
    a[i] = v % ell;
    v /= ell;
  }
  return a;
}

// Does `m` (monic, degree >= 1) divide into `a` with zero remainder?
bool poly_divides(const Poly& m, Poly a, int ell) {
  a = poly_mod(std::move(a), m, ell);
  for (int c : a)
    if (c != 0) return false;
  return true;
}

// Least lexicographic (by encoded value of the low coefficients) monic
// irreducible of degree e over GF(l), found by trial division against
// every monic polynomial of degree 1..e/2.
Poly find_irreducible(int ell, int e) {
  int total = 1;
  for (int i = 0; i < e; ++i) total *= ell;
  for (int low = 0; low < total; ++low) {
    Poly cand = decode(low, ell, e);
    cand.push_back(1);  // monic degree-e
    bool irreducible = true;
    for (int d = 1; 2 * d <= e && irreducible; ++d) {
      int count = 1;
      for (int i = 0; i < d; ++i) count *= ell;
      for (int dl = 0; dl < count && irreducible; ++dl) {
        Poly div = decode(dl, ell, d);
        div.push_back(1);
        if (poly_divides(div, cand, ell)) irreducible = false;
      }
    }
    if (irreducible) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Field::Field(int q) : q_(q) {
  auto [ell, e] = prime_power_decompose(q);
  if (ell == 0) throw std::invalid_argument("GF(" + std::to_string(q) + "): not a prime power");
  ell_ = ell;
  e_ = e;
  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    if (q_ > 128)
      throw std::invalid_argument("GF(" + std::to_string(q) +
                                  "): prime-power fields limited to q <= 128");
    modulus_ = find_irreducible(ell_, e_);
    multable_.assign(static_cast<size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        Poly prod = poly_mod(poly_mul(decode(a, ell_, e_), decode(b, ell_, e_), ell_), modulus_, ell_);
        multable_[static_cast<size_t>(a) * q_ + b] = encode(prod, ell_, e_);
      }
  }
  // Smallest generator of the multiplicative group.
  generator_ = 0;
  const auto factors = prime_factors(q_ - 1);
  for (int g = 1; g < q_; ++g) {
    bool ok = true;
    for (int f : factors)
      if (pow(g, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0 && q_ > 2) throw std::logic_error("no generator found");
  if (q_ == 2) generator_ = 1;
}

int Field::add(int a, int b) const {
  if (e_ == 1) return (a + b) % ell_;
  int out = 0, base = 1;
  for (int i = 0; i < e_; ++i) {
    out += ((a % ell_ + b % ell_) % ell_) * base;
    a /= ell_;
    b /= ell_;
    base *= ell_;
  }
  return out;
}

int Field::neg(int a) const {
  if (e_ == 1) return (ell_ - a) % ell_;
  int out = 0, base = 1;
  for (int i = 0; i < e_; ++i) {
    out += ((ell_ - a % ell_) % ell_) * base;
    a /= ell_;
    base *= ell_;
  }
  return out;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
  if (e_ == 1) return static_cast<int>(static_cast<long long>(a) * b % ell_);
  return multable_[static_cast<size_t>(a) * q_ + b];
}

int Field::pow(int a, long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  e %= q_ - 1;
  if (e < 0) e += q_ - 1;
  int out = 1, base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("GF inverse of 0");
  return pow(a, q_ - 2);
}

std::vector<int> Field::subgroup_of_order(int m) const {
  if (m < 1 || (q_ - 1) % m != 0)
    throw std::invalid_argument("subgroup order " + std::to_string(m) + " does not divide q-1 = " +
                                std::to_string(q_ - 1));
  const int h = pow(generator_, (q_ - 1) / m);
  std::vector<int> out;
  int cur = 1;
  for (int i = 0; i < m; ++i) {
    out.push_back(cur);
    cur = mul(cur, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Field::is_square(int a) const {
  if (a == 0) throw std::domain_error("is_square: 0 excluded");
  if (ell_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

}  // namespace edcrg
