// Copyright 2026 The divopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divopt/prime_field.hpp"

#include <utility>

#include "divopt/errors.hpp"

namespace divopt {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= (std::uint64_t{1} << 63) || !is_prime(modulus)) {
    throw FieldError("modulus must be a prime below 2^63");
  }
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  return powmod(base, exp, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
  return powmod(a, p_ - 2, p_);
}

std::uint64_t pfaffian(const PrimeField& field, FieldMatrix a) {
  const std::size_t n = a.size();
  if (n % 2 == 1) return 0;
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < n; k += 2) {
    if (a[k][k + 1] == 0) {
      std::size_t j = k + 2;
      while (j < n && a[k][j] == 0) ++j;
      if (j == n) return 0;
      std::swap(a[k + 1], a[j]);
      for (auto& row : a) std::swap(row[k + 1], row[j]);
      result = field.neg(result);
    }
    const std::uint64_t pivot = a[k][k + 1];
    result = field.mul(result, pivot);
    const std::uint64_t pivot_inv = field.inv(pivot);
    // Schur complement: C += (a[k+1][i]·a[k][j] − a[k][i]·a[k+1][j]) / pivot
    for (std::size_t i = k + 2; i < n; ++i) {
      const std::uint64_t ki = field.mul(a[k][i], pivot_inv);
      const std::uint64_t k1i = field.mul(a[k + 1][i], pivot_inv);
      if (ki == 0 && k1i == 0) continue;
      for (std::size_t j = k + 2; j < n; ++j) {
        const std::uint64_t plus = field.mul(k1i, a[k][j]);
        const std::uint64_t minus = field.mul(ki, a[k + 1][j]);
        a[i][j] = field.add(a[i][j], field.sub(plus, minus));
      }
    }
  }
  return result;
}

std::uint64_t determinant(const PrimeField& field, FieldMatrix a) {
  const std::size_t n = a.size();
  std::uint64_t result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      result = field.neg(result);
    }
    result = field.mul(result, a[col][col]);
    const std::uint64_t inv = field.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t factor = field.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] = field.sub(a[r][c], field.mul(factor, a[col][c]));
      }
    }
  }
  return result;
}

std::vector<std::uint64_t> interpolate(const PrimeField& field,
                                       std::span<const std::uint64_t> values) {
  const std::size_t count = values.size();
  if (count == 0) return {};
  if (count > field.modulus()) throw FieldError("modulus too small for required degree");
  // full = Π (X − x_j)
  std::vector<std::uint64_t> full(count + 1, 0);
  full[0] = 1;
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint64_t root = field.reduce(j);
    for (std::size_t d = j + 1; d > 0; --d) {
      full[d] = field.sub(full[d - 1], field.mul(root, full[d]));
    }
    full[0] = field.neg(field.mul(root, full[0]));
  }
  std::vector<std::uint64_t> coeffs(count, 0);
  std::vector<std::uint64_t> quotient(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (values[i] == 0) continue;
    const std::uint64_t root = field.reduce(i);
    // quotient = full / (X − root)
    std::uint64_t carry = full[count];
    for (std::size_t d = count; d > 0; --d) {
      quotient[d - 1] = carry;
      carry = field.add(full[d - 1], field.mul(root, carry));
    }
    // Π_{j≠i} (i − j)
    std::uint64_t denom = 1;
    for (std::size_t j = 0; j < count; ++j) {
      if (j != i) denom = field.mul(denom, field.sub(root, field.reduce(j)));
    }
    const std::uint64_t scale = field.mul(values[i], field.inv(denom));
    for (std::size_t d = 0; d < count; ++d) {
      coeffs[d] = field.add(coeffs[d], field.mul(scale, quotient[d]));
    }
  }
  return coeffs;
}

}  // namespace divopt
