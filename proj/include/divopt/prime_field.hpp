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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace divopt {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

// Arithmetic modulo a prime p < 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t reduce(std::uint64_t a) const { return a % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  // Throws InvalidArgument for zero.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

using FieldMatrix = std::vector<std::vector<std::uint64_t>>;

// Pfaffian of a skew-symmetric matrix of even order (odd order gives 0).
// The argument is consumed.
std::uint64_t pfaffian(const PrimeField& field, FieldMatrix a);

std::uint64_t determinant(const PrimeField& field, FieldMatrix a);

// Coefficients c_0..c_D of the unique polynomial of degree <= D taking
// values[x] at x = 0..D.
std::vector<std::uint64_t> interpolate(const PrimeField& field,
                                       std::span<const std::uint64_t> values);

}  // namespace divopt
