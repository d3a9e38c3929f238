// Copyright 2026 The pimub Authors
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

// Arithmetic in GF(2^n) expressed in a self-dual basis.
//
// Elements are stored by their coordinates (n_1, ..., n_n) in a basis
// {theta_1, ..., theta_n} with tr(theta_i theta_j) = delta_ij. Coordinates
// are packed into an integer with n_1 as the most significant of the n bits,
// which is also the computational-basis index convention of the operators
// module (qubit 1 is the leftmost tensor factor).

#include <cstdint>
#include <memory>
#include <vector>

#include "pimub/error.hpp"

namespace pimub {

inline constexpr int kMaxQubits = 12;

class FieldContext;

class FieldElement {
 public:
  FieldElement() = default;

  const FieldContext* context() const { return ctx_; }
  // Self-dual coordinates, n_1 in the most significant position.
  std::uint32_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  // Coordinate n_i for 1 <= i <= n.
  int coordinate(int i) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.bits_ == b.bits_;
  }

 private:
  friend class FieldContext;
  FieldElement(const FieldContext* ctx, std::uint32_t bits)
      : ctx_(ctx), bits_(bits) {}

  const FieldContext* ctx_ = nullptr;
  std::uint32_t bits_ = 0;
};

class FieldContext {
 public:
  int n() const { return n_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  // Bit k holds the coefficient of x^k; bit n is always set.
  std::uint32_t irreducible_poly() const { return poly_; }
  // theta_1..theta_n in polynomial coordinates.
  const std::vector<std::uint32_t>& selfdual_basis_poly() const {
    return basis_poly_;
  }

  FieldElement element(std::uint32_t bits) const;
  FieldElement zero() const { return FieldElement(this, 0); }
  FieldElement one() const;
  // theta_i for 1 <= i <= n.
  FieldElement theta(int i) const;
  std::vector<FieldElement> elements() const;

  FieldElement from_poly(std::uint32_t poly_bits) const;
  std::uint32_t to_poly(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement square(const FieldElement& a) const { return mul(a, a); }
  FieldElement inverse(const FieldElement& a) const;
  int trace(const FieldElement& a) const;
  int weight(const FieldElement& a) const;

  // Raw helpers on polynomial coordinates.
  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const;
  int poly_trace(std::uint32_t a) const;

 private:
  friend std::shared_ptr<const FieldContext> make_field(int n);
  friend std::shared_ptr<const FieldContext> make_field(
      int n, std::vector<std::uint32_t> selfdual_basis_poly);
  friend std::vector<std::vector<std::uint32_t>> selfdual_bases(int n);
  FieldContext() = default;
  static std::shared_ptr<FieldContext> create(int n);
  // tr(uv) on polynomial coordinates.
  int form(std::uint32_t u, std::uint32_t v) const;
  void set_basis(std::vector<std::uint32_t> basis);
  void check(const FieldElement& a) const;

  int n_ = 0;
  std::uint32_t poly_ = 0;
  std::vector<std::uint32_t> basis_poly_;
  std::vector<std::uint32_t> sd_to_poly_;
  std::vector<std::uint32_t> poly_to_sd_;
  std::vector<std::uint8_t> poly_trace_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

// Builds GF(2^n), 1 <= n <= 12, with a fixed irreducible polynomial and a
// self-dual basis derived from the polynomial basis by congruence reduction.
// Throws Error(kUnsupportedN) outside that range.
FieldPtr make_field(int n);

// Same field with an explicit self-dual basis in polynomial coordinates.
// Throws Error(kInvalidSpec) unless tr(theta_i theta_j) = delta_ij.
FieldPtr make_field(int n, std::vector<std::uint32_t> selfdual_basis_poly);

inline constexpr int kMaxEnumerationQubits = 7;

// Every self-dual basis of GF(2^n) as an ascending list of polynomial
// bitmasks, in lexicographic order. Exponential in n.
std::vector<std::vector<std::uint32_t>> selfdual_bases(int n);

// Conventional irreducible polynomial used for GF(2^n).
std::uint32_t default_irreducible_poly(int n);

// Trial division over all polynomials of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

FieldElement mul(const FieldElement& a, const FieldElement& b);
int trace(const FieldElement& a);
int weight(const FieldElement& a);

}  // namespace pimub
