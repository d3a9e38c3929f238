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

#include "pimub/gf2n.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace pimub {
namespace {

// Low-weight conventional choices; bit k is the coefficient of x^k.
constexpr std::array<std::uint32_t, kMaxQubits + 1> kPolyTable = {
    0,
    0x3,     // x + 1
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11B,   // x^8 + x^4 + x^3 + x + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1009,  // x^12 + x^3 + 1
};

int degree(std::uint32_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnsupportedN: return "unsupported-n";
    case ErrorKind::kContextMismatch: return "context-mismatch";
    case ErrorKind::kInvalidIndex: return "invalid-index";
    case ErrorKind::kDegenerateEigenspace: return "degenerate-eigenspace";
    case ErrorKind::kMissingOrbit: return "missing-orbit";
    case ErrorKind::kNotNormalized: return "not-normalized";
    case ErrorKind::kMissingBasis: return "missing-basis";
    case ErrorKind::kInconsistentNormalization:
      return "inconsistent-normalization";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kDimensionOverflow: return "dimension-overflow";
    case ErrorKind::kInvalidJ: return "invalid-j";
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kNotIdentifiable: return "not-identifiable";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

int FieldElement::coordinate(int i) const {
  const int n = ctx_ ? ctx_->n() : 0;
  if (i < 1 || i > n) {
    throw Error(ErrorKind::kInvalidIndex,
                "coordinate index " + std::to_string(i) + " out of range");
  }
  return static_cast<int>((bits_ >> (n - i)) & 1u);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.ctx_ != b.ctx_) {
    throw Error(ErrorKind::kContextMismatch,
                "adding elements of different fields");
  }
  return FieldElement(a.ctx_, a.bits_ ^ b.bits_);
}

std::uint32_t default_irreducible_poly(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw Error(ErrorKind::kUnsupportedN,
                "n must lie in [1, " + std::to_string(kMaxQubits) +
                    "], got " + std::to_string(n));
  }
  return kPolyTable[n];
}

bool is_irreducible(std::uint32_t poly) {
  const int d = degree(poly);
  if (d < 1) return false;
  for (std::uint32_t f = 2; degree(f) <= d / 2; ++f) {
    if (poly_mod(poly, f) == 0) return false;
  }
  return true;
}

std::uint32_t FieldContext::poly_mul(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  const std::uint32_t top = std::uint32_t{1} << n_;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= poly_;
  }
  return r;
}

int FieldContext::poly_trace(std::uint32_t a) const { return poly_trace_[a]; }

void FieldContext::check(const FieldElement& a) const {
  if (a.context() != this) {
    throw Error(ErrorKind::kContextMismatch,
                "element does not belong to this field");
  }
}

FieldElement FieldContext::element(std::uint32_t bits) const {
  if (bits >= size()) {
    throw Error(ErrorKind::kInvalidIndex,
                "bitmask " + std::to_string(bits) + " exceeds field size");
  }
  return FieldElement(this, bits);
}

FieldElement FieldContext::one() const { return from_poly(1); }

FieldElement FieldContext::theta(int i) const {
  if (i < 1 || i > n_) {
    throw Error(ErrorKind::kInvalidIndex,
                "theta index " + std::to_string(i) + " out of range");
  }
  return FieldElement(this, std::uint32_t{1} << (n_ - i));
}

std::vector<FieldElement> FieldContext::elements() const {
  std::vector<FieldElement> out;
  out.reserve(size());
  for (std::uint32_t b = 0; b < size(); ++b) out.push_back(FieldElement(this, b));
  return out;
}

FieldElement FieldContext::from_poly(std::uint32_t poly_bits) const {
  if (poly_bits >= size()) {
    throw Error(ErrorKind::kInvalidIndex, "polynomial exceeds field size");
  }
  return FieldElement(this, poly_to_sd_[poly_bits]);
}

std::uint32_t FieldContext::to_poly(const FieldElement& a) const {
  check(a);
  return sd_to_poly_[a.bits()];
}

FieldElement FieldContext::add(const FieldElement& a,
                               const FieldElement& b) const {
  check(a);
  check(b);
  return FieldElement(this, a.bits() ^ b.bits());
}

FieldElement FieldContext::mul(const FieldElement& a,
                               const FieldElement& b) const {
  check(a);
  check(b);
  return FieldElement(
      this, poly_to_sd_[poly_mul(sd_to_poly_[a.bits()], sd_to_poly_[b.bits()])]);
}

FieldElement FieldContext::inverse(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) {
    throw Error(ErrorKind::kInvalidIndex, "zero has no inverse");
  }
  // a^(2^n - 2)
  std::uint32_t base = sd_to_poly_[a.bits()];
  std::uint32_t result = 1;
  for (std::uint32_t e = size() - 2; e != 0; e >>= 1) {
    if (e & 1u) result = poly_mul(result, base);
    base = poly_mul(base, base);
  }
  return FieldElement(this, poly_to_sd_[result]);
}

int FieldContext::trace(const FieldElement& a) const {
  check(a);
  return poly_trace_[sd_to_poly_[a.bits()]];
}

int FieldContext::weight(const FieldElement& a) const {
  check(a);
  return std::popcount(a.bits());
}

std::shared_ptr<FieldContext> FieldContext::create(int n) {
  const std::uint32_t poly = default_irreducible_poly(n);
  if (!is_irreducible(poly)) {
    throw Error(ErrorKind::kUnsupportedN,
                "table polynomial for n=" + std::to_string(n) +
                    " is reducible");
  }
  std::shared_ptr<FieldContext> ctx(new FieldContext());
  ctx->n_ = n;
  ctx->poly_ = poly;
  const std::uint32_t q = ctx->size();

  ctx->poly_trace_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t sum = 0;
    std::uint32_t x = a;
    for (int k = 0; k < n; ++k) {
      sum ^= x;
      x = ctx->poly_mul(x, x);
    }
    if (sum > 1) {
      throw Error(ErrorKind::kUnsupportedN, "trace left the prime field");
    }
    ctx->poly_trace_[a] = static_cast<std::uint8_t>(sum);
  }
  return ctx;
}

int FieldContext::form(std::uint32_t u, std::uint32_t v) const {
  return poly_trace_[poly_mul(u, v)];
}

void FieldContext::set_basis(std::vector<std::uint32_t> basis) {
  if (basis.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorKind::kInvalidSpec, "self-dual basis needs n elements");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (basis[i] >= size() || form(basis[i], basis[j]) != (i == j ? 1 : 0)) {
        throw Error(ErrorKind::kInvalidSpec, "basis is not self-dual");
      }
    }
  }
  basis_poly_ = std::move(basis);
  const std::uint32_t q = size();
  sd_to_poly_.assign(q, 0);
  poly_to_sd_.assign(q, 0);
  for (std::uint32_t b = 0; b < q; ++b) {
    std::uint32_t p = 0;
    for (int i = 1; i <= n_; ++i) {
      if ((b >> (n_ - i)) & 1u) p ^= basis_poly_[i - 1];
    }
    sd_to_poly_[b] = p;
    poly_to_sd_[p] = b;
  }
  if (std::count(poly_to_sd_.begin() + 1, poly_to_sd_.end(), 0u) != 0) {
    throw Error(ErrorKind::kInvalidSpec, "basis elements are dependent");
  }
}

FieldPtr make_field(int n) {
  auto ctx = FieldContext::create(n);
  auto form = [&](std::uint32_t u, std::uint32_t v) { return ctx->form(u, v); };

  // Symmetric congruence reduction of the trace form, starting from the
  // polynomial basis. A vector with form(v, v) = 1 is split off whenever one
  // exists; an alternating remainder {x, y, ...} is absorbed by replacing the
  // last split vector u with u+x, u+y, u+x+y.
  std::vector<std::uint32_t> remaining;
  for (int k = 0; k < n; ++k) remaining.push_back(std::uint32_t{1} << k);
  std::vector<std::uint32_t> out;
  while (!remaining.empty()) {
    auto pivot = remaining.end();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      if (form(*it, *it) == 1) {
        pivot = it;
        break;
      }
    }
    if (pivot != remaining.end()) {
      const std::uint32_t v = *pivot;
      remaining.erase(pivot);
      for (auto& w : remaining) {
        if (form(w, v)) w ^= v;
      }
      out.push_back(v);
      continue;
    }
    const std::uint32_t x = remaining.front();
    auto yit = remaining.begin() + 1;
    while (yit != remaining.end() && form(x, *yit) == 0) ++yit;
    if (yit == remaining.end() || out.empty()) {
      throw Error(ErrorKind::kUnsupportedN, "trace form is degenerate");
    }
    const std::uint32_t y = *yit;
    remaining.erase(yit);
    remaining.erase(remaining.begin());
    for (auto& w : remaining) {
      const int wx = form(w, x);
      const int wy = form(w, y);
      if (wy) w ^= x;
      if (wx) w ^= y;
    }
    const std::uint32_t u = out.back();
    out.pop_back();
    out.push_back(u ^ x);
    out.push_back(u ^ y);
    out.push_back(u ^ x ^ y);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (form(out[i], out[j]) != (i == j ? 1 : 0)) {
        throw Error(ErrorKind::kUnsupportedN, "self-dual reduction failed");
      }
    }
  }
  ctx->set_basis(std::move(out));
  return ctx;
}

FieldPtr make_field(int n, std::vector<std::uint32_t> selfdual_basis_poly) {
  auto ctx = FieldContext::create(n);
  ctx->set_basis(std::move(selfdual_basis_poly));
  return ctx;
}

std::vector<std::vector<std::uint32_t>> selfdual_bases(int n) {
  if (n < 1 || n > kMaxEnumerationQubits) {
    throw Error(ErrorKind::kUnsupportedN,
                "self-dual basis enumeration supports 1 <= n <= " +
                    std::to_string(kMaxEnumerationQubits));
  }
  auto ctx = FieldContext::create(n);
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t a = 1; a < ctx->size(); ++a) {
    if (ctx->poly_trace(a) == 1) candidates.push_back(a);
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == static_cast<std::size_t>(n)) {
      out.push_back(current);
      return;
    }
    for (std::size_t k = start; k < candidates.size(); ++k) {
      const std::uint32_t c = candidates[k];
      bool orthogonal = true;
      for (std::uint32_t e : current) orthogonal &= ctx->form(e, c) == 0;
      if (!orthogonal) continue;
      current.push_back(c);
      self(self, k + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  if (a.context() == nullptr || a.context() != b.context()) {
    throw Error(ErrorKind::kContextMismatch,
                "multiplying elements of different fields");
  }
  return a.context()->mul(a, b);
}

int trace(const FieldElement& a) {
  if (a.context() == nullptr) {
    throw Error(ErrorKind::kContextMismatch, "element has no field");
  }
  return a.context()->trace(a);
}

int weight(const FieldElement& a) { return std::popcount(a.bits()); }

}  // namespace pimub
