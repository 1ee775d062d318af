#include "squarint/sobol.hpp"

#include <string>

#include "squarint/errors.hpp"

namespace squarint {

namespace {

struct Primitive {
  unsigned s;
  unsigned a;
  std::uint32_t m[6];
};

// Joe–Kuo (new-joe-kuo-6.21201), dimensions 2..14.
constexpr Primitive kTable[] = {
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}},
    {5, 13, {1, 1, 1, 3, 11}},
    {5, 14, {1, 3, 5, 5, 31}},
    {6, 1, {1, 3, 3, 9, 7, 49}},
};

constexpr int kBits = 32;

}  // namespace

SobolSequence::SobolSequence(int dim) : dim_(dim) {
  if (dim < 1 || dim > kSobolMaxDim) {
    throw InvalidDim("Sobol dimension " + std::to_string(dim) + " outside 1.." + std::to_string(kSobolMaxDim));
  }
  v_.assign(static_cast<std::size_t>(dim) * kBits, 0);
  for (int i = 0; i < kBits; ++i) v_[static_cast<std::size_t>(i)] = 1u << (kBits - 1 - i);
  for (int d = 1; d < dim; ++d) {
    const Primitive& p = kTable[d - 1];
    std::uint32_t* v = &v_[static_cast<std::size_t>(d) * kBits];
    for (unsigned i = 0; i < p.s; ++i) v[i] = p.m[i] << (kBits - 1 - i);
    for (unsigned i = p.s; i < kBits; ++i) {
      std::uint32_t x = v[i - p.s] ^ (v[i - p.s] >> p.s);
      for (unsigned k = 1; k < p.s; ++k) {
        if ((p.a >> (p.s - 1 - k)) & 1u) x ^= v[i - k];
      }
      v[i] = x;
    }
  }
}

void SobolSequence::point(std::uint64_t n, std::span<std::uint32_t> out) const {
  const std::uint64_t g = n ^ (n >> 1);
  for (int d = 0; d < dim_; ++d) {
    const std::uint32_t* v = &v_[static_cast<std::size_t>(d) * kBits];
    std::uint32_t x = 0;
    for (int b = 0; b < kBits; ++b) {
      if ((g >> b) & 1u) x ^= v[b];
    }
    out[static_cast<std::size_t>(d)] = x;
  }
}

void SobolSequence::shifted_point(std::uint64_t n, std::span<const std::uint32_t> shift, std::span<double> out) const {
  std::uint32_t buf[kSobolMaxDim];
  point(n, std::span<std::uint32_t>(buf, static_cast<std::size_t>(dim_)));
  for (int d = 0; d < dim_; ++d) {
    const std::uint32_t x = buf[d] ^ shift[static_cast<std::size_t>(d)];
    out[static_cast<std::size_t>(d)] = (static_cast<double>(x) + 0.5) * 0x1p-32;
  }
}

}  // namespace squarint
