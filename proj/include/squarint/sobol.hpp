#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace squarint {

/// Highest dimension covered by the direction-number table.
inline constexpr int kSobolMaxDim = 14;

/// Sobol points in base 2 with 32-bit resolution and Joe–Kuo direction
/// numbers. Points are random-access: point n is the XOR of the direction
/// numbers selected by the Gray code of n, so any index range can be
/// generated independently (and in parallel).
class SobolSequence {
 public:
  explicit SobolSequence(int dim);

  int dim() const { return dim_; }

  /// Integer coordinates of point n (n < 2^32); out.size() must equal dim().
  void point(std::uint64_t n, std::span<std::uint32_t> out) const;

  /// Point n with a digital shift XOR-ed in, mapped to the open unit cube
  /// as (x + 1/2)/2^32.
  void shifted_point(std::uint64_t n, std::span<const std::uint32_t> shift, std::span<double> out) const;

 private:
  int dim_;
  std::vector<std::uint32_t> v_;  // dim_ × 32, row-major
};

}  // namespace squarint
