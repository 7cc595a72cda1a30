#pragma once

#include <cstdint>
#include <vector>

namespace eigenbound {

// Sobol low-discrepancy sequence (Joe-Kuo direction numbers, dims <= 10).
// Plain binary digital construction: for a full block of 2^m indices the
// point set equals the Gray-code ordering's, and the first 2^{m-1} points
// form the 2^{m-1} block, which makes half-sample error splits exact.
class SobolSequence {
 public:
  explicit SobolSequence(int dims);

  // Point for 0-based index i, each coordinate offset by half an ulp so the
  // result lies strictly inside (0, 1)^dims.
  std::vector<double> point(std::uint64_t i) const;

  int dims() const { return dims_; }

 private:
  int dims_;
  std::vector<std::vector<std::uint32_t>> dir_;  // [dim][32]
};

}  // namespace eigenbound
