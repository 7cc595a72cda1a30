#include "eigenbound/sobol.hpp"

#include <stdexcept>

namespace eigenbound {

namespace {

constexpr int kBits = 32;

// new-joe-kuo-6 parameters: degree s, coefficient a, initial m values.
struct JoeKuoRow {
  int s;
  std::uint32_t a;
  std::uint32_t m[5];
};

// Rows for dimensions 2..10 (dimension 1 is the van der Corput sequence).
constexpr JoeKuoRow kJoeKuo[] = {
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
};

}  // namespace

SobolSequence::SobolSequence(int dims) : dims_(dims) {
  if (dims < 1 || dims > 10)
    throw std::invalid_argument("SobolSequence supports 1..10 dimensions");
  dir_.resize(dims);
  for (int d = 0; d < dims; ++d) {
    auto& v = dir_[d];
    v.resize(kBits);
    if (d == 0) {
      for (int j = 0; j < kBits; ++j) v[j] = 1u << (kBits - 1 - j);
      continue;
    }
    const JoeKuoRow& row = kJoeKuo[d - 1];
    const int s = row.s;
    for (int j = 0; j < s && j < kBits; ++j)
      v[j] = row.m[j] << (kBits - 1 - j);
    for (int j = s; j < kBits; ++j) {
      std::uint32_t x = v[j - s] ^ (v[j - s] >> s);
      for (int k = 1; k < s; ++k)
        if ((row.a >> (s - 1 - k)) & 1u) x ^= v[j - k];
      v[j] = x;
    }
  }
}

std::vector<double> SobolSequence::point(std::uint64_t i) const {
  std::vector<double> out(dims_);
  for (int d = 0; d < dims_; ++d) {
    std::uint32_t x = 0;
    std::uint64_t idx = i;
    for (int j = 0; j < kBits && idx != 0; ++j, idx >>= 1)
      if (idx & 1u) x ^= dir_[d][j];
    out[d] = (static_cast<double>(x) + 0.5) * 0x1.0p-32;
  }
  return out;
}

}  // namespace eigenbound
