// Copyright 2026 The cellmorph Authors. All Rights Reserved.
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

#include "cellmorph/geometry/moments.h"

#include "cellmorph/error.h"

namespace cellmorph {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

struct U256 {
  u128 hi = 0;
  u128 lo = 0;
  auto operator<=>(const U256&) const = default;
};

// Full 128x128 -> 256-bit product via 64-bit limbs.
U256 MulWide(u128 a, u128 b) {
  const u128 mask = ~std::uint64_t{0};
  const u128 a0 = a & mask, a1 = a >> 64;
  const u128 b0 = b & mask, b1 = b >> 64;
  const u128 p00 = a0 * b0;
  const u128 p01 = a0 * b1;
  const u128 p10 = a1 * b0;
  const u128 p11 = a1 * b1;
  const u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  U256 r;
  r.lo = (p00 & mask) | (mid << 64);
  r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return r;
}

u128 Abs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

}  // namespace

RawMoments ComputeRawMoments(const BinaryMask& mask) {
  RawMoments m;
  for (int y = 0; y < mask.height(); ++y) {
    const auto row = mask.row(y);
    std::uint64_t count = 0, sx = 0, sxx = 0;
    for (int x = 0; x < mask.width(); ++x) {
      if (row[x]) {
        const std::uint64_t ux = static_cast<std::uint64_t>(x);
        ++count;
        sx += ux;
        sxx += ux * ux;
      }
    }
    if (count == 0) continue;
    const std::uint64_t uy = static_cast<std::uint64_t>(y);
    m.m00 += count;
    m.m10 += sx;
    m.m01 += uy * count;
    m.m11 += uy * sx;
    m.m20 += sxx;
    m.m02 += uy * uy * count;
  }
  return m;
}

CentralMoments ComputeCentralMoments(const RawMoments& m) {
  if (m.m00 == 0) {
    throw Error(ErrorCode::kEmptyRegion, "central moments need m00 > 0");
  }
  // Scaled central moments n_pq = m00 * mu_pq, exact in 128 bits.
  const u128 n = m.m00;
  const u128 n20 = n * m.m20 - static_cast<u128>(m.m10) * m.m10;
  const u128 n02 = n * m.m02 - static_cast<u128>(m.m01) * m.m01;
  const i128 n11 = static_cast<i128>(n * m.m11) -
                   static_cast<i128>(static_cast<u128>(m.m10) * m.m01);

  const double area = static_cast<double>(m.m00);
  CentralMoments c;
  c.m00 = m.m00;
  c.centroid_x = static_cast<double>(m.m10) / area;
  c.centroid_y = static_cast<double>(m.m01) / area;
  c.mu20 = static_cast<double>(n20) / area;
  c.mu02 = static_cast<double>(n02) / area;
  c.mu11 = static_cast<double>(n11) / area;
  c.collinear = MulWide(n20, n02) == MulWide(Abs(n11), Abs(n11));
  return c;
}

}  // namespace cellmorph
