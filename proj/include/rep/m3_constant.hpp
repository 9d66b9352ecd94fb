#pragma once

// Calibrated constant for the critical third-moment bound
//
//     E[N_j(n)^3] <= kM3Constant * (n/j)^{3/2}   at p = 1/2.
//
// Produced by tools/calibrate_m3 (exact long-double moment recursions over
// j in {1..64, 128, 256, 512, 1024}, n up to 10^6, one Richardson step for
// the n -> infinity defect): extrapolated sup 5.9427286063794886, raw grid
// sup 5.9171938853717068. Stored rounded up to keep the inequality safe.

namespace rep::oracles {
inline constexpr double kM3Constant = 5.943;
}
