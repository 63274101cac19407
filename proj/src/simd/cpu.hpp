#pragma once

namespace nsrd::simd {

struct CpuCaps {
    bool avx2 = false;
    bool fma = false;
};

// Queries the host CPU once and caches the result.
const CpuCaps& cpu_caps();

enum class Isa { scalar, avx2 };

// Kernel path in effect. Resolved once from cpu_caps(), honoring the
// NSRD_SIMD environment variable ("scalar" or "avx2") as an override.
// Requesting avx2 on a CPU without it falls back to scalar.
Isa active_isa();

const char* isa_name(Isa isa);

}  // namespace nsrd::simd
