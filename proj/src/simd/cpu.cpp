#include "simd/cpu.hpp"

#include <cstdlib>
#include <cstring>

namespace nsrd::simd {

static CpuCaps query_caps() {
    CpuCaps caps;
#if defined(__x86_64__) || defined(_M_X64)
    caps.avx2 = __builtin_cpu_supports("avx2");
    caps.fma = __builtin_cpu_supports("fma");
#endif
    return caps;
}

const CpuCaps& cpu_caps() {
    static const CpuCaps caps = query_caps();
    return caps;
}

static Isa resolve_isa() {
    const CpuCaps& caps = cpu_caps();
    Isa best = Isa::scalar;
#if NSRD_HAVE_AVX2_TU
    if (caps.avx2 && caps.fma) best = Isa::avx2;
#endif
    if (const char* env = std::getenv("NSRD_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0) return best;  // only if actually available
    }
    return best;
}

Isa active_isa() {
    static const Isa isa = resolve_isa();
    return isa;
}

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::avx2: return "avx2";
        default: return "scalar";
    }
}

}  // namespace nsrd::simd
