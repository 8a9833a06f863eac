// AVX2 variants of the enumeration kernel. Compiled with -mavx2; callers
// gate on cpu_has_avx2() at runtime.

#include "constacode/kernels.hpp"

#include "constacode/errors.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace constacode {
namespace detail {

static inline std::uint32_t nonzero_bytes(const std::uint8_t* cw, std::size_t stride) {
    const __m256i zero = _mm256_setzero_si256();
    std::uint32_t zeros = 0;
    for (std::size_t i = 0; i < stride; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cw + i));
        std::uint32_t m = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
        zeros += static_cast<std::uint32_t>(__builtin_popcount(m));
    }
    return static_cast<std::uint32_t>(stride) - zeros;
}

// Characteristic 2: index encoding makes field addition a plain xor.
struct XorOps {
    void add_row(std::uint8_t* dst, const std::uint8_t* row, std::size_t stride) const {
        for (std::size_t i = 0; i < stride; i += 32) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
            __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
        }
    }
    std::uint32_t weight(const std::uint8_t* cw, std::size_t stride) const {
        return nonzero_bytes(cw, stride);
    }
};

// Prime field p < 100: bytewise add, then subtract p where the sum
// reached p (sums stay below 2p-2 < 198, unsigned max detects t >= p).
struct ModPOps {
    __m256i vp;
    void add_row(std::uint8_t* dst, const std::uint8_t* row, std::size_t stride) const {
        for (std::size_t i = 0; i < stride; i += 32) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
            __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
            __m256i t = _mm256_add_epi8(a, b);
            __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(t, vp), t);
            t = _mm256_sub_epi8(t, _mm256_and_si256(ge, vp));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
        }
    }
    std::uint32_t weight(const std::uint8_t* cw, std::size_t stride) const {
        return nonzero_bytes(cw, stride);
    }
};

}  // namespace detail
}  // namespace constacode

#include "kernels_core.inl"

namespace constacode {
namespace detail {

void run_weight_range_avx2(const EnumPlan& plan, std::uint64_t begin, std::uint64_t end,
                           std::uint64_t* counts) {
    const Field& f = *plan.field;
    if (f.p() == 2) {
        run_weight_range_core(plan, begin, end, counts, XorOps{});
    } else if (f.degree() == 1 && f.p() < 100) {
        ModPOps ops{_mm256_set1_epi8(static_cast<char>(f.p()))};
        run_weight_range_core(plan, begin, end, counts, ops);
    } else {
        fail_param("no AVX2 kernel for this field");
    }
}

}  // namespace detail
}  // namespace constacode

#else  // !__AVX2__

namespace constacode {
namespace detail {
void run_weight_range_avx2(const EnumPlan& plan, std::uint64_t begin, std::uint64_t end,
                           std::uint64_t* counts) {
    run_weight_range_scalar(plan, begin, end, counts);
}
}  // namespace detail
}  // namespace constacode

#endif
