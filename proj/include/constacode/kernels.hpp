#pragma once

#include <cstdint>
#include <vector>

#include "constacode/gf.hpp"

namespace constacode {

enum class KernelKind {
    Auto,    // best available for the field on this CPU
    Scalar,  // reference path, any field with q <= 256
    Avx2,    // characteristic-2 (xor) or prime-field (add mod p) bytes
};

bool cpu_has_avx2();

// Whether an AVX2 kernel exists for this field (char 2 or prime p < 100).
bool avx2_supports_field(const Field& f);

// Precomputed state for enumerating all q^k combinations of k generator
// rows of length n: per-digit delta rows for the mixed-radix odometer and
// scaled rows for seeding a range start.
struct EnumPlan {
    const Field* field = nullptr;
    std::uint32_t n = 0;
    std::size_t stride = 0;  // n rounded up to 32
    std::uint32_t q = 0;
    std::uint32_t k = 0;
    std::uint64_t total = 0;               // q^k
    std::vector<std::uint8_t> delta;       // (k*q) rows: (elem((c+1)%q)-elem(c)) * row_j
    std::vector<std::uint8_t> scaled;      // (k*q) rows: elem(c) * row_j
    std::vector<std::uint8_t> add_table;   // q*q flat, for the scalar kernel
};

// rows: k*n field element indices (< q <= 256), row-major.
EnumPlan make_enum_plan(const FieldPtr& field, const std::uint8_t* rows, std::uint32_t k,
                        std::uint32_t n);

// Counts codeword weights for message indices in [begin, end); adds into
// counts[0..n]. Deterministic regardless of kind.
void run_weight_range(const EnumPlan& plan, std::uint64_t begin, std::uint64_t end,
                      std::uint64_t* counts, KernelKind kind);

// Full weight count histogram (size n+1), partitioned across `threads`
// workers, exact integer merge.
std::vector<std::uint64_t> enumerate_weights_raw(const FieldPtr& field, const std::uint8_t* rows,
                                                 std::uint32_t k, std::uint32_t n, int threads,
                                                 KernelKind kind = KernelKind::Auto);

namespace detail {
void run_weight_range_scalar(const EnumPlan& plan, std::uint64_t begin, std::uint64_t end,
                             std::uint64_t* counts);
// Defined in the AVX2 translation unit; only call when cpu_has_avx2().
void run_weight_range_avx2(const EnumPlan& plan, std::uint64_t begin, std::uint64_t end,
                           std::uint64_t* counts);
}  // namespace detail

}  // namespace constacode
