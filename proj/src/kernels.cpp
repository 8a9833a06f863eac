#include "constacode/kernels.hpp"

#include <cstring>
#include <thread>

#include "constacode/errors.hpp"

namespace constacode {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool avx2_supports_field(const Field& f) {
    return f.p() == 2 || (f.degree() == 1 && f.p() < 100);
}

EnumPlan make_enum_plan(const FieldPtr& field, const std::uint8_t* rows, std::uint32_t k,
                        std::uint32_t n) {
    if (field->order() > 256) fail_param("enumeration kernels require q <= 256");
    EnumPlan plan;
    plan.field = field.get();
    plan.n = n;
    plan.stride = (n + 31) / 32 * 32;
    plan.q = static_cast<std::uint32_t>(field->order());
    plan.k = k;
    plan.total = 1;
    for (std::uint32_t j = 0; j < k; ++j) plan.total *= plan.q;

    const std::uint32_t q = plan.q;
    plan.delta.assign(std::size_t(k) * q * plan.stride, 0);
    plan.scaled.assign(std::size_t(k) * q * plan.stride, 0);
    for (std::uint32_t j = 0; j < k; ++j) {
        const std::uint8_t* row = rows + std::size_t(j) * n;
        for (std::uint32_t c = 0; c < q; ++c) {
            FElem dc = field->sub((c + 1) % q, c);
            std::uint8_t* d = &plan.delta[(std::size_t(j) * q + c) * plan.stride];
            std::uint8_t* s = &plan.scaled[(std::size_t(j) * q + c) * plan.stride];
            for (std::uint32_t i = 0; i < n; ++i) {
                d[i] = static_cast<std::uint8_t>(field->mul(dc, row[i]));
                s[i] = static_cast<std::uint8_t>(field->mul(c, row[i]));
            }
        }
    }
    plan.add_table.assign(std::size_t(q) * q, 0);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            plan.add_table[std::size_t(a) * q + b] = static_cast<std::uint8_t>(field->add(a, b));
    return plan;
}

namespace detail {

struct ScalarOps {
    const std::uint8_t* add_table;
    std::uint32_t q;
    std::uint32_t n;
    void add_row(std::uint8_t* dst, const std::uint8_t* row, std::size_t) const {
        for (std::uint32_t i = 0; i < n; ++i) dst[i] = add_table[std::size_t(dst[i]) * q + row[i]];
    }
    std::uint32_t weight(const std::uint8_t* cw, std::size_t) const {
        std::uint32_t w = 0;
        for (std::uint32_t i = 0; i < n; ++i) w += cw[i] != 0;
        return w;
    }
};

}  // namespace detail
}  // namespace constacode

#include "kernels_core.inl"

namespace constacode {
namespace detail {

void run_weight_range_scalar(const EnumPlan& plan, std::uint64_t begin, std::uint64_t end,
                             std::uint64_t* counts) {
    run_weight_range_core(plan, begin, end, counts,
                          ScalarOps{plan.add_table.data(), plan.q, plan.n});
}

}  // namespace detail

void run_weight_range(const EnumPlan& plan, std::uint64_t begin, std::uint64_t end,
                      std::uint64_t* counts, KernelKind kind) {
    if (begin >= end) return;
    bool use_avx2 = false;
    switch (kind) {
        case KernelKind::Scalar:
            break;
        case KernelKind::Avx2:
            if (!cpu_has_avx2() || !avx2_supports_field(*plan.field))
                fail_param("AVX2 kernel not available for this field/CPU");
            use_avx2 = true;
            break;
        case KernelKind::Auto:
            use_avx2 = cpu_has_avx2() && avx2_supports_field(*plan.field);
            break;
    }
    if (use_avx2)
        detail::run_weight_range_avx2(plan, begin, end, counts);
    else
        detail::run_weight_range_scalar(plan, begin, end, counts);
}

std::vector<std::uint64_t> enumerate_weights_raw(const FieldPtr& field, const std::uint8_t* rows,
                                                 std::uint32_t k, std::uint32_t n, int threads,
                                                 KernelKind kind) {
    EnumPlan plan = make_enum_plan(field, rows, k, n);
    std::vector<std::uint64_t> counts(n + 1, 0);
    if (threads < 1) threads = 1;
    std::uint64_t total = plan.total;
    if (threads == 1 || total < 1u << 16) {
        run_weight_range(plan, 0, total, counts.data(), kind);
        return counts;
    }
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n + 1, 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t b = total / threads * t;
        std::uint64_t e = t + 1 == threads ? total : total / threads * (t + 1);
        pool.emplace_back([&, t, b, e] { run_weight_range(plan, b, e, partial[t].data(), kind); });
    }
    for (auto& th : pool) th.join();
    for (auto& part : partial)
        for (std::uint32_t w = 0; w <= n; ++w) counts[w] += part[w];
    return counts;
}

}  // namespace constacode
