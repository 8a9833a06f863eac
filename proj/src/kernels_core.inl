// Odometer core shared by the scalar and SIMD translation units. The
// including file defines an Ops type with:
//   void add_row(uint8_t* dst, const uint8_t* row, size_t stride)
//   uint32_t weight(const uint8_t* cw, size_t stride)
// and instantiates run_weight_range_core<Ops>.

namespace constacode {
namespace detail {

template <class Ops>
static void run_weight_range_core(const EnumPlan& plan, std::uint64_t begin, std::uint64_t end,
                                  std::uint64_t* counts, Ops ops) {
    const std::size_t stride = plan.stride;
    const std::uint32_t q = plan.q;
    const std::uint32_t k = plan.k;

    std::vector<std::uint8_t> cw(stride, 0);
    std::vector<std::uint32_t> digits(k, 0);

    // Seed the state for message index `begin`.
    {
        std::uint64_t t = begin;
        for (std::uint32_t j = 0; j < k; ++j) {
            digits[j] = static_cast<std::uint32_t>(t % q);
            t /= q;
            if (digits[j] != 0)
                ops.add_row(cw.data(), &plan.scaled[(std::size_t(j) * q + digits[j]) * stride], stride);
        }
    }

    counts[ops.weight(cw.data(), stride)]++;
    for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
        std::uint32_t d = 0;
        while (digits[d] == q - 1) {
            ops.add_row(cw.data(), &plan.delta[(std::size_t(d) * q + (q - 1)) * stride], stride);
            digits[d] = 0;
            ++d;
        }
        ops.add_row(cw.data(), &plan.delta[(std::size_t(d) * q + digits[d]) * stride], stride);
        digits[d]++;
        counts[ops.weight(cw.data(), stride)]++;
    }
}

}  // namespace detail
}  // namespace constacode
