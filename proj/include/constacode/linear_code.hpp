#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "constacode/gf.hpp"
#include "constacode/kernels.hpp"

namespace constacode {

inline constexpr std::uint64_t kDefaultBudget = 1ull << 28;

struct LinearCode {
    FieldPtr field;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::uint8_t> gen;  // row-major k x n, element indices

    std::uint64_t q() const { return field->order(); }
    const std::uint8_t* row(std::uint32_t j) const { return gen.data() + std::size_t(j) * n; }
    std::uint64_t message_count() const;  // q^k
};

// Rows need not be independent; the constructor helper asserts rank == k.
LinearCode make_code(FieldPtr field, std::uint32_t n, std::vector<std::uint8_t> rows_flat,
                     std::uint32_t k);

// Exact sparse weight -> count map with arbitrary-precision counts.
struct WeightEnumerator {
    std::uint32_t n = 0;
    std::map<std::uint32_t, mpz_class> counts;

    mpz_class total() const;
    std::optional<std::uint32_t> min_positive_weight() const;
    mpz_class count(std::uint32_t w) const;
    bool operator==(const WeightEnumerator& o) const { return n == o.n && counts == o.counts; }

    // W(z)^e, expanded exactly; the length field becomes n*e.
    WeightEnumerator pow(unsigned e) const;
    // W(z^r): weights scaled by r, length n*r.
    WeightEnumerator subst_zr(unsigned r) const;

    std::string str() const;  // "1 + 15z^4 + ..." style, ascending weights
};

std::uint32_t rank_of(const FieldPtr& f, std::vector<std::uint8_t> rows, std::uint32_t k,
                      std::uint32_t n);

WeightEnumerator weight_distribution(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                                     int threads = 1, KernelKind kind = KernelKind::Auto);

std::uint32_t min_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                           int threads = 1);

// Minimum distance of the code whose parity-check matrix is parity.gen
// (the smallest number <= w_max of linearly dependent columns), or empty
// when every <= w_max column subset is independent.
std::optional<std::uint32_t> low_weight_search(const LinearCode& parity, std::uint32_t w_max);

LinearCode dual(const LinearCode& code);

// Exact MacWilliams transform of the dual of an [n,k] code over GF(q).
WeightEnumerator macwilliams(const WeightEnumerator& we, std::uint32_t n, std::uint32_t k,
                             std::uint64_t q);

struct PlessReport {
    bool moment[4] = {false, false, false, false};
    bool all() const { return moment[0] && moment[1] && moment[2] && moment[3]; }
};
PlessReport pless_check(const WeightEnumerator& we, const mpz_class& a1d, const mpz_class& a2d,
                        const mpz_class& a3d, std::uint32_t n, std::uint32_t k, std::uint64_t q);

bool sphere_packing_ok(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint64_t q);
bool sphere_packing_even_ok(std::uint32_t n, std::uint32_t k, std::uint32_t d_even, std::uint64_t q);
bool griesmer_ok(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint64_t q);

// Sorted list of all codewords as n-byte strings of element indices.
std::vector<std::string> codeword_set(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

// True iff {y : y_i = c_{perm[i]}, c in a} equals b as codeword sets.
bool permutation_equivalent_under(const LinearCode& a, const LinearCode& b,
                                  const std::vector<std::uint32_t>& perm,
                                  std::uint64_t budget = kDefaultBudget);

std::optional<std::uint64_t> is_constant_weight(const LinearCode& code,
                                                std::uint64_t budget = kDefaultBudget,
                                                int threads = 1);

// Membership of a vector in the row space.
bool contains(const LinearCode& code, const std::uint8_t* word);

mpz_class binomial(std::uint64_t n, std::uint64_t k);

}  // namespace constacode
