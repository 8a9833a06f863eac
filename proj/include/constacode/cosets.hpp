#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace constacode {

struct CyclotomicCoset {
    std::uint64_t modulus = 0;
    std::uint64_t representative = 0;
    std::vector<std::uint64_t> members;  // sorted
    std::uint64_t leader() const { return members.front(); }
    std::size_t size() const { return members.size(); }
};

// Derived parameters of one (q, n, r) instance.
struct ParamBundle {
    std::uint64_t q = 0, n = 0, r = 0;
    std::uint64_t ell = 0;    // ord_n(q)
    std::uint64_t kappa = 0;  // r / gcd((q^ell-1)/n, r); ord_{rn}(q) = kappa*ell
    mpz_class e;              // (q^ell-1) / gcd(q^ell-1, (q-1)n)
    mpz_class L;              // gcd((q^{kappa ell}-1)/(q-1), (q^{kappa ell}-1)/(nr))
};

// Least l >= 1 with q^l == 1 (mod n); requires gcd(q, n) == 1.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t n);

std::uint64_t kappa(std::uint64_t q, std::uint64_t n, std::uint64_t r);

mpz_class param_e(std::uint64_t q, std::uint64_t n, std::uint64_t r);
mpz_class param_L(std::uint64_t q, std::uint64_t n, std::uint64_t r);

ParamBundle param_bundle(std::uint64_t q, std::uint64_t n, std::uint64_t r);

CyclotomicCoset cyclotomic_coset(std::uint64_t q, std::uint64_t N, std::uint64_t i);

// One coset per leader, ordered by leader ascending.
std::vector<CyclotomicCoset> coset_partition(std::uint64_t q, std::uint64_t N);

// Leaders of cosets modulo rn whose members are == 1 (mod r), ascending.
std::vector<std::uint64_t> gamma1(std::uint64_t q, std::uint64_t n, std::uint64_t r);

}  // namespace constacode
