#include "constacode/cosets.hpp"

#include <algorithm>
#include <numeric>

#include "constacode/errors.hpp"

namespace constacode {

static void require_coprime(std::uint64_t q, std::uint64_t n) {
    if (n == 0) fail_param("modulus must be positive");
    if (std::gcd(q, n) != 1)
        fail_param("gcd(q, n) != 1 for q=" + std::to_string(q) + ", n=" + std::to_string(n));
}

static void require_r(std::uint64_t q, std::uint64_t r) {
    if (r == 0 || (q - 1) % r != 0)
        fail_param("r=" + std::to_string(r) + " does not divide q-1=" + std::to_string(q - 1));
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t n) {
    require_coprime(q, n);
    if (n == 1) return 1;
    std::uint64_t t = q % n, l = 1;
    while (t != 1) {
        t = t * (q % n) % n;
        ++l;
    }
    return l;
}

std::uint64_t kappa(std::uint64_t q, std::uint64_t n, std::uint64_t r) {
    require_coprime(q, n);
    require_r(q, r);
    std::uint64_t ell = mult_order(q, n);
    mpz_class qe;
    mpz_ui_pow_ui(qe.get_mpz_t(), q, ell);
    mpz_class m = (qe - 1) / n;  // n | q^ell - 1 by definition of ell
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), m.get_mpz_t(), r);
    std::uint64_t k = r / g.get_ui();
    // Self check: ord_{rn}(q) = kappa * ell.
    if (mult_order(q, r * n) != k * ell) fail_param("kappa consistency check failed");
    return k;
}

mpz_class param_e(std::uint64_t q, std::uint64_t n, std::uint64_t r) {
    require_coprime(q, n);
    require_r(q, r);
    std::uint64_t ell = mult_order(q, n);
    mpz_class qe;
    mpz_ui_pow_ui(qe.get_mpz_t(), q, ell);
    qe -= 1;
    mpz_class g;
    mpz_class qn = mpz_class(q - 1) * n;
    mpz_gcd(g.get_mpz_t(), qe.get_mpz_t(), qn.get_mpz_t());
    return qe / g;
}

mpz_class param_L(std::uint64_t q, std::uint64_t n, std::uint64_t r) {
    std::uint64_t ell = mult_order(q, n);
    std::uint64_t k = kappa(q, n, r);
    mpz_class Q;
    mpz_ui_pow_ui(Q.get_mpz_t(), q, k * ell);
    Q -= 1;
    mpz_class a = Q / (q - 1);
    mpz_class b = Q / (mpz_class(n) * r);  // rn | q^{kappa ell} - 1
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

ParamBundle param_bundle(std::uint64_t q, std::uint64_t n, std::uint64_t r) {
    ParamBundle pb;
    pb.q = q;
    pb.n = n;
    pb.r = r;
    pb.ell = mult_order(q, n);
    pb.kappa = kappa(q, n, r);
    pb.e = param_e(q, n, r);
    pb.L = param_L(q, n, r);
    return pb;
}

CyclotomicCoset cyclotomic_coset(std::uint64_t q, std::uint64_t N, std::uint64_t i) {
    require_coprime(q, N);
    CyclotomicCoset c;
    c.modulus = N;
    c.representative = i % N;
    std::uint64_t x = i % N;
    do {
        c.members.push_back(x);
        x = x * (q % N) % N;
    } while (x != i % N);
    std::sort(c.members.begin(), c.members.end());
    return c;
}

std::vector<CyclotomicCoset> coset_partition(std::uint64_t q, std::uint64_t N) {
    require_coprime(q, N);
    std::vector<bool> seen(N, false);
    std::vector<CyclotomicCoset> out;
    for (std::uint64_t i = 0; i < N; ++i) {
        if (seen[i]) continue;
        auto c = cyclotomic_coset(q, N, i);
        for (auto m : c.members) seen[m] = true;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::uint64_t> gamma1(std::uint64_t q, std::uint64_t n, std::uint64_t r) {
    require_r(q, r);
    require_coprime(q, r * n);
    std::vector<std::uint64_t> out;
    std::vector<bool> seen(r * n, false);
    for (std::uint64_t i = 0; i < r * n; ++i) {
        if (seen[i] || i % r != 1 % r) continue;
        auto c = cyclotomic_coset(q, r * n, i);
        for (auto m : c.members) seen[m] = true;
        out.push_back(c.leader());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace constacode
