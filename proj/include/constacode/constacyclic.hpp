#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "constacode/cosets.hpp"
#include "constacode/gf.hpp"
#include "constacode/linear_code.hpp"
#include "constacode/polyring.hpp"

namespace constacode {

// One (q, n, r) instance: the extension GF(q^{kappa*ell}) with primitive
// alpha, beta = alpha^((Q-1)/rn) of order rn, lambda = beta^n of order r,
// theta = beta^-1, plus the standalone base field GF(q) and the map onto it.
struct ConstaSpec {
    std::uint64_t q = 0, n = 0, r = 0;
    std::uint64_t ell = 0, kappa = 0;
    FieldPtr ext;
    FieldPtr base;
    SubfieldMap down;
    FElem beta = 0, lambda_big = 0, theta = 0;
    FElem lambda = 0;      // in base
    FElem lambda_inv = 0;  // in base

    std::uint64_t dim() const { return kappa * ell; }
};
using ConstaSpecPtr = std::shared_ptr<const ConstaSpec>;

// ext_poly: optional defining polynomial of GF(q^{kappa*ell}) over GF(p).
ConstaSpecPtr spec_create(std::uint64_t q, std::uint64_t n, std::uint64_t r,
                          std::optional<std::vector<std::uint32_t>> ext_poly = std::nullopt,
                          std::optional<std::vector<std::uint32_t>> base_poly = std::nullopt);

// The [n, kappa*ell] code with rows Tr(alpha^j theta^i) over the base field.
LinearCode build_C(const ConstaSpec& spec);

// Ideal generated by (x^n - lambda)/h; dimension deg h.
LinearCode build_from_check_poly(const FieldPtr& f, std::uint64_t n, FElem lambda, const Poly& h);

// The lambda^-1-constacyclic dual, generated by the minimal polynomial of
// beta^-1; equals dual(build_C(spec)) as a set.
LinearCode dual_C(const ConstaSpec& spec);

LinearCode exp1(const ConstaSpec& spec);  // [rn/kappa, ell] cyclic
LinearCode exp2(const ConstaSpec& spec);  // [n/kappa, ell]
LinearCode exp3(const ConstaSpec& spec);  // [n, ell] cyclic

// The code with check polynomial M_{beta^t}; t == 1 (mod r), gcd(t,n) == 1.
LinearCode build_Ct(const ConstaSpec& spec, std::uint64_t t);

// Standalone small-extension construction of Exp1/Exp2 that never touches
// GF(q^{kappa*ell}): works in GF(q^ell) with a primitive (rn/kappa)-th root
// of unity. The weight enumerator does not depend on the root chosen, so
// these support instances whose full extension is out of reach.
LinearCode exp1_reduced(std::uint64_t q, std::uint64_t n, std::uint64_t r,
                        std::optional<std::vector<std::uint32_t>> field_poly = std::nullopt);
LinearCode exp2_reduced(std::uint64_t q, std::uint64_t n, std::uint64_t r,
                        std::optional<std::vector<std::uint32_t>> field_poly = std::nullopt);

// Closure under (c_0,...,c_{n-1}) -> (lambda*c_{n-1}, c_0,...,c_{n-2}).
bool is_constashift_closed(const LinearCode& code, FElem lambda);

// Exp1 = { c || lambda^-1 c || ... || lambda^-(r-1) c : c in Exp2 } as sets.
bool verify_thm4_concat(const ConstaSpec& spec, std::uint64_t budget = kDefaultBudget);

// C reordered by (block j, offset i) -> kappa*i + j equals the kappa-fold
// outer direct sum of Exp2; likewise for the duals.
bool verify_thm4_directsum(const ConstaSpec& spec, std::uint64_t budget = kDefaultBudget);

struct EnumeratorLinkReport {
    WeightEnumerator w_exp2, w_exp1, w_c;
    bool exp1_matches = false;  // w_exp1 == w_exp2(z^r)
    bool c_matches = false;     // w_c == w_exp2^kappa
    bool ok() const { return exp1_matches && c_matches; }
};
EnumeratorLinkReport verify_thm5(const ConstaSpec& spec, std::uint64_t budget = kDefaultBudget,
                                 int threads = 1);

// The dual of C has weight enumerator equal to the kappa-th power of the
// dual of Exp2's enumerator. Duals are obtained by the MacWilliams
// transform; when the dual itself fits the budget its direct enumeration
// is compared as well.
bool verify_thm6(const ConstaSpec& spec, std::uint64_t budget = kDefaultBudget);

// Image of `code` under y_j = lambda^(-floor(t*j/n)) * c_{t*j mod n}.
// This is the exact coordinate map induced by the index change i -> t*i on
// the defining roots: wrapping past n picks up one power of lambda each
// time, so the equivalence is monomial, not a bare permutation, unless
// lambda = 1. Requires gcd(t, n) = 1.
LinearCode index_map_image(const LinearCode& code, FElem lambda, std::uint64_t t);

// C maps onto Exp3 under index_map_image with t = r (for r = 1 this is the
// identity, matching the cyclic statement); requires gcd(r, n) == 1.
bool verify_bridge(const ConstaSpec& spec, std::uint64_t budget = kDefaultBudget);

struct DualDistanceReport {
    std::uint64_t dual_dim = 0;
    bool predicts_2 = false;        // gcd((q-1)/r, n) > 1
    bool window_3_to_4 = false;     // n | (q^l-1)/(q-1), n > 2(q^{l/2}-1)/(q-1), gcd = 1
    bool exact_3 = false;           // n | (q^l-1)/(q-1), n > (q^{l-1}-1)/(q-1)+2, gcd = 1
    std::optional<std::uint32_t> measured;  // empty means > 4
    bool agrees = false;
    bool distance_optimal = false;  // no [n, n-l, 4] exists (even-distance bound)
    bool dimension_optimal = false; // no [n, n-l+1, 3] exists (sphere packing)
};
DualDistanceReport theorem7_dual_analysis(const ConstaSpec& spec);

}  // namespace constacode
