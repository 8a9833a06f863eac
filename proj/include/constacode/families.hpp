#pragma once

#include <cstdint>
#include <vector>

#include "constacode/constacyclic.hpp"
#include "constacode/linear_code.hpp"

namespace constacode {

// Integer pair of the diophantine representations behind the three- and
// four-weight enumerators. d1 is normalized to be nonnegative; both
// enumerators are symmetric under flipping its sign.
struct GaussCD {
    std::int64_t c1 = 0;
    std::int64_t d1 = 0;
};

// 4*q^(m/3) = c1^2 + 27*d1^2 with c1 == 1 (mod 3), gcd(c1, p) = 1.
// Requires p == 1 (mod 3) and 3 | s*m where q = p^s.
GaussCD gauss_cd_e3(std::uint64_t p, std::uint64_t q, std::uint64_t m);

// q^(m/2) = c1^2 + 4*d1^2 with c1 == 1 (mod 4), gcd(c1, p) = 1.
// Requires p == 1 (mod 4) and 4 | s*m.
GaussCD gauss_cd_e4(std::uint64_t p, std::uint64_t q, std::uint64_t m);

struct FamilyPrediction {
    std::uint64_t length = 0;
    std::uint64_t dimension = 0;
    WeightEnumerator enumerator;
};

// Closed-form predicted parameters and enumerator of the length-rn/kappa
// cyclic companion code for n = r*(q^m-1)/((q-1)*e). The case is selected
// by e: e = 1 one-weight; e = 2 (m even) two-weight; e = 3 / e = 4 with
// p == 1 (mod 3) / (mod 4) three- and four-weight via the diophantine
// pairs; otherwise e > 2 with p^j == -1 (mod e) for some j (two-weight,
// semiprimitive). Violated preconditions raise a Parameter error.
FamilyPrediction predict_lemma8(std::uint64_t q, std::uint64_t r, std::uint64_t m,
                                std::uint64_t e);

// The e = 3 and e = 4 enumerators with an explicit (c1, d1); exposed so the
// d1 sign-flip symmetry is directly testable.
WeightEnumerator lemma8_enumerator_e3(std::uint64_t q, std::uint64_t r, std::uint64_t m,
                                      std::int64_t c1, std::int64_t d1);
WeightEnumerator lemma8_enumerator_e4(std::uint64_t q, std::uint64_t r, std::uint64_t m,
                                      std::int64_t c1, std::int64_t d1);

struct FamilyParams {
    std::uint64_t q = 0, m = 0, e = 0, u = 0, r = 0;
    // derived
    std::uint64_t p = 0, s = 0;  // q = p^s
    std::uint64_t n = 0;         // u*(q^m-1)/((q-1)*e)
    enum class Case { e1, e2, e3, e4, semiprimitive } tag = Case::e1;
    std::int64_t c1 = 0, d1 = 0;       // e3/e4 cases
    std::uint64_t j = 0, gamma = 0;    // semiprimitive case
};

// Validates e | (q^m-1)/(q-1), e <= (q^(m/2)+1)/2, u | q-1, gcd(e,u) = 1,
// r | q-1, gcd((q-1)/r, n) = 1 and the case congruences; fills derived
// fields. Parameter error on violation.
FamilyParams family_params(std::uint64_t q, std::uint64_t m, std::uint64_t e,
                           std::uint64_t u, std::uint64_t r);

struct MainFamilyPrediction {
    FamilyParams params;
    std::uint64_t n = 0;
    std::uint64_t dimension = 0;       // u*m
    WeightEnumerator enumerator;       // base enumerator to the u-th power
    std::uint64_t dual_dimension = 0;  // n - u*m
    std::uint32_t dual_distance = 0;   // 3, or 4 in the one exceptional case
};
MainFamilyPrediction predict_main_family(const FamilyParams& params);

enum class CorollaryKind { simplex, two_weight, three_weight };

struct CorollaryPrediction {
    std::uint64_t n = 0;
    std::uint64_t dimension = 0;
    std::uint64_t min_weight = 0;
    WeightEnumerator enumerator;
    std::uint64_t dual_dimension = 0;
    std::uint32_t dual_distance = 3;
    bool constant_weight = false;  // simplex kind only
};

// simplex: n = (q^m-1)/(q-1), gcd((q-1)/r, m) = 1, constant weight q^(m-1).
// two_weight: n = 2*(q^m-1)/(q-1), q odd, gcd((q-1)/r, 2m) = 1.
// three_weight: n = 3*(q^m-1)/(q-1), q == 1 (mod 3), gcd((q-1)/r, 3m) = 1.
CorollaryPrediction predict_corollary(CorollaryKind kind, std::uint64_t q, std::uint64_t m,
                                      std::uint64_t r);

// Quadratic-residue-derived families: negacyclic needs q odd and
// ord_{2n}(q) = (n-1)/2; primitive_lambda needs ord_{(q-1)n}(q) = (n-1)/2
// and n > q. In both, n is an odd prime and q ends up a quadratic residue
// modulo n (checked by the Euler criterion).
enum class QRVariant { negacyclic, primitive_lambda };

struct QRFamilySpec {
    std::uint64_t q = 0, n = 0;
    QRVariant variant = QRVariant::negacyclic;
    std::uint64_t m = 0;  // (n-1)/2
    std::uint64_t r = 0;  // 2 or q-1
    std::uint64_t h = 0;  // companion index: second odd coset leader, or n^-1 mod q-1
};
QRFamilySpec qr_spec(std::uint64_t q, std::uint64_t n, QRVariant variant);

struct QRReport {
    std::uint64_t n = 0, dimension = 0;
    std::uint32_t d = 0, d_perp = 0;
    bool sqrt_d_ok = false;        // (d-1)^2 >= n
    bool sqrt_dual_ok = false;     // d_perp^2 >= n
    std::uint64_t lift_n = 0;      // r*n
    std::uint32_t lift_d = 0;
    bool lift_matches = false;     // lifted enumerator equals W(z^r)
    bool lift_bound_ok = false;    // lift_d >= r*(sqrt(n)+1), integer-safe
    bool exp3_is_qr = false;       // exp3 check-poly roots are a QR or QN class
    WeightEnumerator w;            // enumerator of the length-n code
};

// Builds the length-n code, measures d and the dual distance (MacWilliams),
// checks the square-root bounds, the length-rn cyclic companion and its
// bound (skipped when with_lift is false), and that exp3's check polynomial
// is the quadratic-residue-class product. Budget error if q^((n-1)/2)
// exceeds the budget.
QRReport qr_build_and_check(const QRFamilySpec& spec, std::uint64_t budget = kDefaultBudget,
                            int threads = 1, bool with_lift = true);

// Odd primes n <= n_max passing the variant's order condition, ascending.
std::vector<std::uint64_t> scan_qr_primes(std::uint64_t q, std::uint64_t n_max,
                                          QRVariant variant);

struct FamilyReport {
    FamilyParams params;
    MainFamilyPrediction predicted;
    WeightEnumerator measured;
    bool enumerator_match = false;
    std::uint32_t measured_dual_distance = 0;
    bool dual_match = false;
    bool lifted = false;  // measured through the small-extension path
    bool companion_checked = false;  // false when ord_n(q) != m
    bool companion_match = false;    // companion enumerator, z -> z^r link
    bool ok() const { return enumerator_match && dual_match && companion_match; }
};

// Prediction vs measurement for one (q, m, e, u, r) instance. The
// enumerator is measured directly when q^(u*ell) fits direct_limit, else
// through the small-extension construction raised to the kappa-th power.
// The dual distance is always measured by low-weight search on the full
// code. The lemma-8 companion prediction is cross-checked against the
// measured small-extension enumerator under z -> z^r.
FamilyReport verify_family(const FamilyParams& params,
                           std::uint64_t direct_limit = 1ull << 22,
                           std::uint64_t budget = kDefaultBudget, int threads = 1);

}  // namespace constacode
