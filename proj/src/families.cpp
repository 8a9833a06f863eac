#include "constacode/families.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "constacode/cosets.hpp"
#include "constacode/polyring.hpp"

namespace constacode {

namespace {

mpz_class pow_mpz(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

std::uint64_t mpz_to_u64(const mpz_class& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) fail_param(std::string(what) + " out of range");
    return v.get_ui();
}

std::uint32_t weight_u32(const mpz_class& w) {
    std::uint64_t v = mpz_to_u64(w, "weight");
    if (v > 0xffffffffull) fail_param("weight out of range");
    return static_cast<std::uint32_t>(v);
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        fail_internal("expected exact division in closed-form enumerator");
    return num / den;
}

void prime_power(std::uint64_t q, std::uint64_t& p, std::uint64_t& s) {
    auto f = prime_factors(q);
    if (f.size() != 1) fail_param("q must be a prime power");
    p = f[0];
    s = 0;
    while (q % p == 0) { q /= p; ++s; }
    if (q != 1) fail_param("q must be a prime power");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// Least j >= 1 with p^j == -1 (mod e), if any.
std::optional<std::uint64_t> semiprimitive_j(std::uint64_t p, std::uint64_t e) {
    if (e <= 2 || std::gcd(p, e) != 1) return std::nullopt;
    std::uint64_t x = p % e;
    for (std::uint64_t j = 1; j <= e; ++j) {
        if (x == e - 1) return j;
        if (x == 1) return std::nullopt;  // cycled back without hitting -1
        x = mulmod(x, p % e, e);
    }
    return std::nullopt;
}

struct CaseInfo {
    FamilyParams::Case tag = FamilyParams::Case::e1;
    std::int64_t c1 = 0, d1 = 0;
    std::uint64_t j = 0, gamma = 0;
};

// Validates the case-defining congruences for (q, m, e) and computes the
// case data; r-dependent conditions are left to the callers.
CaseInfo classify(std::uint64_t q, std::uint64_t m, std::uint64_t e, std::uint64_t p,
                  std::uint64_t s) {
    if (m < 2) fail_param("m must be at least 2");
    CaseInfo info;
    if (e == 1) {
        info.tag = FamilyParams::Case::e1;
    } else if (e == 2) {
        if (m % 2 != 0) fail_param("e = 2 requires even m");
        info.tag = FamilyParams::Case::e2;
    } else if (e == 3 && p % 3 == 1) {
        if (m % 2 == 0 || m < 3) fail_param("e = 3 requires odd m >= 3");
        if ((s * m) % 3 != 0) fail_param("e = 3 requires 3 | s*m");
        GaussCD g = gauss_cd_e3(p, q, m);
        info.tag = FamilyParams::Case::e3;
        info.c1 = g.c1;
        info.d1 = g.d1;
    } else if (e == 4 && p % 4 == 1) {
        if (m % 2 != 0 || m < 4) fail_param("e = 4 requires even m >= 4");
        if ((s * m) % 4 != 0) fail_param("e = 4 requires 4 | s*m");
        GaussCD g = gauss_cd_e4(p, q, m);
        info.tag = FamilyParams::Case::e4;
        info.c1 = g.c1;
        info.d1 = g.d1;
    } else {
        if (m % 2 != 0) fail_param("the semiprimitive case requires even m");
        auto j = semiprimitive_j(p, e);
        if (!j) fail_param("no power of p is -1 modulo e");
        if ((s * m) % (2 * *j) != 0) fail_param("2j must divide s*m");
        info.tag = FamilyParams::Case::semiprimitive;
        info.j = *j;
        info.gamma = s * m / (2 * *j);
    }
    return info;
}

void add_term(WeightEnumerator& we, const mpz_class& w, const mpz_class& cnt) {
    we.counts[weight_u32(w)] += cnt;
}

// The closed-form enumerator of the [r(q^m-1)/((q-1)e), m] companion code.
WeightEnumerator build_case_enumerator(std::uint64_t q, std::uint64_t r, std::uint64_t m,
                                       std::uint64_t e, std::uint64_t p, std::uint64_t s,
                                       const CaseInfo& info) {
    mpz_class qm = pow_mpz(q, m);
    mpz_class units = qm - 1;
    mpz_class A = pow_mpz(q, m - 1);
    mpz_class length = exact_div(r * units, mpz_class(q - 1) * e);
    WeightEnumerator we;
    we.n = static_cast<std::uint32_t>(mpz_to_u64(length, "length"));
    we.counts[0] = 1;
    switch (info.tag) {
        case FamilyParams::Case::e1:
            add_term(we, r * A, units);
            break;
        case FamilyParams::Case::e2: {
            mpz_class B = pow_mpz(q, (m - 2) / 2);
            add_term(we, exact_div(r * (A - B), 2), units / 2);
            add_term(we, exact_div(r * (A + B), 2), units / 2);
            break;
        }
        case FamilyParams::Case::e3: {
            WeightEnumerator three = lemma8_enumerator_e3(q, r, m, info.c1, info.d1);
            return three;
        }
        case FamilyParams::Case::e4: {
            WeightEnumerator four = lemma8_enumerator_e4(q, r, m, info.c1, info.d1);
            return four;
        }
        case FamilyParams::Case::semiprimitive: {
            mpz_class B = pow_mpz(q, (m - 2) / 2);
            mpz_class Q2 = pow_mpz(q, m / 2);
            mpz_class small = exact_div(units, e);
            mpz_class pj1 = exact_div(pow_mpz(p, info.j) + 1, e);
            bool gamma_odd = info.gamma % 2 != 0;
            if (gamma_odd && p % 2 != 0 && mpz_odd_p(pj1.get_mpz_t())) {
                if (mpz_class(e) > Q2) fail_param("e exceeds q^(m/2)");
                add_term(we, exact_div(r * (A - (e - 1) * B), e), small);
                add_term(we, exact_div(r * (A + B), e), units - small);
            } else {
                int sign = gamma_odd ? -1 : 1;
                if (Q2 + sign * mpz_class(e - 1) <= 0)
                    fail_param("q^(m/2) + (-1)^gamma (e-1) must be positive");
                add_term(we, exact_div(r * (A + sign * mpz_class(e - 1) * B), e), small);
                add_term(we, exact_div(r * (A - sign * B), e), units - small);
            }
            break;
        }
    }
    return we;
}

void check_common(std::uint64_t q, std::uint64_t m, std::uint64_t e) {
    if (q < 2 || m < 2 || e < 1) fail_param("q >= 2, m >= 2, e >= 1 required");
    mpz_class unit_count = exact_div(pow_mpz(q, m) - 1, q - 1);
    if (!mpz_divisible_ui_p(unit_count.get_mpz_t(), static_cast<unsigned long>(e)))
        fail_param("e must divide (q^m-1)/(q-1)");
}

GaussCD search_representation(std::uint64_t p, const mpz_class& N, unsigned c_mod,
                              unsigned d_coeff) {
    // N = c^2 + d_coeff * d^2 with c == 1 (mod c_mod), gcd(c, p) = 1, d >= 0
    std::vector<GaussCD> hits;
    mpz_class bound_z = sqrt(N);
    std::int64_t bound = static_cast<std::int64_t>(mpz_to_u64(bound_z, "search bound"));
    for (std::int64_t c = -bound; c <= bound; ++c) {
        if (((c % c_mod) + c_mod) % c_mod != 1) continue;
        if (c % static_cast<std::int64_t>(p) == 0) continue;
        mpz_class rem = N - mpz_class(c) * c;
        if (rem < 0 || !mpz_divisible_ui_p(rem.get_mpz_t(), d_coeff)) continue;
        mpz_class dd = rem / d_coeff;
        if (!mpz_perfect_square_p(dd.get_mpz_t())) continue;
        mpz_class d = sqrt(dd);
        hits.push_back({c, static_cast<std::int64_t>(mpz_to_u64(d, "d1"))});
    }
    if (hits.size() != 1) fail_internal("diophantine representation not unique");
    return hits[0];
}

}  // namespace

GaussCD gauss_cd_e3(std::uint64_t p, std::uint64_t q, std::uint64_t m) {
    std::uint64_t pp, s;
    prime_power(q, pp, s);
    if (pp != p) fail_param("q is not a power of p");
    if (p % 3 != 1) fail_param("p == 1 (mod 3) required");
    if ((s * m) % 3 != 0) fail_param("3 | s*m required");
    return search_representation(p, 4 * pow_mpz(p, s * m / 3), 3, 27);
}

GaussCD gauss_cd_e4(std::uint64_t p, std::uint64_t q, std::uint64_t m) {
    std::uint64_t pp, s;
    prime_power(q, pp, s);
    if (pp != p) fail_param("q is not a power of p");
    if (p % 4 != 1) fail_param("p == 1 (mod 4) required");
    if ((s * m) % 4 != 0) fail_param("4 | s*m required");
    return search_representation(p, pow_mpz(p, s * m / 2), 4, 4);
}

WeightEnumerator lemma8_enumerator_e3(std::uint64_t q, std::uint64_t r, std::uint64_t m,
                                      std::int64_t c1, std::int64_t d1) {
    if (m < 3 || m % 2 == 0) fail_param("odd m >= 3 required");
    mpz_class qm = pow_mpz(q, m);
    mpz_class A = pow_mpz(q, m - 1);
    mpz_class C = pow_mpz(q, (m - 3) / 2);
    mpz_class cnt = exact_div(qm - 1, 3);
    WeightEnumerator we;
    we.n = static_cast<std::uint32_t>(
        mpz_to_u64(exact_div(r * (qm - 1), mpz_class(q - 1) * 3), "length"));
    we.counts[0] = 1;
    add_term(we, exact_div(r * (A - c1 * C), 3), cnt);
    add_term(we, exact_div(r * (2 * A + (mpz_class(c1) + 9 * mpz_class(d1)) * C), 6), cnt);
    add_term(we, exact_div(r * (2 * A + (mpz_class(c1) - 9 * mpz_class(d1)) * C), 6), cnt);
    return we;
}

WeightEnumerator lemma8_enumerator_e4(std::uint64_t q, std::uint64_t r, std::uint64_t m,
                                      std::int64_t c1, std::int64_t d1) {
    if (m < 4 || m % 2 != 0) fail_param("even m >= 4 required");
    std::uint64_t p, s;
    prime_power(q, p, s);
    if ((s * (m - 4)) % 4 != 0) fail_param("4 | s*(m-4) required");
    mpz_class qm = pow_mpz(q, m);
    mpz_class A = pow_mpz(q, m - 1);
    mpz_class B = pow_mpz(q, (m - 2) / 2);
    mpz_class D = pow_mpz(p, s * (m - 4) / 4);
    mpz_class cnt = exact_div(qm - 1, 4);
    WeightEnumerator we;
    we.n = static_cast<std::uint32_t>(
        mpz_to_u64(exact_div(r * (qm - 1), mpz_class(q - 1) * 4), "length"));
    we.counts[0] = 1;
    add_term(we, exact_div(r * (A + B + 2 * c1 * D), 4), cnt);
    add_term(we, exact_div(r * (A + B - 2 * c1 * D), 4), cnt);
    add_term(we, exact_div(r * (A - B + 4 * mpz_class(d1) * D), 4), cnt);
    add_term(we, exact_div(r * (A - B - 4 * mpz_class(d1) * D), 4), cnt);
    return we;
}

FamilyPrediction predict_lemma8(std::uint64_t q, std::uint64_t r, std::uint64_t m,
                                std::uint64_t e) {
    check_common(q, m, e);
    if (r < 1 || (q - 1) % r != 0) fail_param("r must divide q-1");
    std::uint64_t p, s;
    prime_power(q, p, s);
    std::uint64_t n = mpz_to_u64(
        exact_div(r * (pow_mpz(q, m) - 1), mpz_class(q - 1) * e), "n");
    if (std::gcd((q - 1) / r, n) != 1) fail_param("gcd((q-1)/r, n) = 1 required");
    CaseInfo info = classify(q, m, e, p, s);
    switch (info.tag) {
        case FamilyParams::Case::e2:
        case FamilyParams::Case::e4:
            if (r % 2 == 0) fail_param("odd r required for this case");
            break;
        case FamilyParams::Case::e3:
            if (r % 3 == 0) fail_param("gcd(r, 3) = 1 required");
            break;
        case FamilyParams::Case::semiprimitive:
            if (std::gcd(e, r) != 1) fail_param("gcd(e, r) = 1 required");
            break;
        default:
            break;
    }
    WeightEnumerator we = build_case_enumerator(q, r, m, e, p, s, info);
    return {we.n, m, we};
}

FamilyParams family_params(std::uint64_t q, std::uint64_t m, std::uint64_t e,
                           std::uint64_t u, std::uint64_t r) {
    check_common(q, m, e);
    FamilyParams fp;
    fp.q = q;
    fp.m = m;
    fp.e = e;
    fp.u = u;
    fp.r = r;
    prime_power(q, fp.p, fp.s);
    mpz_class qm = pow_mpz(q, m);
    mpz_class b = 2 * mpz_class(e) - 1;
    if (b * b > qm) fail_param("e exceeds (q^(m/2)+1)/2");
    if (u < 1) fail_param("u must be positive");
    if (std::gcd(e, u) != 1) fail_param("gcd(e, u) = 1 required");
    if (r < 1 || (q - 1) % r != 0) fail_param("r must divide q-1");
    mpz_class num = u * (qm - 1), den = mpz_class(q - 1) * e;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        fail_param("(q-1)e must divide u(q^m-1)");
    fp.n = mpz_to_u64(num / den, "n");
    if (std::gcd((q - 1) / r, fp.n) != 1) fail_param("gcd((q-1)/r, n) = 1 required");
    CaseInfo info = classify(q, m, e, fp.p, fp.s);
    if ((info.tag == FamilyParams::Case::e2 || info.tag == FamilyParams::Case::e3 ||
         info.tag == FamilyParams::Case::e4) &&
        e >= q)
        fail_param("e < q required for this case");
    fp.tag = info.tag;
    fp.c1 = info.c1;
    fp.d1 = info.d1;
    fp.j = info.j;
    fp.gamma = info.gamma;
    return fp;
}

MainFamilyPrediction predict_main_family(const FamilyParams& params) {
    CaseInfo info{params.tag, params.c1, params.d1, params.j, params.gamma};
    WeightEnumerator base =
        build_case_enumerator(params.q, 1, params.m, params.e, params.p, params.s, info);
    MainFamilyPrediction pred;
    pred.params = params;
    pred.n = params.n;
    pred.dimension = params.u * params.m;
    pred.enumerator = base.pow(static_cast<unsigned>(params.u));
    pred.dual_dimension = params.n - pred.dimension;
    bool exceptional = params.tag == FamilyParams::Case::semiprimitive &&
                       params.gamma % 2 == 0 && params.m == 4 && params.e == params.q + 1;
    pred.dual_distance = exceptional ? 4 : 3;
    if (pred.enumerator.n != params.n) fail_internal("predicted length mismatch");
    return pred;
}

CorollaryPrediction predict_corollary(CorollaryKind kind, std::uint64_t q, std::uint64_t m,
                                      std::uint64_t r) {
    if (q < 2 || m < 2) fail_param("q >= 2 and m >= 2 required");
    if (r < 1 || (q - 1) % r != 0) fail_param("r must divide q-1");
    std::uint64_t t = (q - 1) / r;
    std::uint64_t mult = kind == CorollaryKind::simplex ? 1
                       : kind == CorollaryKind::two_weight ? 2 : 3;
    if (kind == CorollaryKind::two_weight && q % 2 == 0) fail_param("odd q required");
    if (kind == CorollaryKind::three_weight && q % 3 != 1) fail_param("q == 1 (mod 3) required");
    if (std::gcd(t, mult * m) != 1) fail_param("gcd((q-1)/r, u*m) = 1 required");
    mpz_class qm = pow_mpz(q, m);
    mpz_class base_n = exact_div(qm - 1, q - 1);
    CorollaryPrediction pred;
    pred.n = mpz_to_u64(mult * base_n, "n");
    pred.dimension = mult * m;
    pred.min_weight = mpz_to_u64(pow_mpz(q, m - 1), "weight");
    pred.dual_dimension = pred.n - pred.dimension;
    pred.constant_weight = kind == CorollaryKind::simplex;
    WeightEnumerator base;
    base.n = static_cast<std::uint32_t>(mpz_to_u64(base_n, "length"));
    base.counts[0] = 1;
    base.counts[static_cast<std::uint32_t>(pred.min_weight)] = qm - 1;
    pred.enumerator = base.pow(static_cast<unsigned>(mult));
    return pred;
}

QRFamilySpec qr_spec(std::uint64_t q, std::uint64_t n, QRVariant variant) {
    if (n < 3 || n % 2 == 0 || !is_prime_u64(n)) fail_param("n must be an odd prime");
    if (n % prime_factors(q)[0] == 0) fail_param("gcd(q, n) = 1 required");
    QRFamilySpec spec;
    spec.q = q;
    spec.n = n;
    spec.variant = variant;
    spec.m = (n - 1) / 2;
    if (n <= q) fail_param("n > q required");
    if (variant == QRVariant::negacyclic) {
        if (q % 2 == 0) fail_param("odd q required for the negacyclic family");
        spec.r = 2;
        if (mult_order(q, 2 * n) != spec.m) fail_param("ord_{2n}(q) != (n-1)/2");
        // companion index: the least odd leader outside the coset of 1
        auto c1 = cyclotomic_coset(q, 2 * n, 1);
        for (std::uint64_t h = 1; h < 2 * n; h += 2) {
            if (h == n) continue;
            if (std::binary_search(c1.members.begin(), c1.members.end(), h)) continue;
            spec.h = h;
            break;
        }
    } else {
        if (q <= 2) fail_param("q > 2 required for the primitive-lambda family");
        if (n <= q) fail_param("n > q required");
        spec.r = q - 1;
        if (mult_order(q, (q - 1) * n) != spec.m) fail_param("ord_{(q-1)n}(q) != (n-1)/2");
        // multiplicative inverse of n modulo q-1
        std::uint64_t h = 1;
        while ((h * (n % (q - 1))) % (q - 1) != 1 % (q - 1)) {
            if (++h >= q - 1) fail_param("n has no inverse modulo q-1");
        }
        spec.h = h;
    }
    // Euler criterion: q must be a quadratic residue modulo n
    mpz_class res;
    mpz_class qz(static_cast<unsigned long>(q)), nz(static_cast<unsigned long>(n));
    mpz_powm_ui(res.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(spec.m),
                nz.get_mpz_t());
    if (res != 1) fail_param("q is not a quadratic residue modulo n");
    return spec;
}

QRReport qr_build_and_check(const QRFamilySpec& qr, std::uint64_t budget, int threads,
                            bool with_lift) {
    auto spec = spec_create(qr.q, qr.n, qr.r);
    if (spec->kappa != 1) fail_internal("QR family instances must have kappa = 1");
    QRReport rep;
    rep.n = qr.n;
    rep.dimension = qr.m;
    LinearCode c = build_C(*spec);
    rep.w = weight_distribution(c, budget, threads);
    rep.d = *rep.w.min_positive_weight();
    WeightEnumerator wd = macwilliams(rep.w, c.n, c.k, qr.q);
    rep.d_perp = *wd.min_positive_weight();
    rep.sqrt_d_ok = static_cast<std::uint64_t>(rep.d - 1) * (rep.d - 1) >= qr.n;
    rep.sqrt_dual_ok = static_cast<std::uint64_t>(rep.d_perp) * rep.d_perp >= qr.n;

    if (with_lift) {
        LinearCode e1 = exp1(*spec);
        rep.lift_n = e1.n;
        WeightEnumerator w1 = weight_distribution(e1, budget, threads);
        rep.lift_d = *w1.min_positive_weight();
        rep.lift_matches = w1 == rep.w.subst_zr(static_cast<unsigned>(qr.r));
        // lift_d >= r*(sqrt(n)+1)  <=>  (lift_d - r)^2 >= r^2 * n
        if (rep.lift_d >= qr.r) {
            mpz_class lhs = mpz_class(static_cast<unsigned long>(rep.lift_d - qr.r));
            rep.lift_bound_ok =
                lhs * lhs >= mpz_class(static_cast<unsigned long>(qr.r * qr.r)) * qr.n;
        }
    }

    // exp3's check polynomial must be the product over one quadratic
    // residue class of x - zeta^i, zeta = beta^r
    Poly mp = minimal_polynomial(spec->ext, spec->ext->pow(spec->beta, qr.r), spec->down);
    FElem zeta = spec->ext->pow(spec->beta, qr.r);
    std::vector<bool> is_qr(qr.n, false);
    for (std::uint64_t i = 1; i < qr.n; ++i) is_qr[i * i % qr.n] = true;
    auto class_poly = [&](bool residues) {
        Poly prod = Poly::one(spec->ext);
        for (std::uint64_t i = 1; i < qr.n; ++i) {
            if (is_qr[i] != residues) continue;
            prod = prod * Poly(spec->ext, {spec->ext->neg(spec->ext->pow(zeta, i)), 1});
        }
        std::vector<FElem> down(prod.coeffs().size());
        for (std::size_t i = 0; i < down.size(); ++i)
            down[i] = spec->down.down(prod.coeffs()[i]);
        return Poly(spec->base, down);
    };
    rep.exp3_is_qr = mp == class_poly(true) || mp == class_poly(false);
    return rep;
}

std::vector<std::uint64_t> scan_qr_primes(std::uint64_t q, std::uint64_t n_max,
                                          QRVariant variant) {
    std::vector<std::uint64_t> out;
    std::uint64_t p = prime_factors(q)[0];
    for (std::uint64_t n = 3; n <= n_max; n += 2) {
        if (!is_prime_u64(n) || n == p) continue;
        if (n <= q) continue;
        if (variant == QRVariant::negacyclic) {
            if (q % 2 == 0) continue;
            if (mult_order(q, 2 * n) == (n - 1) / 2) out.push_back(n);
        } else {
            if (q <= 2) continue;
            if (mult_order(q, (q - 1) * n) == (n - 1) / 2) out.push_back(n);
        }
    }
    return out;
}

FamilyReport verify_family(const FamilyParams& params, std::uint64_t direct_limit,
                           std::uint64_t budget, int threads) {
    FamilyReport rep;
    rep.params = params;
    rep.predicted = predict_main_family(params);

    ParamBundle pb = param_bundle(params.q, params.n, params.r);
    // When ord_n(q) = m the derived invariants kappa = u and e(q, n, r) = e
    // must hold; n need not divide q^m - 1 in general (the order can be a
    // proper multiple of m), in which case they do not apply.
    if (pb.ell == params.m) {
        if (pb.kappa != params.u) fail_internal("kappa does not equal u");
        if (pb.e != mpz_class(static_cast<unsigned long>(params.e)))
            fail_internal("derived e mismatch");
    }

    mpz_class direct_size = pow_mpz(params.q, pb.kappa * pb.ell);
    LinearCode small = exp2_reduced(params.q, params.n, params.r);
    WeightEnumerator w2 = weight_distribution(small, budget, threads);
    auto spec = spec_create(params.q, params.n, params.r);
    LinearCode c = build_C(*spec);
    if (direct_size <= mpz_class(static_cast<unsigned long>(direct_limit))) {
        rep.measured = weight_distribution(c, budget, threads);
        rep.lifted = false;
    } else {
        rep.measured = w2.pow(static_cast<unsigned>(pb.kappa));
        rep.lifted = true;
    }
    rep.enumerator_match = rep.measured == rep.predicted.enumerator;

    if (pb.ell == params.m) {
        // the closed-form companion enumerator, weights scaled by r; built
        // directly from the case display so no r-coprimality precondition
        // of the standalone companion claim gets in the way
        CaseInfo info{params.tag, params.c1, params.d1, params.j, params.gamma};
        WeightEnumerator companion =
            build_case_enumerator(params.q, params.r, params.m, params.e, params.p,
                                  params.s, info);
        rep.companion_checked = true;
        rep.companion_match = companion == w2.subst_zr(static_cast<unsigned>(params.r));
    } else {
        rep.companion_match = true;  // length mismatch: the companion claim does not apply
    }

    auto found = low_weight_search(c, 4);
    rep.measured_dual_distance = found ? *found : 0;
    rep.dual_match = rep.measured_dual_distance == rep.predicted.dual_distance;
    return rep;
}

}  // namespace constacode
