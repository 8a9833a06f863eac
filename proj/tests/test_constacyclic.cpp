#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "constacode/constacyclic.hpp"

using namespace constacode;

// alpha^12 + alpha^7 + alpha^6 + alpha^5 + alpha^3 + alpha + 1 = 0
static const std::vector<std::uint32_t> kPoly4_15 = {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};

TEST_CASE("spec invariants for q=4 n=15 r=3") {
    auto spec = spec_create(4, 15, 3, kPoly4_15);
    CHECK(spec->ell == 2);
    CHECK(spec->kappa == 3);
    CHECK(spec->ext->order() == 4096);
    CHECK(spec->ext->element_order(spec->beta) == 45);
    CHECK(spec->ext->element_order(spec->lambda_big) == 3);
    CHECK(spec->base->element_order(spec->lambda) == 3);  // primitive in GF(4)
    CHECK(spec->ext->mul(spec->beta, spec->theta) == 1);
}

TEST_CASE("spec rejects bad parameters") {
    CHECK_THROWS_AS(spec_create(4, 8, 3), Error);   // gcd(q,n) != 1
    CHECK_THROWS_AS(spec_create(4, 15, 2), Error);  // r does not divide q-1
}

TEST_CASE("cyclic and negacyclic special cases") {
    auto cyc = spec_create(5, 6, 1);
    CHECK(cyc->lambda == 1);
    auto neg = spec_create(3, 11, 2);
    CHECK(neg->lambda == 2);  // -1 in GF(3)
    CHECK(neg->kappa == 1);
}

TEST_CASE("the [15,6,4] code over GF(4) and its associated codes") {
    auto spec = spec_create(4, 15, 3, kPoly4_15);
    auto c = build_C(*spec);
    CHECK(c.n == 15);
    CHECK(c.k == 6);
    auto wc = weight_distribution(c);
    CHECK(wc.min_positive_weight() == 4);
    CHECK(wc.count(4) == 45);
    CHECK(wc.count(8) == 675);
    CHECK(wc.count(12) == 3375);
    CHECK(is_constashift_closed(c, spec->lambda));

    auto e2 = exp2(*spec);
    CHECK(e2.n == 5);
    CHECK(e2.k == 2);
    auto w2 = weight_distribution(e2);
    CHECK(w2.count(4) == 15);
    CHECK(w2.counts.size() == 2);
    CHECK(is_constashift_closed(e2, spec->lambda));

    auto e2d = weight_distribution(dual(e2));
    CHECK(e2d.count(3) == 30);
    CHECK(e2d.count(4) == 15);
    CHECK(e2d.count(5) == 18);

    auto e1 = exp1(*spec);
    CHECK(e1.n == 15);
    CHECK(e1.k == 2);
    auto w1 = weight_distribution(e1);
    CHECK(w1.count(12) == 15);
    CHECK(w1.counts.size() == 2);
    CHECK(is_constashift_closed(e1, 1));  // cyclic

    auto cd = dual_C(*spec);
    CHECK(cd.n == 15);
    CHECK(cd.k == 9);
    auto wcd = weight_distribution(cd);
    CHECK(wcd.min_positive_weight() == 3);
    // Dual link: dual enumerator of C is the cube of exp2 dual enumerator
    CHECK(wcd == e2d.pow(3));
    CHECK(is_constashift_closed(cd, spec->lambda_inv));
    // matches the generic dual as a set
    CHECK(codeword_set(cd) == codeword_set(dual(c)));
}

TEST_CASE("check-polynomial construction matches the trace construction") {
    auto spec = spec_create(4, 15, 3, kPoly4_15);
    Poly h = minimal_polynomial(spec->ext, spec->beta, spec->down);
    CHECK(h.degree() == 6);
    auto via_poly = build_from_check_poly(spec->base, 15, spec->lambda, h);
    CHECK(codeword_set(via_poly) == codeword_set(build_C(*spec)));

    // trivial cases
    auto f = spec->base;
    auto full = build_from_check_poly(f, 4, spec->lambda, Poly::xn_minus(f, 4, spec->lambda));
    CHECK(full.k == 4);
    auto f3 = Field::create(3, 1);
    auto rep = build_from_check_poly(f3, 5, 1, parse_poly(f3, "2,1"));  // h = x - 1
    CHECK(rep.k == 1);
    CHECK(weight_distribution(rep).count(5) == 2);
    CHECK_THROWS_AS(build_from_check_poly(f3, 5, 1, parse_poly(f3, "1,1")), Error);
}

TEST_CASE("theorem 4 for q=4 n=15 r=3") {
    auto spec = spec_create(4, 15, 3, kPoly4_15);
    CHECK(verify_thm4_concat(*spec));
    CHECK(verify_thm4_directsum(*spec));
}

TEST_CASE("dual enumerator link across exp2") {
    auto spec = spec_create(4, 15, 3, kPoly4_15);
    CHECK(verify_thm6(*spec));
    CHECK(verify_thm6(*spec_create(3, 11, 2)));
    CHECK(verify_thm6(*spec_create(5, 12, 4)));
}

TEST_CASE("theorem 5 for q=4 n=15 r=3") {
    auto spec = spec_create(4, 15, 3, kPoly4_15);
    auto rep = verify_thm5(*spec);
    CHECK(rep.exp1_matches);
    CHECK(rep.c_matches);
    CHECK(rep.w_exp2.str() == "1 + 15z^4");
    CHECK(rep.w_exp1.str() == "1 + 15z^12");
    CHECK(rep.w_c.str() == "1 + 45z^4 + 675z^8 + 3375z^12");
}

TEST_CASE("negacyclic q=3 n=11 r=2") {
    auto spec = spec_create(3, 11, 2);
    auto e1 = exp1(*spec);
    CHECK(e1.n == 22);
    CHECK(e1.k == 5);
    CHECK(weight_distribution(e1).min_positive_weight() == 12);

    auto e3 = exp3(*spec);
    CHECK(e3.n == 11);
    CHECK(e3.k == 5);
    CHECK(weight_distribution(e3).min_positive_weight() == 6);
    CHECK(is_constashift_closed(e3, 1));

    CHECK(verify_thm4_concat(*spec));
    CHECK(verify_bridge(*spec));
}

TEST_CASE("bridge for q=4 n=5 r=3") {
    auto spec = spec_create(4, 5, 3);
    CHECK(spec->kappa == 1);
    auto e3 = exp3(*spec);
    CHECK(e3.n == 5);
    CHECK(e3.k == 2);
    CHECK(verify_bridge(*spec));
    // kappa = 1: exp2 and C coincide
    CHECK(codeword_set(exp2(*spec)) == codeword_set(build_C(*spec)));
}

TEST_CASE("bridge precondition") {
    auto spec = spec_create(4, 15, 3, kPoly4_15);
    CHECK_THROWS_AS(verify_bridge(*spec), Error);
}

TEST_CASE("C^(t) codes") {
    auto spec = spec_create(4, 15, 3, kPoly4_15);
    auto c = build_C(*spec);
    auto c1 = build_Ct(*spec, 1);
    CHECK(codeword_set(c1) == codeword_set(c));

    auto c7 = build_Ct(*spec, 7);
    CHECK(c7.k == 6);
    CHECK(weight_distribution(c7) == weight_distribution(c));
    CHECK_THROWS_AS(build_Ct(*spec, 2), Error);  // 2 != 1 mod 3
    CHECK_THROWS_AS(build_Ct(*spec, 10), Error); // gcd(10,15) != 1

    auto neg = spec_create(3, 11, 2);
    auto ct = build_Ct(*neg, 3);
    auto cneg = build_C(*neg);
    CHECK(weight_distribution(ct) == weight_distribution(cneg));
    // monomially equivalent to C via the index map j -> t*j mod n
    CHECK(codeword_set(index_map_image(cneg, neg->lambda, 3)) == codeword_set(ct));
    // a bare permutation cannot do it here: the index map wraps past n
    std::vector<std::uint32_t> perm(11);
    for (std::uint32_t i = 0; i < 11; ++i) perm[i] = 4 * i % 11;
    CHECK(!permutation_equivalent_under(cneg, ct, perm));
}

TEST_CASE("q=7 n=800 r=6 through the small extension") {
    auto e2 = exp2_reduced(7, 800, 6);
    CHECK(e2.n == 400);
    CHECK(e2.k == 4);
    auto w2 = weight_distribution(e2);
    CHECK(w2.count(343) == 2400);
    CHECK(w2.counts.size() == 2);

    auto e1 = exp1_reduced(7, 800, 6);
    CHECK(e1.n == 2400);
    CHECK(e1.k == 4);
    CHECK(weight_distribution(e1) == w2.subst_zr(6));

    // the predicted enumerator of the [800,8] code itself
    auto wc = w2.pow(2);
    CHECK(wc.count(343) == 4800);
    CHECK(wc.count(686) == 5760000);
}

TEST_CASE("reduced and full constructions agree on enumerators") {
    for (auto [q, n, r] : std::vector<std::array<std::uint64_t, 3>>{
             {4, 15, 3}, {3, 11, 2}, {5, 12, 4}, {2, 9, 1}}) {
        auto spec = spec_create(q, n, r);
        CHECK(weight_distribution(exp2_reduced(q, n, r)) == weight_distribution(exp2(*spec)));
        CHECK(weight_distribution(exp1_reduced(q, n, r)) == weight_distribution(exp1(*spec)));
    }
}

TEST_CASE("dual distance analysis") {
    auto s156 = spec_create(5, 156, 4);
    auto rep = theorem7_dual_analysis(*s156);
    CHECK(rep.dual_dim == 152);
    CHECK(!rep.predicts_2);
    CHECK(rep.exact_3);
    CHECK(rep.measured == 3);
    CHECK(rep.agrees);
    CHECK(rep.distance_optimal);
    CHECK(rep.dimension_optimal);

    auto s39 = spec_create(5, 39, 4);
    auto rep39 = theorem7_dual_analysis(*s39);
    CHECK(rep39.dual_dim == 35);
    CHECK(rep39.exact_3);
    CHECK(rep39.measured == 3);
    CHECK(rep39.agrees);
    CHECK(rep39.distance_optimal);
    CHECK(rep39.dimension_optimal);

    // gcd((q-1)/r, n) > 1 forces dual distance 2
    auto s9 = spec_create(7, 9, 2);
    auto rep9 = theorem7_dual_analysis(*s9);
    CHECK(rep9.predicts_2);
    CHECK(rep9.measured == 2);
    CHECK(rep9.agrees);
}

TEST_CASE("structural sweep at small scale") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        for (std::uint64_t n = 1; n <= 20; ++n) {
            if (std::gcd(q, n) != 1) continue;
            for (std::uint64_t r = 1; r <= q - 1; ++r) {
                if ((q - 1) % r != 0 || r * n > 60) continue;
                auto pb = param_bundle(q, n, r);
                std::uint64_t dim_q = 1, over = 0;
                for (std::uint64_t i = 0; i < pb.kappa * pb.ell && !over; ++i) {
                    dim_q *= q;
                    if (dim_q > (1u << 16)) over = 1;
                }
                if (over) continue;
                auto spec = spec_create(q, n, r);
                CAPTURE(q); CAPTURE(n); CAPTURE(r);
                auto c = build_C(*spec);
                CHECK(c.k == pb.kappa * pb.ell);
                CHECK(is_constashift_closed(c, spec->lambda));
                CHECK(verify_thm4_concat(*spec, 1u << 22));
                CHECK(verify_thm4_directsum(*spec, 1u << 22));
                CHECK(verify_thm5(*spec).ok());
                if (std::gcd(r, n) == 1) CHECK(verify_bridge(*spec));
                auto e1 = exp1(*spec);
                std::uint64_t ql = 1;
                for (std::uint64_t i = 0; i < pb.ell; ++i) ql *= q;
                CHECK(e1.n == std::gcd(ql - 1, r * n));
                CHECK(e1.n == r * n / pb.kappa);
                CHECK(e1.k == pb.ell);
                auto e2 = exp2(*spec);
                CHECK(e2.n == std::gcd((ql - 1) / r, n));
            }
        }
    }
}

TEST_CASE("n=1 edge cases") {
    auto spec = spec_create(5, 1, 1);
    auto c = build_C(*spec);
    CHECK(c.n == 1);
    CHECK(c.k == 1);
    auto d = dual_C(*spec);
    CHECK(d.k == 0);
    CHECK(codeword_set(d).size() == 1);
}
