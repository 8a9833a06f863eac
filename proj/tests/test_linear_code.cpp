#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "constacode/linear_code.hpp"

using namespace constacode;

static LinearCode hamming74() {
    auto f = Field::create(2, 1);
    std::vector<std::uint8_t> rows = {
        1, 0, 0, 0, 0, 1, 1,
        0, 1, 0, 0, 1, 0, 1,
        0, 0, 1, 0, 1, 1, 0,
        0, 0, 0, 1, 1, 1, 1,
    };
    return make_code(f, 7, rows, 4);
}

static LinearCode random_code(std::uint64_t p, unsigned deg, std::uint32_t k, std::uint32_t n,
                              std::uint32_t seed) {
    auto f = Field::create(p, deg);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(f->order() - 1));
    for (;;) {
        std::vector<std::uint8_t> rows(std::size_t(k) * n);
        for (auto& v : rows) v = static_cast<std::uint8_t>(dist(rng));
        if (rank_of(f, rows, k, n) == k) return make_code(f, n, rows, k);
    }
}

TEST_CASE("Hamming [7,4,3] and its simplex dual") {
    auto code = hamming74();
    auto we = weight_distribution(code);
    CHECK(we.total() == 16);
    CHECK(we.count(3) == 7);
    CHECK(we.count(4) == 7);
    CHECK(we.count(7) == 1);
    CHECK(min_distance(code) == 3);

    auto d = dual(code);
    CHECK(d.k == 3);
    auto dwe = weight_distribution(d);
    CHECK(dwe.count(4) == 7);
    CHECK(is_constant_weight(d) == 4);

    CHECK(macwilliams(we, 7, 4, 2) == dwe);
    CHECK(macwilliams(dwe, 7, 3, 2) == we);

    auto rep = pless_check(we, dwe.count(1), dwe.count(2), dwe.count(3), 7, 4, 2);
    CHECK(rep.all());
    // perturbing one count breaks at least one identity
    auto bad = we;
    bad.counts[4] += 1;
    auto rep2 = pless_check(bad, dwe.count(1), dwe.count(2), dwe.count(3), 7, 4, 2);
    CHECK(!rep2.all());
}

TEST_CASE("MacWilliams agrees with direct dual enumeration") {
    for (std::uint32_t seed = 1; seed <= 3; ++seed) {
        auto code = random_code(3, 1, 4, 9, seed);
        auto we = weight_distribution(code);
        auto via_transform = macwilliams(we, code.n, code.k, code.q());
        auto direct = weight_distribution(dual(code));
        CHECK(via_transform == direct);
    }
    auto code = random_code(2, 2, 3, 8, 9);
    CHECK(macwilliams(weight_distribution(code), 8, 3, 4) == weight_distribution(dual(code)));
}

TEST_CASE("Pless identities hold for random codes") {
    auto code = random_code(5, 1, 3, 8, 17);
    auto we = weight_distribution(code);
    auto dwe = weight_distribution(dual(code));
    auto rep = pless_check(we, dwe.count(1), dwe.count(2), dwe.count(3), 8, 3, 5);
    CHECK(rep.all());
    // also with k < 3 where the q^{k-3} scaling goes fractional
    auto tiny = random_code(3, 1, 2, 6, 23);
    auto twe = weight_distribution(tiny);
    auto tdwe = weight_distribution(dual(tiny));
    CHECK(pless_check(twe, tdwe.count(1), tdwe.count(2), tdwe.count(3), 6, 2, 3).all());
}

TEST_CASE("low weight search") {
    // parity rows = simplex generator: Hamming distance 3
    auto simplex = dual(hamming74());
    CHECK(low_weight_search(simplex, 4) == 3);
    CHECK(low_weight_search(simplex, 2) == std::nullopt);

    // single all-ones parity row: distance 2
    auto f = Field::create(3, 1);
    auto ones = make_code(f, 6, std::vector<std::uint8_t>(6, 1), 1);
    CHECK(low_weight_search(ones, 4) == 2);

    // extended Hamming [8,4,4] is self-dual
    auto f2 = Field::create(2, 1);
    std::vector<std::uint8_t> ext = {
        1, 0, 0, 0, 0, 1, 1, 1,
        0, 1, 0, 0, 1, 0, 1, 1,
        0, 0, 1, 0, 1, 1, 0, 1,
        0, 0, 0, 1, 1, 1, 1, 0,
    };
    auto eh = make_code(f2, 8, ext, 4);
    CHECK(min_distance(eh) == 4);
    CHECK(low_weight_search(eh, 4) == 4);
    CHECK(low_weight_search(eh, 3) == std::nullopt);

    // a zero column gives 1
    auto zc = make_code(f2, 3, std::vector<std::uint8_t>{1, 1, 0}, 1);
    CHECK(low_weight_search(zc, 4) == 1);
}

TEST_CASE("low weight search matches true dual distance on random codes") {
    for (std::uint32_t seed = 31; seed < 36; ++seed) {
        auto code = random_code(3, 1, 7, 10, seed);
        auto dd = weight_distribution(dual(code)).min_positive_weight();
        auto found = low_weight_search(code, 4);
        if (dd && *dd <= 4)
            CHECK(found == dd);
        else
            CHECK(found == std::nullopt);
    }
}

TEST_CASE("bounds") {
    CHECK(sphere_packing_ok(7, 4, 3, 2));       // perfect code, equality
    CHECK(!sphere_packing_ok(7, 5, 3, 2));
    CHECK(sphere_packing_ok(15, 9, 3, 4));
    CHECK(!sphere_packing_ok(156, 152, 5, 5));
    CHECK(sphere_packing_ok(10, 10, 1, 3));

    CHECK(sphere_packing_even_ok(8, 4, 4, 2));
    CHECK(!sphere_packing_even_ok(13, 11, 4, 3));
    CHECK(!sphere_packing_even_ok(595, 591, 4, 13));
    CHECK(sphere_packing_even_ok(9, 8, 2, 5));
    CHECK_THROWS_AS(sphere_packing_even_ok(8, 4, 3, 2), Error);

    CHECK(griesmer_ok(13, 3, 9, 3));   // simplex meets the bound
    CHECK(!griesmer_ok(12, 3, 9, 3));
    CHECK(griesmer_ok(7, 4, 3, 2));
}

TEST_CASE("codeword sets and permutation equivalence") {
    auto code = hamming74();
    auto set = codeword_set(code);
    CHECK(set.size() == 16);
    CHECK(std::is_sorted(set.begin(), set.end()));
    for (const auto& w : set)
        CHECK(contains(code, reinterpret_cast<const std::uint8_t*>(w.data())));

    // a cyclic code is preserved by the rotation permutation
    auto f = Field::create(2, 1);
    std::vector<std::uint8_t> cyc = {
        1, 1, 0, 1, 0, 0, 0,
        0, 1, 1, 0, 1, 0, 0,
        0, 0, 1, 1, 0, 1, 0,
        0, 0, 0, 1, 1, 0, 1,
    };
    auto c = make_code(f, 7, cyc, 4);
    std::vector<std::uint32_t> rot = {1, 2, 3, 4, 5, 6, 0};
    CHECK(permutation_equivalent_under(c, c, rot));
    // the Hamming code above is not closed under plain rotation
    CHECK(!permutation_equivalent_under(code, code, rot));
    std::vector<std::uint32_t> ident = {0, 1, 2, 3, 4, 5, 6};
    CHECK(permutation_equivalent_under(code, code, ident));
}

TEST_CASE("enumerator algebra") {
    WeightEnumerator w;
    w.n = 2;
    w.counts[0] = 1;
    w.counts[2] = 3;
    auto sq = w.pow(2);
    CHECK(sq.n == 4);
    CHECK(sq.count(0) == 1);
    CHECK(sq.count(2) == 6);
    CHECK(sq.count(4) == 9);
    auto sub = w.subst_zr(3);
    CHECK(sub.n == 6);
    CHECK(sub.count(6) == 3);
    CHECK(w.str() == "1 + 3z^2");
}

TEST_CASE("budget is enforced") {
    auto code = random_code(5, 1, 6, 10, 99);
    CHECK_THROWS_AS(weight_distribution(code, 100), Error);
    try {
        weight_distribution(code, 100);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
    }
}

TEST_CASE("dependent rows are rejected") {
    auto f = Field::create(2, 1);
    std::vector<std::uint8_t> rows = {1, 0, 1, 1, 0, 1};
    CHECK_THROWS_AS(make_code(f, 3, rows, 2), Error);
}
