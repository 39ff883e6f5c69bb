#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympvoa/multipoly.hpp"
#include "sympvoa/rational.hpp"

using namespace sympvoa;

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(rat(-3, 2)) == "-3/2");
    CHECK(rat_to_string(rat(4, 2)) == "2");
    CHECK(rat_from_string("-3/2") == rat(-3, 2));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK_THROWS(rat_from_string("1/-2"));
    CHECK(is_half_odd_integer(rat(-3, 2)));
    CHECK(!is_half_odd_integer(rat(1, 3)));
    CHECK(is_integer(rat(6, 3)));
}

TEST_CASE("generalized binomial") {
    CHECK(binom(Rat(5), 2) == 10);
    CHECK(binom(Rat(7), 0) == 1);
    CHECK(binom(rat(-1, 2), 1) == rat(-1, 2));
    CHECK(binom(Rat(3), 5) == 0);

    // Pascal rule with rational upper argument.
    const Rat x = rat(-7, 2);
    for (unsigned k = 1; k <= 20; ++k)
        CHECK(binom(x, k) == binom(x - 1, k) + binom(x - 1, k - 1));
}

TEST_CASE("alternating binomial sums annihilate low degree") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 6;
        const int deg = trial % n;  // strictly below n
        MultiPoly q(1);
        for (int d = 0; d <= deg; ++d) {
            MultiPoly::Expo e{d};
            q.add_term(e, Rat(coeff(rng)));
        }
        CHECK(alternating_binom_sum(q, n) == 0);
    }
    // Degree n does not vanish: sum_k (-1)^k C(2,k) k^2 = -2+4 = 2.
    MultiPoly k2(1);
    k2.add_term({2}, 1);
    CHECK(alternating_binom_sum(k2, 2) == 2);
}

TEST_CASE("polynomial arithmetic") {
    const MultiPoly x = MultiPoly::variable(2, 0);
    const MultiPoly y = MultiPoly::variable(2, 1);
    const MultiPoly p = (x + y) * (x - y);
    MultiPoly expect(2);
    expect.add_term({2, 0}, 1);
    expect.add_term({0, 2}, -1);
    CHECK(p == expect);
    CHECK(p.total_degree() == 2);
    CHECK(p.eval({Rat(3), Rat(2)}) == 5);

    // Substitution is a ring homomorphism.
    const MultiPoly a = x * x + Rat(2) * y;
    const MultiPoly b = x - y * y;
    const std::vector<MultiPoly> images{y + MultiPoly::constant(2, 1), x * y};
    CHECK((a * b).eval_poly(images) == a.eval_poly(images) * b.eval_poly(images));
    CHECK((a + b).eval_poly(images) == a.eval_poly(images) + b.eval_poly(images));
}

TEST_CASE("leading term and proportionality") {
    const MultiPoly x = MultiPoly::variable(2, 0);
    const MultiPoly y = MultiPoly::variable(2, 1);
    const MultiPoly p = Rat(3) * (x * y) + y;
    CHECK(p.leading_term().first == MultiPoly::Expo{1, 1});
    CHECK(p.monic().leading_term().second == 1);
    CHECK(p.proportional_to(rat(-5, 7) * p));
    CHECK(!p.proportional_to(p + x));
    CHECK(falling_product(x, 3, Rat(-1)) == x * (x - MultiPoly::constant(2, 1)) *
                                                (x - MultiPoly::constant(2, 2)));
}
