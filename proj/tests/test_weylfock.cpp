#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympvoa/fock.hpp"
#include "sympvoa/weylreal.hpp"

using namespace sympvoa;

TEST_CASE("structure constants of the quadratic realization") {
    SpAlgebra g(2);
    CHECK(g.dim() == 10);

    const int p2e1 = g.root_index({2, 0});
    const int m2e1 = g.root_index({-2, 0});
    const int p2e2 = g.root_index({0, 2});
    const int sum = g.root_index({1, 1});
    const int diff = g.root_index({1, -1});
    const int h1 = g.cartan_index(1);

    CHECK(g.bracket(p2e1, m2e1) == std::map<int, Rat>{{h1, Rat(-4)}});
    CHECK(g.bracket(diff, sum) == std::map<int, Rat>{{p2e1, Rat(-1)}});
    CHECK(g.bracket(diff, p2e2) == std::map<int, Rat>{{sum, Rat(-2)}});

    // Cartan eigenvalues: [h_i, X_a] = a(h_i) X_a.
    for (int i = 1; i <= 2; ++i)
        for (int j = 0; j < g.dim(); ++j) {
            const auto& gen = g.gen(j);
            if (gen.kind == SpGenerator::Cartan || gen.eps_weight[i - 1] == 0) {
                CHECK(g.bracket(g.cartan_index(i), j).empty());
            } else {
                CHECK(g.bracket(g.cartan_index(i), j) ==
                      std::map<int, Rat>{{j, Rat(gen.eps_weight[i - 1])}});
            }
        }
}

TEST_CASE("jacobi identity on random triples") {
    SpAlgebra g(3);
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> pick(0, g.dim() - 1);

    auto bracket_elem = [&](const std::map<int, Rat>& f, int b) {
        std::map<int, Rat> out;
        for (const auto& [a, ca] : f)
            for (const auto& [d, cd] : g.bracket(a, b)) {
                out[d] += ca * cd;
                if (out[d] == 0) out.erase(d);
            }
        return out;
    };
    for (int trial = 0; trial < 500; ++trial) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
        auto total = bracket_elem(g.bracket(a, b), c);
        for (const auto& [d, cd] : bracket_elem(g.bracket(b, c), a)) {
            total[d] += cd;
            if (total[d] == 0) total.erase(d);
        }
        for (const auto& [d, cd] : bracket_elem(g.bracket(c, a), b)) {
            total[d] += cd;
            if (total[d] == 0) total.erase(d);
        }
        CHECK(total.empty());
    }
}

TEST_CASE("invariant form normalization") {
    SpAlgebra g(2);
    const int h1 = g.cartan_index(1), h2 = g.cartan_index(2);
    CHECK(g.form(h1, h1) == 2);
    CHECK(g.form(h1, h2) == 0);
    CHECK(g.form(g.root_index({2, 0}), g.root_index({-2, 0})) != 0);
    CHECK(g.form(g.root_index({2, 0}), g.root_index({0, 2})) == 0);

    // Invariance ([x,y]|z) = -(y|[x,z]) on all triples.
    auto form_elem = [&](const std::map<int, Rat>& f, int b) {
        Rat s = 0;
        for (const auto& [a, c] : f) s += c * g.form(a, b);
        return s;
    };
    for (int x = 0; x < g.dim(); ++x)
        for (int y = 0; y < g.dim(); ++y)
            for (int z = 0; z < g.dim(); ++z)
                CHECK(form_elem(g.bracket(x, y), z) == -form_elem(g.bracket(x, z), y));
}

TEST_CASE("oscillator realization has level -1/2") {
    SpAlgebra g(2);
    FockSpace fs(g, Moding::Half);
    const FockVec vac{{FockMono{}, Rat(1)}};

    // [h1(1), h1(-1)] |0> = 1 * (h1|h1) * k |0> = -|0>.
    const int h1 = g.cartan_index(1);
    FockVec lhs = fs.apply_current(h1, 1, fs.apply_current(h1, -1, vac));
    for (const auto& [m, c] : fs.apply_current(h1, -1, fs.apply_current(h1, 1, vac)))
        lhs[m] -= c;
    CHECK(lhs == FockVec{{FockMono{}, rat(-1, 2) * g.form(h1, h1)}});
}

TEST_CASE("current modes represent the affine bracket") {
    SpAlgebra g(2);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pick(0, g.dim() - 1);
    std::uniform_int_distribution<int> mode(-3, 3);

    for (Moding moding : {Moding::Half, Moding::Int}) {
        FockSpace fs(g, moding);
        const auto states = enumerate_states(2, moding, 1);
        for (int trial = 0; trial < 60; ++trial) {
            const int x = pick(rng), y = pick(rng);
            const int m = mode(rng), k = mode(rng);
            const auto& s = states[trial % states.size()];
            const FockVec v{{s, Rat(1)}};

            FockVec got = fs.apply_current(x, m, fs.apply_current(y, k, v));
            for (const auto& [mono, c] : fs.apply_current(y, k, fs.apply_current(x, m, v))) {
                got[mono] -= c;
                if (got[mono] == 0) got.erase(mono);
            }
            FockVec expect;
            for (const auto& [d, cd] : g.bracket(x, y))
                for (const auto& [mono, c] : fs.apply_current(d, m + k, v)) {
                    expect[mono] += cd * c;
                    if (expect[mono] == 0) expect.erase(mono);
                }
            if (m + k == 0 && m != 0) {
                const Rat central = Rat(m) * g.form(x, y) * rat(-1, 2);
                for (const auto& [mono, c] : v) {
                    expect[mono] += central * c;
                    if (expect[mono] == 0) expect.erase(mono);
                }
            }
            CHECK(got == expect);
        }
    }
}

TEST_CASE("the four sectors have the expected top weights") {
    CHECK(top_level_finite_weight(2, Moding::Half, Parity::Even) ==
          std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(top_level_finite_weight(2, Moding::Half, Parity::Odd) ==
          std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(top_level_finite_weight(2, Moding::Int, Parity::Even) ==
          std::vector<Rat>{rat(-1, 2), rat(-1, 2)});
    CHECK(top_level_finite_weight(2, Moding::Int, Parity::Odd) ==
          std::vector<Rat>{rat(-1, 2), rat(-3, 2)});
}

TEST_CASE("field relation holds in all sectors, small bound") {
    for (Moding moding : {Moding::Half, Moding::Int})
        for (Parity parity : {Parity::Even, Parity::Odd}) {
            auto rep = quadratic_field_relation_check(2, moding, parity, 2, -2, 2);
            CHECK(rep.ok);
            CHECK(rep.checked > 0);
        }
}

TEST_CASE("sign-flipped relation fails with a witness") {
    auto rep = quadratic_field_relation_check(2, Moding::Half, Parity::Even, 2, -2, 2,
                                              /*sign_flip=*/true);
    CHECK(!rep.ok);
    CHECK(!rep.witness_state.empty());
}

TEST_CASE("serial and parallel kernels agree") {
    auto a = quadratic_field_relation_check(2, Moding::Int, Parity::Odd, 2, -2, 2, false, true);
    auto b = quadratic_field_relation_check(2, Moding::Int, Parity::Odd, 2, -2, 2, false, false);
    CHECK(a.ok == b.ok);
    CHECK(a.checked == b.checked);

    auto c = quadratic_field_relation_check(2, Moding::Half, Parity::Odd, 2, -1, 1, true, true);
    auto d = quadratic_field_relation_check(2, Moding::Half, Parity::Odd, 2, -1, 1, true, false);
    CHECK(c.ok == d.ok);
    CHECK(c.witness_state == d.witness_state);
    CHECK(c.witness_mode == d.witness_mode);
}
