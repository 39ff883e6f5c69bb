#include "sympvoa/zeros.hpp"

#include <stdexcept>

#include "sympvoa/parallel.hpp"

namespace sympvoa {

std::string PlanePoint::to_string() const {
    return "(" + rat_to_string(h1) + ", " + rat_to_string(h2) + ")";
}

MultiPoly closed_form_p(int index, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const MultiPoly h1 = MultiPoly::variable(2, 0);
    const MultiPoly h2 = MultiPoly::variable(2, 1);
    const MultiPoly one = MultiPoly::constant(2, 1);
    auto shifted = [&](const MultiPoly& p, const Rat& c) {
        return p + MultiPoly::constant(2, c);
    };

    switch (index) {
        case 1:
            return falling_product(h1 - h2, 2 * n, -1);
        case 2:
            return falling_product(shifted(h1, Rat(3 - 2 * n, 2)), n, 1) *
                   falling_product(h2, n, -1);
        case 3: {
            MultiPoly p(2);
            for (int k = 0; k <= n; ++k) {
                Rat coeff = Rat(factorial(n)) * pow_rat(Rat(4), n - k) / Rat(factorial(k));
                p += coeff * (falling_product(shifted(h1 + h2, Rat(1 - 2 * n)), 2 * k, 1) *
                              falling_product(h2, n - k, -1));
            }
            return p;
        }
        default:
            throw std::invalid_argument("polynomial index must be 1, 2 or 3");
    }
}

ZeroSet zero_component(int i, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    ZeroSet out;
    if (i == 1) {
        for (int r = 0; r < n; ++r)
            for (int s = 0; s <= n - r - 1; ++s) {
                out.insert({Rat(s + 2 * r), Rat(s)});
                out.insert({Rat(s + 2 * r + 1), Rat(s)});
            }
    } else if (i == 2) {
        for (int r = 0; r < n; ++r) {
            for (Rat s = Rat(-2 * r - 1, 2); s <= Rat(2 * n - 4 * r - 3, 2); s += 1)
                out.insert({s + 2 * r, s});
            for (Rat s = Rat(-2 * r - 3, 2); s <= Rat(2 * n - 4 * r - 5, 2); s += 1)
                out.insert({s + 2 * r + 1, s});
        }
    } else {
        throw std::invalid_argument("component index must be 1 or 2");
    }
    return out;
}

ZeroSet zero_search(int i, int n, const MultiPoly& p1, const MultiPoly& p2,
                    const MultiPoly& p3, bool parallel) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    // Candidate grid: the bounding lattice box of the component.
    std::vector<PlanePoint> grid;
    if (i == 1) {
        for (int s = 0; s < n; ++s)
            for (int d = 0; d < 2 * n; ++d)
                grid.push_back({Rat(s + d), Rat(s)});
    } else if (i == 2) {
        for (int t1 = 0; t1 < n; ++t1)
            for (int t2 = 0; t2 < 2 * n; ++t2)
                grid.push_back({Rat(2 * t1 - 1, 2), Rat(2 * t2 - 2 * n - 1, 2)});
    } else {
        throw std::invalid_argument("component index must be 1 or 2");
    }

    configure_threads();
    std::vector<char> keep(grid.size(), 0);
    parallel_for(static_cast<long>(grid.size()), parallel, [&](long idx) {
        const std::vector<Rat> pt{grid[idx].h1, grid[idx].h2};
        if (p1.eval(pt) == 0 && p2.eval(pt) == 0 && p3.eval(pt) == 0) keep[idx] = 1;
    });

    ZeroSet out;
    for (size_t idx = 0; idx < grid.size(); ++idx)
        if (keep[idx]) out.insert(grid[idx]);
    return out;
}

Rat p3_on_even_line(int n, int r, const Rat& s) {
    // 4^n n! (n-r)! r! C(s, n-r) sum_k C(s-n+r+k, r) C(s-n+r+k-1/2, k)
    if (r < 0 || r > n) throw std::invalid_argument("line offset out of range");
    Rat pre = pow_rat(Rat(4), n) * Rat(factorial(n)) * Rat(factorial(n - r)) * Rat(factorial(r)) *
              binom(s, n - r);
    Rat sum = 0;
    for (int k = 0; k <= n; ++k)
        sum += binom(s - n + r + k, r) * binom(s - n + r + k - Rat(1, 2), k);
    return pre * sum;
}

bool zero_recursion_step(int i, int n) {
    const ZeroSet cur = zero_component(i, n);
    ZeroSet built = cur;
    for (const auto& p : cur) {
        built.insert({p.h1 + 1, p.h2});
        built.insert({p.h1 + 1, p.h2 + 1});
    }
    if (i == 1)
        built.insert({Rat(2 * n + 1), Rat(0)});
    else
        built.insert({Rat(2 * n - 1, 2), Rat(-2 * n - 3, 2)});
    return built == zero_component(i, n + 1);
}

}  // namespace sympvoa
