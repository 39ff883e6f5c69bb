#pragma once

#include <set>
#include <string>
#include <vector>

#include "sympvoa/multipoly.hpp"

namespace sympvoa {

// A point of the (h1, h2) plane with exact rational coordinates.
struct PlanePoint {
    Rat h1;
    Rat h2;

    friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
        return a.h1 == b.h1 && a.h2 == b.h2;
    }
    friend bool operator<(const PlanePoint& a, const PlanePoint& b) {
        if (a.h1 != b.h1) return a.h1 < b.h1;
        return a.h2 < b.h2;
    }

    std::string to_string() const;
};

using ZeroSet = std::set<PlanePoint>;

// The classification polynomials in closed form, as polynomials in (h1, h2):
//   p1 = prod_{j=0}^{2n-1} (h1 - h2 - j)
//   p2 = prod_{j=0}^{n-1} (h1 - n + 3/2 + j) * prod_{j=0}^{n-1} (h2 - j)
//   p3 = sum_{k=0}^{n} n!4^n/(k!4^k)
//            * prod_{j=1}^{2k} (h1 + h2 - 2n + j) * prod_{j=0}^{n-k-1} (h2 - j)
MultiPoly closed_form_p(int index, int n);

// The two components of the common zero set, by explicit parametrization.
// Component 1 is integral, component 2 half-odd-integral.
ZeroSet zero_component(int i, int n);

// Common zeros of the triple over the bounding lattice box of component i.
// The polynomials are passed in so independently computed triples can be
// cross-checked against the parametrized sets.
ZeroSet zero_search(int i, int n, const MultiPoly& p1, const MultiPoly& p2,
                    const MultiPoly& p3, bool parallel = true);

// p3 restricted to the line h1 = h2 + 2r, evaluated at h2 = s via the
// factored binomial form.  Agrees with closed_form_p(3, n) on the line.
Rat p3_on_even_line(int n, int r, const Rat& s);

// One step of the zero-set recursion:
//   Z_i^{n+1} = Z_i^n  u  (Z_i^n + (1,0))  u  (Z_i^n + (1,1))  u  {seed},
// seed (2n+1, 0) for i = 1 and (n - 1/2, -n - 3/2) for i = 2.
bool zero_recursion_step(int i, int n);

}  // namespace sympvoa
