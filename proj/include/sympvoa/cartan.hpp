#pragma once

#include <string>
#include <vector>

#include "sympvoa/rational.hpp"

namespace sympvoa {

// Finite root system of type C_l in the eps-basis, normalized so the
// highest root theta = 2*eps_1 has (theta|theta) = 2.
struct FiniteRootSystem {
    int ell;
    std::vector<std::vector<int>> roots;          // all 2*l^2 roots, eps coords
    std::vector<std::vector<int>> positive_roots; // fixed order, long-before-sum
    std::vector<std::vector<int>> simple_roots;   // alpha_1 .. alpha_l
    std::vector<int> theta;                       // 2*eps_1

    bool is_long(const std::vector<int>& root) const; // (root|root) == 2
};

FiniteRootSystem build_root_system(int ell);

// Weight of the affine algebra C_l^(1), written over Lambda_0..Lambda_l
// plus a delta coefficient.  The delta coefficient is carried but ignored
// in set-membership comparisons.
struct AffineWeight {
    std::vector<Rat> lambda;  // size ell+1
    Rat delta{0};

    int ell() const { return static_cast<int>(lambda.size()) - 1; }

    // <lambda, c> with c = alpha_0^v + ... + alpha_l^v
    Rat level() const {
        Rat s = 0;
        for (const Rat& a : lambda) s += a;
        return s;
    }

    // lambda(h_j), 1-based j, where h_j is the eps-dual Cartan element;
    // Lambda_i restricts to omega_i = eps_1 + ... + eps_i.
    Rat finite_coord(int j) const {
        Rat s = 0;
        for (int i = j; i <= ell(); ++i) s += lambda[i];
        return s;
    }

    std::vector<Rat> finite_part() const {
        std::vector<Rat> v;
        for (int j = 1; j <= ell(); ++j) v.push_back(finite_coord(j));
        return v;
    }

    // Equality in the Lambda basis, delta ignored.
    bool same_lambda(const AffineWeight& o) const { return lambda == o.lambda; }

    std::string to_string() const;
};

AffineWeight weight_from_lambda(std::vector<Rat> coeffs);
AffineWeight fundamental_weight(int ell, int i);
// Reconstructs the Lambda coefficients from level and (lambda(h_1),...,lambda(h_l)).
AffineWeight weight_from_finite(int ell, const Rat& level, const std::vector<Rat>& finite);
AffineWeight affine_rho(int ell);

inline AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
    AffineWeight r = a;
    for (size_t i = 0; i < r.lambda.size(); ++i) r.lambda[i] += b.lambda[i];
    r.delta += b.delta;
    return r;
}
inline AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
    AffineWeight r = a;
    for (size_t i = 0; i < r.lambda.size(); ++i) r.lambda[i] -= b.lambda[i];
    r.delta -= b.delta;
    return r;
}
inline AffineWeight operator*(const Rat& c, const AffineWeight& a) {
    AffineWeight r = a;
    for (Rat& x : r.lambda) x *= c;
    r.delta *= c;
    return r;
}
inline bool operator<(const AffineWeight& a, const AffineWeight& b) {
    return a.lambda < b.lambda;
}

// Real coroot in the alpha^v basis: coords over (alpha_0^v, ..., alpha_l^v).
// Pairing with a weight is then sum coords[i] * lambda[i].
struct Coroot {
    std::vector<int> coords;

    bool is_positive() const {
        bool nonzero = false;
        for (int x : coords) {
            if (x < 0) return false;
            if (x > 0) nonzero = true;
        }
        return nonzero;
    }
    friend bool operator<(const Coroot& a, const Coroot& b) { return a.coords < b.coords; }
    friend bool operator==(const Coroot& a, const Coroot& b) { return a.coords == b.coords; }
};

using CorootSet = std::vector<Coroot>;  // sorted, unique

// Coroot of the finite root beta (eps coords), as an affine coroot with zero
// alpha_0^v part plus the stated multiple of c.
Coroot coroot_from_finite(int ell, const std::vector<int>& beta_eps, int c_mult);

Rat pair(const AffineWeight& lambda, const Coroot& gamma);

CorootSet simple_coroots(int ell);
CorootSet pi_1(int ell);  // {2a0^v + a1^v, a1^v, ..., al^v}
CorootSet pi_2(int ell);  // {a0^v, ..., a_{l-1}^v, a_{l-1}^v + 2 al^v}

// Positive real coroots (beta + m delta)^v = beta^v + m (2/(beta|beta)) c,
// with 0 <= m <= bound (m = 0 restricted to positive finite beta).
std::vector<Coroot> real_coroots_up_to(int ell, int bound);

struct AdmissibilityReport {
    bool cond1 = false;  // <lambda+rho, gamma> never in -Z_+ within the bound
    bool cond2 = false;  // minimal integral coroots span Q^{ell+1}
    CorootSet pi_lambda; // minimal elements of the bounded integral coroot set
};

// Bounded verification of the admissibility conditions, not a proof.
AdmissibilityReport check_admissible(const AffineWeight& lambda, int bound);

}  // namespace sympvoa
