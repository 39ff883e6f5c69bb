#pragma once

#include <map>
#include <string>
#include <vector>

#include "sympvoa/rational.hpp"

namespace sympvoa {

// Symmetrized quadratic :xy: = (xy+yx)/2 in the Weyl algebra on the 2l
// oscillators a_1..a_l, a_1^*..a_l^*.  Oscillator index g: g < l is a_{g+1},
// g >= l is a_{g-l+1}^*.  Keys are stored with first index <= second; the
// symmetry of :xy: makes that canonical.
class WeylQuadratic {
public:
    explicit WeylQuadratic(int ell = 0) : ell_(ell) {}

    int ell() const { return ell_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }

    void add_pair(int x, int y, const Rat& c) {
        if (c == 0) return;
        if (x > y) std::swap(x, y);
        auto [it, inserted] = terms_.emplace(std::make_pair(x, y), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    WeylQuadratic& operator+=(const WeylQuadratic& o) {
        for (const auto& [k, c] : o.terms_) add_pair(k.first, k.second, c);
        return *this;
    }
    friend WeylQuadratic operator*(const Rat& c, const WeylQuadratic& q) {
        WeylQuadratic r(q.ell_);
        for (const auto& [k, v] : q.terms_) r.add_pair(k.first, k.second, c * v);
        return r;
    }
    friend bool operator==(const WeylQuadratic& a, const WeylQuadratic& b) {
        return a.terms_ == b.terms_;
    }

    // Symplectic form: [u, v] = omega(u, v), omega(a_i, a_j^*) = delta_ij.
    Rat omega(int u, int v) const {
        if (u < ell_ && v >= ell_ && v - ell_ == u) return 1;
        if (u >= ell_ && v < ell_ && u - ell_ == v) return -1;
        return 0;
    }

    // Lie bracket of quadratics, closed among quadratics.
    WeylQuadratic bracket(const WeylQuadratic& o) const;

private:
    int ell_;
    std::map<std::pair<int, int>, Rat> terms_;
};

// One basis element of sp_2l in the fixed root-vector basis.
struct SpGenerator {
    enum Kind { NegRoot, Cartan, PosRoot } kind;
    std::vector<int> eps_weight;  // root in eps coords; zero vector for Cartan
    std::string name;
    WeylQuadratic quad;
};

// The realization of sp_2l inside degree-2 Weyl algebra elements, with the
// basis frozen in the order used for PBW monomials: negative roots, Cartan,
// positive roots (the sum root eps_1+eps_2 ordered last among positives).
class SpAlgebra {
public:
    explicit SpAlgebra(int ell);

    int ell() const { return ell_; }
    int dim() const { return static_cast<int>(gens_.size()); }
    const SpGenerator& gen(int i) const { return gens_.at(i); }
    const std::vector<SpGenerator>& gens() const { return gens_; }

    int index_of(const std::string& name) const;
    int cartan_index(int i) const;                       // h_i, 1-based
    int root_index(const std::vector<int>& eps) const;   // X_root

    // [gen_a, gen_b] as coefficients over the basis.
    const std::map<int, Rat>& bracket(int a, int b) const { return brackets_.at(a).at(b); }

    // Invariant bilinear form with (theta|theta) = 2, computed as the trace
    // form of the action on the 2l-dimensional symplectic space.
    const Rat& form(int a, int b) const { return form_.at(a).at(b); }

    // Decompose a quadratic over the basis (every quadratic is in sp_2l).
    std::map<int, Rat> decompose(const WeylQuadratic& q) const;

private:
    int ell_;
    std::vector<SpGenerator> gens_;
    std::map<std::vector<int>, int> root_lookup_;
    std::vector<std::vector<std::map<int, Rat>>> brackets_;
    std::vector<std::vector<Rat>> form_;
};

}  // namespace sympvoa
