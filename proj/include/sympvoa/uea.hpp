#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "sympvoa/multipoly.hpp"
#include "sympvoa/weylreal.hpp"

namespace sympvoa {

// PBW engine for U(sp_2l).  Monomials are exponent vectors over the frozen
// generator order of SpAlgebra (negative roots, Cartan, positive roots),
// so reduction mod U(g)n_+ is a term filter.
class UEA {
public:
    using Mono = std::vector<int>;              // exponents, length dim
    using Element = std::map<Mono, Rat>;
    using Word = std::vector<int>;              // generator indices

    explicit UEA(const SpAlgebra& g) : g_(g) {}

    const SpAlgebra& algebra() const { return g_; }

    Element one() const { return {{Mono(g_.dim(), 0), Rat(1)}}; }
    Element generator(int idx) const {
        Mono m(g_.dim(), 0);
        m.at(idx) = 1;
        return {{m, Rat(1)}};
    }

    Element multiply(const Element& f, const Element& g);
    Element commutator(const Element& f, const Element& g);

    // (ad x)^k f for a single generator x.
    Element adjoint_power(int gen_idx, int k, Element f);

    // Total eps-weight under ad h; monomial-wise, must agree across terms.
    std::vector<int> weight_of(const Mono& m) const;
    bool is_weight_zero(const Element& f) const;

    // Pure-Cartan part of a weight-zero element; the discarded terms must
    // all contain a positive-root factor (checked).
    MultiPoly hc_project(const Element& f) const;

    // Terms lying in U(g) n_+ (some positive-root exponent) removed.
    Element drop_n_plus(const Element& f) const;

    // Classification polynomials from the adjoint computation, monic.
    MultiPoly compute_p(int index, int n);

    // Basis of {hc_project(u) : u in the zero-weight part of the adjoint
    // module generated by (X_{e1+e2}^2 - X_{2e1} X_{2e2})^n}.
    std::vector<MultiPoly> adjoint_module_zero_weight(int n, int basis_cap = 512);

private:
    struct WordHash {
        size_t operator()(const Word& w) const {
            size_t h = 1469598103934665603ull;
            for (int x : w) {
                h ^= static_cast<size_t>(x) + 1;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    const Element& normalize(const Word& w);
    static void accumulate(Element& into, const Element& v, const Rat& scale);

    const SpAlgebra& g_;
    std::unordered_map<Word, Element, WordHash> memo_;
};

}  // namespace sympvoa
