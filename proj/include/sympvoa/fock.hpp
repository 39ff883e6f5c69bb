#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympvoa/weylreal.hpp"

namespace sympvoa {

enum class Moding { Half, Int };
enum class Parity { Even, Odd };

// One oscillator mode.  Modes are stored doubled so half-integers stay
// exact: twice_mode = 2r.  flavor 0 is a_i, flavor 1 is a_i^*.
struct OscMode {
    int osc;
    int flavor;
    int twice_mode;

    auto operator<=>(const OscMode&) const = default;
};

// A Fock basis monomial: creation modes with multiplicities, sorted.
// Creation modes have twice_mode < 0, plus the a^* zero modes (integer
// moding), which act as multiplication operators on the polynomial part.
using FockMono = std::vector<std::pair<OscMode, int>>;

// Finite rational combination of basis monomials.
using FockVec = std::map<FockMono, Rat>;

std::string fock_mono_to_string(const FockMono& m);

// Twice the grading used for truncation: sum of -2r over excited modes
// plus 1 for each zero-mode factor.
int twice_degree(const FockMono& m);
int excitation_count(const FockMono& m);  // parity grading

// All basis monomials with twice_degree <= 2*max_degree, optionally fixed parity.
std::vector<FockMono> enumerate_states(int ell, Moding moding, int max_degree,
                                       std::optional<Parity> parity = std::nullopt);

class FockSpace {
public:
    FockSpace(const SpAlgebra& g, Moding moding) : g_(g), moding_(moding) {}

    const SpAlgebra& algebra() const { return g_; }
    Moding moding() const { return moding_; }

    // Single oscillator mode applied to a state.
    FockVec apply_osc(const OscMode& op, const FockVec& v) const;

    // Current mode X(m) for a quadratic X, with annihilation modes ordered
    // to the right and the zero-mode pair (integer moding) symmetrized.
    FockVec apply_current(const WeylQuadratic& x, int m, const FockVec& v) const;
    FockVec apply_current(int gen_index, int m, const FockVec& v) const;

    // lambda(h_i) eigenvalues of a basis monomial (all monomials are
    // weight vectors for the Cartan zero modes).
    std::vector<Rat> h_weight(const FockMono& m) const;

private:
    const SpAlgebra& g_;
    Moding moding_;
};

// Result of the quadratic field-relation check.
struct FieldRelationReport {
    bool ok = true;
    long checked = 0;
    std::string witness_state;  // first failing state, deterministic order
    int witness_mode = 0;
};

// Verifies that the composite modes of X_{e1+e2}(z)^2 - X_{2e1}(z) X_{2e2}(z)
// annihilate every basis state of the sector up to the degree bound.
// sign_flip = true runs the plus-sign negative control.
FieldRelationReport quadratic_field_relation_check(int ell, Moding moding, Parity parity,
                                                   int max_degree, int mode_lo, int mode_hi,
                                                   bool sign_flip = false,
                                                   bool parallel = true);

// Highest of the h-weights among minimal-degree states of the sector;
// returned as (level -1/2, finite part) in the Lambda basis.
std::vector<Rat> top_level_finite_weight(int ell, Moding moding, Parity parity);

}  // namespace sympvoa
