#include "sympvoa/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sympvoa/parallel.hpp"

namespace sympvoa {

std::string fock_mono_to_string(const FockMono& m) {
    if (m.empty()) return "|0>";
    std::ostringstream os;
    for (const auto& [op, mult] : m) {
        os << "a" << (op.osc + 1) << (op.flavor ? "*" : "") << "("
           << rat_to_string(Rat(op.twice_mode, 2)) << ")";
        if (mult > 1) os << "^" << mult;
        os << " ";
    }
    os << "|0>";
    return os.str();
}

int twice_degree(const FockMono& m) {
    int d = 0;
    for (const auto& [op, mult] : m)
        d += mult * (op.twice_mode < 0 ? -op.twice_mode : 1);
    return d;
}

int excitation_count(const FockMono& m) {
    int n = 0;
    for (const auto& [op, mult] : m) n += mult;
    return n;
}

static void accumulate(FockVec& into, const FockMono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = into.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

static void accumulate(FockVec& into, const FockVec& v, const Rat& scale) {
    for (const auto& [m, c] : v) accumulate(into, m, c * scale);
}

static bool is_creation(const OscMode& op, Moding moding) {
    if (op.twice_mode < 0) return true;
    return moding == Moding::Int && op.twice_mode == 0 && op.flavor == 1;
}

FockVec FockSpace::apply_osc(const OscMode& op, const FockVec& v) const {
    FockVec out;
    if (is_creation(op, moding_)) {
        for (const auto& [m, c] : v) {
            FockMono next = m;
            auto it = std::lower_bound(next.begin(), next.end(), op,
                                       [](const auto& p, const OscMode& k) { return p.first < k; });
            if (it != next.end() && it->first == op)
                it->second += 1;
            else
                next.insert(it, {op, 1});
            accumulate(out, next, c);
        }
        return out;
    }
    // Annihilator: contract against the conjugate creation mode.
    // [a_i(r), a_j^*(s)] = delta_ij delta_{r+s,0}; the a^* side picks up -1.
    const OscMode conj{op.osc, 1 - op.flavor, -op.twice_mode};
    const Rat sign = (op.flavor == 0) ? 1 : -1;
    for (const auto& [m, c] : v) {
        for (size_t i = 0; i < m.size(); ++i) {
            if (!(m[i].first == conj)) continue;
            FockMono next = m;
            if (next[i].second == 1)
                next.erase(next.begin() + i);
            else
                next[i].second -= 1;
            accumulate(out, next, c * sign * m[i].second);
        }
    }
    return out;
}

FockVec FockSpace::apply_current(const WeylQuadratic& x, int m, const FockVec& v) const {
    FockVec out;
    const int ell = g_.ell();
    int maxdepth = 0;
    for (const auto& [mono, c] : v) maxdepth = std::max(maxdepth, twice_degree(mono));

    const int parity = (moding_ == Moding::Half) ? 1 : 0;  // twice-mode parity
    for (const auto& [pq, coeff] : x.terms()) {
        const OscMode u{pq.first % ell, pq.first < ell ? 0 : 1, 0};
        const OscMode w{pq.second % ell, pq.second < ell ? 0 : 1, 0};
        // Iterate the mode split 2r + 2s = 2m over the moding lattice.
        const int lo = 2 * m - maxdepth - 2, hi = maxdepth + 2;
        for (int tr = lo; tr <= hi; ++tr) {
            if (((tr % 2) + 2) % 2 != parity) continue;
            const int ts = 2 * m - tr;
            OscMode ur = u, ws = w;
            ur.twice_mode = tr;
            ws.twice_mode = ts;
            FockVec term;
            if (tr == 0 && ts == 0) {
                // Zero-mode pair: Weyl symmetrization (1/2)(uw + wu).
                FockVec t1 = apply_osc(ur, apply_osc(ws, v));
                FockVec t2 = apply_osc(ws, apply_osc(ur, v));
                accumulate(term, t1, rat(1, 2));
                accumulate(term, t2, rat(1, 2));
            } else if (tr >= ts) {
                // Larger mode (the annihilating side) acts first.
                term = apply_osc(ws, apply_osc(ur, v));
            } else {
                term = apply_osc(ur, apply_osc(ws, v));
            }
            accumulate(out, term, coeff);
        }
    }
    return out;
}

FockVec FockSpace::apply_current(int gen_index, int m, const FockVec& v) const {
    return apply_current(g_.gen(gen_index).quad, m, v);
}

std::vector<Rat> FockSpace::h_weight(const FockMono& m) const {
    const int ell = g_.ell();
    const Rat base = (moding_ == Moding::Int) ? rat(-1, 2) : Rat(0);
    std::vector<Rat> w(ell, base);
    for (const auto& [op, mult] : m)
        w[op.osc] += Rat(op.flavor == 0 ? mult : -mult);
    return w;
}

std::vector<FockMono> enumerate_states(int ell, Moding moding, int max_degree,
                                       std::optional<Parity> parity) {
    // Creation modes ordered as the canonical monomial order.
    std::vector<OscMode> modes;
    const int cap = 2 * max_degree;
    for (int i = 0; i < ell; ++i)
        for (int flavor : {0, 1}) {
            if (moding == Moding::Int && flavor == 1)
                modes.push_back({i, 1, 0});
            const int start = (moding == Moding::Half) ? -1 : -2;
            const int step = -2;
            for (int tm = start; -tm <= cap; tm += step)
                modes.push_back({i, flavor, tm});
        }
    std::sort(modes.begin(), modes.end());

    std::vector<FockMono> out;
    FockMono current;
    auto cost = [](const OscMode& op) { return op.twice_mode < 0 ? -op.twice_mode : 1; };
    std::function<void(size_t, int)> rec = [&](size_t idx, int budget) {
        if (!parity || (excitation_count(current) % 2 == (*parity == Parity::Odd ? 1 : 0)))
            out.push_back(current);
        for (size_t k = idx; k < modes.size(); ++k) {
            if (cost(modes[k]) > budget) continue;
            current.push_back({modes[k], 1});
            int used = cost(modes[k]);
            while (used <= budget) {
                rec(k + 1, budget - used);
                current.back().second += 1;
                used += cost(modes[k]);
            }
            current.pop_back();
        }
    };
    rec(0, cap);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Composite mode of the pair (A, B): creation-split normal ordering
// N(j) = sum_{m<=-1} A(m) B(j-m) + sum_{m>=0} B(j-m) A(m).
static FockVec composite_mode(const FockSpace& fs, const WeylQuadratic& a,
                              const WeylQuadratic& b, int j, const FockVec& v) {
    int td = 0;
    for (const auto& [mono, c] : v) td = std::max(td, twice_degree(mono));
    FockVec out;
    for (int m = -1; m >= j - td - 2; --m) {
        FockVec inner = fs.apply_current(b, j - m, v);
        if (inner.empty()) continue;
        accumulate(out, fs.apply_current(a, m, inner), Rat(1));
    }
    for (int m = 0; m <= td + 2; ++m) {
        FockVec inner = fs.apply_current(a, m, v);
        if (inner.empty()) continue;
        accumulate(out, fs.apply_current(b, j - m, inner), Rat(1));
    }
    return out;
}

FieldRelationReport quadratic_field_relation_check(int ell, Moding moding, Parity parity,
                                                   int max_degree, int mode_lo, int mode_hi,
                                                   bool sign_flip, bool parallel) {
    const SpAlgebra g(ell);
    const FockSpace fs(g, moding);
    std::vector<int> sum_root(ell, 0);
    sum_root[0] = sum_root[1] = 1;
    std::vector<int> long1(ell, 0), long2(ell, 0);
    long1[0] = 2;
    long2[1] = 2;
    const WeylQuadratic qa = g.gen(g.root_index(sum_root)).quad;
    const WeylQuadratic qb = g.gen(g.root_index(long1)).quad;
    const WeylQuadratic qc = g.gen(g.root_index(long2)).quad;

    const auto states = enumerate_states(ell, moding, max_degree, parity);
    const int jcount = mode_hi - mode_lo + 1;
    const long total = static_cast<long>(states.size()) * jcount;
    std::vector<char> failed(total, 0);

    configure_threads();
    parallel_for(total, parallel, [&](long idx) {
        const FockMono& s = states[idx / jcount];
        const int j = mode_lo + static_cast<int>(idx % jcount);
        FockVec v{{s, Rat(1)}};
        FockVec r = composite_mode(fs, qa, qa, j, v);
        accumulate(r, composite_mode(fs, qb, qc, j, v), sign_flip ? Rat(1) : Rat(-1));
        if (!r.empty()) failed[idx] = 1;
    });

    FieldRelationReport rep;
    rep.checked = total;
    for (long idx = 0; idx < total; ++idx) {
        if (failed[idx]) {
            rep.ok = false;
            rep.witness_state = fock_mono_to_string(states[idx / jcount]);
            rep.witness_mode = mode_lo + static_cast<int>(idx % jcount);
            break;
        }
    }
    return rep;
}

std::vector<Rat> top_level_finite_weight(int ell, Moding moding, Parity parity) {
    const SpAlgebra g(ell);
    const FockSpace fs(g, moding);
    auto states = enumerate_states(ell, moding, 2, parity);
    int best = -1;
    for (const auto& s : states) {
        const int d = twice_degree(s);
        if (best < 0 || d < best) best = d;
    }
    std::vector<Rat> top;
    for (const auto& s : states) {
        if (twice_degree(s) != best) continue;
        auto w = fs.h_weight(s);
        if (top.empty() || std::lexicographical_compare(top.begin(), top.end(), w.begin(), w.end()))
            top = w;
    }
    return top;
}

}  // namespace sympvoa
