#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "sympvoa/rational.hpp"

namespace sympvoa {

// Multivariate polynomial over Q with a fixed number of variables.
// Exponent vectors are dense and fixed-length; terms are stored sparsely
// and zero coefficients are never kept.
class MultiPoly {
public:
    using Expo = std::vector<int>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rat& c) {
        MultiPoly p(nvars);
        p.add_term(Expo(nvars, 0), c);
        return p;
    }

    static MultiPoly variable(int nvars, int i) {
        MultiPoly p(nvars);
        Expo e(nvars, 0);
        e.at(i) = 1;
        p.add_term(e, 1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compat(b);
        MultiPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MultiPoly operator*(const Rat& c, const MultiPoly& p) {
        MultiPoly r(p.nvars_);
        for (const auto& [e, pc] : p.terms_) r.add_term(e, c * pc);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("eval: wrong point dimension");
        Rat sum = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            sum += t;
        }
        return sum;
    }

    // Substitute a polynomial (possibly in a different variable set) for
    // each variable.  All images must share a variable count.
    MultiPoly eval_poly(const std::vector<MultiPoly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("eval_poly: wrong image count");
        int target_vars = images.empty() ? 0 : images[0].nvars_;
        MultiPoly sum(target_vars);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = MultiPoly::constant(target_vars, c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * images[i];
            sum += t;
        }
        return sum;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    // Leading term in graded lexicographic order (var 0 strongest).
    std::pair<Expo, Rat> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        auto grlex_less = [](const Expo& a, const Expo& b) {
            int da = 0, db = 0;
            for (int x : a) da += x;
            for (int x : b) db += x;
            if (da != db) return da < db;
            return a < b;
        };
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return *best;
    }

    MultiPoly monic() const {
        if (terms_.empty()) return *this;
        return (Rat(1) / leading_term().second) * (*this);
    }

    // Proportional by a nonzero rational factor.
    bool proportional_to(const MultiPoly& o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        return monic() == o.monic();
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << rat_to_string(c);
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << "*" << names.at(i);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void check_compat(const MultiPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("variable count mismatch");
    }

    int nvars_;
    std::map<Expo, Rat> terms_;
};

// Product of `count` factors base, base+step, base+2*step, ...
inline MultiPoly falling_product(const MultiPoly& base, unsigned count, const Rat& step) {
    MultiPoly r = MultiPoly::constant(base.nvars(), 1);
    MultiPoly f = base;
    for (unsigned j = 0; j < count; ++j) {
        r = r * f;
        f += MultiPoly::constant(base.nvars(), step);
    }
    return r;
}

// sum_{k=0}^{n} (-1)^k C(n,k) q(k) for univariate q; vanishes when deg q < n.
inline Rat alternating_binom_sum(const MultiPoly& q, unsigned n) {
    if (q.nvars() != 1) throw std::invalid_argument("q must be univariate");
    Rat sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        Rat term = binom(Rat(n), k) * q.eval({Rat(k)});
        if (k % 2) sum -= term; else sum += term;
    }
    return sum;
}

}  // namespace sympvoa
