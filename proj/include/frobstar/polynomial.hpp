#pragma once

#include <map>
#include <optional>
#include <utility>

#include "ring.hpp"

namespace frobstar {

// Sparse multivariate polynomial over F_p.  Terms are kept in a map sorted
// descending in the ring's monomial order, so iteration starts at the
// leading term and all downstream output is reproducible.
class Polynomial {
public:
    struct TermGreater {
        const Ring* r = nullptr;
        bool operator()(const Expo& a, const Expo& b) const { return r->order.greater(a, b); }
    };
    using TermMap = std::map<Expo, int, TermGreater>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)), terms_(TermGreater{ring_.get()}) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }

    static Polynomial constant(const RingPtr& ring, long long c) {
        Polynomial f(ring);
        int v = fp_normalize(c, ring->p);
        if (v != 0) f.terms_.emplace(Expo(ring->nvars(), 0), v);
        return f;
    }

    static Polynomial variable(const RingPtr& ring, size_t idx, int exp = 1) {
        Polynomial f(ring);
        Expo e(ring->nvars(), 0);
        e[idx] = exp;
        f.terms_.emplace(std::move(e), 1 % ring->p);
        return f;
    }

    static Polynomial monomial(const RingPtr& ring, Expo e, long long c) {
        Polynomial f(ring);
        int v = fp_normalize(c, ring->p);
        if (v != 0) f.terms_.emplace(std::move(e), v);
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    int constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Expo(ring_->nvars(), 0));
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_one() const { return is_constant() && constant_value() == 1; }

    // Leading data under the ring order.  Caller must check is_zero first.
    const Expo& lead_expo() const { return terms_.begin()->first; }
    int lead_coeff() const { return terms_.begin()->second; }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    int degree_in(size_t var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    void add_term(const Expo& e, long long c) {
        int v = fp_normalize(c, ring_->p);
        if (v == 0) return;
        auto [it, fresh] = terms_.emplace(e, v);
        if (!fresh) {
            it->second = fp_add(it->second, v, ring_->p);
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [e, c] : r.terms_) c = fp_neg(c, ring_->p);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(expo_add(ea, eb), (long long)ca * cb);
        return r;
    }

    Polynomial scaled(long long c) const {
        Polynomial r(ring_);
        int v = fp_normalize(c, ring_->p);
        if (v == 0) return r;
        for (const auto& [e, co] : terms_) r.terms_.emplace(e, fp_mul(co, v, ring_->p));
        return r;
    }

    Polynomial times_monomial(const Expo& m, int c) const {
        Polynomial r(ring_);
        if (c == 0) return r;
        for (const auto& [e, co] : terms_)
            r.terms_.emplace(expo_add(e, m), fp_mul(co, c, ring_->p));
        return r;
    }

    Polynomial pow(long long n) const {
        if (n < 0) throw std::invalid_argument("negative polynomial power");
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    // f^{p^e}.  In characteristic p this is term-by-term: coefficients are
    // fixed by Frobenius over F_p and exponents scale by p^e.
    Polynomial bracket_power(int e) const {
        if (e < 0) throw std::invalid_argument("bracket power needs e >= 0");
        long long q = 1;
        for (int i = 0; i < e; ++i) q *= ring_->p;
        Polynomial r(ring_);
        for (const auto& [ex, c] : terms_) {
            Expo m(ex.size());
            for (size_t i = 0; i < ex.size(); ++i) m[i] = static_cast<int>(ex[i] * q);
            r.terms_.emplace(std::move(m), c);
        }
        return r;
    }

    Polynomial derivative(size_t var) const {
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            int nc = fp_mul(c, fp_normalize(e[var], ring_->p), ring_->p);
            if (nc == 0) continue;
            Expo m = e;
            m[var] -= 1;
            r.add_term(m, nc);
        }
        return r;
    }

    // Exact division by a nonzero polynomial; nullopt when d does not divide.
    // Greedy leading-term cancellation is exact over a domain.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const {
        require_same_ring(ring_, d.ring_);
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        Polynomial q(ring_);
        Polynomial r = *this;
        int lc_inv = fp_inv(d.lead_coeff(), ring_->p);
        while (!r.is_zero()) {
            const Expo& le = r.lead_expo();
            if (!expo_divides(d.lead_expo(), le)) return std::nullopt;
            Expo m = expo_sub(le, d.lead_expo());
            int c = fp_mul(r.lead_coeff(), lc_inv, ring_->p);
            q.add_term(m, c);
            r = r - d.times_monomial(m, c);
        }
        return q;
    }

    // Remap to another ring given a variable index translation:
    // var i of this ring becomes var map[i] of dst.
    Polynomial remapped(const RingPtr& dst, const std::vector<int>& map) const {
        Polynomial r(dst);
        for (const auto& [e, c] : terms_) {
            Expo m(dst->nvars(), 0);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (map[i] < 0) throw ring_mismatch("remap drops a variable that occurs");
                m[map[i]] = e[i];
            }
            r.add_term(m, c);
        }
        return r;
    }

    // Substitute var -> g, other variables mapped identically into g's ring.
    Polynomial substituted(size_t var, const Polynomial& g) const {
        const RingPtr& dst = g.ring();
        Polynomial r(dst);
        for (const auto& [e, c] : terms_) {
            Polynomial t = Polynomial::constant(dst, c);
            Expo rest(dst->nvars(), 0);
            for (size_t i = 0; i < e.size(); ++i) {
                if (i == var) continue;
                int j = dst->var_index(ring_->vars[i]);
                if (j < 0) throw ring_mismatch("substitution target lacks variable " + ring_->vars[i]);
                rest[j] = e[i];
            }
            t = t.times_monomial(rest, 1);
            if (e[var] > 0) t = t * g.pow(e[var]);
            r = r + t;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = a.terms_.begin();
        auto jt = b.terms_.begin();
        for (; it != a.terms_.end(); ++it, ++jt)
            if (it->first != jt->first || it->second != jt->second) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    RingPtr ring_;
    TermMap terms_;
};

inline Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f.scaled(fp_inv(f.lead_coeff(), f.ring()->p));
}

}  // namespace frobstar
