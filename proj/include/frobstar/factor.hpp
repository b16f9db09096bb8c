#pragma once

#include "errors.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "upoly.hpp"

namespace frobstar {

using PolyFactor = std::pair<Polynomial, int>;  // (irreducible, multiplicity)

namespace detail {

// Kronecker substitution x_i -> t^{stride_i}.  The strides come from the
// per-variable degrees of the polynomial being factored, so the map is
// injective on every divisor's support (divisor degrees are bounded by the
// degrees of the product over a domain).
struct Kronecker {
    std::vector<size_t> active;   // indices of variables that occur
    std::vector<long long> stride;

    static Kronecker plan(const Polynomial& f) {
        Kronecker k;
        const RingPtr& ring = f.ring();
        std::vector<int> degs(ring->nvars(), 0);
        for (const auto& [e, c] : f.terms())
            for (size_t i = 0; i < e.size(); ++i) degs[i] = std::max(degs[i], e[i]);
        long long acc = 1;
        for (size_t i = 0; i < ring->nvars(); ++i) {
            if (degs[i] == 0) continue;
            k.active.push_back(i);
            k.stride.push_back(acc);
            acc *= degs[i] + 1;
            if (acc > 200000)
                throw capability_error("factorization: Kronecker degree exceeds the supported envelope");
        }
        return k;
    }

    UPoly image(const Polynomial& f) const {
        UPoly u;
        for (const auto& [e, c] : f.terms()) {
            long long pos = 0;
            for (size_t j = 0; j < active.size(); ++j) pos += stride[j] * e[active[j]];
            if (static_cast<long long>(u.size()) <= pos) u.resize(pos + 1, 0);
            u[pos] = c;  // injective on supports, no collisions
        }
        utrim(u);
        return u;
    }

    Polynomial preimage(const UPoly& u, const RingPtr& ring) const {
        Polynomial f(ring);
        for (size_t pos = 0; pos < u.size(); ++pos) {
            if (u[pos] == 0) continue;
            Expo e(ring->nvars(), 0);
            long long rest = static_cast<long long>(pos);
            for (size_t j = active.size(); j-- > 0;) {
                e[active[j]] = static_cast<int>(rest / stride[j]);
                rest %= stride[j];
            }
            f.add_term(e, u[pos]);
        }
        return f;
    }
};

// Finds one irreducible factor of a nonconstant f with no monomial content.
inline Polynomial find_irreducible_factor(const Polynomial& f) {
    const RingPtr& ring = f.ring();
    const int p = ring->p;

    // single-variable polynomials go straight to the univariate machinery
    size_t vars_used = 0, last_var = 0;
    {
        std::vector<bool> used(ring->nvars(), false);
        for (const auto& [e, c] : f.terms())
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0 && !used[i]) { used[i] = true; ++vars_used; last_var = i; }
    }
    Kronecker k = Kronecker::plan(f);
    UPoly image = k.image(f);
    auto ufacs = factor_upoly(image, p);

    if (vars_used <= 1) {
        // image is f itself up to variable renaming; first factor works
        return monic(k.preimage(ufacs.front().first, ring));
    }

    // flatten the factor multiset
    std::vector<UPoly> flat;
    for (const auto& [g, m] : ufacs)
        for (int i = 0; i < m; ++i) flat.push_back(g);
    const size_t n = flat.size();
    if (n > 20) throw capability_error("factorization: too many univariate factors to recombine");
    if (n == 1) return monic(f);

    // subsets in increasing cardinality; the first preimage dividing f is an
    // irreducible factor (a proper divisor of it would show at a smaller set)
    for (size_t card = 1; card <= n / 2; ++card) {
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        for (;;) {
            UPoly prod = {1};
            for (size_t i : idx) prod = umul(prod, flat[i], p);
            Polynomial cand = k.preimage(prod, ring);
            if (!cand.is_constant() && f.divide_exact(cand)) return monic(cand);
            // advance to the next index combination
            size_t i = card;
            bool done = true;
            while (i-- > 0) {
                if (idx[i] != n - card + i) {
                    ++idx[i];
                    for (size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    return monic(f);  // no proper subset divides: f is irreducible
}

}  // namespace detail

// Factors f into irreducibles over F_p.  The product of the returned powers
// equals f up to a scalar in F_p.
inline std::vector<PolyFactor> factor(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
    const RingPtr& ring = f.ring();
    std::vector<PolyFactor> result;

    Polynomial rest = f;
    // monomial content
    {
        Expo content(ring->nvars(), 0);
        bool first = true;
        for (const auto& [e, c] : rest.terms()) {
            if (first) { content = e; first = false; continue; }
            for (size_t i = 0; i < e.size(); ++i) content[i] = std::min(content[i], e[i]);
        }
        for (size_t i = 0; i < ring->nvars(); ++i) {
            if (content[i] == 0) continue;
            result.emplace_back(Polynomial::variable(ring, i), content[i]);
        }
        if (total_degree(content) > 0) {
            Polynomial mono = Polynomial::monomial(ring, content, 1);
            auto q = rest.divide_exact(mono);
            rest = *q;
        }
    }

    while (!rest.is_constant()) {
        Polynomial g = detail::find_irreducible_factor(rest);
        int mult = 0;
        for (;;) {
            auto q = rest.divide_exact(g);
            if (!q) break;
            rest = *q;
            ++mult;
        }
        result.emplace_back(std::move(g), mult);
    }
    std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return format_polynomial(a.first) < format_polynomial(b.first);
    });
    return result;
}

inline bool is_irreducible(const Polynomial& f) {
    if (f.is_zero() || f.is_constant()) return false;
    auto fac = factor(f);
    return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace frobstar
