#pragma once

#include <random>
#include <vector>

#include "fp.hpp"

namespace frobstar {

// Dense univariate polynomial over F_p, coefficients ascending in degree.
using UPoly = std::vector<int>;

inline void utrim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }
inline bool uzero(const UPoly& f) { return f.empty(); }

inline UPoly uadd(const UPoly& a, const UPoly& b, int p) {
    UPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fp_add(r[i], b[i], p);
    utrim(r);
    return r;
}

inline UPoly usub(const UPoly& a, const UPoly& b, int p) {
    UPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fp_sub(r[i], b[i], p);
    utrim(r);
    return r;
}

inline UPoly umul(const UPoly& a, const UPoly& b, int p) {
    if (uzero(a) || uzero(b)) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fp_add(r[i + j], fp_mul(a[i], b[j], p), p);
    }
    utrim(r);
    return r;
}

inline UPoly uscale(const UPoly& a, int c, int p) {
    UPoly r = a;
    for (int& v : r) v = fp_mul(v, c, p);
    utrim(r);
    return r;
}

inline UPoly umonic(const UPoly& a, int p) {
    if (uzero(a)) return a;
    return uscale(a, fp_inv(a.back(), p), p);
}

// division with remainder; returns quotient, leaves remainder in a
inline UPoly udivmod(UPoly& a, const UPoly& b, int p) {
    if (uzero(b)) throw std::domain_error("univariate division by zero");
    UPoly q;
    int inv = fp_inv(b.back(), p);
    while (!uzero(a) && a.size() >= b.size()) {
        int c = fp_mul(a.back(), inv, p);
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = fp_add(q[shift], c, p);
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = fp_sub(a[shift + i], fp_mul(c, b[i], p), p);
        utrim(a);
    }
    utrim(q);
    return q;
}

inline UPoly umod(UPoly a, const UPoly& b, int p) {
    udivmod(a, b, p);
    return a;
}

inline UPoly ugcd(UPoly a, UPoly b, int p) {
    while (!uzero(b)) {
        UPoly r = umod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(a, p);
}

inline UPoly upow_mod(UPoly base, long long e, const UPoly& mod, int p) {
    UPoly r = {1};
    base = umod(std::move(base), mod, p);
    while (e > 0) {
        if (e & 1) r = umod(umul(r, base, p), mod, p);
        base = umod(umul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

inline UPoly uderiv(const UPoly& f, int p) {
    UPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(fp_mul(f[i], (int)(i % p), p));
    utrim(r);
    return r;
}

// f(x) = g(x^p) -> g; valid over F_p where coefficients are Frobenius-fixed.
inline UPoly upth_root(const UPoly& f, int p) {
    UPoly g;
    for (size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
    utrim(g);
    return g;
}

using UFactor = std::pair<UPoly, int>;  // (monic irreducible, multiplicity)

namespace detail {

// splits a squarefree product of irreducibles all of degree d
inline void equal_degree_split(const UPoly& f, int d, int p, std::mt19937& rng,
                               std::vector<UPoly>& out) {
    if (udeg(f) == d) {
        out.push_back(umonic(f, p));
        return;
    }
    for (;;) {
        // random polynomial of degree < deg f
        UPoly a(udeg(f), 0);
        for (int& c : a) c = static_cast<int>(rng() % p);
        utrim(a);
        if (uzero(a) || udeg(a) == 0) continue;
        UPoly g = ugcd(f, a, p);
        if (udeg(g) > 0 && udeg(g) < udeg(f)) {
            equal_degree_split(g, d, p, rng, out);
            UPoly h = f;
            UPoly q = udivmod(h, g, p);
            equal_degree_split(q, d, p, rng, out);
            return;
        }
        UPoly b;
        if (p == 2) {
            // trace map over F_{2^d}
            b = {};
            UPoly t = a;
            for (int i = 0; i < d; ++i) {
                b = uadd(b, t, p);
                t = umod(umul(t, t, p), f, p);
            }
        } else {
            // norm to F_p then power (p-1)/2
            UPoly n = {1};
            UPoly t = a;
            for (int i = 0; i < d; ++i) {
                n = umod(umul(n, t, p), f, p);
                t = upow_mod(t, p, f, p);
            }
            b = upow_mod(n, (p - 1) / 2, f, p);
        }
        UPoly g2 = ugcd(f, usub(b, UPoly{1}, p), p);
        if (udeg(g2) > 0 && udeg(g2) < udeg(f)) {
            equal_degree_split(g2, d, p, rng, out);
            UPoly h = f;
            UPoly q = udivmod(h, g2, p);
            equal_degree_split(q, d, p, rng, out);
            return;
        }
        if (p == 2) {
            // gcd with the trace itself also splits
            UPoly g3 = ugcd(f, b, p);
            if (udeg(g3) > 0 && udeg(g3) < udeg(f)) {
                equal_degree_split(g3, d, p, rng, out);
                UPoly h = f;
                UPoly q = udivmod(h, g3, p);
                equal_degree_split(q, d, p, rng, out);
                return;
            }
        }
    }
}

// distinct-degree decomposition of a squarefree monic f
inline void factor_squarefree(const UPoly& f, int p, std::mt19937& rng,
                              std::vector<UPoly>& out) {
    UPoly rest = f;
    UPoly h = {0, 1};  // x
    int d = 0;
    while (udeg(rest) > 0) {
        ++d;
        if (2 * d > udeg(rest)) {
            out.push_back(umonic(rest, p));
            break;
        }
        h = upow_mod(h, p, rest, p);
        UPoly g = ugcd(rest, usub(h, UPoly{0, 1}, p), p);
        if (udeg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            UPoly tmp = rest;
            rest = udivmod(tmp, g, p);
            if (udeg(rest) > 0) h = umod(h, rest, p);
        }
    }
}

}  // namespace detail

// Complete factorization of a nonzero univariate polynomial into monic
// irreducibles with multiplicities (the leading unit is dropped).
inline std::vector<UFactor> factor_upoly(UPoly f, int p, uint32_t seed = 0x5eed) {
    if (uzero(f)) throw std::invalid_argument("factor of the zero polynomial");
    std::vector<UFactor> result;
    f = umonic(f, p);
    if (udeg(f) == 0) return result;

    std::mt19937 rng(seed);
    // squarefree decomposition, char-p aware
    struct Item { UPoly f; int mult; };
    std::vector<Item> stack{{f, 1}};
    std::vector<Item> squarefree;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (udeg(it.f) == 0) continue;
        UPoly d = uderiv(it.f, p);
        if (uzero(d)) {
            stack.push_back({upth_root(it.f, p), it.mult * p});
            continue;
        }
        UPoly g = ugcd(it.f, d, p);
        if (udeg(g) == 0) {
            squarefree.push_back(it);
            continue;
        }
        UPoly h = it.f;
        UPoly q = udivmod(h, g, p);
        stack.push_back({q, it.mult});
        stack.push_back({g, it.mult});
    }

    // factor each squarefree part, merging equal irreducibles
    for (const auto& it : squarefree) {
        std::vector<UPoly> irr;
        detail::factor_squarefree(it.f, p, rng, irr);
        for (auto& g : irr) {
            bool merged = false;
            for (auto& [fac, mult] : result)
                if (fac == g) { mult += it.mult; merged = true; break; }
            if (!merged) result.emplace_back(std::move(g), it.mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const UFactor& a, const UFactor& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return result;
}

}  // namespace frobstar
