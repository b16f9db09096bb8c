#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "polynomial.hpp"

namespace frobstar {

// A vector of polynomials, i.e. an element of R^rank.
using PolyVec = std::vector<Polynomial>;

inline bool vec_is_zero(const PolyVec& v) {
    for (const auto& f : v)
        if (!f.is_zero()) return false;
    return true;
}

inline PolyVec vec_zero(const RingPtr& ring, int rank) {
    return PolyVec(rank, Polynomial::zero(ring));
}

inline PolyVec vec_add(const PolyVec& a, const PolyVec& b) {
    PolyVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

inline PolyVec vec_sub(const PolyVec& a, const PolyVec& b) {
    PolyVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

inline PolyVec vec_scale(const PolyVec& a, const Polynomial& f) {
    PolyVec r = a;
    for (auto& g : r) g = g * f;
    return r;
}

inline PolyVec vec_times_monomial(const PolyVec& a, const Expo& m, int c) {
    PolyVec r = a;
    for (auto& g : r) g = g.times_monomial(m, c);
    return r;
}

inline PolyVec vec_bracket(const PolyVec& a, int e) {
    PolyVec r = a;
    for (auto& g : r) g = g.bracket_power(e);
    return r;
}

// Position of a module term: component index plus monomial.
struct ModTerm {
    int comp;
    Expo expo;
    int coeff;
};

// Module monomial order.  Default is position-over-term: the component
// dominates (lower index first), ties broken by the ring's monomial order.
// With tag_first set, the exponent of variable 0 is hoisted above the
// component, making variable 0 an elimination variable across the whole
// free module (used by the intersection construction).
struct ModOrder {
    const Ring* ring;
    bool tag_first = false;

    bool greater(int c1, const Expo& e1, int c2, const Expo& e2) const {
        if (tag_first && e1[0] != e2[0]) return e1[0] > e2[0];
        if (c1 != c2) return c1 < c2;
        return ring->order.greater(e1, e2);
    }
};

// Leading term of a nonzero vector under the given order.
inline ModTerm vec_lead(const PolyVec& v, const ModOrder& ord) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (v[i].is_zero()) continue;
        if (best < 0 ||
            ord.greater(i, v[i].lead_expo(), best, v[best].lead_expo()))
            best = i;
    }
    return ModTerm{best, v[best].lead_expo(), v[best].lead_coeff()};
}

inline PolyVec vec_monic(const PolyVec& v, const ModOrder& ord) {
    ModTerm lt = vec_lead(v, ord);
    int inv = fp_inv(lt.coeff, v[lt.comp].ring()->p);
    PolyVec r = v;
    for (auto& f : r) f = f.scaled(inv);
    return r;
}

// Full normal form of v against basis (elements assumed monic).  Every term
// of the remainder is irreducible against the basis leads.
inline PolyVec reduce_full(PolyVec v, const std::vector<PolyVec>& basis, const ModOrder& ord) {
    if (basis.empty()) return v;
    PolyVec rem = vec_zero(v[0].ring(), static_cast<int>(v.size()));
    std::vector<ModTerm> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) leads.push_back(vec_lead(g, ord));

    while (!vec_is_zero(v)) {
        ModTerm lt = vec_lead(v, ord);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (leads[k].comp != lt.comp) continue;
            if (!expo_divides(leads[k].expo, lt.expo)) continue;
            Expo m = expo_sub(lt.expo, leads[k].expo);
            v = vec_sub(v, vec_times_monomial(basis[k], m, lt.coeff));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[lt.comp].add_term(lt.expo, lt.coeff);
            v[lt.comp].add_term(lt.expo, -lt.coeff);
        }
    }
    return rem;
}

// Buchberger's algorithm for submodules of R^rank, returning the unique
// reduced Groebner basis sorted descending by leading term.
inline std::vector<PolyVec> buchberger(const std::vector<PolyVec>& gens, const ModOrder& ord) {
    std::vector<PolyVec> basis;
    for (const auto& g : gens) {
        if (vec_is_zero(g)) continue;
        PolyVec r = reduce_full(g, basis, ord);
        if (!vec_is_zero(r)) basis.push_back(vec_monic(r, ord));
    }
    if (basis.empty()) return basis;
    const int rank = static_cast<int>(basis[0].size());
    const bool is_ideal = rank == 1;

    std::vector<ModTerm> leads;
    for (const auto& g : basis) leads.push_back(vec_lead(g, ord));

    std::set<std::pair<size_t, size_t>> pending;
    auto queue_pairs_with = [&](size_t j) {
        for (size_t i = 0; i < j; ++i)
            if (leads[i].comp == leads[j].comp) pending.insert({i, j});
    };
    for (size_t j = 1; j < basis.size(); ++j) queue_pairs_with(j);

    while (!pending.empty()) {
        auto [i, j] = *pending.begin();
        pending.erase(pending.begin());
        // first criterion (ideals only): coprime leads reduce to zero
        if (is_ideal && expo_coprime(leads[i].expo, leads[j].expo)) continue;
        Expo lcm = expo_lcm(leads[i].expo, leads[j].expo);
        // chain criterion: some k with lead dividing the lcm and both pairs gone
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j || leads[k].comp != leads[i].comp) continue;
            if (!expo_divides(leads[k].expo, lcm)) continue;
            auto key1 = std::minmax(i, k);
            auto key2 = std::minmax(j, k);
            if (!pending.count({key1.first, key1.second}) &&
                !pending.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        PolyVec s = vec_sub(vec_times_monomial(basis[i], expo_sub(lcm, leads[i].expo), 1),
                            vec_times_monomial(basis[j], expo_sub(lcm, leads[j].expo), 1));
        PolyVec r = reduce_full(std::move(s), basis, ord);
        if (vec_is_zero(r)) continue;
        basis.push_back(vec_monic(r, ord));
        leads.push_back(vec_lead(basis.back(), ord));
        queue_pairs_with(basis.size() - 1);
    }

    // minimize: drop any element whose lead is divisible by another lead
    std::vector<PolyVec> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (leads[j].comp != leads[i].comp) continue;
            if (!expo_divides(leads[j].expo, leads[i].expo)) continue;
            if (leads[j].expo == leads[i].expo && leads[j].comp == leads[i].comp && j > i)
                continue;  // among equal leads keep the earlier one
            redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others
    std::vector<PolyVec> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<PolyVec> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        PolyVec r = reduce_full(minimal[i], others, ord);
        if (!vec_is_zero(r)) reduced.push_back(vec_monic(r, ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const PolyVec& a, const PolyVec& b) {
        ModTerm la = vec_lead(a, ord), lb = vec_lead(b, ord);
        return ord.greater(la.comp, la.expo, lb.comp, lb.expo);
    });
    return reduced;
}

}  // namespace frobstar
