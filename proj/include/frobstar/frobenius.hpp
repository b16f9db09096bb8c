#pragma once

#include "decomposition.hpp"

namespace frobstar {

// An alpha x alpha matrix U together with an iteration level e, representing
// the Frobenius map U^t T^e on the dual side: a submodule W of R^alpha is
// compatible iff U*W lies in W^{[p^e]}.
struct FrobMatrix {
    PolyMatrix U;
    int e = 1;

    FrobMatrix(PolyMatrix u, int level = 1) : U(std::move(u)), e(level) {
        if (U.rows != U.cols) throw std::invalid_argument("Frobenius matrix must be square");
        if (e < 1) throw std::invalid_argument("Frobenius level e must be positive");
    }

    int alpha() const { return U.rows; }
    const RingPtr& ring() const { return U.ring(); }
};

inline FrobMatrix frob_from_poly(const Polynomial& u, int e = 1) {
    PolyMatrix m(u.ring(), 1, 1);
    m.at(0, 0) = u;
    return FrobMatrix(std::move(m), e);
}

// Submodule generated by the bracket powers of the generators; by char-p
// additivity this is the full bracket power of the module.
inline Submodule bracket_power_module(const Submodule& W, int e) {
    if (e == 0) return W;
    std::vector<PolyVec> gens;
    for (const auto& g : W.gens()) gens.push_back(vec_bracket(g, e));
    return Submodule(W.ring(), W.rank(), std::move(gens));
}

// I_e of the cyclic module R*v: decompose v = sum_b u_b^{[p^e]} * b over the
// monomial basis x^gamma, 0 <= gamma_i < p^e; the u_b generate the root.
// Coefficients of F_p need no root extraction.
inline Submodule ie_vector(const PolyVec& v, int e) {
    if (e < 1) throw std::invalid_argument("ie_vector: e must be positive");
    const RingPtr& ring = v.front().ring();
    const int rank = static_cast<int>(v.size());
    long long q = 1;
    for (int i = 0; i < e; ++i) q *= ring->p;

    std::map<Expo, PolyVec> parts;  // basis monomial -> u_b
    for (int j = 0; j < rank; ++j) {
        for (const auto& [expo, c] : v[j].terms()) {
            Expo basis(expo.size()), root(expo.size());
            for (size_t i = 0; i < expo.size(); ++i) {
                basis[i] = static_cast<int>(expo[i] % q);
                root[i] = static_cast<int>(expo[i] / q);
            }
            auto it = parts.find(basis);
            if (it == parts.end()) it = parts.emplace(basis, vec_zero(ring, rank)).first;
            it->second[j].add_term(root, c);
        }
    }
    std::vector<PolyVec> gens;
    for (auto& [b, u] : parts)
        if (!vec_is_zero(u)) gens.push_back(std::move(u));
    return Submodule(ring, rank, std::move(gens));
}

// I_e(W): the minimal L with W inside L^{[p^e]}, additive over generators.
inline Submodule ie_module(const Submodule& W, int e) {
    std::vector<PolyVec> gens;
    for (const auto& g : W.gens()) {
        Submodule part = ie_vector(g, e);
        for (const auto& u : part.gens()) gens.push_back(u);
    }
    return Submodule(W.ring(), W.rank(), std::move(gens));
}

inline Ideal ie_ideal(const Ideal& I, int e) { return ie_module(I, e); }

// module generated by U * (generators of W)
inline Submodule matrix_apply_module(const PolyMatrix& U, const Submodule& W) {
    if (U.cols != W.rank()) throw rank_mismatch("matrix application: rank mismatch");
    std::vector<PolyVec> gens;
    for (const auto& g : W.gens()) gens.push_back(U.apply(g));
    return Submodule(W.ring(), U.rows, std::move(gens));
}

// Star closure: the smallest W containing V with U*W inside W^{[p^e]},
// computed as the stable value of W <- W + I_e(U*W).
inline Submodule star_closure(const Submodule& V, const FrobMatrix& F) {
    if (V.rank() != F.alpha()) throw rank_mismatch("star_closure: rank mismatch");
    Submodule W = V;
    for (;;) {
        Submodule step = module_sum(W, ie_module(matrix_apply_module(F.U, W), F.e));
        if (module_equal(step, W)) return W;
        W = step;
    }
}

// Nilpotent kernel K: stable value of the descending chain
// K_0 = R^alpha, K_{j+1} = I_e(U * K_j).  E(K) is the submodule of elements
// killed by a power of the Frobenius action, so the action on E(W) is
// nilpotent iff K lies inside W.  Stabilization is guaranteed at desk scale;
// a hard cap guards against implementation bugs.
inline Submodule nilpotent_kernel(const FrobMatrix& F) {
    Submodule K = Submodule::full(F.ring(), F.alpha());
    for (int iter = 0; iter < 20; ++iter) {
        Submodule next = ie_module(matrix_apply_module(F.U, K), F.e);
        if (module_equal(next, K)) return K;
        K = next;
    }
    throw capability_error("nilpotent_kernel did not stabilize within 20 iterations");
}

inline bool is_compatible(const Submodule& W, const FrobMatrix& F) {
    if (W.rank() != F.alpha()) throw rank_mismatch("is_compatible: rank mismatch");
    Submodule bracket = bracket_power_module(W, F.e);
    for (const auto& g : W.gens())
        if (!contains(bracket, F.U.apply(g))) return false;
    return true;
}

// Q is special iff the annihilator of R^alpha / (Q R^alpha)^{*U} is Q itself
// (the star closure is dual to the largest module with annihilator Q).
inline bool is_special_prime(const Ideal& Q, const FrobMatrix& F) {
    Submodule closure = star_closure(ideal_times_free(Q, F.alpha()), F);
    return module_equal(annihilator_of_quotient(closure), Q);
}

// The Frobenius action on E(W) is non-nilpotent iff the nilpotent kernel is
// not contained in W.  Requires W compatible.
inline bool restriction_nonnilpotent(const Submodule& W, const FrobMatrix& F) {
    if (!is_compatible(W, F)) throw std::invalid_argument("restriction_nonnilpotent: W is not compatible");
    return !submodule_of(nilpotent_kernel(F), W);
}

// A generator of K reduced against W, witnessing non-nilpotence; empty when
// the action on E(W) is nilpotent.
inline std::optional<PolyVec> nonnilpotence_witness(const Submodule& W, const FrobMatrix& F) {
    Submodule K = nilpotent_kernel(F);
    for (const auto& g : K.gb()) {
        PolyVec nf = normal_form(g, W);
        if (!vec_is_zero(nf)) return g;
    }
    return std::nullopt;
}

}  // namespace frobstar
