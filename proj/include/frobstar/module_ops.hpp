#pragma once

#include "submodule.hpp"

namespace frobstar {

inline Submodule module_sum(const Submodule& A, const Submodule& B) {
    if (A.rank() != B.rank()) throw rank_mismatch("sum: rank mismatch");
    require_same_ring(A.ring(), B.ring());
    std::vector<PolyVec> gens = A.gens();
    for (const auto& g : B.gens()) gens.push_back(g);
    return Submodule(A.ring(), A.rank(), std::move(gens));
}

namespace detail {

// Ring with a fresh elimination variable prepended at index 0.
struct TagRing {
    RingPtr ring;                 // F_p[t, x_1..x_n], t dominant
    std::vector<int> fwd;         // var i of base -> i+1
    std::vector<int> back;        // var of tag ring -> base index (t maps to -1)
};

inline TagRing make_tag_ring(const RingPtr& base) {
    std::vector<std::string> vars;
    vars.push_back("@t");
    for (const auto& v : base->vars) vars.push_back(v);
    TagRing t;
    t.ring = make_ring(base->p, vars, MonoOrder{MonoOrder::ElimFirstK, 1});
    t.fwd.resize(base->nvars());
    for (size_t i = 0; i < base->nvars(); ++i) t.fwd[i] = static_cast<int>(i) + 1;
    t.back.assign(base->nvars() + 1, -1);
    for (size_t i = 0; i < base->nvars(); ++i) t.back[i + 1] = static_cast<int>(i);
    return t;
}

}  // namespace detail

// Exact intersection via the one-tag-variable construction
// t*A + (1-t)*B, eliminating t across the whole free module.
inline Submodule module_intersect(const Submodule& A, const Submodule& B) {
    if (A.rank() != B.rank()) throw rank_mismatch("intersect: rank mismatch");
    require_same_ring(A.ring(), B.ring());
    const int rank = A.rank();
    auto tag = detail::make_tag_ring(A.ring());
    Polynomial t = Polynomial::variable(tag.ring, 0);
    Polynomial one_minus_t = Polynomial::constant(tag.ring, 1) - t;

    std::vector<PolyVec> gens;
    for (const auto& g : A.gens()) {
        PolyVec v;
        for (const auto& f : g) v.push_back(f.remapped(tag.ring, tag.fwd) * t);
        gens.push_back(std::move(v));
    }
    for (const auto& g : B.gens()) {
        PolyVec v;
        for (const auto& f : g) v.push_back(f.remapped(tag.ring, tag.fwd) * one_minus_t);
        gens.push_back(std::move(v));
    }

    ModOrder ord{tag.ring.get(), true};
    auto gb = buchberger(gens, ord);

    std::vector<PolyVec> result;
    for (const auto& g : gb) {
        bool tfree = true;
        for (const auto& f : g)
            for (const auto& [e, c] : f.terms())
                if (e[0] != 0) { tfree = false; break; }
        if (!tfree) continue;
        PolyVec v;
        for (const auto& f : g) v.push_back(f.remapped(A.ring(), tag.back));
        result.push_back(std::move(v));
    }
    return Submodule(A.ring(), rank, std::move(result));
}

inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) { return module_intersect(I, J); }

// (W : a) = { v | a*v in W }, computed as (1/a)(W \cap a*R^rank).
inline Submodule colon_module_by_element(const Submodule& W, const Polynomial& a) {
    if (a.is_zero()) throw std::invalid_argument("colon by zero element");
    require_same_ring(W.ring(), a.ring());
    Submodule aR = Submodule::full(W.ring(), W.rank());
    {
        std::vector<PolyVec> gens;
        for (const auto& g : aR.gens()) gens.push_back(vec_scale(g, a));
        aR = Submodule(W.ring(), W.rank(), std::move(gens));
    }
    Submodule inter = module_intersect(W, aR);
    std::vector<PolyVec> gens;
    for (const auto& g : inter.gb()) {
        PolyVec v;
        for (const auto& f : g) {
            auto q = f.divide_exact(a);
            if (!q) throw std::logic_error("colon: intersection element not divisible by a");
            v.push_back(*q);
        }
        gens.push_back(std::move(v));
    }
    return Submodule(W.ring(), W.rank(), std::move(gens));
}

inline Ideal colon_ideal_by_element(const Ideal& I, const Polynomial& a) {
    return colon_module_by_element(I, a);
}

// (I : J) = intersection of (I : g) over generators g of J.
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> gens = ideal_gens(J);
    if (gens.empty()) return unit_ideal(I.ring());  // (I : (0)) = (1)
    bool first = true;
    Ideal acc = I;
    for (const auto& g : gens) {
        Ideal q = colon_ideal_by_element(I, g);
        acc = first ? q : ideal_intersect(acc, q);
        first = false;
    }
    return acc;
}

// Stable value of (W : a^k).
inline Submodule saturate_module(const Submodule& W, const Polynomial& a) {
    if (a.is_zero()) throw std::invalid_argument("saturation by zero element");
    Submodule cur = W;
    for (;;) {
        Submodule next = colon_module_by_element(cur, a);
        if (module_equal(next, cur)) return cur;
        cur = next;
    }
}

inline Ideal saturate_ideal(const Ideal& I, const Polynomial& f) { return saturate_module(I, f); }

// (0 : R^rank / W), computed as the intersection over basis vectors e_i of
// { r | r*e_i in W }.  For rank 1 the annihilator is W itself.
inline Ideal annihilator_of_quotient(const Submodule& W) {
    const RingPtr& ring = W.ring();
    if (W.rank() == 1) {
        std::vector<Polynomial> gens;
        for (const auto& g : W.gb()) gens.push_back(g[0]);
        return make_ideal(ring, gens);
    }
    Ideal acc = unit_ideal(ring);
    bool first = true;
    for (int i = 0; i < W.rank(); ++i) {
        // W \cap R*e_i: generators are supported in component i only
        std::vector<PolyVec> egens;
        PolyVec e = vec_zero(ring, W.rank());
        e[i] = Polynomial::constant(ring, 1);
        egens.push_back(e);
        Submodule Rei(ring, W.rank(), egens);
        Submodule inter = module_intersect(W, Rei);
        std::vector<Polynomial> comps;
        for (const auto& g : inter.gb()) comps.push_back(g[i]);
        Ideal ci = make_ideal(ring, comps);
        acc = first ? ci : ideal_intersect(acc, ci);
        first = false;
    }
    return acc;
}

// Multivariate gcd through the lcm: (f) \cap (g) is principal in a UFD.
inline Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.ring());
    Ideal inter = ideal_intersect(make_ideal(f.ring(), {f}), make_ideal(g.ring(), {g}));
    const auto& b = inter.gb();
    if (b.size() != 1) throw std::logic_error("lcm: intersection of principal ideals not principal");
    return b[0][0];
}

inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    Polynomial l = poly_lcm(f, g);
    auto q = (f * g).divide_exact(l);
    if (!q) throw std::logic_error("gcd: lcm does not divide the product");
    return monic(*q);
}

// Ideal generated by an ideal times a module, and scalar multiples.
inline Submodule module_scale_ideal(const Ideal& I, const Submodule& W) {
    std::vector<PolyVec> gens;
    for (const auto& f : ideal_gens(I))
        for (const auto& g : W.gens()) gens.push_back(vec_scale(g, f));
    return Submodule(W.ring(), W.rank(), std::move(gens));
}

// The submodule I * R^rank generated by f*e_i.
inline Submodule ideal_times_free(const Ideal& I, int rank) {
    const RingPtr& ring = I.ring();
    std::vector<PolyVec> gens;
    for (const auto& f : ideal_gens(I))
        for (int i = 0; i < rank; ++i) {
            PolyVec v = vec_zero(ring, rank);
            v[i] = f;
            gens.push_back(std::move(v));
        }
    return Submodule(ring, rank, std::move(gens));
}

}  // namespace frobstar
