#pragma once

#include <functional>
#include <map>

#include "factor.hpp"
#include "module_ops.hpp"

namespace frobstar {

// Primes returned by this module are certified by construction; user-supplied
// ideals can be checked with is_prime.
using PrimeIdeal = Ideal;

inline bool ideal_contains_ideal(const Ideal& big, const Ideal& small) {
    for (const auto& g : small.gb())
        if (!contains(big, g[0])) return false;
    return true;
}

// f in rad(I), decided by saturation.
inline bool radical_contains(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) return true;
    return is_unit_ideal(saturate_ideal(I, f));
}

// ---- dimension -----------------------------------------------------------

// Krull dimension of R/I via maximal variable sets independent of in(I).
inline int dimension(const Ideal& I) {
    if (is_unit_ideal(I)) throw std::invalid_argument("dimension of the unit ideal");
    const RingPtr& ring = I.ring();
    const size_t n = ring->nvars();
    std::vector<Expo> leads;
    for (const auto& g : I.gb()) leads.push_back(g[0].lead_expo());
    int best = 0;
    for (size_t subset = 0; subset < (size_t(1) << n); ++subset) {
        int size = 0;
        for (size_t i = 0; i < n; ++i)
            if (subset & (size_t(1) << i)) ++size;
        if (size <= best) continue;
        bool independent = true;
        for (const auto& e : leads) {
            bool supported = true;
            for (size_t i = 0; i < n && supported; ++i)
                if (e[i] > 0 && !(subset & (size_t(1) << i))) supported = false;
            if (supported) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

// One maximal independent set (deterministic choice).
inline std::vector<size_t> max_independent_set(const Ideal& I) {
    const RingPtr& ring = I.ring();
    const size_t n = ring->nvars();
    int dim = dimension(I);
    std::vector<Expo> leads;
    for (const auto& g : I.gb()) leads.push_back(g[0].lead_expo());
    for (size_t subset = 0; subset < (size_t(1) << n); ++subset) {
        int size = 0;
        for (size_t i = 0; i < n; ++i)
            if (subset & (size_t(1) << i)) ++size;
        if (size != dim) continue;
        bool independent = true;
        for (const auto& e : leads) {
            bool supported = true;
            for (size_t i = 0; i < n && supported; ++i)
                if (e[i] > 0 && !(subset & (size_t(1) << i))) supported = false;
            if (supported) { independent = false; break; }
        }
        if (independent) {
            std::vector<size_t> s;
            for (size_t i = 0; i < n; ++i)
                if (subset & (size_t(1) << i)) s.push_back(i);
            return s;
        }
    }
    return {};
}

// ---- singular locus ------------------------------------------------------

// P + (c x c minors of the Jacobian of a generating set), c = codim.
// Valid over the perfect field F_p.
inline Ideal singular_locus_ideal(const PrimeIdeal& P) {
    const RingPtr& ring = P.ring();
    if (P.gb().empty()) return unit_ideal(ring);  // R itself is regular
    const size_t n = ring->nvars();
    const int c = static_cast<int>(n) - dimension(P);
    std::vector<Polynomial> gens = ideal_gens(P);
    const int m = static_cast<int>(gens.size());
    if (c > m)
        throw capability_error("singular locus: generating set smaller than the codimension");

    PolyMatrix jac(ring, m, static_cast<int>(n));
    for (int i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) jac.at(i, static_cast<int>(j)) = gens[i].derivative(j);

    std::vector<Polynomial> result = gens;
    // all c x c minors
    std::vector<int> rows(c), cols(c);
    std::function<void(int, int)> pick_cols = [&](int start, int depth) {
        if (depth == c) {
            PolyMatrix minor(ring, c, c);
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j) minor.at(i, j) = jac.at(rows[i], cols[j]);
            Polynomial d = determinant(minor);
            if (!d.is_zero()) result.push_back(d);
            return;
        }
        for (int j = start; j < static_cast<int>(n); ++j) {
            cols[depth] = j;
            pick_cols(j + 1, depth + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == c) {
            pick_cols(0, 0);
            return;
        }
        for (int i = start; i < m; ++i) {
            rows[depth] = i;
            pick_rows(i + 1, depth + 1);
        }
    };
    if (c > 0) pick_rows(0, 0);
    return make_ideal(ring, result);
}

// ---- zero-dimensional fiber tools ----------------------------------------

namespace detail {

struct FpMatrix {
    int rows = 0, cols = 0, p = 2;
    std::vector<int> a;
    int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// kernel basis of a matrix over F_p
inline std::vector<std::vector<int>> fp_kernel(FpMatrix m) {
    const int p = m.p;
    std::vector<int> pivot_of_col(m.cols, -1);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        int inv = fp_inv(m.at(rank, col), p);
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = fp_mul(m.at(rank, j), inv, p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            int c = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = fp_sub(m.at(i, j), fp_mul(c, m.at(rank, j), p), p);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<std::vector<int>> basis;
    for (int col = 0; col < m.cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<int> v(m.cols, 0);
        v[col] = 1;
        for (int c2 = 0; c2 < m.cols; ++c2) {
            if (pivot_of_col[c2] < 0) continue;
            v[c2] = fp_neg(m.at(pivot_of_col[c2], col), p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// standard monomials of a zero-dimensional ideal, sorted ascending
inline std::vector<Expo> standard_monomials(const Ideal& I) {
    const RingPtr& ring = I.ring();
    const size_t n = ring->nvars();
    std::vector<Expo> leads;
    for (const auto& g : I.gb()) leads.push_back(g[0].lead_expo());
    std::vector<int> box(n, -1);
    for (const auto& e : leads) {
        int support = -1;
        bool pure = true;
        for (size_t i = 0; i < n && pure; ++i)
            if (e[i] > 0) {
                if (support >= 0) pure = false;
                else support = static_cast<int>(i);
            }
        if (pure && support >= 0)
            box[support] = box[support] < 0 ? e[support] : std::min(box[support], e[support]);
        if (pure && support < 0) return {};  // 1 in the ideal
    }
    for (size_t i = 0; i < n; ++i)
        if (box[i] < 0)
            throw capability_error("standard_monomials: ideal is not zero-dimensional");
    std::vector<Expo> basis;
    Expo cur(n, 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == n) {
            for (const auto& e : leads)
                if (expo_divides(e, cur)) return;
            basis.push_back(cur);
            return;
        }
        for (int d = 0; d < box[i]; ++d) {
            cur[i] = d;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::sort(basis.begin(), basis.end(), [&](const Expo& a, const Expo& b) {
        return ring->order.greater(b, a);
    });
    if (basis.size() > 4096) throw capability_error("zero-dimensional fiber too large");
    return basis;
}

}  // namespace detail

// ---- minimal primes ------------------------------------------------------

namespace detail {

std::vector<Ideal> minimal_primes_impl(const Ideal& I, int depth);

inline std::string ideal_key(const Ideal& I) { return format_ideal(I); }

inline std::vector<Ideal> minimality_filter(std::vector<Ideal> primes) {
    // dedupe
    std::map<std::string, Ideal> uniq;
    for (auto& P : primes) uniq.emplace(ideal_key(P), P);
    std::vector<Ideal> out;
    for (auto& [k, P] : uniq) {
        bool minimal = true;
        for (auto& [k2, Q] : uniq) {
            if (k == k2) continue;
            if (ideal_contains_ideal(P, Q)) { minimal = false; break; }
        }
        if (minimal) out.push_back(P);
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.gb().size() != b.gb().size()) return a.gb().size() < b.gb().size();
        return format_ideal(a) < format_ideal(b);
    });
    return out;
}

// union of recursions on I + (f) for each branch polynomial
inline std::vector<Ideal> branch_union(const Ideal& I, const std::vector<Polynomial>& branches,
                                       int depth) {
    std::vector<Ideal> acc;
    for (const auto& f : branches) {
        std::vector<Polynomial> gens = ideal_gens(I);
        gens.push_back(f);
        auto sub = minimal_primes_impl(make_ideal(I.ring(), gens), depth + 1);
        for (auto& P : sub) acc.push_back(std::move(P));
    }
    return minimality_filter(std::move(acc));
}

// zero-dimensional case: Frobenius fixed-space analysis.
// A = R/I is a product of local Artinian rings; dim ker(F - 1) counts the
// factors and ker F detects nilpotents.
inline std::vector<Ideal> minimal_primes_zero_dim(Ideal J, int depth) {
    const RingPtr& ring = J.ring();
    const int p = ring->p;
    for (int guard = 0; guard < 256; ++guard) {
        auto basis = standard_monomials(J);
        const int D = static_cast<int>(basis.size());
        if (D == 0) return {};
        std::map<Expo, int> index;
        for (int i = 0; i < D; ++i) index.emplace(basis[i], i);

        auto coords = [&](const Polynomial& f) {
            std::vector<int> v(D, 0);
            for (const auto& [e, c] : f.terms()) v[index.at(e)] = c;
            return v;
        };
        auto from_coords = [&](const std::vector<int>& v) {
            Polynomial f = Polynomial::zero(ring);
            for (int i = 0; i < D; ++i)
                if (v[i] != 0) f.add_term(basis[i], v[i]);
            return f;
        };

        FpMatrix frob{D, D, p, std::vector<int>(static_cast<size_t>(D) * D, 0)};
        for (int j = 0; j < D; ++j) {
            Polynomial bj = Polynomial::monomial(ring, basis[j], 1);
            auto col = coords(normal_form(bj.bracket_power(1), J));
            for (int i = 0; i < D; ++i) frob.at(i, j) = col[i];
        }

        auto nilpotents = fp_kernel(frob);
        if (!nilpotents.empty()) {
            // a^p = 0 with a != 0: pass to the radical direction
            std::vector<Polynomial> gens = ideal_gens(J);
            gens.push_back(from_coords(nilpotents.front()));
            J = make_ideal(ring, gens);
            continue;
        }

        FpMatrix fixed = frob;
        for (int i = 0; i < D; ++i) fixed.at(i, i) = fp_sub(fixed.at(i, i), 1, p);
        auto fixed_space = fp_kernel(fixed);
        if (fixed_space.size() <= 1) return {J};  // reduced with one factor: a field

        // split on an idempotent-like element a with a^p = a, a not constant
        std::vector<int> one(D, 0);
        one[0] = 1;  // basis[0] == 1 for a proper ideal
        std::vector<int> a;
        for (const auto& v : fixed_space) {
            bool proportional = true;
            for (int i = 1; i < D; ++i)
                if (v[i] != 0) { proportional = false; break; }
            if (!proportional) { a = v; break; }
        }
        Polynomial apoly = from_coords(a);
        std::vector<Polynomial> branches;
        for (int c = 0; c < p; ++c)
            branches.push_back(apoly - Polynomial::constant(ring, c));
        return branch_union(J, branches, depth);
    }
    throw capability_error("zero-dimensional splitting did not stabilize");
}

// ---- generic fiber (positive dimension, no other strategy applies) --------

struct Fraction {
    Polynomial num, den;

    static Fraction of(const Polynomial& n, const Polynomial& d) {
        Fraction f{n, d};
        f.reduce_if_large();
        return f;
    }
    bool is_zero() const { return num.is_zero(); }
    void reduce_if_large() {
        if (num.is_zero()) { den = Polynomial::constant(den.ring(), 1); return; }
        if (den.degree() + num.degree() < 24) return;
        Polynomial g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = *num.divide_exact(g);
            den = *den.divide_exact(g);
        }
    }
    Fraction operator+(const Fraction& o) const {
        return of(num * o.den + o.num * den, den * o.den);
    }
    Fraction operator-(const Fraction& o) const {
        return of(num * o.den - o.num * den, den * o.den);
    }
    Fraction operator*(const Fraction& o) const { return of(num * o.num, den * o.den); }
    Fraction operator/(const Fraction& o) const {
        if (o.num.is_zero()) throw std::domain_error("fraction division by zero");
        return of(num * o.den, den * o.num);
    }
};

// the fiber of I over K = F_p(S), S an independent set
struct GenericFiber {
    RingPtr block_ring;                 // same vars, rest-dominant order
    std::vector<unsigned char> rest;    // mask: 1 = fiber variable
    std::vector<PolyVec> gb;            // block-order GB of I
    std::vector<Expo> rest_leads;       // K-leading rest-monomials
    std::vector<Polynomial> lead_coeffs;  // the matching K-leading coefficients
    std::vector<Expo> basis;            // standard rest-monomials

    Expo rest_part(const Expo& e) const {
        Expo r(e.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            if (rest[i]) r[i] = e[i];
        return r;
    }
    Expo s_part(const Expo& e) const {
        Expo r(e.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            if (!rest[i]) r[i] = e[i];
        return r;
    }
};

inline GenericFiber make_fiber(const Ideal& I, const std::vector<size_t>& indep) {
    const RingPtr& ring = I.ring();
    GenericFiber fib;
    fib.rest.assign(ring->nvars(), 1);
    for (size_t i : indep) fib.rest[i] = 0;
    MonoOrder order{MonoOrder::ElimSubset, 0, fib.rest};
    fib.block_ring = make_ring(ring->p, ring->vars, order);

    std::vector<int> idmap(ring->nvars());
    for (size_t i = 0; i < ring->nvars(); ++i) idmap[i] = static_cast<int>(i);
    std::vector<PolyVec> gens;
    for (const auto& g : I.gb()) gens.push_back({g[0].remapped(fib.block_ring, idmap)});
    fib.gb = buchberger(gens, ModOrder{fib.block_ring.get(), false});

    for (const auto& g : fib.gb) {
        const Polynomial& f = g[0];
        Expo mu = fib.rest_part(f.lead_expo());
        if (total_degree(mu) == 0)
            throw capability_error("generic fiber: chosen set is not independent");
        Polynomial c = Polynomial::zero(fib.block_ring);
        for (const auto& [e, co] : f.terms())
            if (fib.rest_part(e) == mu) c.add_term(fib.s_part(e), co);
        fib.rest_leads.push_back(mu);
        fib.lead_coeffs.push_back(c);
    }

    // standard rest-monomials: need a pure power bound per fiber variable
    std::vector<int> box(ring->nvars(), 0);
    for (size_t i = 0; i < ring->nvars(); ++i) {
        if (!fib.rest[i]) { box[i] = 1; continue; }
        int bound = -1;
        for (const auto& mu : fib.rest_leads) {
            bool pure = mu[i] > 0;
            for (size_t j = 0; j < ring->nvars() && pure; ++j)
                if (j != i && mu[j] > 0) pure = false;
            if (pure) bound = bound < 0 ? mu[i] : std::min(bound, mu[i]);
        }
        if (bound < 0) throw capability_error("generic fiber is not zero-dimensional");
        box[i] = bound;
    }
    Expo cur(ring->nvars(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == ring->nvars()) {
            for (const auto& mu : fib.rest_leads)
                if (expo_divides(mu, cur)) return;
            fib.basis.push_back(cur);
            return;
        }
        for (int d = 0; d < box[i]; ++d) {
            cur[i] = d;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    std::sort(fib.basis.begin(), fib.basis.end(), [&](const Expo& a, const Expo& b) {
        return fib.block_ring->order.greater(b, a);
    });
    if (fib.basis.size() > 64) throw capability_error("generic fiber dimension too large");
    return fib;
}

// normal form over K: returns coordinates in the standard basis together
// with one common denominator in F_p[S]
struct FiberElement {
    Polynomial value;  // numerator, reduced: all rest-monomials standard
    Polynomial den;    // denominator in F_p[S]
};

inline FiberElement fiber_reduce(const GenericFiber& fib, Polynomial g) {
    const RingPtr& ring = fib.block_ring;
    Polynomial den = Polynomial::constant(ring, 1);
    for (int guard = 0; guard < 100000; ++guard) {
        // find the largest non-standard rest-monomial in g
        bool done = true;
        Expo mu;
        for (const auto& [e, c] : g.terms()) {
            Expo r = fib.rest_part(e);
            for (size_t k = 0; k < fib.rest_leads.size(); ++k) {
                if (expo_divides(fib.rest_leads[k], r)) {
                    if (done || ring->order.greater(r, mu)) mu = r;
                    done = false;
                    break;
                }
            }
        }
        if (done) return {g, den};
        // coefficient of mu in g (as an S-polynomial times mu)
        Polynomial c = Polynomial::zero(ring);
        for (const auto& [e, co] : g.terms())
            if (fib.rest_part(e) == mu) c.add_term(fib.s_part(e), co);
        // reduce with the first GB element whose rest-lead divides mu
        size_t k = 0;
        while (!expo_divides(fib.rest_leads[k], mu)) ++k;
        Expo shift = expo_sub(mu, fib.rest_leads[k]);
        Polynomial ck = fib.lead_coeffs[k];
        g = g * ck - fib.gb[k][0] * c.times_monomial(shift, 1);
        den = den * ck;
    }
    throw capability_error("fiber reduction did not terminate");
}

inline std::vector<Fraction> fiber_coords(const GenericFiber& fib, const FiberElement& el) {
    std::vector<Fraction> v(fib.basis.size(),
                            Fraction{Polynomial::zero(fib.block_ring),
                                     Polynomial::constant(fib.block_ring, 1)});
    std::map<Expo, Polynomial> grouped;
    for (const auto& [e, c] : el.value.terms()) {
        Expo r = fib.rest_part(e);
        auto it = grouped.find(r);
        if (it == grouped.end()) {
            Polynomial f = Polynomial::zero(fib.block_ring);
            f.add_term(fib.s_part(e), c);
            grouped.emplace(r, std::move(f));
        } else {
            it->second.add_term(fib.s_part(e), c);
        }
    }
    for (size_t i = 0; i < fib.basis.size(); ++i) {
        auto it = grouped.find(fib.basis[i]);
        if (it != grouped.end()) v[i] = Fraction::of(it->second, el.den);
    }
    return v;
}

// minimal polynomial over K of xi (a polynomial in the fiber variables);
// returns coefficients c_0..c_m with c_m = 1 conceptually, as one cleared
// element of F_p[S][t] (t is prepended as variable "@t").
struct MinPoly {
    RingPtr tring;       // F_p[@t, vars...]
    Polynomial poly;     // primitive-ish cleared minimal polynomial
    int deg;
};

inline MinPoly fiber_minpoly(const GenericFiber& fib, const Polynomial& xi) {
    const RingPtr& ring = fib.block_ring;
    const int D = static_cast<int>(fib.basis.size());

    std::vector<std::vector<Fraction>> rows;  // coordinates of xi^i
    std::vector<FiberElement> powers;
    powers.push_back({Polynomial::constant(ring, 1), Polynomial::constant(ring, 1)});
    rows.push_back(fiber_coords(fib, powers[0]));

    for (int m = 1; m <= D; ++m) {
        FiberElement prev = powers.back();
        FiberElement next = fiber_reduce(fib, prev.value * xi);
        next.den = next.den * prev.den;
        powers.push_back(next);
        rows.push_back(fiber_coords(fib, next));

        // solve sum_i sol_i * rows[i] = rows[m] over K: Gauss-Jordan with a
        // transformation track so the combination can be read off
        const int nr = m, nc = D;
        std::vector<Fraction> b = rows[m];
        std::vector<std::vector<Fraction>> M(nr, std::vector<Fraction>(nc));
        for (int i = 0; i < nr; ++i) M[i] = rows[i];
        // augmented columns track the combination
        std::vector<std::vector<Fraction>> T(nr, std::vector<Fraction>(nr));
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nr; ++j)
                T[i][j] = Fraction{i == j ? Polynomial::constant(ring, 1) : Polynomial::zero(ring),
                                   Polynomial::constant(ring, 1)};
        std::vector<int> pcols;
        int rank = 0;
        for (int col = 0; col < nc && rank < nr; ++col) {
            int piv = -1;
            for (int i = rank; i < nr; ++i)
                if (!M[i][col].is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(M[rank], M[piv]);
            std::swap(T[rank], T[piv]);
            Fraction inv = Fraction{M[rank][col].den, M[rank][col].num};
            for (int j = 0; j < nc; ++j) M[rank][j] = M[rank][j] * inv;
            for (int j = 0; j < nr; ++j) T[rank][j] = T[rank][j] * inv;
            for (int i = 0; i < nr; ++i) {
                if (i == rank || M[i][col].is_zero()) continue;
                Fraction c = M[i][col];
                for (int j = 0; j < nc; ++j) M[i][j] = M[i][j] - c * M[rank][j];
                for (int j = 0; j < nr; ++j) T[i][j] = T[i][j] - c * T[rank][j];
            }
            pcols.push_back(col);
            ++rank;
        }
        std::vector<Fraction> sol(nr, Fraction{Polynomial::zero(ring),
                                               Polynomial::constant(ring, 1)});
        std::vector<Fraction> r = b;
        bool solvable = true;
        for (int i = 0; i < rank; ++i) {
            Fraction c = r[pcols[i]];
            if (c.is_zero()) continue;
            for (int j = 0; j < nc; ++j) r[j] = r[j] - c * M[i][j];
            for (int j = 0; j < nr; ++j) sol[j] = sol[j] + c * T[i][j];
        }
        for (int j = 0; j < nc; ++j)
            if (!r[j].is_zero()) { solvable = false; break; }
        if (!solvable) continue;

        // minimal polynomial: t^m - sum sol[i] t^i, cleared of denominators
        std::vector<std::string> tvars;
        tvars.push_back("@t");
        for (const auto& v : ring->vars) tvars.push_back(v);
        RingPtr tring = make_ring(ring->p, tvars);
        std::vector<int> fwd(ring->nvars());
        for (size_t i = 0; i < ring->nvars(); ++i) fwd[i] = static_cast<int>(i) + 1;

        Polynomial common = Polynomial::constant(ring, 1);
        for (int i = 0; i < nr; ++i)
            if (!sol[i].is_zero()) common = poly_lcm(common, sol[i].den);
        Polynomial result = Polynomial::zero(tring);
        result = result + Polynomial::variable(tring, 0).pow(m) * common.remapped(tring, fwd);
        for (int i = 0; i < nr; ++i) {
            if (sol[i].is_zero()) continue;
            Polynomial num = sol[i].num * *common.divide_exact(sol[i].den);
            result = result - Polynomial::variable(tring, 0).pow(i) * num.remapped(tring, fwd);
        }
        return {tring, result, m};
    }
    throw capability_error("fiber minimal polynomial not found");
}

inline std::vector<Ideal> minimal_primes_generic_fiber(const Ideal& I, int depth) {
    const RingPtr& ring = I.ring();
    auto indep = max_independent_set(I);
    GenericFiber fib = make_fiber(I, indep);

    // h: distinct irreducible factors of the K-leading coefficients
    std::map<std::string, Polynomial> hfactors;
    std::vector<int> idmap(ring->nvars());
    for (size_t i = 0; i < ring->nvars(); ++i) idmap[i] = static_cast<int>(i);
    for (const auto& c : fib.lead_coeffs) {
        Polynomial cb = c.remapped(ring, idmap);
        if (cb.is_constant()) continue;
        for (const auto& [g, mult] : factor(cb)) hfactors.emplace(format_polynomial(g), g);
    }

    std::vector<Ideal> acc;
    Ideal sat = I;
    for (const auto& [key, h] : hfactors) sat = saturate_ideal(sat, h);
    if (!module_equal(sat, I)) {
        // components split between the saturation and the h-branches
        for (auto& P : minimal_primes_impl(sat, depth + 1)) acc.push_back(std::move(P));
        for (const auto& [key, h] : hfactors) {
            std::vector<Polynomial> gens = ideal_gens(I);
            gens.push_back(h);
            for (auto& P : minimal_primes_impl(make_ideal(ring, gens), depth + 1))
                acc.push_back(std::move(P));
        }
        return minimality_filter(std::move(acc));
    }

    // I is saturated; all minimal primes live in the fiber.  Hunt a primitive
    // element of the fiber algebra.
    const int D = static_cast<int>(fib.basis.size());
    std::vector<size_t> fiber_vars;
    for (size_t i = 0; i < ring->nvars(); ++i)
        if (fib.rest[i]) fiber_vars.push_back(i);

    std::vector<Polynomial> candidates;
    for (size_t i : fiber_vars) candidates.push_back(Polynomial::variable(fib.block_ring, i));
    {
        // F_p-linear combinations
        const int p = ring->p;
        int combos = 1;
        for (size_t i = 0; i < fiber_vars.size(); ++i) combos *= p;
        for (int code = 1; code < combos && code < 400; ++code) {
            int c = code;
            Polynomial xi = Polynomial::zero(fib.block_ring);
            for (size_t i : fiber_vars) {
                int coeff = c % p;
                c /= p;
                if (coeff) xi = xi + Polynomial::variable(fib.block_ring, i).scaled(coeff);
            }
            candidates.push_back(xi);
        }
        // S-weighted combinations widen the search for small p
        for (size_t i : fiber_vars)
            for (size_t s = 0; s < ring->nvars(); ++s) {
                if (fib.rest[s]) continue;
                for (size_t j : fiber_vars)
                    if (i != j)
                        candidates.push_back(Polynomial::variable(fib.block_ring, i) +
                                             Polynomial::variable(fib.block_ring, s) *
                                                 Polynomial::variable(fib.block_ring, j));
            }
        // low-degree monomial sums as a last resort
        for (size_t i : fiber_vars)
            for (size_t j : fiber_vars)
                candidates.push_back(Polynomial::variable(fib.block_ring, i) *
                                     Polynomial::variable(fib.block_ring, j) +
                                     Polynomial::variable(fib.block_ring, i));
    }

    for (const auto& xi : candidates) {
        MinPoly mp = fiber_minpoly(fib, xi);
        auto tfac = factor(mp.poly);
        std::vector<std::pair<Polynomial, int>> tpos;
        for (const auto& [g, mult] : tfac)
            if (g.degree_in(0) > 0) tpos.emplace_back(g, mult);

        if (tpos.size() == 1 && tpos[0].second == 1) {
            if (mp.deg == D) return {I};  // the fiber algebra is a field
            continue;                     // xi not primitive; try another
        }

        // split on the t-positive factors evaluated at xi
        std::vector<Polynomial> branches;
        for (const auto& [g, mult] : tpos) {
            Polynomial in_base = g.substituted(0, xi).remapped(ring, idmap);
            if (contains(I, in_base)) continue;
            branches.push_back(in_base);
        }
        if (branches.empty()) continue;
        return branch_union(I, branches, depth);
    }
    throw capability_error("minimal_primes: no primitive element found for the generic fiber");
}

inline std::vector<Ideal> minimal_primes_impl(const Ideal& I, int depth) {
    if (depth > 64) throw capability_error("minimal_primes recursion too deep");
    const RingPtr& ring = I.ring();
    const auto& gb = I.gb();
    if (gb.empty()) return {I};  // (0) is prime: R is a domain
    if (is_unit_ideal(I)) return {};

    // factor-splitting: any reducible GB element splits the variety
    for (const auto& g : gb) {
        auto fac = factor(g[0]);
        if (fac.size() == 1 && fac[0].second == 1) continue;
        std::vector<Polynomial> branches;
        for (const auto& [f, mult] : fac) branches.push_back(f);
        return branch_union(I, branches, depth);
    }

    // substitution: a generator linear in some variable with unit coefficient
    for (const auto& g : gb) {
        const Polynomial& f = g[0];
        for (size_t j = 0; j < ring->nvars(); ++j) {
            if (f.degree_in(j) != 1) continue;
            // f = c*x_j + h with c in F_p* and h free of x_j
            Polynomial h = Polynomial::zero(ring);
            int c = 0;
            bool clean = true;
            for (const auto& [e, co] : f.terms()) {
                if (e[j] == 0) { h.add_term(e, co); continue; }
                if (e[j] == 1 && total_degree(e) == 1) { c = co; continue; }
                clean = false;
                break;
            }
            if (!clean || c == 0) continue;

            // eliminate x_j: substitute x_j = -h/c, recurse in fewer variables
            std::vector<std::string> subvars;
            std::vector<int> down(ring->nvars(), -1);
            std::vector<int> up;
            for (size_t i = 0; i < ring->nvars(); ++i) {
                if (i == j) continue;
                down[i] = static_cast<int>(subvars.size());
                subvars.push_back(ring->vars[i]);
                up.push_back(static_cast<int>(i));
            }
            RingPtr subring = make_ring(ring->p, subvars);
            Polynomial repl = (-h).scaled(fp_inv(c, ring->p));  // x_j-free
            std::vector<Polynomial> subgens;
            for (const auto& gg : gb) {
                if (&gg == &g) continue;
                subgens.push_back(gg[0].substituted(j, repl).remapped(subring, down));
            }
            auto sub = minimal_primes_impl(make_ideal(subring, subgens), depth + 1);
            std::vector<Ideal> out;
            for (const auto& P : sub) {
                std::vector<Polynomial> gens;
                for (const auto& pg : P.gb()) gens.push_back(pg[0].remapped(ring, up));
                gens.push_back(f);
                out.push_back(make_ideal(ring, gens));
            }
            return minimality_filter(std::move(out));
        }
    }

    int dim = dimension(I);
    if (dim == 0) return minimal_primes_zero_dim(I, depth);

    // principal ideals: prime components are the irreducible factors, which
    // the factor-splitting above already guarantees are single here
    if (gb.size() == 1) return {I};

    return minimal_primes_generic_fiber(I, depth);
}

}  // namespace detail

// Exactly the minimal primes over I, pairwise incomparable; {(0)} for the
// zero ideal, empty for the unit ideal.
inline std::vector<PrimeIdeal> minimal_primes(const Ideal& I) {
    return detail::minimality_filter(detail::minimal_primes_impl(I, 0));
}

inline bool is_prime(const Ideal& I) {
    if (is_unit_ideal(I)) throw std::invalid_argument("is_prime: unit ideal");
    auto mp = minimal_primes(I);
    return mp.size() == 1 && module_equal(mp[0], I);
}

}  // namespace frobstar
