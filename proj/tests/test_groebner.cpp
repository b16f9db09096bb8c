#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <frobstar/module_ops.hpp>

using namespace frobstar;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& s : gens) v.push_back(P(r, s));
    return make_ideal(r, v);
}

// Brute-force membership oracle: f lies in the span of { m * g_i } over all
// monomials m with deg(m * g_i) <= cap, as an F_p vector space.
bool member_by_linear_algebra(const Polynomial& f, const std::vector<Polynomial>& gens, int cap) {
    const RingPtr& ring = f.ring();
    const int p = ring->p;
    // enumerate monomials of degree <= cap
    std::vector<Expo> monos;
    Expo cur(ring->nvars(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == ring->nvars()) { monos.push_back(cur); return; }
        for (int d = 0; d <= left; ++d) {
            cur[i] = d;
            rec(i + 1, left - d);
        }
        cur[i] = 0;
    };
    rec(0, cap);
    std::map<Expo, int> index;
    for (const auto& m : monos) index.emplace(m, (int)index.size());

    std::vector<std::vector<int>> rows;
    for (const auto& g : gens)
        for (const auto& m : monos) {
            if (g.is_zero()) continue;
            if (total_degree(m) + g.degree() > cap) continue;
            Polynomial h = g.times_monomial(m, 1);
            std::vector<int> row(index.size(), 0);
            for (const auto& [e, c] : h.terms()) row[index.at(e)] = c;
            rows.push_back(std::move(row));
        }
    std::vector<int> target(index.size(), 0);
    for (const auto& [e, c] : f.terms()) {
        auto it = index.find(e);
        if (it == index.end()) return false;
        target[it->second] = c;
    }
    // Gaussian elimination over F_p
    size_t ncols = index.size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = fp_inv(rows[rank][col], p);
        for (size_t j = 0; j < ncols; ++j) rows[rank][j] = fp_mul(rows[rank][j], inv, p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            int c = rows[i][col];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = fp_sub(rows[i][j], fp_mul(c, rows[rank][j], p), p);
        }
        // reduce target too
        if (target[col] != 0) {
            int c = target[col];
            for (size_t j = 0; j < ncols; ++j)
                target[j] = fp_sub(target[j], fp_mul(c, rows[rank][j], p), p);
        }
        ++rank;
    }
    for (int v : target)
        if (v != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("reduced GB of simple inputs") {
    auto r = make_ring(2, {"x", "y"});
    SECTION("already interreduced module basis") {
        Submodule M(r, 2, {{P(r, "x"), P(r, "0")}, {P(r, "0"), P(r, "x")}});
        REQUIRE(M.gb().size() == 2);
        REQUIRE(contains(M, PolyVec{P(r, "x*y"), P(r, "x")}));
    }
    SECTION("difference of generators collapses") {
        auto gb = I(r, {"x^2", "x^2+x"}).gb();
        REQUIRE(gb.size() == 1);
        REQUIRE(gb[0][0] == P(r, "x"));
    }
}

TEST_CASE("membership agrees with a degree-truncated linear-algebra oracle") {
    auto r = make_ring(3, {"x", "y"});
    auto gens = std::vector<Polynomial>{P(r, "x*y+1"), P(r, "y^2-1")};
    Ideal id = make_ideal(r, gens);
    // all monomial combinations of degree <= 6
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(0, 2);
    std::vector<Polynomial> probes;
    // every monomial of degree <= 6
    for (int dx = 0; dx <= 6; ++dx)
        for (int dy = 0; dy + dx <= 6; ++dy)
            probes.push_back(Polynomial::monomial(r, {dx, dy}, 1));
    // plus random sums
    for (int t = 0; t < 40; ++t) {
        Polynomial f = Polynomial::zero(r);
        for (int k = 0; k < 4; ++k) {
            Expo e = {(int)(rng() % 4), (int)(rng() % 4)};
            f.add_term(e, coeff(rng));
        }
        probes.push_back(f);
    }
    for (const auto& f : probes) {
        bool gb_answer = contains(id, f);
        bool oracle = member_by_linear_algebra(f, gens, 8);
        REQUIRE(gb_answer == oracle);
    }
}

TEST_CASE("normal form examples") {
    auto r = make_ring(2, {"x", "y"});
    Submodule M(r, 2, {{P(r, "x"), P(r, "y")}, {P(r, "0"), P(r, "x")}});
    SECTION("members reduce to zero") {
        REQUIRE(vec_is_zero(normal_form(PolyVec{P(r, "x"), P(r, "y")}, M)));
        REQUIRE(vec_is_zero(normal_form(vec_zero(r, 2), M)));
    }
    SECTION("one division step by hand") {
        Ideal id = I(r, {"x^2+y"});
        REQUIRE(normal_form(P(r, "x^3"), id) == P(r, "x*y"));
    }
    SECTION("rank mismatch") {
        REQUIRE_THROWS_AS(normal_form(PolyVec{P(r, "x")}, M), rank_mismatch);
    }
}

TEST_CASE("lift membership") {
    auto r = make_ring(2, {"x", "y"});
    SECTION("a generator lifts to a unit vector") {
        Submodule M(r, 2, {{P(r, "x"), P(r, "y")}, {P(r, "y"), P(r, "x")}});
        auto c = lift_membership(M.gens()[0], M);
        REQUIRE(c);
        REQUIRE((*c)[0] == P(r, "1"));
        REQUIRE((*c)[1].is_zero());
    }
    SECTION("worked 1-generator example") {
        Ideal id = I(r, {"x+y"});
        auto c = lift_membership(PolyVec{P(r, "x^2+x*y")}, id);
        REQUIRE(c);
        REQUIRE((*c)[0] == P(r, "x"));
    }
    SECTION("non-member") {
        Ideal id = I(r, {"x"});
        REQUIRE(!lift_membership(PolyVec{P(r, "y")}, id));
    }
    SECTION("re-expansion holds on random members") {
        std::mt19937 rng(3);
        Submodule M(r, 2, {{P(r, "x^2"), P(r, "y")}, {P(r, "x*y"), P(r, "x+1")}});
        for (int t = 0; t < 25; ++t) {
            Polynomial a = Polynomial::monomial(r, {(int)(rng() % 3), (int)(rng() % 3)}, 1 + rng() % 1);
            Polynomial b = Polynomial::monomial(r, {(int)(rng() % 3), (int)(rng() % 3)}, 1);
            PolyVec v = vec_add(vec_scale(M.gens()[0], a), vec_scale(M.gens()[1], b));
            auto c = lift_membership(v, M);  // throws internally if re-expansion fails
            REQUIRE(c);
        }
    }
}

TEST_CASE("reduced GB is canonical under generator shuffles") {
    auto r = make_ring(3, {"x", "y", "z"});
    std::vector<PolyVec> gens = {
        {P(r, "x*y+z")}, {P(r, "y^2+1")}, {P(r, "x*z+y")}, {P(r, "z^3+x+y")}};
    Submodule M0(r, 1, gens);
    auto expect = M0.gb();
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(gens.begin(), gens.end(), rng);
        Submodule M(r, 1, gens);
        REQUIRE(module_equal(M0, M));
        REQUIRE(M.gb() == expect);
    }
}

TEST_CASE("module equality detects redundancy and difference") {
    auto r = make_ring(2, {"x", "y"});
    REQUIRE(module_equal(I(r, {"x"}), I(r, {"x", "x^2"})));
    REQUIRE(!module_equal(I(r, {"x"}), I(r, {"x^2"})));
}
