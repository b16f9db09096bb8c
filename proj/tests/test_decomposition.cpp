#include <catch2/catch_amalgamated.hpp>

#include <frobstar/decomposition.hpp>

using namespace frobstar;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& s : gens) v.push_back(P(r, s));
    return make_ideal(r, v);
}

bool same_prime_set(const std::vector<Ideal>& got, std::vector<Ideal> expect) {
    if (got.size() != expect.size()) return false;
    for (const auto& g : got) {
        bool found = false;
        for (auto it = expect.begin(); it != expect.end(); ++it)
            if (module_equal(g, *it)) { expect.erase(it); found = true; break; }
        if (!found) return false;
    }
    return expect.empty();
}

}  // namespace

TEST_CASE("dimension") {
    auto r = make_ring(2, {"x", "y", "z"});
    REQUIRE(dimension(I(r, {"0"})) == 3);
    REQUIRE(dimension(I(r, {"x", "y", "z"})) == 0);
    REQUIRE(dimension(I(r, {"x", "y+z"})) == 1);
    REQUIRE(dimension(I(r, {"x*y"})) == 2);
    REQUIRE_THROWS_AS(dimension(unit_ideal(r)), std::invalid_argument);
}

TEST_CASE("dimension is antitone on chains") {
    auto r = make_ring(3, {"x", "y"});
    std::vector<Ideal> chain = {I(r, {"0"}), I(r, {"x*y+1"}), I(r, {"x*y+1", "x^3+x+1"})};
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        REQUIRE(dimension(chain[i]) >= dimension(chain[i + 1]));
}

TEST_CASE("minimal primes: trivial and worked examples") {
    auto r = make_ring(2, {"x", "y", "z"});
    SECTION("zero and unit ideals") {
        auto z = minimal_primes(I(r, {"0"}));
        REQUIRE(z.size() == 1);
        REQUIRE(z[0].gb().empty());
        REQUIRE(minimal_primes(unit_ideal(r)).empty());
    }
    SECTION("monomial-ish splitting") {
        Ideal id = I(r, {"x*y", "x*z"});
        auto mp = minimal_primes(id);
        REQUIRE(same_prime_set(mp, {I(r, {"x"}), I(r, {"y", "z"})}));
        // every component contains the input, components incomparable
        for (const auto& Q : mp) {
            for (const auto& g : id.gb()) REQUIRE(contains(Q, g[0]));
        }
    }
    SECTION("radical membership via saturation agrees across the intersection") {
        Ideal id = I(r, {"x*y", "x*z"});
        auto mp = minimal_primes(id);
        for (const auto& f : {P(r, "x*y"), P(r, "x*y+x*z"), P(r, "x"), P(r, "y"), P(r, "y*z")}) {
            bool in_all = true;
            for (const auto& Q : mp)
                if (!contains(Q, f)) in_all = false;
            REQUIRE(in_all == radical_contains(id, f));
        }
    }
}

TEST_CASE("minimal primes: zero-dimensional Frobenius splitting") {
    auto r = make_ring(2, {"x", "y"});
    // F_4 tensor F_4 = F_4 x F_4: two conjugate maximal ideals
    auto mp = minimal_primes(I(r, {"x^2+x+1", "y^2+y+1"}));
    REQUIRE(same_prime_set(mp, {I(r, {"x^2+x+1", "y+x"}), I(r, {"x^2+x+1", "y+x+1"})}));

    // non-radical zero-dimensional input
    auto mp2 = minimal_primes(I(r, {"x^2", "y+1"}));
    REQUIRE(same_prime_set(mp2, {I(r, {"x", "y+1"})}));
}

TEST_CASE("minimal primes: generic fiber with an inseparable-looking square") {
    auto r = make_ring(2, {"x", "y", "z"});
    // mod (x^2+x+1), y^2 + x z^2 = (y + x^2 z)^2: a single non-reduced component
    Ideal id = I(r, {"x^2+x+1", "y^2+x*z^2"});
    auto mp = minimal_primes(id);
    REQUIRE(mp.size() == 1);
    REQUIRE(module_equal(mp[0], I(r, {"x^2+x+1", "y+x*z+z"})));
    REQUIRE(!is_prime(id));
    REQUIRE(is_prime(mp[0]));
}

TEST_CASE("is_prime examples") {
    auto r = make_ring(2, {"x", "y", "z"});
    REQUIRE(is_prime(I(r, {"x", "y+z"})));
    REQUIRE(!is_prime(I(r, {"x^2"})));
    REQUIRE(!is_prime(I(r, {"x^2+z^4"})));  // = (x+z^2)^2
    REQUIRE(is_prime(I(r, {"x+z^2"})));
    REQUIRE(is_prime(I(r, {"0"})));
    REQUIRE_THROWS_AS(is_prime(unit_ideal(r)), std::invalid_argument);
}

TEST_CASE("is_prime via the generic fiber: twisted cubic cone") {
    auto r = make_ring(3, {"x", "y", "z", "w"});
    Ideal tc = I(r, {"y^2-x*z", "z^2-y*w", "x*w-y*z"});
    REQUIRE(is_prime(tc));
}

TEST_CASE("singular locus ideals") {
    auto r = make_ring(2, {"x", "y"});
    SECTION("regular ambient space") {
        REQUIRE(is_unit_ideal(singular_locus_ideal(I(r, {"0"}))));
        REQUIRE(is_unit_ideal(singular_locus_ideal(I(r, {"x"}))));
    }
    SECTION("cusp in characteristic 2") {
        Ideal slocus = singular_locus_ideal(I(r, {"x^2+y^3"}));
        REQUIRE(module_equal(slocus, I(r, {"x^2+y^3", "y^2"})));
        auto mp = minimal_primes(slocus);
        REQUIRE(same_prime_set(mp, {I(r, {"x", "y"})}));
    }
}

TEST_CASE("minimal primes output invariants on assorted inputs") {
    auto r = make_ring(2, {"x", "y", "z"});
    std::vector<Ideal> inputs = {
        I(r, {"x^2*y", "x*z^2"}),
        I(r, {"x^2+y^2", "x*y"}),
        I(r, {"x^3+x", "y^2+y"}),
        I(r, {"z^2+z+1", "x*y"}),
        I(r, {"x^2+y^3"}),
    };
    for (const auto& id : inputs) {
        auto mp = minimal_primes(id);
        for (size_t i = 0; i < mp.size(); ++i) {
            for (const auto& g : id.gb()) REQUIRE(contains(mp[i], g[0]));
            REQUIRE(is_prime(mp[i]));
            for (size_t j = 0; j < mp.size(); ++j) {
                if (i == j) continue;
                REQUIRE(!ideal_contains_ideal(mp[i], mp[j]));
            }
        }
    }
}
