#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <frobstar/matrix.hpp>
#include <frobstar/parse.hpp>

using namespace frobstar;

namespace {

RingPtr R2xyz() { return make_ring(2, {"x", "y", "z"}); }
RingPtr R3xy() { return make_ring(3, {"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(0, ring->p - 1);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Polynomial f = Polynomial::zero(ring);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Expo e(ring->nvars());
        int budget = deg(rng);
        for (size_t j = 0; j < ring->nvars() && budget > 0; ++j) {
            std::uniform_int_distribution<int> part(0, budget);
            e[j] = part(rng);
            budget -= e[j];
        }
        f.add_term(e, coeff(rng));
    }
    return f;
}

// Independent determinant oracle: sum over all permutations.
Polynomial det_permanent_style(const PolyMatrix& m) {
    int n = m.rows;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Polynomial acc = Polynomial::zero(m.ring());
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Polynomial prod = Polynomial::constant(m.ring(), 1);
        for (int i = 0; i < n; ++i) prod = prod * m.at(i, perm[i]);
        acc = (inv % 2 == 0) ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
    REQUIRE(fp_normalize(-1, 5) == 4);
    REQUIRE(fp_inv(3, 7) == 5);
    REQUIRE(fp_pow(2, 10, 11) == 1);
    REQUIRE_THROWS_AS(make_ring(4, {"x"}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_ring(5, {"x", "x"}), std::invalid_argument);
}

TEST_CASE("characteristic-p addition and products") {
    auto r = R2xyz();
    auto xy = P(r, "x+y");
    REQUIRE((xy + xy).is_zero());
    REQUIRE((xy * xy) == P(r, "x^2+y^2"));
    REQUIRE((P(r, "x^3*y^2") * P(r, "x")) == P(r, "x^4*y^2"));
}

TEST_CASE("parser handles coefficients, powers, parens, minus") {
    auto r = R3xy();
    REQUIRE(P(r, "2*x*y") == P(r, "x*y").scaled(2));
    REQUIRE(P(r, " x ^ 2 + 1 ") == P(r, "x^2") + Polynomial::constant(r, 1));
    REQUIRE(P(r, "x*(y^2+2)") == P(r, "x*y^2+2*x"));
    REQUIRE(P(r, "-x") == P(r, "2*x"));
    REQUIRE(P(r, "x-y") == P(r, "x+2*y"));
    REQUIRE_THROWS_AS(P(r, "x+w"), parse_error);
    REQUIRE_THROWS_AS(P(r, "x++"), parse_error);
}

TEST_CASE("format round trip and canonical term order") {
    auto r = R2xyz();
    auto f = P(r, "x^3+y^3+z^3");
    REQUIRE(format_polynomial(f) == "x^3+y^3+z^3");
    REQUIRE(format_polynomial(P(r, "z^3 + x^3 + y^3")) == "x^3+y^3+z^3");
    auto g = P(r, "x*y^2*z^5");
    REQUIRE(parse_polynomial(format_polynomial(g), r) == g);
    REQUIRE(format_polynomial(Polynomial::zero(r)) == "0");
}

TEST_CASE("bracket power of polynomials") {
    auto r2 = R2xyz();
    auto f = P(r2, "x+y+z^2");
    REQUIRE(f.bracket_power(0) == f);
    REQUIRE(P(r2, "x+y").bracket_power(1) == P(r2, "x^2+y^2"));

    // over F_3: (x+1)^3 by direct multiplication
    auto r3 = R3xy();
    auto g = P(r3, "x+1");
    REQUIRE(g.bracket_power(1) == g * g * g);
    REQUIRE(g.bracket_power(1) == P(r3, "x^3+1"));
}

TEST_CASE("bracket power is multiplicative and additive (char p)") {
    for (int p : {2, 3}) {
        auto r = make_ring(p, {"x", "y"});
        std::mt19937 rng(42 + p);
        for (int trial = 0; trial < 50; ++trial) {
            auto f = random_poly(r, rng, 4, 4);
            auto g = random_poly(r, rng, 4, 4);
            for (int e : {1, 2}) {
                REQUIRE((f * g).bracket_power(e) == f.bracket_power(e) * g.bracket_power(e));
                REQUIRE((f + g).bracket_power(e) == f.bracket_power(e) + g.bracket_power(e));
            }
        }
    }
}

TEST_CASE("bracket power of matrices is entrywise") {
    auto r = R2xyz();
    auto id = PolyMatrix::identity(r, 3);
    REQUIRE(bracket_power_matrix(id, 2) == id);

    PolyMatrix m(r, 2, 2);
    m.at(0, 0) = P(r, "x");
    m.at(0, 1) = P(r, "y");
    m.at(1, 1) = P(r, "1");
    auto b = bracket_power_matrix(m, 1);
    REQUIRE(b.at(0, 0) == P(r, "x^2"));
    REQUIRE(b.at(0, 1) == P(r, "y^2"));
    REQUIRE(b.at(1, 0).is_zero());
    REQUIRE(b.at(1, 1) == P(r, "1"));
}

TEST_CASE("determinant: identity, proportional columns, worked example") {
    auto r = R2xyz();
    REQUIRE(determinant(PolyMatrix::identity(r, 3)) == P(r, "1"));
    REQUIRE_THROWS_AS(determinant(PolyMatrix(r, 2, 3)), std::invalid_argument);

    // U = [[x f, y f],[x g, y g]] has proportional columns
    auto f = P(r, "x^3+y^3+z^3");
    auto g = P(r, "x^2+z^4");
    PolyMatrix u(r, 2, 2);
    u.at(0, 0) = P(r, "x") * f;
    u.at(0, 1) = P(r, "y") * f;
    u.at(1, 0) = P(r, "x") * g;
    u.at(1, 1) = P(r, "y") * g;
    REQUIRE(determinant(u).is_zero());

    // 2x2 determinant expanded by hand
    PolyMatrix v(r, 2, 2);
    v.at(0, 0) = P(r, "x^3+y^3+z^3");
    v.at(0, 1) = P(r, "x*y^2*z^5");
    v.at(1, 0) = P(r, "x*(y^2+z^2)");
    v.at(1, 1) = P(r, "x^3");
    auto expected = P(r, "x^3*(x^3+y^3+z^3) + x^2*y^2*z^5*(y^2+z^2)");
    REQUIRE(determinant(v) == expected);
    REQUIRE(det_permanent_style(v) == expected);
}

TEST_CASE("determinant multiplicativity on random matrices") {
    for (int n : {2, 3}) {
        auto r = R3xy();
        std::mt19937 rng(7 * n);
        for (int trial = 0; trial < 20; ++trial) {
            PolyMatrix a(r, n, n), b(r, n, n);
            for (auto& e : a.entries) e = random_poly(r, rng, 2, 3);
            for (auto& e : b.entries) e = random_poly(r, rng, 2, 3);
            REQUIRE(determinant(a * b) == determinant(a) * determinant(b));
            REQUIRE(determinant(a) == det_permanent_style(a));
        }
    }
}

TEST_CASE("Bareiss path agrees with permutation expansion") {
    auto r = R3xy();
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        PolyMatrix a(r, 5, 5);
        for (auto& e : a.entries) e = random_poly(r, rng, 1, 2);
        REQUIRE(determinant(a) == det_permanent_style(a));
    }
}

TEST_CASE("adjugate identity") {
    auto r = R3xy();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix a(r, 3, 3);
        for (auto& e : a.entries) e = random_poly(r, rng, 2, 2);
        auto adj = adjugate(a);
        auto prod = a * adj;
        auto d = determinant(a);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                REQUIRE(prod.at(i, j) == (i == j ? d : Polynomial::zero(r)));
    }
}

TEST_CASE("exact division") {
    auto r = R2xyz();
    auto f = P(r, "x^2+y^2");
    auto g = P(r, "x+y");
    auto q = f.divide_exact(g);
    REQUIRE(q);
    REQUIRE(*q == g);
    REQUIRE(!P(r, "x^2+y").divide_exact(g));
    REQUIRE_THROWS_AS(f.divide_exact(Polynomial::zero(r)), std::invalid_argument);
}

TEST_CASE("structural equality is order independent") {
    auto r = R2xyz();
    std::mt19937 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = random_poly(r, rng, 5, 6);
        auto g = random_poly(r, rng, 5, 6);
        REQUIRE(f + g == g + f);
        REQUIRE(f * g == g * f);
    }
}

TEST_CASE("ring mismatch is rejected") {
    auto a = R2xyz();
    auto b = R3xy();
    REQUIRE_THROWS_AS(P(a, "x") + P(b, "x"), ring_mismatch);
}
