#include "util.hpp"

#include <doctest.h>

#include <set>

using namespace reduct;
using testutil::P;
using testutil::U;

namespace {

// Brute-force root oracle for planted instances: try every candidate in a
// box around the planted magnitudes and keep the ones that evaluate to zero.
std::vector<Rat> oracle_roots(const UPoly& p, long box) {
    std::set<Rat> found;
    for (long num = -box; num <= box; ++num)
        for (long den = 1; den <= box; ++den)
            if (p.at(Rat(num, den)) == 0) found.insert(Rat(num, den));
    return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("gcd examples") {
    CHECK(upoly_gcd(U("x^2-1"), U("x-1")) == U("x-1"));
    CHECK(upoly_gcd(U("s"), U("s^2-s")) == U("s"));
    CHECK(upoly_gcd(U("x^2+1"), U("x+2")) == U("1"));
    CHECK(upoly_gcd(U("0"), U("3*x+3")) == U("x+1"));
    CHECK_THROWS_AS(upoly_gcd(UPoly(), UPoly()), std::invalid_argument);
}

TEST_CASE("divmod") {
    auto [q, r] = divmod(U("x^3+2*x+1"), U("x^2+1"));
    CHECK(q == U("x"));
    CHECK(r == U("x+1"));
    CHECK_THROWS_AS(divmod(U("x"), UPoly()), std::invalid_argument);
}

TEST_CASE("rational roots: examples") {
    CHECK(rational_roots(U("s^2 - 3*s + 2")) == std::vector<Rat>{Rat(1), Rat(2)});
    CHECK(rational_roots(U("s^2-2")).empty());
    CHECK(squarefree_part(U("s^2-2")) == U("s^2-2"));
    CHECK(squarefree_part(U("s^3-s^2")) == U("s^2-s"));
    CHECK(rational_roots(U("s^3-s^2")) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(rational_roots(U("6*x^2 - 5*x + 1")) == std::vector<Rat>{Rat(1, 3), Rat(1, 2)});
    CHECK_THROWS_AS(rational_roots(UPoly()), std::invalid_argument);
}

TEST_CASE("rational roots against the planted-root oracle") {
    testutil::Rng rng(1234);
    for (int i = 0; i < 200; ++i) {
        // Plant up to three rational roots and an irreducible-ish cofactor.
        std::uniform_int_distribution<int> nroots(1, 3);
        UPoly p(Rat(1));
        int k = nroots(rng);
        for (int j = 0; j < k; ++j) {
            Rat r = testutil::rand_rat(rng, 4, 3);
            p = p * UPoly("x", {-r, Rat(1)});
        }
        if (rng() % 2) p = p * U("x^2+1");
        p = p.scaled(testutil::rand_nonzero_rat(rng, 3, 2));
        auto lib = rational_roots(p);
        auto ora = oracle_roots(p, 8);
        CHECK(lib == ora);
    }
}

TEST_CASE("antiderivative and derivative are inverse") {
    CHECK(U("2*x").antiderivative() == U("x^2"));
    CHECK(U("3*y^2").antiderivative() == U("y^3"));
    CHECK(UPoly(Rat(1)).antiderivative("x") == U("x"));
    testutil::Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        UPoly p = testutil::rand_upoly(rng, "x", 1 + static_cast<int>(rng() % 5));
        CHECK(p.antiderivative().derivative() == p);
    }
}

TEST_CASE("kth root") {
    auto r = poly_kth_root(U("x^4+2*x^2+1"), 2);
    REQUIRE(r.has_value());
    CHECK(*r == U("x^2+1"));
    CHECK_FALSE(poly_kth_root(U("x^2+1"), 2).has_value());
    auto cube = poly_kth_root(U("8*x^3"), 3);
    REQUIRE(cube.has_value());
    CHECK(*cube == U("x"));
    CHECK(U("8*x^3").lc() == Rat(8));
    CHECK_THROWS_AS(poly_kth_root(UPoly(), 2), std::invalid_argument);

    testutil::Rng rng(4242);
    for (int i = 0; i < 100; ++i) {
        UPoly base = testutil::rand_nonconstant_upoly(rng, "x", 3).monic();
        unsigned k = 1 + static_cast<unsigned>(rng() % 3);
        Rat c = testutil::rand_nonzero_rat(rng);
        auto got = poly_kth_root(base.pow(k).scaled(c), k);
        REQUIRE(got.has_value());
        CHECK(*got == base);
    }
}

TEST_CASE("inner composition solve") {
    auto f = inner_compose_solve(U("x^4+2*x^2+3"), U("x^2"));
    REQUIRE(f.has_value());
    CHECK(*f == U("t^2+2*t+3"));
    CHECK_FALSE(inner_compose_solve(U("x^4+x^3"), U("x^2")).has_value());
    auto idf = inner_compose_solve(U("x^3+x"), U("x^3+x"));
    REQUIRE(idf.has_value());
    CHECK(*idf == U("t"));
    CHECK_THROWS_AS(inner_compose_solve(U("x"), UPoly(Rat(2))), std::invalid_argument);

    testutil::Rng rng(31337);
    for (int i = 0; i < 200; ++i) {
        UPoly f0 = testutil::rand_upoly(rng, "t", static_cast<int>(rng() % 5));
        UPoly w = testutil::rand_nonconstant_upoly(rng, "x", 4);
        UPoly q = f0.compose(w);
        auto back = inner_compose_solve(q, w);
        REQUIRE(back.has_value());
        CHECK(*back == f0);
    }
}

TEST_CASE("iterate-style helpers: compose, shift, evaluate") {
    CHECK(U("x^2+1").compose(U("x^2+1")) == U("x^4+2*x^2+2"));
    CHECK(U("x^2").shifted_arg(Rat(1)) == U("x^2+2*x+1"));
    CHECK(U("x^2-3").at(Rat(2)) == Rat(1));
}

TEST_CASE("root descriptors") {
    RootDescriptor rd = make_root_descriptor(U("s^3-s^2"));
    CHECK(rd.witness == U("s^2-s"));
    CHECK(rd.roots == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK_FALSE(rd.all_valid());
    CHECK(make_root_descriptor(UPoly()).all_valid());
}
