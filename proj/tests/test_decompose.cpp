#include "reduct/decompose.hpp"

#include "reduct/classify.hpp"
#include "util.hpp"

#include <doctest.h>

using namespace reduct;
using testutil::P;
using testutil::U;

namespace {

MPoly plant_additive(const UPoly& f, const UPoly& u, const UPoly& v) {
    return f.at(u.to_mpoly() + v.to_mpoly());
}

MPoly plant_multiplicative(const UPoly& f, const UPoly& u, const UPoly& v) {
    return f.at(u.to_mpoly() * v.to_mpoly());
}

bool additive_cert_matches(const AdditiveDecomp& d, const MPoly& target) {
    return d.f.at(d.u.to_mpoly() + d.v.to_mpoly()) == target;
}

bool multiplicative_cert_matches(const MultiplicativeDecomp& d, const MPoly& target) {
    return d.f.at(d.u.to_mpoly() * d.v.to_mpoly()) == target;
}

}  // namespace

TEST_CASE("weak additive on worked examples") {
    auto d1 = weak_additive(P("x^2+y^2"));
    REQUIRE(d1.has_value());
    CHECK(d1->f == U("t"));
    CHECK(d1->u == U("x^2"));
    CHECK(d1->v == U("y^2"));

    auto d2 = weak_additive(P("x^2+y^3"));
    REQUIRE(d2.has_value());
    CHECK(d2->f == U("t"));
    CHECK(d2->u == U("x^2"));
    CHECK(d2->v == U("y^3"));

    CHECK_FALSE(weak_additive(P("x*y")).has_value());
    CHECK_THROWS_AS(weak_additive(P("x^2")), std::invalid_argument);
}

TEST_CASE("weak multiplicative on worked examples") {
    auto d1 = weak_multiplicative(P("x^2*y^2 + x*y"));
    REQUIRE(d1.has_value());
    CHECK(d1->f == U("t^2+t"));
    CHECK(d1->u == U("x"));
    CHECK(d1->v == U("y"));

    auto d2 = weak_multiplicative(P("x*y"));
    REQUIRE(d2.has_value());
    CHECK(d2->f == U("t"));
    CHECK(d2->u == U("x"));
    CHECK(d2->v == U("y"));

    CHECK_FALSE(weak_multiplicative(P("x^2+y^2")).has_value());
}

TEST_CASE("strengthening, additive") {
    MPoly p = P("x^2+y^2");
    auto d = weak_additive(p);
    REQUIRE(d.has_value());
    auto s = strengthen_additive(*d, p);
    REQUIRE(s.has_value());
    CHECK(s->u_common == U("t^2"));
    CHECK(s->c1 == Rat(1));
    CHECK(s->c2 == Rat(1));
    CHECK(s->f_adjusted == U("t"));

    MPoly q = P("x^2+y^3");
    auto dq = weak_additive(q);
    REQUIRE(dq.has_value());
    CHECK_FALSE(strengthen_additive(*dq, q).has_value());

    MPoly cube = P("(x^2+y^2)^3 + 1");
    auto dc = weak_additive(cube);
    REQUIRE(dc.has_value());
    auto sc = strengthen_additive(*dc, cube);
    REQUIRE(sc.has_value());
    CHECK(sc->f_adjusted == U("t^3+1"));
    CHECK(sc->u_common == U("t^2"));
}

TEST_CASE("strengthening, multiplicative") {
    MPoly p = P("x^2*y^2 + x*y");
    auto d = weak_multiplicative(p);
    REQUIRE(d.has_value());
    auto s = strengthen_multiplicative(*d, p);
    REQUIRE(s.has_value());
    CHECK(s->u0 == U("t"));
    CHECK(s->m == 1);
    CHECK(s->n == 1);
    CHECK(s->f_adjusted == U("t^2+t"));

    // Planted f(x^2 * y^4) with f = t + 1.
    MPoly pw = P("x^2*y^4 + 1");
    auto dw = weak_multiplicative(pw);
    REQUIRE(dw.has_value());
    CHECK(multiplicative_cert_matches(*dw, pw));
    auto sw = strengthen_multiplicative(*dw, pw);
    REQUIRE(sw.has_value());
    CHECK(sw->u0 == U("t"));
    CHECK(sw->f_adjusted.at(sw->u0.at(MPoly::var("x")).pow(sw->m) * sw->u0.at(MPoly::var("y")).pow(sw->n)) == pw);

    // No common base: (x^2+1)*y^3 stays weak-only.
    MPoly mixed = P("(x^2+1)*y^3");
    auto dm = weak_multiplicative(mixed);
    REQUIRE(dm.has_value());
    CHECK(dm->u == U("x^2+1"));
    CHECK(dm->v == U("y^3"));
    CHECK_FALSE(strengthen_multiplicative(*dm, mixed).has_value());
}

TEST_CASE("er_classify tags") {
    ERVerdict a = er_classify(P("x^2+y^2"));
    CHECK(a.tag == ERTag::Additive);
    REQUIRE(a.additive.has_value());
    CHECK(a.additive->strong.has_value());

    ERVerdict m = er_classify(P("x^2*y^2 + x*y"));
    CHECK(m.tag == ERTag::Multiplicative);
    REQUIRE(m.multiplicative.has_value());
    CHECK(m.multiplicative->strong.has_value());

    CHECK(er_classify(P("x^17 + x^6*y^8 - y^3")).tag == ERTag::Neither);
    CHECK_THROWS_AS(er_classify(P("x^3")), std::invalid_argument);
}

TEST_CASE("plant-and-recover, additive") {
    testutil::Rng rng(101);
    int done = 0;
    while (done < 300) {
        UPoly f = testutil::rand_nonconstant_upoly(rng, "t", 4);
        UPoly u = testutil::rand_nonconstant_upoly(rng, "x", 4);
        UPoly v = testutil::rand_nonconstant_upoly(rng, "y", 4);
        MPoly p = plant_additive(f, u, v);
        if (p.support().size() != 2) continue;
        auto d = weak_additive(p);
        REQUIRE_MESSAGE(d.has_value(), "failed on f(u+v) with f=", f, " u=", u, " v=", v);
        CHECK(additive_cert_matches(*d, p));
        ++done;
    }
}

TEST_CASE("plant-and-recover, multiplicative") {
    testutil::Rng rng(202);
    int done = 0;
    while (done < 300) {
        UPoly f = testutil::rand_nonconstant_upoly(rng, "t", 4);
        UPoly u = testutil::rand_nonconstant_upoly(rng, "x", 4);
        UPoly v = testutil::rand_nonconstant_upoly(rng, "y", 4);
        MPoly p = plant_multiplicative(f, u, v);
        if (p.support().size() != 2) continue;
        auto d = weak_multiplicative(p);
        REQUIRE_MESSAGE(d.has_value(), "failed on f(u*v) with f=", f, " u=", u, " v=", v);
        CHECK(multiplicative_cert_matches(*d, p));
        ++done;
    }
}

TEST_CASE("the two weak detectors never both fire") {
    testutil::Rng rng(303);
    int checked = 0;
    while (checked < 1000) {
        MPoly p = testutil::rand_mpoly(rng, {"x", "y"}, 6, 5);
        if (p.support().size() != 2) continue;
        ++checked;
        auto a = weak_additive(p);
        auto m = weak_multiplicative(p);
        CHECK_FALSE((a.has_value() && m.has_value()));
    }
}

TEST_CASE("strong additive implies equal partial degrees") {
    testutil::Rng rng(404);
    for (int i = 0; i < 200; ++i) {
        UPoly f = testutil::rand_nonconstant_upoly(rng, "t", 3);
        UPoly u = testutil::rand_nonconstant_upoly(rng, "x", 3);
        Rat c1 = testutil::rand_nonzero_rat(rng);
        Rat c2 = testutil::rand_nonzero_rat(rng);
        MPoly p = f.at(u.at(MPoly::var("x")) * MPoly(c1) + u.at(MPoly::var("y")) * MPoly(c2));
        if (p.support().size() != 2) continue;
        auto d = weak_additive(p);
        REQUIRE(d.has_value());
        auto s = strengthen_additive(*d, p);
        REQUIRE(s.has_value());
        CHECK(p.degree_in("x") == p.degree_in("y"));
    }
}

TEST_CASE("roots of u flatten the corresponding vertical line") {
    testutil::Rng rng(505);
    int done = 0;
    while (done < 100) {
        UPoly f = testutil::rand_nonconstant_upoly(rng, "t", 3);
        UPoly u = testutil::rand_nonconstant_upoly(rng, "x", 3);
        UPoly v = testutil::rand_nonconstant_upoly(rng, "y", 3);
        MPoly p = plant_multiplicative(f, u, v);
        if (p.support().size() != 2) continue;
        auto d = weak_multiplicative(p);
        REQUIRE(d.has_value());
        for (const Rat& a : rational_roots(d->u)) {
            MPoly line = p.substitute("x", MPoly(a));
            CHECK(line.is_constant());
        }
        ++done;
    }
}

TEST_CASE("bridge: strongly additive non-linear and strongly multiplicative non-twisted are case IV") {
    testutil::Rng rng(707);
    int add_done = 0;
    while (add_done < 50) {
        UPoly f = testutil::rand_nonconstant_upoly(rng, "t", 3);
        UPoly u = testutil::rand_nonconstant_upoly(rng, "x", 3);
        MPoly p = f.at(u.at(MPoly::var("x")) + u.at(MPoly::var("y")));
        if (p.support().size() != 2 || is_linear(p)) continue;
        CHECK(classify({p}).kind == Case::IV_full_field);
        ++add_done;
    }
    int mul_done = 0;
    while (mul_done < 50) {
        UPoly f = testutil::rand_nonconstant_upoly(rng, "t", 3);
        UPoly u = testutil::rand_nonconstant_upoly(rng, "x", 2);
        unsigned m = 1 + static_cast<unsigned>(rng() % 2);
        unsigned n = 1 + static_cast<unsigned>(rng() % 2);
        MPoly p = f.at(u.at(MPoly::var("x")).pow(m) * u.at(MPoly::var("y")).pow(n));
        if (p.support().size() != 2) continue;
        if (twist_candidates(p).has_value()) continue;  // exclude actual twisted monomials
        CHECK(classify({p}).kind == Case::IV_full_field);
        ++mul_done;
    }
}
