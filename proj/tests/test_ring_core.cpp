#include <random>

#include "doctest.h"
#include "fg/poly.hpp"

using namespace fg;

static RingPtr QXY() { return make_ring({"x", "y"}, Field::Q()); }

TEST_CASE("binomial identity (x+y)(x-y) = x^2 - y^2") {
    auto R = QXY();
    Poly f = parse_poly(R, "x + y");
    Poly g = parse_poly(R, "x - y");
    CHECK(poly_mul(f, g) == parse_poly(R, "x^2 - y^2"));
}

TEST_CASE("f + 0 = f") {
    auto R = QXY();
    Poly f = parse_poly(R, "3*x^2*y - 1/2*y^3");
    CHECK(poly_add(f, Poly::zero(R)) == f);
}

TEST_CASE("(x+y)^2 over F_2 collapses the cross term") {
    auto R = make_ring({"x", "y"}, Field::Fp(2));
    Poly f = parse_poly(R, "x + y");
    CHECK(poly_mul(f, f) == parse_poly(R, "x^2 + y^2"));
}

TEST_CASE("ring mismatch raises") {
    auto R1 = QXY();
    auto R2 = make_ring({"x", "z"}, Field::Q());
    CHECK_THROWS_AS(poly_add(parse_poly(R1, "x"), parse_poly(R2, "x")), error);
}

TEST_CASE("degree_of") {
    auto Rf = make_ring({"x", "y"}, Field::Q(), Grading::fine);
    CHECK(*degree_of(parse_poly(Rf, "x^2*y")) == Degree{2, 1});
    auto R = QXY();
    CHECK(*degree_of(parse_poly(R, "x^2 + x*y")) == Degree{2});
    CHECK(!degree_of(parse_poly(R, "x^2 + y")).has_value());
    CHECK_THROWS_AS(degree_of(Poly::zero(R)), error);
}

TEST_CASE("homogeneity_check") {
    auto R = QXY();
    CHECK(homogeneity_check({parse_poly(R, "x^2"), parse_poly(R, "x*y")}));
    CHECK(!homogeneity_check({parse_poly(R, "x + y^2")}));
    auto Rf = make_ring({"x", "y"}, Field::Q(), Grading::fine);
    CHECK(homogeneity_check({parse_poly(Rf, "x*y")}));
}

static Poly random_poly(const RingPtr& R, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expd(0, 3), coef(-4, 4);
    Poly p = Poly::zero(R);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(R->nvars());
        for (auto& e : m.e) e = expd(rng);
        p = poly_add(p, Poly::term(R, m, Coeff(static_cast<long>(coef(rng)))));
    }
    return p;
}

TEST_CASE("ring axioms hold exactly on random triples") {
    for (Field fld : {Field::Q(), Field::Fp(7)}) {
        auto R = make_ring({"x", "y", "z"}, fld);
        std::mt19937 rng(42);
        for (int iter = 0; iter < 1100; ++iter) {
            Poly a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
            CHECK(poly_add(a, b) == poly_add(b, a));
            CHECK(poly_mul(a, b) == poly_mul(b, a));
            CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
            CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
        }
    }
}

TEST_CASE("rational arithmetic round-trips") {
    Field f = Field::Q();
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(1, 1000), n(-1000, 1000);
    for (int i = 0; i < 1000; ++i) {
        long num = n(rng);
        if (num == 0) num = 1;
        Coeff a(mpq_class(num, d(rng)));
        CHECK(fld_mul(f, a, fld_inv(f, a)) == Coeff(1));
    }
}

TEST_CASE("parse(print(f)) = f") {
    auto R = make_ring({"x", "y", "z"}, Field::Q());
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(R, rng);
        CHECK(parse_poly(R, poly_str(p)) == p);
    }
    CHECK(parse_poly(R, poly_str(Poly::zero(R))) == Poly::zero(R));
}

TEST_CASE("prime field residues stay in range") {
    Field f = Field::Fp(5);
    Coeff a = fld_sub(f, Coeff(1), Coeff(4));
    CHECK(a == Coeff(2));
    CHECK(fld_div(f, Coeff(1), Coeff(3)) == Coeff(2));
}
