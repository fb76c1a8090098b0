#include <doctest.h>

#include "dyadic/field.hpp"
#include "support.hpp"

using namespace dyadic;

using dyadic::testing::isotropic_mod32;
using dyadic::testing::rep_int;

TEST_CASE("construction and rho") {
    CHECK_THROWS_AS(Field(0), DomainError);
    CHECK_THROWS_AS(Field(kMaxDegree + 1), DomainError);
    CHECK_THROWS_AS(Field(1, 4), DomainError);
    const Field Q2(1);
    CHECK(Q2.rho() == Q2.one());
    CHECK(Q2.delta() == Q2.from_int(5));
    const Field F2(2);
    CHECK(F2.modulus() == std::vector<std::uint64_t>{1, 1, 1});
    // rho has residue trace 1: rho + rho^2 is 1 mod 2 for the field of four elements
    const FieldElt t = F2.add(F2.rho(), F2.mul(F2.rho(), F2.rho()));
    CHECK(*F2.valuation(F2.sub(t, F2.one())) >= 1);
    CHECK(F2.square_class(F2.delta()) == F2.delta_class());
}

TEST_CASE("valuation and squares over Q2") {
    const Field F(1);
    CHECK(F.valuation(F.from_int(2)) == 1);
    CHECK(F.valuation(F.from_int(5)) == 0);
    CHECK_FALSE(F.valuation(F.zero()).has_value());
    CHECK(F.valuation(F.parse("3/2^2")) == -2);
    CHECK(F.is_square(F.from_int(4)));
    CHECK_FALSE(F.is_square(F.from_int(5)));
    CHECK(F.is_square(F.from_int(17)));
    CHECK(F.square_class(F.from_int(1)) == F.square_class(F.from_int(9)));
    CHECK(F.square_class(F.from_int(5)) == F.delta_class());
    CHECK(F.square_class(F.from_int(3)) == F.square_class(F.from_int(27)));
    CHECK(F.square_class(F.from_int(-1)) == F.minus_one_class());
    CHECK(F.square_class(F.from_int(12)) == F.square_class(F.from_int(3)));
}

TEST_CASE("quadratic defect over Q2") {
    const Field F(1);
    CHECK(F.quadratic_defect(F.one()).is_zero());
    CHECK(F.quadratic_defect(F.from_int(5)) == IdealExp::power(2));
    CHECK(F.quadratic_defect(F.from_int(3)) == IdealExp::power(1));
    CHECK(F.quadratic_defect(F.from_int(7)) == IdealExp::power(1));
    CHECK_THROWS_AS(F.quadratic_defect(F.from_int(2)), DomainError);
}

TEST_CASE("square class representatives") {
    const Field F(1);
    std::vector<std::int64_t> reps;
    for (SquareClass c : F.square_class_reps()) reps.push_back(rep_int(F, c));
    CHECK(reps == std::vector<std::int64_t>{1, 3, 5, 7, 2, 6, 10, 14});
    for (int f = 1; f <= 3; ++f) {
        const Field G(f);
        CHECK(G.num_classes() == (1 << (f + 2)));
        for (SquareClass c : G.square_class_reps()) CHECK(G.square_class(G.representative(c)) == c);
    }
}

TEST_CASE("class group law") {
    for (int f = 1; f <= 2; ++f) {
        const Field F(f);
        const auto cls = F.square_class_reps();
        for (SquareClass a : cls) {
            CHECK(F.mul(a, a) == F.one_class());
            CHECK(F.mul(a, F.one_class()) == a);
            for (SquareClass b : cls) {
                const FieldElt ab = F.mul(F.representative(a), F.representative(b));
                CHECK(F.mul(a, b) == F.square_class(ab));
            }
        }
    }
}

TEST_CASE("hilbert symbol examples") {
    const Field F(1);
    for (SquareClass b : F.square_class_reps()) CHECK(F.hilbert(F.one_class(), b) == 1);
    CHECK(F.hilbert(F.from_int(5), F.from_int(2)) == -1);
    CHECK(F.hilbert(F.from_int(-1), F.from_int(-1)) == -1);
    CHECK(F.hilbert(F.from_int(3), F.from_int(3)) == -1);
    CHECK(F.hilbert(F.from_int(2), F.from_int(7)) == 1);
}

TEST_CASE("hilbert symbol algebra") {
    for (int f = 1; f <= 2; ++f) {
        CAPTURE(f);
        const Field F(f);
        const auto cls = F.square_class_reps();
        for (SquareClass a : cls) {
            const FieldElt ra = F.representative(a);
            CHECK(F.hilbert(a, F.mul(a, F.minus_one_class())) == 1);
            const FieldElt one_minus = F.sub(F.one(), ra);
            if (!F.is_zero(one_minus)) CHECK(F.hilbert(ra, one_minus) == 1);
            bool nondegenerate = a == F.one_class();
            for (SquareClass b : cls) {
                CHECK(F.hilbert(a, b) == F.hilbert(b, a));
                CHECK(F.hilbert(ra, F.representative(b)) == F.hilbert(a, b));
                if (F.hilbert(a, b) == -1) nondegenerate = true;
                for (SquareClass c : cls) CHECK(F.hilbert(a, F.mul(b, c)) == F.hilbert(a, b) * F.hilbert(a, c));
            }
            CHECK(nondegenerate);
        }
    }
}

TEST_CASE("hilbert symbol against primitive zeros mod 2^5") {
    const Field F(1);
    const auto cls = F.square_class_reps();
    for (SquareClass a : cls) {
        for (SquareClass b : cls) {
            // (a,b) = 1 iff a x^2 + b y^2 - z^2 has a nontrivial zero
            const bool iso = isotropic_mod32({rep_int(F, a), rep_int(F, b), -1});
            CHECK((F.hilbert(a, b) == 1) == iso);
        }
    }
}

TEST_CASE("norm group has index two") {
    for (int f = 1; f <= 2; ++f) {
        const Field F(f);
        for (SquareClass a : F.square_class_reps()) {
            const auto N = F.norm_group(a);
            CHECK(static_cast<int>(N.size()) == (a == F.one_class() ? F.num_classes() : F.num_classes() / 2));
        }
    }
}

TEST_CASE("arithmetic and inverses") {
    const Field F(3, 20);
    const FieldElt u = F.from_coeffs({3, -1, 2});
    const FieldElt inv = F.unit_inverse(u);
    CHECK(F.mul(u, inv) == F.one());
    CHECK(F.mul_pow2(F.from_int(3), -2) == F.parse("3/2^2"));
    CHECK(F.mul_pow2(F.parse("3/4"), 2) == F.from_int(3));
    CHECK(F.add(F.from_int(7), F.neg(F.from_int(7))) == F.zero());
    CHECK_THROWS_AS(F.unit_inverse(F.from_int(2)), DomainError);
}

TEST_CASE("parse and format") {
    const Field F(2);
    CHECK(F.format(F.parse("1,1")) == "1,1");
    CHECK(F.format(F.parse("3/2^2")) == "3/2^2");
    CHECK(F.parse("1/2") == F.parse("1/2^1"));
    CHECK(F.format(F.from_int(-3)) == "-3");
    CHECK(F.format(F.zero()) == "0");
    CHECK_THROWS_AS(F.parse("1,2,3"), DomainError);
    CHECK_THROWS_AS(F.parse("abc"), DomainError);
    CHECK_THROWS_AS(F.parse("1/3"), DomainError);
}

TEST_CASE("wide field lifts exactly") {
    const Field F(2, 12);
    const Field& W = Field::wide(2);
    CHECK(W.precision() == Field::kWidePrecision);
    const FieldElt x = F.from_coeffs({-5, 3}, 1);
    CHECK(W.format(W.lift(x, F)) == F.format(x));
}
