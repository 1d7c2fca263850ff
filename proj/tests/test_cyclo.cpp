#include <gtest/gtest.h>

#include "property_support.hpp"
#include "qdonald/cyclo.hpp"

using namespace qd;

namespace {

CycloElem random_elem(qdt::Gen &g) {
        std::vector<Rational> c(8);
        for (auto &x : c)
                x = g.range(0, 2) ? g.rational() : Rational(0);
        return CycloElem::from_coeffs(c);
}

CycloElem power(CycloElem x, long k) {
        CycloElem r(Rational(1));
        for (long i = 0; i < k; ++i)
                r = r * x;
        return r;
}

} // namespace

TEST(Cyclo, RootRelations) {
        EXPECT_EQ(power(root_of_unity(8, 1), 4), CycloElem(Rational(-1)));
        EXPECT_EQ(root_of_unity(24, 1) * root_of_unity(24, 23), CycloElem(Rational(1)));
        CycloElem s(Rational(0));
        for (long k = 0; k < 8; ++k)
                s += root_of_unity(8, k);
        EXPECT_TRUE(s.is_zero());
        EXPECT_EQ(root_of_unity(8, 0), CycloElem(Rational(1)));
        EXPECT_EQ(root_of_unity(2, 1), CycloElem(Rational(-1)));
        CycloElem i = root_of_unity(8, 2);
        EXPECT_EQ(i, root_of_unity(4, 1));
        EXPECT_EQ(i * i, CycloElem(Rational(-1)));
}

TEST(Cyclo, IncompatibleOrder) {
        EXPECT_THROW(root_of_unity(5, 1), incompatible_order);
        EXPECT_THROW(root_of_unity(16, 1), incompatible_order);
}

TEST(Cyclo, ExpOfRationals) {
        EXPECT_EQ(exp2pii(rat(1, 3)) + exp2pii(rat(2, 3)) + CycloElem(Rational(1)), CycloElem(Rational(0)));
        EXPECT_EQ(exp2pii(rat(1, 8)), root_of_unity(8, 1));
        EXPECT_EQ(exp2pii(rat(25, 24)), root_of_unity(24, 1));
}

TEST(Cyclo, ConjugateIsInverseOnRoots) {
        for (long k = 0; k < 24; ++k) {
                CycloElem z = root_of_unity(24, k);
                EXPECT_EQ(z.conj(), z.inverse());
        }
}

TEST(Cyclo, RationalRoundTrip) {
        CycloElem c(rat(-7, 3));
        EXPECT_TRUE(c.is_rational());
        EXPECT_EQ(c.rational_part(), rat(-7, 3));
        EXPECT_FALSE(root_of_unity(8, 1).is_rational());
}

TEST(Cyclo, FieldAxiomsRandomized) {
        qdt::Gen g(77);
        for (int n = 0; n < 1000; ++n) {
                CycloElem a = random_elem(g), b = random_elem(g), c = random_elem(g);
                EXPECT_EQ((a + b) + c, a + (b + c));
                EXPECT_EQ((a * b) * c, a * (b * c));
                EXPECT_EQ(a * (b + c), a * b + a * c);
                EXPECT_TRUE((a - a).is_zero());
                if (!a.is_zero())
                        EXPECT_EQ(a * a.inverse(), CycloElem(Rational(1)));
        }
}

TEST(Cyclo, DivisionByZero) { EXPECT_THROW(CycloElem(Rational(0)).inverse(), division_by_zero); }

TEST(Cyclo, OrderMismatch) {
        CycloElem a = root_of_unity(8, 1, 8), b = root_of_unity(8, 1, 24);
        EXPECT_THROW(a + b, order_mismatch);
}
