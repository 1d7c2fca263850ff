#include <gtest/gtest.h>

#include "qdonald/sw_geometry.hpp"

using namespace qd;

class SWFamilies : public ::testing::TestWithParam<int> {};

TEST_P(SWFamilies, AllIdentitiesHold) {
        for (auto &c : sw_checks(GetParam(), 30))
                EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(Nf, SWFamilies, ::testing::Values(0, 2, 3));

TEST(SWGeometry, Nf0Normalizations) {
        SWFamily f = sw_family(0, 20);
        /* u ~ q^(-1/4)/8 */
        EXPECT_EQ(f.u.valuation_q(), rat(-1, 4));
        EXPECT_EQ(f.u.coeff_at(rat(-1, 4)), rat(1, 8));
        /* (u^2 - 1)/4096 * 64 (v2 v3)^12 = eta^24 */
        RSeries v2 = vartheta(2, 30), v3 = vartheta(3, 30);
        RSeries lhs = f.Deltan * (v2 * v3).pow(12) * Rational(64);
        CheckResult r = check_equal("Delta eta", lhs, form_Delta(20), Rational(20));
        EXPECT_TRUE(r.ok) << r.detail;
        EXPECT_EQ(contact_threshold(f), rat(1, 4));
        EXPECT_EQ(f.kodaira_infty, "I4*");
}

TEST(SWGeometry, Nf3CuspConstant) {
        SWFamily f = sw_family(3, 20);
        EXPECT_EQ(cusp_constant(f), rat(-1, 16));
        EXPECT_EQ(f.kodaira_infty, "I1*");
}

TEST(SWGeometry, HatContactTermHolomorphicPart) {
        SWFamily f = sw_family(2, 20);
        EXPECT_TRUE(agree(contact_term_hat_holomorphic(f), contact_term(f)));
}

TEST(SWGeometry, ContactTermVanishesBelowThreshold) {
        for (int nf : {0, 2, 3}) {
                SWFamily f = sw_family(nf, 20);
                RSeries t = contact_term(f);
                Rational thr = contact_threshold(f);
                EXPECT_TRUE(t.known_zero() || t.valuation_q() >= thr) << nf;
                /* and the next coefficient is not identically zero */
                EXPECT_FALSE(t.known_zero());
        }
}

TEST(SWGeometry, UnsupportedFamily) {
        EXPECT_THROW(sw_family(1, 10), unsupported_family);
        EXPECT_THROW(sw_family(4, 10), unsupported_family);
}
