#include <map>

#include <gtest/gtest.h>

#include "property_support.hpp"
#include "qdonald/modular_forms.hpp"

using namespace qd;

namespace {

/* Naive oracle: a series as a map exponent -> coefficient plus a precision, all in q-units. */
struct Naive {
        std::map<Rational, Rational> c;
        Rational                     prec;
        bool                         exact;
};

Naive naive_of(const RSeries &s) {
        Naive n{{}, s.exact() ? Rational(0) : s.prec_q(), s.exact()};
        for (size_t i = 0; i < s.coeffs().size(); ++i)
                if (sgn(s.coeffs()[i]) != 0)
                        n.c[rat(s.lead() + static_cast<long>(i), s.ram())] = s.coeffs()[i];
        return n;
}

Rational valuation(const Naive &a) { return a.c.empty() ? a.prec : a.c.begin()->first; }

Naive naive_mul(const Naive &a, const Naive &b) {
        Naive r{{}, 0, a.exact && b.exact};
        if (!r.exact) {
                if (a.exact)
                        r.prec = valuation(a) + b.prec;
                else if (b.exact)
                        r.prec = valuation(b) + a.prec;
                else
                        r.prec = std::min(valuation(a) + b.prec, valuation(b) + a.prec);
        }
        for (auto &[e1, x] : a.c)
                for (auto &[e2, y] : b.c) {
                        Rational e = e1 + e2;
                        if (r.exact || e < r.prec)
                                r.c[e] += x * y;
                }
        for (auto it = r.c.begin(); it != r.c.end();)
                it = sgn(it->second) == 0 ? r.c.erase(it) : std::next(it);
        return r;
}

void expect_same(const RSeries &s, const Naive &n) {
        Naive m = naive_of(s);
        EXPECT_EQ(m.exact, n.exact);
        if (!n.exact)
                EXPECT_EQ(m.prec, n.prec);
        EXPECT_EQ(m.c, n.c);
}

} // namespace

TEST(QSeries, MultiplicationMatchesNaiveConvolution) {
        qdt::Gen g(101);
        for (int i = 0; i < 1000; ++i) {
                RSeries a = g.series(), b = g.series();
                expect_same(a * b, naive_mul(naive_of(a), naive_of(b)));
        }
}

TEST(QSeries, InverseOfTheta4) {
        RSeries t4 = theta_big(4, 15);
        RSeries inv = t4.inv();
        EXPECT_EQ(inv.prec_q(), Rational(15));
        EXPECT_EQ(inv.coeff_at(0), 1);
        EXPECT_EQ(inv.coeff_at(4), 2);
        EXPECT_EQ(inv.coeff_at(8), 4);
        EXPECT_EQ(inv.coeff_at(12), 8);
        /* oracle: the product with Theta_4 by naive convolution is 1 below q^15 */
        Naive prod = naive_mul(naive_of(inv), naive_of(t4));
        EXPECT_EQ(prod.prec, Rational(15));
        EXPECT_EQ(prod.c, (std::map<Rational, Rational>{{0, 1}}));
}

TEST(QSeries, RingIdentities) {
        RSeries a = eta(10);
        EXPECT_TRUE(agree(a * RSeries::constant(Rational(1)), a));
        EXPECT_TRUE(agree(a * a.inv(), RSeries::constant(Rational(1))));
        RSeries t2 = theta_big(2, 30);
        EXPECT_EQ((t2 * t2).valuation_q(), Rational(2));
}

TEST(QSeries, MixedRamification) {
        RSeries a = RSeries::monomial(Rational(1), rat(1, 2));
        RSeries b = RSeries::monomial(Rational(1), rat(1, 3));
        RSeries s = a * b;
        EXPECT_EQ(s.valuation_q(), rat(5, 6));
        EXPECT_EQ((a + b).ram(), 6);
}

TEST(QSeries, RescaleTheta2) {
        RSeries t = theta_big(2, 30).rescale(1, 8);
        EXPECT_EQ(t.coeff_at(rat(1, 8)), 1);
        EXPECT_EQ(t.coeff_at(rat(9, 8)), 1);
        EXPECT_EQ(t.coeff_at(rat(25, 8)), 1);
        EXPECT_EQ(t.coeff_at(rat(17, 8)), 0);
        EXPECT_EQ(t.prec_q(), rat(30, 8));
        RSeries e = eisenstein_E2(20);
        EXPECT_TRUE(agree(e.rescale(1, 1), e));
}

TEST(QSeries, RescaleE2MatchesDirectDoubling) {
        RSeries e = eisenstein_E2(20).rescale(2, 1);
        std::map<long, Rational> direct;
        for (long n = 0; 2 * n < 40; ++n) {
                long s = 0;
                for (long d = 1; d <= n; ++d)
                        if (n % d == 0)
                                s += d;
                direct[2 * n] = n == 0 ? Rational(1) : Rational(-24 * s);
        }
        EXPECT_FALSE(first_difference(e, RSeries::from_terms(1, 40, direct)).has_value());
        EXPECT_EQ(e.coeff_at(2), -24);
        EXPECT_EQ(e.coeff_at(4), -72);
}

TEST(QSeries, ShiftTau) {
        RSeries a = eisenstein_E2(10);
        EXPECT_TRUE(agree(to_rational(shift_tau(a, 7)), a));
        /* eta^3 has exponents 1/8 + Z, so tau -> tau + 2 multiplies by zeta_8^2 = i */
        RSeries e3 = eta(10).pow(3);
        CSeries lhs = shift_tau(e3, 2);
        CSeries rhs = to_cyclo(e3).scaled(root_of_unity(4, 1));
        EXPECT_FALSE(first_difference(lhs, rhs).has_value());
        RSeries h = RSeries::monomial(Rational(1), rat(1, 2));
        EXPECT_EQ(to_rational(shift_tau(h, 1)).coeff_at(rat(1, 2)), -1);
}

TEST(QSeries, ShiftTauNeedsCompatibleOrder) {
        RSeries a = RSeries::monomial(Rational(1), rat(1, 5));
        EXPECT_THROW(shift_tau(a, 1), incompatible_order);
}

TEST(QSeries, Qdq) {
        EXPECT_TRUE(RSeries::constant(rat(3, 7)).qdq().known_zero());
        RSeries m = RSeries::monomial(Rational(1), rat(-1, 8)).qdq();
        EXPECT_EQ(m.coeff_at(rat(-1, 8)), rat(-1, 8));
        RSeries e = eisenstein_E2(10).qdq(2);
        EXPECT_EQ(e.coeff_at(3), -96 * 9);
}

TEST(QSeries, CoefficientExtraction) {
        RSeries t3 = theta_big(3, 20);
        EXPECT_EQ(t3.coeff_at(4), 2);
        EXPECT_EQ(t3.coeff_at(-5), 0);
        EXPECT_EQ(t3.coeff_at(5), 0);
        EXPECT_THROW(t3.coeff_at(rat(1, 2)), irrepresentable_exponent);
        RSeries low = RSeries::zero(1, 0);
        EXPECT_THROW(low.constant_term(), insufficient_precision);
        RSeries f = RSeries::from_terms(1, 2, {{1, Rational(1)}}).inv();
        EXPECT_THROW(f.constant_term(), insufficient_precision);
}

TEST(QSeries, Errors) {
        EXPECT_THROW(RSeries::zero(1, 10).inv(), not_invertible);
        RSeries poly = RSeries::constant(Rational(1)) + RSeries::monomial(Rational(1), Rational(1));
        EXPECT_THROW(poly.inv(), insufficient_precision);
        EXPECT_THROW(RSeries(0, 0, 1, {Rational(1)}), error);
}

TEST(QSeries, Sieve) {
        RSeries a = form_A(40);
        RSeries s = a.sieve_w(3, 8) + a.sieve_w(7, 8);
        EXPECT_FALSE(first_difference(s, a).has_value());
}

TEST(QSeries, TextForm) {
        RSeries s = RSeries::from_terms(8, 10, {{-1, Rational(1)}, {3, Rational(28)}, {7, Rational(39)}});
        EXPECT_EQ(s.str(), "q^(-1/8) * (1 + 28*q^(1/2) + 39*q + O(q^(11/8)))");
        EXPECT_EQ(RSeries::zero(1, qd::exact_prec).str(), "0");
        EXPECT_EQ(RSeries::zero(2, 3).str(), "O(q^(3/2))");
        RSeries t = RSeries::from_terms(1, 5, {{0, Rational(1)}, {1, rat(-1, 2)}});
        EXPECT_EQ(t.str(), "1 - 1/2*q + O(q^5)");
}

TEST(QSeries, NormalizedReducesRamification) {
        RSeries a = RSeries::from_terms(8, 80, {{8, Rational(1)}, {16, Rational(2)}});
        RSeries n = a.normalized();
        EXPECT_EQ(n.ram(), 1);
        EXPECT_TRUE(agree(a, n));
}
