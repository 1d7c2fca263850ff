#include <gtest/gtest.h>

#include "qdonald/invariants.hpp"
#include "qdonald/reference.hpp"

using namespace qd;

namespace {

std::vector<Rational> printed_H() {
        std::vector<Rational> h;
        for (long x : ref::printed_H())
                h.push_back(x);
        return h;
}

/* Oracle for exp of a power series: sum_k f^k/k! by plain truncated polynomial products. */
std::vector<Rational> naive_exp(const std::vector<Rational> &f, size_t N) {
        std::vector<Rational> out(N, Rational(0)), term(N, Rational(0));
        term[0] = 1;
        for (size_t k = 0; k < N; ++k) {
                for (size_t i = 0; i < N; ++i)
                        out[i] += term[i];
                std::vector<Rational> next(N, Rational(0));
                for (size_t i = 0; i < N; ++i)
                        for (size_t j = 0; i + j < N; ++j)
                                next[i + j] += term[i] * f[j];
                for (auto &x : next)
                        x /= Rational(static_cast<long>(k + 1));
                term = next;
        }
        return out;
}

std::vector<Rational> poly_mul(const std::vector<Rational> &a, const std::vector<Rational> &b) {
        std::vector<Rational> r(a.size(), Rational(0));
        for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; i + j < a.size(); ++j)
                        r[i + j] += a[i] * b[j];
        return r;
}

/* Oracle for Hurwitz class numbers: count every form (a, b, c) with a, c > 0 up to SL2(Z) by brute reduction. */
Rational brute_hurwitz(long n) {
        if (n == 0)
                return rat(-1, 12);
        if (n % 4 == 1 || n % 4 == 2)
                return 0;
        Rational s = 0;
        for (long a = 1; a <= n; ++a)
                for (long b = -a; b <= a; ++b) {
                        if ((b * b + n) % (4 * a))
                                continue;
                        long c = (b * b + n) / (4 * a);
                        bool reduced = c >= a && !(b < 0 && (-b == a || a == c));
                        if (!reduced)
                                continue;
                        if (a == c && b == 0)
                                s += rat(1, 2);
                        else if (a == b && b == c)
                                s += rat(1, 3);
                        else
                                s += 1;
                }
        return s;
}

} // namespace

TEST(Invariants, GoettschePrintedExamples) {
        EXPECT_EQ(goettsche_phi(1, 0, 0), -1);
        EXPECT_EQ(goettsche_phi(2, 0, 2), rat(-3, 16));
        EXPECT_EQ(goettsche_phi(2, 2, 0), rat(-19, 16));
        EXPECT_EQ(goettsche_phi(2, 0, 0), 0);
        EXPECT_EQ(goettsche_phi(3, 1, 1), 0);
}

TEST(Invariants, GoettscheEqualsUplaneGrid) {
        for (long w = 0; w <= 6; w += 2)
                for (long m = 0; m <= w; ++m)
                        EXPECT_EQ(goettsche_phi(w / 2 + 1, m, w - m), uplane_D(0, m, w - m)) << m << "," << w - m;
}

TEST(Invariants, ParityVanishing) {
        for (long w = 1; w <= 5; w += 2)
                for (long m = 0; m <= w; ++m) {
                        EXPECT_EQ(uplane_D(0, m, w - m), 0);
                        EXPECT_EQ(uplane_D(2, m, w - m), 0);
                }
}

TEST(Invariants, PrintedTables) {
        for (int nf : {0, 2, 3})
                for (auto &row : ref::printed_table(nf))
                        EXPECT_EQ(uplane_D(nf, row.m, row.n), parse_rational(row.value))
                                << "nf" << nf << " " << monomial_name(row.m, row.n);
}

TEST(Invariants, HCombinationsReproduceValues) {
        /* the combinations computed here, evaluated at the true H_k, give the table values */
        std::vector<Rational> H = H_coeffs(20);
        for (int nf : {0, 2, 3})
                for (long w = 0; w <= 3; ++w)
                        for (long m = 0; m <= w; ++m)
                                EXPECT_EQ(eval_h_combo(uplane_h_combo(nf, m, w - m), H), uplane_D(nf, m, w - m))
                                        << nf << " " << m << "," << w - m;
}

TEST(Invariants, HCombinationSpecExamples) {
        HCombo c0 = uplane_h_combo(0, 0, 0);
        EXPECT_EQ(c0, (HCombo{{1, rat(-1, 4)}, {0, 6}}));
        HCombo c2 = uplane_h_combo(2, 0, 0);
        EXPECT_EQ(c2, (HCombo{{2, rat(-1, 4)}, {0, rat(27, 4)}}));
        HCombo c3 = uplane_h_combo(3, 0, 0);
        EXPECT_EQ(c3, (HCombo{{4, rat(-1, 16)}, {2, rat(3, 16)}, {0, rat(3, 2)}}));
        EXPECT_EQ(eval_h_combo(c3, printed_H()), rat(-5, 4));
}

TEST(Invariants, Nf3SDuality) {
        /* pairing with -Q+(tau) in place of the S-transformed series gives the same constant terms */
        QSource neg = [](long P) { return Q_plus_cached(P) * Rational(-1); };
        for (long w = 0; w <= 3; ++w)
                for (long m = 0; m <= w; ++m)
                        EXPECT_EQ(uplane_D_with(3, m, w - m, neg), uplane_D(3, m, w - m));
}

TEST(Invariants, CriterionGrid) {
        for (long w = 0; w <= 6; ++w)
                for (long m = 0; m <= w; ++m)
                        EXPECT_TRUE(criterion_check(m, w - m)) << m << "," << w - m;
}

TEST(Invariants, LambdaExamples) {
        RSeries l1 = lambda_summand(1, 3, 1, 0, 0, 40);
        EXPECT_EQ(l1.coeff_at(-8), rat(1, 256));
        EXPECT_EQ(l1.coeff_at(-4), rat(43, 256));
        EXPECT_EQ(l1.constant_term(), rat(7, 16));
        RSeries l2 = lambda_summand(2, 3, 1, 1, 1, 40);
        EXPECT_EQ(l2.coeff_at(-12), rat(1, 1024));
        EXPECT_EQ(l2.coeff_at(-8), rat(-13, 256));
        EXPECT_EQ(l2.coeff_at(-4), rat(-203, 64));
        EXPECT_EQ(l2.constant_term(), rat(85, 16));
        EXPECT_EQ(lambda_summand(1, 3, 1, 1, 1, 40).constant_term(), lambda_summand(2, 3, 1, 0, 0, 40).constant_term());
        EXPECT_THROW(lambda_summand(3, 1, 1, 0, 0, 10), constraint_violation);
        EXPECT_THROW(lambda_summand(1, 1, 1, 2, 0, 10), constraint_violation);
}

TEST(Invariants, LambdaGeneralPairing) {
        /* the pairing that holds: Lambda1(m,n,n,n) against Lambda2(m,n,0,0) */
        for (auto [m, n] : std::vector<std::pair<long, long>>{{3, 1}, {1, 1}, {2, 2}, {0, 2}})
                EXPECT_EQ(lambda_summand(1, m, n, n, n, 60).constant_term(),
                          lambda_summand(2, m, n, 0, 0, 60).constant_term())
                        << m << "," << n;
        /* the index-swapped form does not hold at (3,1) */
        EXPECT_NE(lambda_summand(1, 3, 1, 0, 0, 40).constant_term(), lambda_summand(2, 3, 1, 1, 1, 40).constant_term());
}

TEST(Invariants, CriterionSeriesIsDiffOfSides) {
        RSeries s = criterion_series(1, 1, 40);
        RSeries d = RSeries::zero(1, qd::exact_prec);
        for (long k = 0; k <= 1; ++k)
                for (long j = 0; j <= k; ++j)
                        d += lambda_summand(1, 1, 1, k, j, 40) - lambda_summand(2, 1, 1, k, j, 40);
        EXPECT_TRUE(agree(s, d));
        EXPECT_EQ(s.constant_term(), 0);
}

TEST(Invariants, Hurwitz) {
        auto h = hurwitz(200);
        for (long n = 0; n <= 200; ++n)
                EXPECT_EQ(h[n], brute_hurwitz(n)) << n;
        EXPECT_EQ(h[3], rat(1, 3));
        EXPECT_EQ(h[4], rat(1, 2));
        EXPECT_EQ(h[7], 1);
        EXPECT_EQ(h[11], 1);
        EXPECT_EQ(h[23], 3);
}

TEST(Invariants, VafaWitten) {
        RSeries v = vafa_witten_series(10);
        std::vector<long> want = {1, 9, 48, 203, 729, 2346, 6918};
        for (size_t i = 0; i < want.size(); ++i)
                EXPECT_EQ(v.coeff_at(rat(1, 2) + static_cast<long>(i)), want[i]);
        /* eta^6 times the series gives back q^(-1/4) sum 3 H(4k-1) q^k */
        auto h = hurwitz(60);
        RSeries back = v * euler_pow(6, 12).shifted(rat(1, 4));
        for (long k = 1; k <= 9; ++k)
                EXPECT_EQ(back.coeff_at(Rational(k) - rat(1, 4)), 3 * h[4 * k - 1]) << k;
        std::vector<Rational> zeros(60, Rational(0));
        EXPECT_TRUE(vafa_witten_series(10, &zeros).known_zero());
}

TEST(Invariants, IndexChernCoefficientsAgainstNaiveExp) {
        for (auto [k, r] : std::vector<std::pair<long, long>>{{2, 0}, {3, 1}, {4, 2}}) {
                const size_t N = 5;
                std::vector<Rational> j1(N), j2(N), lg(N);
                for (size_t n = 0; n < N; ++n) {
                        Rational sg = n % 2 ? -1 : 1;
                        j1[n] = sg / Rational(static_cast<long>(2 * n + 1));
                        j2[n] = sg / Rational(static_cast<long>(2 * n + 3));
                        lg[n] = n ? Rational(-sg / Rational(static_cast<long>(n))) : Rational(0);
                }
                std::vector<Rational> j3(N);
                for (size_t n = 0; n < N; ++n)
                        j3[n] = -Rational(r * r - k) / 2 * lg[n] + (Rational(k) - rat(1, 4)) * (n ? j1[n] : Rational(0));
                std::vector<Rational> e = naive_exp(j3, N);
                IndexChernCoeffs f = index_chern_coeffs(k, r, 2, 2, N - 1);
                std::vector<Rational> a(N, Rational(0));
                a[0] = 1;
                for (long i = 0; i <= 2; ++i) {
                        std::vector<Rational> b(N, Rational(0));
                        b[0] = 1;
                        for (long jj = 0; jj <= 2; ++jj) {
                                std::vector<Rational> t = poly_mul(poly_mul(a, b), e);
                                Rational pre = Rational(1) / Rational(factorial(i) * factorial(jj));
                                for (size_t l = 0; l < N; ++l)
                                        EXPECT_EQ(f.at(i, jj, l), pre * t[l]) << k << r << i << jj << l;
                                std::vector<Rational> q(N);
                                for (size_t n = 0; n < N; ++n)
                                        q[n] = j2[n] / 4;
                                b = poly_mul(b, q);
                        }
                        std::vector<Rational> q(N);
                        for (size_t n = 0; n < N; ++n)
                                q[n] = j1[n] / 2;
                        a = poly_mul(a, q);
                }
                EXPECT_EQ(f.at(0, 0, 0), 1);
                EXPECT_EQ(f.at(1, 0, 0), rat(1, 2));
        }
}

TEST(Invariants, PhiEulerCombo) {
        /* identity kernel returns Goettsche's invariant */
        std::function<Rational(long, long)> delta2 = [](long j, long l) { return Rational(j == 4 && l == 0 ? 1 : 0); };
        EXPECT_EQ(phi_euler_combo(2, 4, 1, 1, &delta2), goettsche_phi(4, 1, 5));
        /* f-coefficients from the naive oracle give the same convolution */
        IndexChernCoeffs f = index_chern_coeffs(4, 0, 0, 4, 4);
        std::function<Rational(long, long)> conv = [&](long j, long l) {
                Rational s = 0;
                for (long j1 = 0; j1 <= j; ++j1)
                        for (long l1 = 0; l1 <= l; ++l1)
                                s += f.at(0, j1, l1) * f.at(0, j - j1, l - l1);
                return s;
        };
        EXPECT_EQ(phi_euler_combo(2, 4, 1, 1, &conv), phi_euler_combo(2, 4, 1, 1));
        /* the triple convolution is symmetric in its factors */
        IndexChernCoeffs g = index_chern_coeffs(4, 0, 0, 6, 6);
        std::function<Rational(long, long)> rev = [&](long j, long l) {
                Rational s = 0;
                for (long j1 = 0; j1 <= j; ++j1)
                        for (long j2 = 0; j1 + j2 <= j; ++j2)
                                for (long l1 = 0; l1 <= l; ++l1)
                                        for (long l2 = 0; l1 + l2 <= l; ++l2)
                                                s += g.at(0, j - j1 - j2, l - l1 - l2) * g.at(0, j2, l2) * g.at(0, j1, l1);
                return s;
        };
        EXPECT_EQ(phi_euler_combo(3, 4, 0, 0, &rev), phi_euler_combo(3, 4, 0, 0));
        EXPECT_THROW(phi_euler_combo(2, 3, 0, 1), constraint_violation);
        EXPECT_THROW(phi_euler_combo(2, 4, 1, 0), constraint_violation);
        EXPECT_THROW(phi_euler_combo(3, 4, 1, 0), constraint_violation);
        EXPECT_THROW(phi_euler_combo(0, 4, 1, 1), unsupported_family);
}

TEST(Invariants, Nf4) {
        RSeries g = nf4_g(5);
        EXPECT_EQ(g.valuation_q(), rat(-1, 3));
        EXPECT_EQ(g.coeff_at(rat(-1, 3)), rat(-1, 36));
        RSeries r = nf4_partition(10);
        EXPECT_FALSE(first_difference(shift_tau(r, 2), to_cyclo(r)).has_value());
        EXPECT_GE(r.prec_q(), Rational(10));
}

TEST(Invariants, TableLayout) {
        InvariantTable t = invariant_table(0, 4, false, 3);
        ASSERT_EQ(t.rows.size(), 9u);
        EXPECT_EQ(monomial_name(t.rows[0].m, t.rows[0].n), "1");
        EXPECT_EQ(t.rows[0].value, -1);
        InvariantTable t1 = invariant_table(0, 4, false, 1);
        for (size_t i = 0; i < t.rows.size(); ++i)
                EXPECT_EQ(t.rows[i].value, t1.rows[i].value);
        EXPECT_EQ(monomial_name(2, 2), "p^2 S^4");
        EXPECT_EQ(monomial_name(1, 0), "p");
        EXPECT_THROW(invariant_table(1, 2), unsupported_family);
        EXPECT_THROW(uplane_D(4, 0, 0), unsupported_family);
}
