#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qseries.hpp"

namespace qd {

/*
 * Most constructors below take a precision P in q-units and return a series
 * known at least below q^P.  Quotients lose precision through their leading
 * powers, so inputs are computed with a margin and the result is truncated.
 */

/* Runs f(P + margin), growing the margin until the result is known below q^P. */
template <typename F> RSeries with_precision(long P, F f, long margin = 4) {
        for (int attempt = 0; attempt < 12; ++attempt) {
                RSeries r = f(P + margin);
                if (r.exact() || r.prec_q() >= P)
                        return r.truncated_q(Rational(P));
                margin = margin * 2 + 4;
        }
        throw insufficient_precision("could not reach precision q^" + std::to_string(P));
}

/* prod_{n>=1} (1 - q^n)^r to q^N, by the power recurrence over the sparse pentagonal series. */
inline RSeries euler_pow(long r, long N) {
        if (N <= 0)
                return RSeries::zero(1, N);
        std::vector<std::pair<long, long>> pent; /* (exponent, sign) for k != 0 */
        for (long k = 1;; ++k) {
                long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
                if (e1 >= N)
                        break;
                long s = (k & 1) ? -1 : 1;
                pent.emplace_back(e1, s);
                if (e2 < N)
                        pent.emplace_back(e2, s);
        }
        std::vector<Rational> g(N);
        g[0] = 1;
        if (r == 1) {
                for (auto &[e, s] : pent)
                        g[e] = s;
                return RSeries(1, 0, N, std::move(g));
        }
        /* n g_n = sum_k ((r+1)k - n) a_k g_{n-k} */
        for (long n = 1; n < N; ++n) {
                Integer acc = 0;
                for (auto &[k, s] : pent) {
                        if (k > n)
                                break;
                        if (sgn(g[n - k]) == 0)
                                continue;
                        acc += Integer((r + 1) * k - n) * s * g[n - k].get_num();
                }
                g[n] = Rational(acc, Integer(n));
                g[n].canonicalize();
        }
        return RSeries(1, 0, N, std::move(g));
}

/* A factor eta(d tau)^r with rational d > 0. */
struct EtaFactor {
        Rational d;
        long     r;
};

using EtaQuotient = std::vector<EtaFactor>;

inline Rational eta_valuation(const EtaQuotient &spec) {
        Rational v = 0;
        for (auto &f : spec)
                v += f.d * f.r / 24;
        return v;
}

/* prod eta(d tau)^r, known below q^P. */
inline RSeries eta_quotient(const EtaQuotient &spec, long P) {
        if (spec.empty())
                throw error("empty eta quotient");
        Rational v = eta_valuation(spec);
        Rational need = Rational(P) - v;
        RSeries acc = RSeries::constant(Rational(1));
        for (auto &f : spec) {
                if (f.r == 0)
                        continue;
                /* P(q^d)^r is needed below q^need, i.e. P^r below q^(need/d) */
                Rational n = need / f.d;
                Integer fl;
                mpz_cdiv_q(fl.get_mpz_t(), n.get_num_mpz_t(), n.get_den_mpz_t());
                long N = std::max(1L, fl.get_si() + 1);
                RSeries s = euler_pow(f.r, N);
                acc = acc * s.rescale(f.d.get_num().get_si(), f.d.get_den().get_si());
        }
        return acc.shifted(v).truncated_q(Rational(P));
}

inline RSeries eta(long P, const Rational &d = 1) { return eta_quotient({{d, 1}}, P); }

/* Big thetas in the renormalized variable: Theta_2 = sum q^((2n+1)^2) and so on. */
inline RSeries theta_big(int which, long P) {
        std::map<long, Rational> t;
        switch (which) {
        case 2:
                for (long n = 0; (2 * n + 1) * (2 * n + 1) < P; ++n)
                        t[(2 * n + 1) * (2 * n + 1)] = 1;
                break;
        case 3:
        case 4:
                t[0] = 1;
                for (long n = 1; 4 * n * n < P; ++n)
                        t[4 * n * n] = (which == 4 && (n & 1)) ? -2 : 2;
                break;
        default:
                throw error("theta index must be 2, 3 or 4");
        }
        return RSeries::from_terms(1, P, t);
}

/* vartheta_i(tau) = (2 Theta_2, Theta_3, Theta_4)(tau/8), known below q^P. */
inline RSeries vartheta(int which, long P) {
        RSeries t = theta_big(which, 8 * P);
        if (which == 2)
                t *= Rational(2);
        return t.rescale(1, 8);
}

inline std::vector<Integer> divisor_sums(long N, bool odd_only) {
        std::vector<Integer> s(N, 0);
        for (long d = 1; d < N; ++d) {
                if (odd_only && d % 2 == 0)
                        continue;
                for (long m = d; m < N; m += d)
                        s[m] += d;
        }
        return s;
}

/* E_2 = 1 - 24 sum sigma(n) q^n */
inline RSeries eisenstein_E2(long P) {
        auto s = divisor_sums(std::max(P, 1L), false);
        std::vector<Rational> c(std::max(P, 1L));
        c[0] = 1;
        for (long n = 1; n < P; ++n)
                c[n] = Rational(-24 * s[n]);
        return RSeries(1, 0, P, std::move(c));
}

/* E* = 1 + 24 sum sigma_odd(n) q^n */
inline RSeries eisenstein_Estar(long P) {
        auto s = divisor_sums(std::max(P, 1L), true);
        std::vector<Rational> c(std::max(P, 1L));
        c[0] = 1;
        for (long n = 1; n < P; ++n)
                c[n] = Rational(24 * s[n]);
        return RSeries(1, 0, P, std::move(c));
}

/* E_odd = sum sigma(2n+1) q^(2n+1) */
inline RSeries eisenstein_Eodd(long P) {
        auto s = divisor_sums(std::max(P, 1L), false);
        std::vector<Rational> c(std::max(P, 1L));
        for (long n = 1; n < P; n += 2)
                c[n] = Rational(s[n]);
        return RSeries(1, 0, P, std::move(c));
}

/* E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n */
inline RSeries eisenstein_E4_E6(int k, long P) {
        if (k != 4 && k != 6)
                throw error("only weights 4 and 6 are provided");
        long N = std::max(P, 1L);
        std::vector<Integer> s(N, 0);
        for (long d = 1; d < N; ++d) {
                Integer dk;
                mpz_ui_pow_ui(dk.get_mpz_t(), d, k - 1);
                for (long m = d; m < N; m += d)
                        s[m] += dk;
        }
        std::vector<Rational> c(N);
        c[0] = 1;
        for (long n = 1; n < P; ++n)
                c[n] = Rational(s[n] * (k == 4 ? 240 : -504));
        return RSeries(1, 0, P, std::move(c));
}

/* A = eta(4 tau)^8 / eta(8 tau)^7 */
inline RSeries form_A(long P) { return eta_quotient({{4, 8}, {8, -7}}, P); }

/* B = eta(8 tau)^5 / eta(16 tau)^4 */
inline RSeries form_B(long P) { return eta_quotient({{8, 5}, {16, -4}}, P); }

inline RSeries form_A38(long P) { return form_A(P).sieve_w(3, 8); }
inline RSeries form_A78(long P) { return form_A(P).sieve_w(7, 8); }

/* Closed forms used as a cross-check of the sieves. */
inline RSeries form_A38_eta(long P) { return eta_quotient({{16, 8}, {8, -7}}, P) * Rational(-8); }
inline RSeries form_A78_eta(long P) {
        return form_B(P) + eta_quotient({{32, 8}, {8, -3}, {16, -4}}, P) * Rational(32);
}

/* h = eta(2 tau)^4 / eta(4 tau)^8 * E*(2 tau) */
inline RSeries form_h(long P) {
        return with_precision(P, [](long p) {
                return eta_quotient({{2, 4}, {4, -8}}, p) * eisenstein_Estar(p).rescale(2, 1);
        });
}

/* f_m = Theta_4^9 (16 Theta_2^4 + Theta_3^4)^m / (Theta_2 Theta_3)^(2m+3) */
inline RSeries form_fm(long m, long P) {
        return with_precision(
                P,
                [m](long p) {
                        RSeries t2 = theta_big(2, p), t3 = theta_big(3, p), t4 = theta_big(4, p);
                        RSeries s = t2.pow(4) * Rational(16) + t3.pow(4);
                        return t4.pow(9) * s.pow(m) * (t2 * t3).pow(-(2 * m + 3));
                },
                2 * m + 6);
}

inline RSeries form_Delta(long P) { return eta_quotient({{1, 24}}, P); }

} // namespace qd
