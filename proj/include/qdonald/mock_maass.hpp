#pragma once

#include <cmath>
#include <map>
#include <optional>

#include "modular_forms.hpp"

namespace qd {

/*
 * Renormalized F_t, i.e. F_t(q^8):
 *     sum_{b >= 0} sum_{a >= b+1} (-1)^(a+b) (2b+1)^t q^(4a^2 - (2b+1)^2)
 */
inline RSeries calF(long t, long P) {
        if (t < 0 || t % 2 != 0)
                throw odd_t("t must be a non-negative even integer, got " + std::to_string(t));
        std::map<long, Rational> c;
        for (long b = 0;; ++b) {
                long o = 2 * b + 1;
                if (4 * (b + 1) * (b + 1) - o * o >= P)
                        break;
                Integer w;
                mpz_ui_pow_ui(w.get_mpz_t(), o, t);
                for (long a = b + 1;; ++a) {
                        long e = 4 * a * a - o * o;
                        if (e >= P)
                                break;
                        c[e] += ((a + b) & 1) ? Rational(-w) : Rational(w);
                }
        }
        return RSeries::from_terms(1, P, c);
}

/* F_t(tau) = q^(-1/8) sum (-1)^(a+b) (2b+1)^t q^((a^2 - b(b+1))/2), known below q^P. */
inline RSeries F_t(long t, long P) { return calF(t, 8 * P).rescale(1, 8); }

/* Multiplies s by 1/(1 + q^e)^k, e > 0, using the truncated geometric series. */
inline RSeries divide_one_plus(const RSeries &s, long e, long k) {
        long P = s.exact() ? 0 : floor_div(s.prec(), s.ram()) + 1;
        std::map<long, Rational> g;
        for (long x = 0; x * e < P; ++x)
                g[x * e] = (x & 1) ? -1 : 1;
        RSeries inv = RSeries::from_terms(1, P, g);
        RSeries r = s;
        for (long i = 0; i < k; ++i)
                r = r * inv;
        return r;
}

/*
 * M = q^(-1) sum_{n >= 0} (-1)^(n+1) q^(8(n+1)^2)
 *         prod_{k=1}^{n} (1 - q^(16k-8)) / prod_{k=1}^{n+1} (1 + q^(16k-8))^2
 */
inline RSeries mock_M(long P) {
        long N = P + 1;
        RSeries total = RSeries::zero(1, N);
        /* running product prod_{k<=n}(1-q^(16k-8)) / prod_{k<=n+1}(1+q^(16k-8))^2 */
        RSeries run = divide_one_plus(RSeries::constant(Rational(1), N), 8, 2);
        for (long n = 0; 8 * (n + 1) * (n + 1) < N; ++n) {
                if (n > 0) {
                        std::map<long, Rational> f{{0, 1}, {16 * n - 8, -1}};
                        run = run * RSeries::from_terms(1, exact_prec, f);
                        run = divide_one_plus(run, 16 * n + 8, 2);
                }
                Rational sg = (n & 1) ? 1 : -1;
                total += run.shifted(Rational(8 * (n + 1) * (n + 1))) * sg;
        }
        return total.shifted(Rational(-1)).truncated_q(Rational(P));
}

/* Second route to M: -(1/(2 Theta_2)) sum_{n in Z} q^(16n^2 - 8n) / (1 + q^(16n-8)). */
inline RSeries mock_M_bilateral(long P) {
        long N = P + 2;
        std::map<long, Rational> c;
        for (long n = 1; 16 * n * n - 8 * n < N; ++n) {
                long b = 16 * n * n - 8 * n, E = 16 * n - 8;
                for (long x = 0; b + x * E < N; ++x)
                        c[b + x * E] += (x & 1) ? -1 : 1;
        }
        for (long n = 0;; --n) {
                /* 1/(1+q^(-E)) = sum_{x >= 1} (-1)^(x-1) q^(x E) with E = 8 - 16n */
                long b = 16 * n * n - 8 * n, E = 8 - 16 * n;
                if (b + E >= N)
                        break;
                for (long x = 1; b + x * E < N; ++x)
                        c[b + x * E] += (x & 1) ? 1 : -1;
        }
        RSeries s = RSeries::from_terms(1, N, c);
        RSeries r = s * (theta_big(2, N + 1) * Rational(2)).inv() * Rational(-1);
        return r.truncated_q(Rational(P));
}

/*
 * Specialization data for the Appell-Lerch sum mu(u, v; tau') with
 * u = u_rat + u_tau*tau, v = v_rat + v_tau*tau, tau' = tau_mult*tau.
 */
struct LerchSpec {
        Rational u_rat, u_tau, v_rat, v_tau, tau_mult;
};

namespace detail {

/* Smallest and largest integers n with a n^2 + b n + c < bound (a > 0), as a safe superset. */
inline std::pair<long, long> quad_range(const Rational &a, const Rational &b, const Rational &c, const Rational &bound) {
        double A = a.get_d(), B = b.get_d(), C = c.get_d() - bound.get_d();
        double disc = B * B - 4 * A * C;
        if (disc < 0)
                disc = 0;
        double s = std::sqrt(disc);
        long lo = static_cast<long>(std::floor((-B - s) / (2 * A))) - 2;
        long hi = static_cast<long>(std::ceil((-B + s) / (2 * A))) + 2;
        return {lo, hi};
}

} // namespace detail

/*
 * theta(v; tau') = sum_{nu in Z+1/2} (-1)^(nu-1/2) e(nu v_rat) q^(nu v_tau + tau_mult nu^2/2),
 * known below q^P.
 */
inline CSeries lerch_theta(const Rational &v_rat, const Rational &v_tau, const Rational &tm, const Rational &P) {
        std::map<Rational, CycloElem> c;
        /* nu = k + 1/2: exponent tm/2 k^2 + (tm/2 + v_tau) k + (tm/8 + v_tau/2) */
        auto [lo, hi] = detail::quad_range(tm / 2, tm / 2 + v_tau, tm / 8 + v_tau / 2, P);
        for (long k = lo; k <= hi; ++k) {
                Rational nu = rat(2 * k + 1, 2);
                Rational e = nu * v_tau + tm * nu * nu / 2;
                if (e >= P)
                        continue;
                CycloElem z = exp2pii(nu * v_rat);
                if (k & 1)
                        z = -z;
                c[e] += z;
        }
        return series_from_terms(c, P);
}

/*
 * a^(1/2)/theta(v; tau') * sum_n (-b)^n q'^(n(n+1)/2) / (1 - a q'^n), known below q^P.
 * Each denominator is expanded geometrically on the side where it converges.
 * With a weight t, the term a^(1/2) a^(+-x) is multiplied by its exponent of
 * a^(1/2) raised to the t, which realizes D^t in the elliptic variable of u.
 */
inline CSeries lerch_mu(const LerchSpec &s, const Rational &P, std::optional<long> weight = std::nullopt) {
        if (sgn(s.tau_mult) <= 0)
                throw error("modular argument must be a positive multiple of tau");
        Rational theta_prec = P + 4 + abs(s.v_tau) + s.tau_mult;
        CSeries th = lerch_theta(s.v_rat, s.v_tau, s.tau_mult, theta_prec);
        if (th.known_zero())
                throw theta_not_invertible("theta(v) vanishes to the computed precision");
        Rational vth = th.valuation_q();
        Rational tgt = P + vth - s.u_tau / 2 + 1;
        if (tgt > theta_prec - 1) {
                theta_prec = tgt + 2;
                th = lerch_theta(s.v_rat, s.v_tau, s.tau_mult, theta_prec);
        }
        const Rational &tm = s.tau_mult;
        CycloElem ca = exp2pii(s.u_rat);
        CycloElem ca_inv = ca.inverse();
        std::map<Rational, CycloElem> c;
        /* the n-th term starts at or above its base exponent n v_tau + tm n(n+1)/2 */
        auto [lo, hi] = detail::quad_range(tm / 2, tm / 2 + s.v_tau, Rational(0), tgt);
        lo = std::min(lo, -2L);
        hi = std::max(hi, 2L);
        for (long n = lo; n <= hi; ++n) {
                CycloElem base = exp2pii(s.v_rat * n);
                if (n & 1)
                        base = -base;
                Rational bex = s.v_tau * n + tm * n * (n + 1) / 2;
                Rational E = s.u_tau + tm * n;
                if (sgn(E) > 0) {
                        CycloElem ax(Rational(1));
                        for (long x = 0; bex + E * x < tgt; ++x) {
                                CycloElem term = base * ax;
                                if (weight)
                                        term *= rpow(Rational(2 * x + 1), *weight);
                                c[bex + E * x] += term;
                                ax *= ca;
                        }
                } else if (sgn(E) < 0) {
                        CycloElem ax = ca_inv;
                        for (long x = 1; bex - E * x < tgt; ++x) {
                                CycloElem term = base * ax;
                                if (weight)
                                        term *= rpow(Rational(1 - 2 * x), *weight);
                                c[bex - E * x] -= term;
                                ax *= ca_inv;
                        }
                } else {
                        CycloElem one(Rational(1));
                        if (ca == one)
                                throw non_expandable_denominator("denominator 1 - a q^0 vanishes");
                        if (weight)
                                throw non_expandable_denominator("weighted expansion needs a q-dependent denominator");
                        if (bex < tgt)
                                c[bex] += base / (one - ca);
                }
        }
        CSeries sum = series_from_terms(c, tgt);
        CSeries ah = CSeries::monomial(exp2pii(s.u_rat / 2), s.u_tau / 2);
        CSeries r = ah * sum * th.truncated_q(tgt + vth + 2).inv();
        if (!r.exact() && r.prec_q() < P)
                throw insufficient_precision("Lerch sum precision fell short of q^" + to_string(P));
        return r.truncated_q(P);
}

/* (1/2) D^t of mu(4 tau + 2 w, 4 tau; 8 tau) at w = 0, in the renormalized variable. */
inline RSeries lerch_mu_weighted(long t, long P) {
        if (t < 0 || t % 2 != 0)
                throw odd_t("t must be a non-negative even integer, got " + std::to_string(t));
        LerchSpec s{0, 4, 0, 4, 8};
        return to_rational(lerch_mu(s, Rational(P), t)) * rat(1, 2);
}

/* M as a difference of two Lerch sums: (i/2) q^(-1) [mu(-16t, -24t - 1/2; 32t) - mu(-16t, -8t - 1/2; 32t)]. */
inline RSeries mock_M_lerch(long P) {
        LerchSpec s1{0, -16, rat(-1, 2), -24, 32};
        LerchSpec s2{0, -16, rat(-1, 2), -8, 32};
        Rational p(P + 1);
        CSeries d = lerch_mu(s1, p) - lerch_mu(s2, p);
        CycloElem half_i = root_of_unity(4, 1) * rat(1, 2);
        return to_rational(d.scaled(half_i).shifted(Rational(-1))).truncated_q(Rational(P));
}

/* Renormalized Q: -(7/2) A_{3,8} + (3/2) A_{7,8} - (1/2) B + 4 M, known below q^P. */
inline RSeries calQ(long P) {
        RSeries a = form_A(P);
        return a.sieve_w(3, 8) * rat(-7, 2) + a.sieve_w(7, 8) * rat(3, 2) - form_B(P) * rat(1, 2) +
               mock_M(P) * Rational(4);
}

/* Q+(tau) = q^(-1/8) sum H_alpha q^(alpha/2), known below q^P. */
inline RSeries Q_plus(long P) { return calQ(8 * P).rescale(1, 8); }

/* H_0 .. H_{n-1}, read off the renormalized series at exponents 4 alpha - 1. */
inline std::vector<Rational> H_coeffs(long n) {
        RSeries q = calQ(4 * n);
        std::vector<Rational> h;
        for (long a = 0; a < n; ++a)
                h.push_back(q.at_w(4 * a - 1));
        return h;
}

/*
 * (1/sqrt(-i tau)) Q(-1/tau) as a q-series, assembled from the S-images of
 * A_{3,8}, A_{7,8}, B and of the Lerch part of M.  Known below q^P.
 */
inline RSeries Q_transform_S(long P) {
        Rational h = rat(1, 2), f = rat(1, 4);
        long p = P + 2;
        RSeries a38 = eta_quotient({{h, 8}, {1, -7}}, p) * rat(-1, 2);
        RSeries b = eta_quotient({{1, 5}, {h, -4}}, p) * Rational(4);
        RSeries a78 = b + eta_quotient({{f, 8}, {1, -3}, {h, -4}}, p) * rat(1, 2);
        LerchSpec s1{h, 0, f, rat(-1, 8), f};
        LerchSpec s2{h, 0, rat(3, 4), rat(-1, 8), f};
        CycloElem z8 = root_of_unity(8, 1);
        CSeries m1 = lerch_mu(s1, Rational(p)).scaled(z8 * rat(-1, 4));
        CSeries m2 = lerch_mu(s2, Rational(p)).scaled(z8.inverse() * rat(-1, 4));
        CSeries ms = (m1 + m2).shifted(rat(-1, 32));
        CSeries tot = to_cyclo(a38 * rat(-7, 2) + a78 * rat(3, 2) - b * rat(1, 2)) - ms * Rational(4);
        return to_rational(tot).truncated_q(Rational(P));
}

/*
 * The (i, j) summand Gamma(1/2)/Gamma(1/2+j) 2^(2j) 3^j E_2^(i-j) (q d/dq)^j Q+,
 * in the original variable, known below q^P.
 */
inline RSeries e_bracket(long i, long j, long P) {
        if (j < 0 || j > i)
                throw constraint_violation("e_bracket needs 0 <= j <= i");
        RSeries q = Q_plus(P + 1);
        RSeries e2 = eisenstein_E2(P + 1).pow(i - j);
        Rational pre = gamma_half_ratio(j) * rpow(Rational(4), j) * rpow(Rational(3), j);
        return (e2 * q.qdq(static_cast<int>(j)) * pre).truncated_q(Rational(P));
}

} // namespace qd
