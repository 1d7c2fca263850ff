#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "check.hpp"
#include "mock_maass.hpp"

namespace qd {

/*
 * Invariants of CP^2 from constant terms of theta quotients.
 *
 * The N_f = 0 and N_f = 2 integrands, the Goettsche side and the Lambda
 * summands are evaluated in the renormalized variable (q -> q^8), where
 * vartheta_2 = 2 Theta_2, vartheta_3 = Theta_3, vartheta_4 = Theta_4,
 * E_2(tau) becomes E_2(8 tau) and q d/dq picks up a factor 1/8.  Constant
 * terms are unaffected.  The N_f = 3 integrand is evaluated in the original
 * variable because its Q-series comes from the S-transform.
 */

/* Theta data in the renormalized variable, known below q^P. */
struct Workspace {
        long    P;
        RSeries t2, t3, t4, e2, s4;

        explicit Workspace(long p) : P(p) {
                t2 = theta_big(2, P) * Rational(2);
                t3 = theta_big(3, P);
                t4 = theta_big(4, P);
                e2 = eisenstein_E2(P / 8 + 1).rescale(8, 1).truncated(P);
                s4 = t2.pow(4) + t3.pow(4);
        }
};

/* Theta data in the original variable, known below q^P. */
struct WorkspaceOrig {
        long    P;
        RSeries v2, v3, v4, e2;

        explicit WorkspaceOrig(long p) : P(p) {
                v2 = vartheta(2, P);
                v3 = vartheta(3, P);
                v4 = vartheta(4, P);
                e2 = eisenstein_E2(P);
        }
};

namespace detail {

template <typename W> std::shared_ptr<const W> cached_workspace(long P) {
        static std::mutex lock;
        static std::map<long, std::shared_ptr<const W>> cache;
        {
                std::lock_guard<std::mutex> g(lock);
                auto it = cache.find(P);
                if (it != cache.end())
                        return it->second;
        }
        auto w = std::make_shared<const W>(P);
        std::lock_guard<std::mutex> g(lock);
        return cache.emplace(P, w).first->second;
}

/* Memoized series per precision: f is only called under a fresh key. */
inline RSeries cached_series(const std::string &key, long P, const std::function<RSeries(long)> &f) {
        static std::mutex lock;
        static std::map<std::pair<std::string, long>, RSeries> cache;
        {
                std::lock_guard<std::mutex> g(lock);
                auto it = cache.find({key, P});
                if (it != cache.end())
                        return it->second;
        }
        RSeries s = f(P);
        std::lock_guard<std::mutex> g(lock);
        return cache.emplace(std::make_pair(key, P), s).first->second;
}

/* Evaluates f(P) for growing P until no constant term is undetermined. */
template <typename F> Rational with_auto_precision(long P0, F f) {
        long P = std::max(P0, 8L);
        for (int attempt = 0; attempt < 10; ++attempt, P *= 2) {
                try {
                        return f(P);
                } catch (const insufficient_precision &) {
                }
        }
        throw insufficient_precision("constant term still undetermined at q^" + std::to_string(P));
}

inline Rational multinom(long n2, long a, long b, long c) {
        return Rational(factorial(n2)) / Rational(factorial(a) * factorial(b) * factorial(c));
}

inline Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace detail

inline RSeries calQ_cached(long P) { return detail::cached_series("calQ", P, calQ); }
inline RSeries calF_cached(long t, long P) {
        return detail::cached_series("calF" + std::to_string(t), P, [t](long p) { return calF(t, p); });
}
inline RSeries Q_transform_S_cached(long P) { return detail::cached_series("QS", P, Q_transform_S); }
inline RSeries Q_plus_cached(long P) { return detail::cached_series("Qplus", P, Q_plus); }

/* Supplies the Q-series (at a requested precision) that an integrand consumes. */
using QSource = std::function<RSeries(long)>;

/* Goettsche's Phi_{k,m,2n}: zero unless m + n = 2(k-1). */
inline Rational goettsche_phi(long k, long m, long n) {
        if (m < 0 || n < 0 || m + n != 2 * (k - 1))
                return 0;
        return detail::with_auto_precision(2 * m + 2 * n + 8, [&](long P) {
                auto w = detail::cached_workspace<Workspace>(P);
                RSeries base = w->t4.pow(8) * (w->t2 * w->t3).pow(-(2 * m + 2 * n + 3));
                Rational tot = 0;
                for (long l = 0; l <= n; ++l) {
                        RSeries f = calF_cached(2 * (n - l), P);
                        for (long j = 0; j <= l; ++j) {
                                Rational pre = detail::sign(n + j + 1) / (rpow(Rational(2), l - 3) * rpow(Rational(3), l)) *
                                               Rational(factorial(2 * n)) /
                                               Rational(factorial(2 * n - 2 * l) * factorial(j) * factorial(l - j));
                                RSeries s = base * w->s4.pow(m + j) * w->e2.pow(l - j) * f;
                                tot += pre * s.constant_term();
                        }
                }
                /* the displayed double sum is -Phi in the sign convention of the tables */
                return Rational(-tot);
        });
}

/* D^0 with an arbitrary Q-series in the renormalized variable. */
inline Rational uplane_D0_with(long m, long n, const QSource &Q) {
        return detail::with_auto_precision(2 * m + 2 * n + 8, [&](long P) {
                auto w = detail::cached_workspace<Workspace>(P);
                RSeries q = Q(P);
                RSeries base = w->t4.pow(9) * (w->t2 * w->t3).pow(-(2 * m + 2 * n + 3));
                Rational tot = 0;
                for (long i = 0; i <= n; ++i) {
                        RSeries bi = base * w->s4.pow(m + n - i);
                        for (long j = 0; j <= i; ++j) {
                                Rational pre = detail::sign(i + j + 1) /
                                               (rpow(Rational(2), n - 2 * j - 1) * rpow(Rational(3), n - j)) *
                                               detail::multinom(2 * n, n - i, j, i - j) * gamma_half_ratio(j);
                                RSeries dq = q.qdq(static_cast<int>(j)) * rpow(rat(1, 8), j);
                                tot += pre * (bi * w->e2.pow(i - j) * dq).constant_term();
                        }
                }
                return tot;
        });
}

/* D^2 with an arbitrary Q-series in the renormalized variable, taken at tau/2. */
inline Rational uplane_D2_with(long m, long n, const QSource &Q) {
        return detail::with_auto_precision(4 * m + 4 * n + 16, [&](long P) {
                auto w = detail::cached_workspace<Workspace>(P);
                RSeries qh = Q(P).rescale(1, 2);
                RSeries t2h = w->t2.rescale(1, 2), e2h = w->e2.rescale(1, 2);
                RSeries base = w->t4.pow(10) * (t2h * (w->t2 * w->t3).pow(2 * m + 2 * n + 3)).inv();
                Rational tot = 0;
                for (long i = 0; i <= n; ++i) {
                        RSeries bi = base * w->s4.pow(m + n - i);
                        for (long j = 0; j <= i; ++j) {
                                Rational pre = detail::sign(i + j + 1) * rpow(Rational(2), -n + 3 * j + 2) /
                                               rpow(Rational(3), n - j) * detail::multinom(2 * n, n - i, j, i - j) *
                                               gamma_half_ratio(j);
                                RSeries dq = qh.qdq(static_cast<int>(j)) * rpow(rat(1, 8), j);
                                tot += pre * (bi * e2h.pow(i - j) * dq).constant_term();
                        }
                }
                return tot;
        });
}

/*
 * D^3 with an arbitrary Q-series in the original variable.  The sign is
 * (-1)^(i+j); the generating-function factor exp(-p + S^2/3) is not folded in.
 */
inline Rational uplane_D3_with(long m, long n, const QSource &Q) {
        return detail::with_auto_precision(m + n + 6, [&](long P) {
                auto w = detail::cached_workspace<WorkspaceOrig>(P);
                RSeries q = Q(P);
                RSeries d = w->v3.pow(2) - w->v4.pow(2);
                RSeries base = w->v2.pow(9) * d.pow(-(2 * m + 2 * n + 6));
                RSeries v34 = w->v3 * w->v4;
                Rational tot = 0;
                for (long i = 0; i <= n; ++i) {
                        RSeries bi = base * v34.pow(2 * m + 2 * n - 2 * i + 3);
                        for (long j = 0; j <= i; ++j) {
                                Rational pre = detail::sign(i + j) * rpow(Rational(2), 3 * m + 2 * n + 2 * j + 5) /
                                               rpow(Rational(3), n - j) * detail::multinom(2 * n, j, i - j, n - i) *
                                               gamma_half_ratio(j);
                                tot += pre * (bi * w->e2.pow(i - j) * q.qdq(static_cast<int>(j))).constant_term();
                        }
                }
                return tot;
        });
}

inline QSource default_Q(int nf) {
        if (nf == 3)
                return [](long P) { return Q_transform_S_cached(P); };
        return [](long P) { return calQ_cached(P); };
}

inline Rational uplane_D_with(int nf, long m, long n, const QSource &Q) {
        switch (nf) {
        case 0:
                return uplane_D0_with(m, n, Q);
        case 2:
                return uplane_D2_with(m, n, Q);
        case 3:
                return uplane_D3_with(m, n, Q);
        default:
                throw unsupported_family("u-plane coefficients exist for N_f in {0, 2, 3}, not " + std::to_string(nf));
        }
}

/* The u-plane coefficient of p^m S^(2n). */
inline Rational uplane_D(int nf, long m, long n) { return uplane_D_with(nf, m, n, default_Q(nf)); }

/* Sum_k w_k H_k, indices listed from high to low. */
using HCombo = std::vector<std::pair<long, Rational>>;

/*
 * D as a linear form in the coefficients H_alpha of Q+.  For N_f = 3 the
 * integrand is paired with -Q+(tau), which has the same constant terms as the
 * S-transformed series.
 */
inline HCombo uplane_h_combo(int nf, long m, long n) {
        long amax = (nf == 0) ? (m + n + 2) / 2 : (nf == 2) ? m + n + 2 : 2 * (m + n + 2);
        HCombo out;
        for (long a = amax; a >= 0; --a) {
                QSource mono;
                if (nf == 3)
                        mono = [a](long) {
                                return RSeries::monomial(Rational(-1), rat(4 * a - 1, 8), exact_prec, 8);
                        };
                else
                        mono = [a](long) { return RSeries::monomial(Rational(1), Rational(4 * a - 1), exact_prec, 1); };
                Rational w = uplane_D_with(nf, m, n, mono);
                if (sgn(w) != 0)
                        out.emplace_back(a, w);
        }
        return out;
}

inline Rational eval_h_combo(const HCombo &c, const std::vector<Rational> &H) {
        Rational s = 0;
        for (auto &[k, w] : c) {
                if (k < 0 || k >= static_cast<long>(H.size()))
                        throw insufficient_precision("H_" + std::to_string(k) + " not available");
                s += w * H[k];
        }
        return s;
}

/* Printable monomial p^m S^(2n). */
inline std::string monomial_name(long m, long n) {
        std::string s;
        if (m > 0)
                s += m == 1 ? "p" : "p^" + std::to_string(m);
        if (n > 0) {
                if (!s.empty())
                        s += " ";
                s += "S^" + std::to_string(2 * n);
        }
        return s.empty() ? "1" : s;
}

struct InvariantRow {
        long     m, n;
        Rational value;
        HCombo   h_combo;
};

struct InvariantTable {
        int                       nf;
        std::vector<InvariantRow> rows;
};

/*
 * Rows for m + n <= max_weight, ordered by total weight then by decreasing
 * power of S.  Cells are independent and may be computed on several threads;
 * the row order does not depend on the thread count.
 */
inline InvariantTable invariant_table(int nf, long max_weight, bool with_combos = true, unsigned threads = 1) {
        if (nf != 0 && nf != 2 && nf != 3)
                throw unsupported_family("u-plane tables exist for N_f in {0, 2, 3}, not " + std::to_string(nf));
        InvariantTable t{nf, {}};
        for (long w = 0; w <= max_weight; ++w) {
                if (nf != 3 && w % 2 == 1)
                        continue;
                for (long m = 0; m <= w; ++m)
                        t.rows.push_back(InvariantRow{m, w - m, 0, {}});
        }
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex fail_lock;
        auto work = [&]() {
                for (size_t i; (i = next++) < t.rows.size();) {
                        try {
                                InvariantRow &r = t.rows[i];
                                r.value = uplane_D(nf, r.m, r.n);
                                if (with_combos)
                                        r.h_combo = uplane_h_combo(nf, r.m, r.n);
                        } catch (...) {
                                std::lock_guard<std::mutex> g(fail_lock);
                                if (!failure)
                                        failure = std::current_exception();
                        }
                }
        };
        std::vector<std::thread> pool;
        for (unsigned k = 1; k < std::max(threads, 1u); ++k)
                pool.emplace_back(work);
        work();
        for (auto &th : pool)
                th.join();
        if (failure)
                std::rethrow_exception(failure);
        return t;
}

/*
 * Lambda summands of the constant-term criterion, renormalized.  Side 1 holds
 * the F-bracket and side 2 the Q-bracket; side 1 enters with the sign that
 * makes sum_{k,j} (Lambda1 - Lambda2) the difference of the two sides.
 */
inline RSeries lambda_summand(int side, long m, long n, long k, long j, long P) {
        if (side != 1 && side != 2)
                throw constraint_violation("side must be 1 or 2");
        if (j < 0 || j > k || k > n)
                throw constraint_violation("lambda summand needs 0 <= j <= k <= n");
        auto w = detail::cached_workspace<Workspace>(P);
        Rational c = detail::sign(j) * detail::multinom(2 * n, n - k, j, k - j);
        RSeries common =
                w->t4.pow(8) * w->s4.pow(m) * (w->t2 * w->t3).pow(-(2 * m + 2 * n + 3)) * w->e2.pow(k - j) * c;
        if (side == 1) {
                Rational b = detail::sign(n + 1) / (rpow(Rational(2), k - 3) * rpow(Rational(3), k)) *
                             Rational(factorial(n - k)) / Rational(factorial(2 * n - 2 * k));
                return common * w->s4.pow(j) * calF_cached(2 * (n - k), P) * Rational(-b);
        }
        Rational b = detail::sign(k + 1) / (rpow(Rational(2), n - 2 * j - 1) * rpow(Rational(3), n - j)) *
                     gamma_half_ratio(j);
        RSeries dq = calQ_cached(P).qdq(static_cast<int>(j)) * rpow(rat(1, 8), j);
        return common * w->t4 * w->s4.pow(n - k) * dq * b;
}

inline RSeries criterion_series(long m, long n, long P) {
        RSeries tot = RSeries::zero(1, exact_prec);
        for (long k = 0; k <= n; ++k)
                for (long j = 0; j <= k; ++j)
                        tot += lambda_summand(1, m, n, k, j, P) - lambda_summand(2, m, n, k, j, P);
        return tot;
}

inline Rational criterion_constant(long m, long n) {
        return detail::with_auto_precision(2 * m + 2 * n + 8,
                                           [&](long P) { return criterion_series(m, n, P).constant_term(); });
}

inline bool criterion_check(long m, long n) { return sgn(criterion_constant(m, n)) == 0; }

/* Z_0 = calQ + 4 calF_0 / Theta_4, known below q^P. */
inline RSeries form_Z0(long P) {
        return calQ_cached(P + 1) + calF_cached(0, P + 1) * theta_big(4, P + 1).inv() * Rational(4);
}

/* Hurwitz class numbers H(0..nmax), with H(0) = -1/12. */
inline std::vector<Rational> hurwitz(long nmax) {
        std::vector<Rational> h(std::max(nmax + 1, 1L), Rational(0));
        h[0] = rat(-1, 12);
        for (long n = 1; n <= nmax; ++n) {
                if (n % 4 == 1 || n % 4 == 2)
                        continue;
                /* reduced forms (a, b, c): b^2 - 4ac = -n, |b| <= a <= c, b >= 0 when |b| = a or a = c */
                Rational s = 0;
                for (long a = 1; 3 * a * a <= n; ++a) {
                        for (long b = -a + 1; b <= a; ++b) {
                                long num = b * b + n;
                                if (num % (4 * a) != 0)
                                        continue;
                                long c = num / (4 * a);
                                if (c < a)
                                        continue;
                                if (a == c && b < 0)
                                        continue;
                                if (a == b && b == c)
                                        s += rat(1, 3);
                                else if (b == 0 && a == c)
                                        s += rat(1, 2);
                                else
                                        s += 1;
                        }
                }
                h[n] = s;
        }
        return h;
}

/* q^(-1/4) sum_k 3 H(4k-1) q^k / eta^6, known below q^kmax relative to its leading q^(-1/2). */
inline RSeries vafa_witten_series(long kmax, const std::vector<Rational> *override_h = nullptr) {
        std::vector<Rational> h = override_h ? *override_h : hurwitz(4 * kmax + 4);
        std::map<long, Rational> z;
        for (long k = 1; k <= kmax + 1 && 4 * k - 1 < static_cast<long>(h.size()); ++k)
                z[k] = 3 * h[4 * k - 1];
        RSeries zp = RSeries::from_terms(1, kmax + 1, z);
        RSeries e6 = euler_pow(-6, kmax + 1);
        /* q^(-1/4) / q^(6/24) = q^(-1/2) */
        return (zp * e6).truncated(kmax).shifted(rat(-1, 2));
}

/* Formal power series in s = z^2: exp(f) for f with zero constant term, to s^N. */
inline RSeries series_exp(const RSeries &f, long N) {
        if (!f.known_zero() && f.lead() < 1)
                throw constraint_violation("series_exp needs a vanishing constant term");
        std::vector<Rational> g(N, Rational(0)), a(N, Rational(0));
        for (long i = 1; i < N; ++i)
                a[i] = f.at_w(i);
        if (N > 0)
                g[0] = 1;
        /* n g_n = sum_k k a_k g_{n-k} */
        for (long n = 1; n < N; ++n) {
                Rational acc = 0;
                for (long k = 1; k <= n; ++k)
                        if (sgn(a[k]) != 0)
                                acc += Rational(k) * a[k] * g[n - k];
                g[n] = acc / n;
        }
        return RSeries(1, 0, N, std::move(g));
}

/* f_{i,2j,2l} for (i, j, l) in [0,imax] x [0,jmax] x [0,lmax]. */
struct IndexChernCoeffs {
        long                                                  k, r;
        std::map<std::tuple<long, long, long>, Rational> table;

        Rational at(long i, long j, long l) const {
                auto it = table.find({i, j, l});
                return it == table.end() ? Rational(0) : it->second;
        }
};

inline IndexChernCoeffs index_chern_coeffs(long k, long r, long imax, long jmax, long lmax) {
        long N = lmax + 1;
        std::vector<Rational> j1(N), j2(N), lg(N);
        for (long n = 0; n < N; ++n) {
                Rational sg = (n % 2 == 0) ? 1 : -1;
                j1[n] = sg / (2 * n + 1);
                j2[n] = sg / (2 * n + 3);
                /* ln(1 + s) = sum_{n>=1} (-1)^(n+1) s^n / n */
                lg[n] = n == 0 ? Rational(0) : Rational(-sg / n);
        }
        RSeries J1(1, 0, N, j1), J2(1, 0, N, j2), L(1, 0, N, lg);
        RSeries J3 = L * (-Rational(r * r - k) / 2) + (J1 - RSeries::constant(Rational(1), N)) * (Rational(k) - rat(1, 4));
        RSeries E = series_exp(J3, N);
        IndexChernCoeffs out{k, r, {}};
        RSeries a = RSeries::constant(Rational(1), N);
        for (long i = 0; i <= imax; ++i) {
                RSeries b = RSeries::constant(Rational(1), N);
                for (long j = 0; j <= jmax; ++j) {
                        Rational pre = Rational(1) / Rational(factorial(i) * factorial(j));
                        RSeries t = a * b * E * pre;
                        for (long l = 0; l <= lmax; ++l)
                                out.table[{i, j, l}] = t.at_w(l);
                        b = b * J2 * rat(1, 4);
                }
                a = a * J1 * rat(1, 2);
        }
        return out;
}

/*
 * Phi^{nf,c,0}_{k,m,2n} as the convolution of f_{0,2j,2l} coefficients
 * (two factors for nf = 2, three for nf = 3) against Goettsche's invariants.
 * With `kernel` set, it replaces the convolved f-coefficients.
 */
inline Rational phi_euler_combo(int nf, long k, long m, long n,
                                const std::function<Rational(long, long)> *kernel = nullptr) {
        long total;
        if (nf == 2) {
                if (k % 2 != 0 || m + n + 2 != k)
                        throw constraint_violation("N_f = 2 needs k even and m + n + 2 = k");
                total = k;
        } else if (nf == 3) {
                if (k % 2 != 0 || 2 * m + 2 * n + 4 != k)
                        throw constraint_violation("N_f = 3 needs k even and 2m + 2n + 4 = k");
                total = 3 * k / 2;
        } else {
                throw unsupported_family("phi_euler_combo covers N_f = 2 and N_f = 3");
        }
        std::function<Rational(long, long)> conv;
        if (kernel) {
                conv = *kernel;
        } else {
                IndexChernCoeffs f = index_chern_coeffs(k, 0, 0, total, total);
                int factors = nf;
                conv = [f, factors](long j, long l) {
                        Rational s = 0;
                        if (factors == 2) {
                                for (long j1 = 0; j1 <= j; ++j1)
                                        for (long l1 = 0; l1 <= l; ++l1)
                                                s += f.at(0, j1, l1) * f.at(0, j - j1, l - l1);
                        } else {
                                for (long j1 = 0; j1 <= j; ++j1)
                                        for (long j2 = 0; j1 + j2 <= j; ++j2)
                                                for (long l1 = 0; l1 <= l; ++l1)
                                                        for (long l2 = 0; l1 + l2 <= l; ++l2)
                                                                s += f.at(0, j1, l1) * f.at(0, j2, l2) *
                                                                     f.at(0, j - j1 - j2, l - l1 - l2);
                        }
                        return s;
                };
        }
        Rational tot = 0;
        for (long j = 0; j <= total; ++j) {
                long l = total - j;
                Rational c = conv(j, l);
                if (sgn(c) != 0)
                        tot += c * goettsche_phi(k, m + l, n + j);
        }
        return tot;
}

/*
 * Massless N_f = 4: Z = eta^3 Q+, X = Z/eta^4, and
 *     Z_UP = (1/2) (q/eta^4 d/dq)^2 X + g X
 * with g = -(1/36) [(v2/eta)^8 - (v2/eta)^4 (v3/eta)^4 + (v3/eta)^8].
 */
inline RSeries nf4_g(long P) {
        return with_precision(P, [](long p) {
                RSeries ei = eta(p + 2).inv();
                RSeries a = (vartheta(2, p + 2) * ei).pow(4), b = (vartheta(3, p + 2) * ei).pow(4);
                return (a.pow(2) - a * b + b.pow(2)) * rat(-1, 36);
        });
}

inline RSeries nf4_Z(long P) {
        return with_precision(P, [](long p) { return eta(p) .pow(3) * Q_plus_cached(p); });
}

inline RSeries nf4_partition(long P) {
        return with_precision(
                P,
                [](long p) {
                        RSeries e4i = eta(p + 2).pow(-4);
                        RSeries X = nf4_Z(p) * e4i;
                        RSeries Y = X.qdq() * e4i;
                        return Y.qdq() * e4i * rat(1, 2) + nf4_g(p) * X;
                },
                6);
}

/* rho^4 = 4 eta(2 tau)^8 / eta^8 */
inline RSeries nf4_rho4(long P) { return eta_quotient({{2, 8}, {1, -8}}, P) * Rational(4); }

} // namespace qd
