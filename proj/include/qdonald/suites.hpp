#pragma once

#include <string>

#include "invariants.hpp"
#include "reference.hpp"
#include "sw_geometry.hpp"

namespace qd {

/*
 * Verification suites.  Each returns one CheckResult per identity; orders are
 * in the variable the identity is stated in (renormalized for Q, F_t, Z_0 and
 * f_m, original for h, the Seiberg-Witten families and N_f = 4).
 */

/* Q against its three constructions of M and the printed coefficients. */
inline CheckReport suite_qseries_identities(long P) {
        CheckReport rep;
        RSeries q = calQ_cached(P);
        rep.push_back(check_terms("calQ printed coefficients", q, ref::printed_calQ()));
        RSeries rel = q - mock_M(P) * Rational(4) + form_A38(P) * rat(7, 2) - form_A78(P) * rat(3, 2) +
                      form_B(P) * rat(1, 2);
        rep.push_back(check_zero("calQ - 4M + 7/2 A38 - 3/2 A78 + 1/2 B = 0", rel, Rational(P)));
        long pm = std::min(P, 120L);
        rep.push_back(check_equal("M: hypergeometric = bilateral", mock_M(pm), mock_M_bilateral(pm), Rational(pm)));
        long pl = std::min(P, 60L);
        rep.push_back(check_equal("M: hypergeometric = Lerch sums", mock_M(pl), mock_M_lerch(pl), Rational(pl)));
        rep.push_back(check_equal("A38 sieve = eta quotient", form_A38(P), form_A38_eta(P), Rational(P)));
        rep.push_back(check_equal("A78 sieve = eta quotient", form_A78(P), form_A78_eta(P), Rational(P)));
        return rep;
}

/* F_t / Theta_4 = (1/2) D^t mu for the given even t. */
inline CheckResult check_fasmu(long t, long P) {
        RSeries lhs = calF_cached(t, P + 1) * theta_big(4, P + 1).inv();
        return check_equal("calF_" + std::to_string(t) + "/Theta4 = weighted mu", lhs.truncated_q(Rational(P)),
                           lerch_mu_weighted(t, P), Rational(P));
}

inline CheckReport suite_jacobi(long P) {
        CheckReport rep;
        RSeries t2 = theta_big(2, P), t3 = theta_big(3, P), t4 = theta_big(4, P);
        rep.push_back(check_equal("Theta3^4 = Theta4^4 + 16 Theta2^4", t3.pow(4), t4.pow(4) + t2.pow(4) * Rational(16),
                                  Rational(P)));
        rep.push_back(check_equal("Theta2 = eta(16t)^2/eta(8t)", t2, eta_quotient({{16, 2}, {8, -1}}, P), Rational(P)));
        rep.push_back(check_equal("Theta3 = eta(8t)^5/(eta(4t)^2 eta(16t)^2)", t3,
                                  eta_quotient({{8, 5}, {4, -2}, {16, -2}}, P), Rational(P)));
        rep.push_back(check_equal("Theta4 = eta(4t)^2/eta(8t)", t4, eta_quotient({{4, 2}, {8, -1}}, P), Rational(P)));
        rep.push_back(check_equal("Theta2 Theta3 Theta4 = eta(8t)^3", t2 * t3 * t4, eta_quotient({{8, 3}}, P),
                                  Rational(P)));
        return rep;
}

/* Z_0 = calQ + 4 calF_0/Theta_4 = E*(4 tau)/eta(8 tau)^3 and the constant terms of Z_0 f_m. */
inline CheckReport suite_z0(long P, long mmax) {
        CheckReport rep;
        RSeries z0 = form_Z0(P);
        RSeries rhs = with_precision(P, [](long p) {
                return eisenstein_Estar(p / 4 + 1).rescale(4, 1) * eta_quotient({{8, -3}}, p);
        });
        rep.push_back(check_equal("Z0 = E*(4t)/eta(8t)^3", z0, rhs, Rational(P)));
        rep.push_back(check_terms("Z0 leading terms", z0, ref::printed_Z0()));
        for (long m = 0; m <= mmax; ++m) {
                long p = 2 * m + 8;
                RSeries s = form_Z0(p) * form_fm(m, p);
                rep.push_back(check_value("CT(Z0 f_" + std::to_string(m) + ") = 0", s.constant_term(), 0));
                if (m == 0)
                        rep.push_back(check_terms("Z0 f0 leading terms", form_Z0(16) * form_fm(0, 16),
                                                  ref::printed_Z0_f0()));
                if (m == 3)
                        rep.push_back(check_terms("Z0 f3 leading terms", s, ref::printed_Z0_f3()));
        }
        return rep;
}

/*
 * h^2 - 64 = Delta(2t)/Delta(4t) and the two first-order equations for h.
 * The second equation is checked as usually stated, with h^2 + 64, and with
 * h^2 - 64; only the latter holds (already at q^1: -104 against 20).
 */
inline CheckReport suite_h(long P) {
        CheckReport rep;
        RSeries h = form_h(P + 2);
        RSeries dd = eta_quotient({{2, 24}, {4, -24}}, P);
        rep.push_back(check_equal("Delta(2t)/Delta(4t) = h^2 - 64", dd, h.pow(2) - RSeries::constant(Rational(64)),
                                  Rational(P)));
        RSeries es2 = eisenstein_Estar(P / 2 + 2).rescale(2, 1);
        RSeries eo = eisenstein_Eodd(P + 2);
        RSeries dh = form_h(P + 2).qdq();
        rep.push_back(check_equal("qdq h = -E*(2t) h + 64 E_odd", dh, es2 * h * Rational(-1) + eo * Rational(64),
                                  Rational(P)));
        rep.push_back(check_equal("qdq h = -E_odd (h^2 + 64)", dh,
                                  eo * (h.pow(2) + RSeries::constant(Rational(64))) * Rational(-1), Rational(P)));
        rep.push_back(check_equal("qdq h = -E_odd (h^2 - 64)", dh,
                                  eo * (h.pow(2) - RSeries::constant(Rational(64))) * Rational(-1), Rational(P)));
        rep.push_back(check_equal("E_odd = eta(4t)^8/eta(2t)^4", eisenstein_Eodd(P), eta_quotient({{4, 8}, {2, -4}}, P),
                                  Rational(P)));
        return rep;
}

inline CheckReport suite_identities(long P) {
        CheckReport rep = suite_qseries_identities(P);
        for (long t : {0L, 2L, 4L})
                rep.push_back(check_fasmu(t, std::min(P, 100L)));
        for (auto &c : suite_jacobi(P))
                rep.push_back(c);
        for (auto &c : suite_z0(P, 10))
                rep.push_back(c);
        for (auto &c : suite_h(P))
                rep.push_back(c);
        return rep;
}

/* The criterion and the Goettsche/u-plane equality on the grid m + n <= mx. */
inline CheckReport suite_criterion(long mx) {
        CheckReport rep;
        for (long w = 0; w <= mx; ++w)
                for (long m = 0; m <= w; ++m) {
                        long n = w - m;
                        std::string cell = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
                        rep.push_back(check_value("criterion constant term " + cell, criterion_constant(m, n), 0));
                        if (w % 2 == 0)
                                rep.push_back(check_value("Goettsche = u-plane " + cell,
                                                          goettsche_phi(w / 2 + 1, m, n), uplane_D(0, m, n)));
                        else
                                rep.push_back(check_value("u-plane parity " + cell, uplane_D(0, m, n), 0));
                }
        return rep;
}

/* Lambda(3,1,k,j) leading coefficients and the telescoping of their constant terms. */
inline CheckReport suite_lambda() {
        CheckReport rep;
        Rational tot = 0;
        for (auto &pl : ref::printed_lambda_3_1()) {
                RSeries s = lambda_summand(pl.side, 3, 1, pl.k, pl.j, 40);
                long e0 = pl.side == 1 ? -8 : -12;
                ref::Terms want;
                for (size_t i = 0; i < pl.lead.size(); ++i)
                        want.emplace_back(Rational(e0 + 4 * static_cast<long>(i)), parse_rational(pl.lead[i]));
                std::string nm = "Lambda" + std::to_string(pl.side) + "(3,1," + std::to_string(pl.k) + "," +
                                 std::to_string(pl.j) + ")";
                rep.push_back(check_terms(nm + " leading terms", s, want));
                tot += (pl.side == 1 ? 1 : -1) * s.constant_term();
        }
        rep.push_back(check_value("sum of Lambda1 - Lambda2 constant terms at (3,1)", tot, 0));
        rep.push_back(check_value("CT Lambda1(3,1,1,1) = CT Lambda2(3,1,0,0)",
                                  lambda_summand(1, 3, 1, 1, 1, 40).constant_term(),
                                  lambda_summand(2, 3, 1, 0, 0, 40).constant_term()));
        return rep;
}

/* Computed tables against the printed ones, and the printed H-columns against the printed values. */
inline CheckReport suite_tables() {
        CheckReport rep;
        std::vector<Rational> H;
        for (long h : ref::printed_H())
                H.push_back(h);
        for (int nf : {0, 2, 3}) {
                for (auto &row : ref::printed_table(nf)) {
                        std::string cell = "nf" + std::to_string(nf) + " " + monomial_name(row.m, row.n);
                        Rational want = parse_rational(row.value);
                        rep.push_back(check_value(cell + " value", uplane_D(nf, row.m, row.n), want));
                        HCombo printed;
                        for (auto &[k, w] : row.combo)
                                printed.emplace_back(k, parse_rational(w));
                        rep.push_back(check_value(cell + " printed H-combination", eval_h_combo(printed, H), want));
                        HCombo got = uplane_h_combo(nf, row.m, row.n);
                        CheckResult c{cell + " H-combination coefficients"};
                        std::map<long, Rational> a, b;
                        for (auto &[k, w] : got)
                                a[k] = w;
                        for (auto &[k, w] : printed)
                                b[k] = w;
                        if (a != b) {
                                c.ok = false;
                                for (auto &[k, w] : a)
                                        if (!b.count(k) || b[k] != w) {
                                                c.detail = "H" + std::to_string(k) + " weight " + to_short_string(w) +
                                                           ", printed " + (b.count(k) ? to_short_string(b[k]) : "0");
                                                break;
                                        }
                                if (c.detail.empty())
                                        c.detail = "printed combination has extra terms";
                        }
                        rep.push_back(c);
                }
        }
        rep.push_back(check_terms("S-transformed Q", Q_transform_S_cached(5), ref::printed_Q_transform_S()));
        RSeries vw = vafa_witten_series(8);
        ref::Terms want;
        for (size_t i = 0; i < ref::printed_vafa_witten().size(); ++i)
                want.emplace_back(rat(1, 2) + static_cast<long>(i), Rational(ref::printed_vafa_witten()[i]));
        rep.push_back(check_terms("Vafa-Witten series", vw, want));
        for (auto &c : suite_lambda())
                rep.push_back(c);
        return rep;
}

inline CheckReport suite_swcurves(long P) {
        CheckReport rep;
        for (int nf : {0, 2, 3})
                for (auto &c : sw_checks(nf, P))
                        rep.push_back(c);
        return rep;
}

/* Shift identities of Z = eta^3 Q+ and the tau -> tau + 2 invariance of the N_f = 4 partition function. */
inline CheckReport suite_nf4(long P) {
        CheckReport rep;
        Rational up(P);
        RSeries Z = nf4_Z(P);
        CSeries z = to_cyclo(Z);
        CSeries d = z - shift_tau(Z, 1);
        RSeries e4 = eta(P + 2).pow(4);
        RSeries rho4 = nf4_rho4(P + 2);
        rep.push_back(check_equal("Z(t) - Z(t+1) = 14 eta^4 rho^4", d, to_cyclo(e4 * rho4 * Rational(14)), up));
        CSeries alt = CSeries::zero(1, exact_prec);
        for (long k = 0; k < 4; ++k)
                alt += Rational(k % 2 == 0 ? 1 : -1) * shift_tau(Z, k);
        CSeries lhs = alt * to_cyclo(e4.inv());
        rep.push_back(check_equal("sum (-1)^k Z(t+k) / eta^4 = 28 rho^4", lhs, to_cyclo(rho4 * Rational(28)), up - 1));
        /* 28 rho^4 = 4 q^(3/8) sum H_(2m+1) q^m / eta */
        RSeries qp = Q_plus_cached(P + 2);
        std::map<Rational, Rational> odd;
        for (long m = 0; rat(2 * m + 1, 2) - rat(1, 8) < P + 2; ++m)
                odd[Rational(m)] = qp.coeff_at(rat(2 * m + 1, 2) - rat(1, 8));
        RSeries hs = series_from_terms(odd, Rational(P + 1));
        rep.push_back(check_equal("28 rho^4 = 4 q^(3/8) sum H_(2m+1) q^m / eta", rho4 * Rational(28),
                                  (hs * eta(P + 2).inv() * Rational(4)).shifted(rat(3, 8)), up - 1));
        RSeries R = nf4_partition(P);
        rep.push_back(check_equal("Z_UP(t+2) = Z_UP(t)", shift_tau(R, 2), to_cyclo(R), up));
        RSeries g = nf4_g(P);
        rep.push_back(check_terms("g leading coefficient", g, {{rat(-1, 3), rat(-1, 36)}}));
        return rep;
}

} // namespace qd
