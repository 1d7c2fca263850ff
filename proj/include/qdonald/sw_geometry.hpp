#pragma once

#include <string>

#include "check.hpp"
#include "modular_forms.hpp"

namespace qd {

/*
 * One of the three modular Seiberg-Witten families, expanded at the cusp in
 * its own modular variable.  W stands for (omega/pi)^2, so every series here
 * has rational coefficients.  g2n, g3n, Deltan are the Weierstrass data as
 * polynomials in u; E2, E4, E6 are taken in the family's variable.
 */
struct SWFamily {
        int         nf = 0;
        RSeries     u, W, g2n, g3n, Deltan;
        RSeries     E2, E4, E6;
        std::string kodaira_infty;
        long        order = 0;
};

namespace detail {

inline RSeries poly_in(const RSeries &u, std::initializer_list<Rational> c) {
        /* c lists coefficients from the constant term up */
        RSeries r = RSeries::zero(1, exact_prec);
        RSeries p = RSeries::constant(Rational(1));
        for (auto &a : c) {
                if (sgn(a) != 0)
                        r += p * a;
                p = p * u;
        }
        return r;
}

inline SWFamily build_family(int nf, long P) {
        SWFamily f;
        f.nf = nf;
        f.order = P;
        RSeries t2 = vartheta(2, P), t3 = vartheta(3, P), t4 = vartheta(4, P);
        switch (nf) {
        case 0: {
                RSeries s = (t2 * t3).pow(2);
                f.u = (t2.pow(4) + t3.pow(4)) * s.inv() * rat(1, 2);
                f.W = s * Rational(2);
                f.kodaira_infty = "I4*";
                break;
        }
        case 2: {
                /* duplication formulas turn u(2 tau), W(2 tau) into quotients of thetas at tau */
                RSeries t24 = t2.pow(4);
                f.u = (t3.pow(4) + t4.pow(4)) * t24.inv();
                f.W = t24 * rat(1, 2);
                f.kodaira_infty = "I2*";
                break;
        }
        case 3: {
                RSeries d = t3.pow(2) - t4.pow(2);
                RSeries d2 = d.pow(2);
                f.u = (t3 * t4).pow(2) * d2.inv() * Rational(-4) - RSeries::constant(rat(1, 2));
                /* (omega/pi)^2 is negative here: omega carries a factor i against the printed form */
                f.W = d2 * rat(-1, 4);
                f.kodaira_infty = "I1*";
                break;
        }
        default:
                throw unsupported_family("no modular Seiberg-Witten family for N_f = " + std::to_string(nf));
        }
        const RSeries &u = f.u;
        switch (nf) {
        case 0:
                f.g2n = poly_in(u, {rat(-1, 16), 0, rat(1, 12)});
                f.g3n = poly_in(u, {0, rat(-1, 192), 0, rat(1, 216)});
                f.Deltan = poly_in(u, {rat(-1, 4096), 0, rat(1, 4096)});
                break;
        case 2:
                f.g2n = poly_in(u, {rat(1, 4), 0, rat(1, 12)});
                f.g3n = poly_in(u, {0, rat(-1, 24), 0, rat(1, 216)});
                f.Deltan = poly_in(u, {-1, 0, 1}).pow(2) * rat(1, 64);
                break;
        case 3:
                f.g2n = poly_in(u, {rat(11, 16), rat(-5, 4), rat(1, 12)});
                f.g3n = poly_in(u, {rat(7, 64), rat(-29, 96), rat(7, 48), rat(1, 216)});
                f.Deltan = poly_in(u, {-1, 2}) * poly_in(u, {1, 2}).pow(4) * rat(-1, 512);
                break;
        }
        f.E2 = eisenstein_E2(P);
        f.E4 = eisenstein_E4_E6(4, P);
        f.E6 = eisenstein_E4_E6(6, P);
        return f;
}

} // namespace detail

/* The family with nf flavours, each series known below q^P (in the family's variable). */
inline SWFamily sw_family(int nf, long P) {
        if (nf != 0 && nf != 2 && nf != 3)
                throw unsupported_family("no modular Seiberg-Witten family for N_f = " + std::to_string(nf));
        /* u has valuation -1/4, -1/2, -1; powers up to u^5 eat into the precision */
        long margin = 8;
        for (int attempt = 0; attempt < 8; ++attempt, margin *= 2) {
                SWFamily f = detail::build_family(nf, P + margin);
                if (f.Deltan.prec_q() >= P && f.g3n.pow(2).prec_q() >= P && f.u.prec_q() >= P) {
                        f.order = P;
                        return f;
                }
        }
        throw insufficient_precision("family precision could not be reached");
}

/* T = -E_2/(3W) + u/3 + delta_{3,nf}/2. */
inline RSeries contact_term(const SWFamily &f) {
        RSeries t = f.E2 * (f.W * Rational(3)).inv() * Rational(-1) + f.u * rat(1, 3);
        if (f.nf == 3)
                t += RSeries::constant(rat(1, 2));
        return t;
}

/* The holomorphic half T-hat shares with T: same series by construction. */
inline RSeries contact_term_hat_holomorphic(const SWFamily &f) { return contact_term(f); }

/* Exponent below which T must vanish for T = O(1/u): minus the valuation of u. */
inline Rational contact_threshold(const SWFamily &f) { return -f.u.valuation_q(); }

/*
 * The A-period divided by omega, X = a/omega
 *     = (nf+2) u/3 - delta_{3,nf}/2 + (4-nf) E_2/(3W),
 * and the series X qdq(W)/(2W) + qdq(X) - qdq(u), which vanishes iff da/du = omega.
 */
inline std::pair<RSeries, RSeries> periods_a(const SWFamily &f) {
        RSeries X = f.u * rat(f.nf + 2, 3) + f.E2 * f.W.inv() * rat(4 - f.nf, 3);
        if (f.nf == 3)
                X -= RSeries::constant(rat(1, 2));
        RSeries dlogw = f.W.qdq() * (f.W * Rational(2)).inv();
        RSeries rel = X * dlogw + X.qdq() - f.u.qdq();
        return {X, rel};
}

/* c_0 in q = u^(-(4-nf)) (c_0 + O(1/u)). */
inline Rational cusp_constant(const SWFamily &f) {
        /* u = c q^(-1/(4-nf)) (1 + ...), so q u^(4-nf) -> c^(4-nf) */
        Rational lead = f.u.coeff_at(f.u.valuation_q());
        return rpow(lead, 4 - f.nf);
}

/* All consistency identities for one family, to q^P. */
inline CheckReport sw_checks(int nf, long P) {
        SWFamily f = sw_family(nf, P);
        CheckReport rep;
        Rational upto(P);
        std::string tag = "nf" + std::to_string(nf) + ": ";
        rep.push_back(check_equal(tag + "g2^3 - 27 g3^2 = Delta", f.g2n.pow(3) - f.g3n.pow(2) * Rational(27), f.Deltan, upto));
        rep.push_back(check_equal(tag + "Delta W^6 = eta^24", f.Deltan * f.W.pow(6), form_Delta(P), upto));
        rep.push_back(check_equal(tag + "g2 W^2 = E4/12", f.g2n * f.W.pow(2), f.E4 * rat(1, 12), upto));
        rep.push_back(check_equal(tag + "g3 W^3 = E6/216", f.g3n * f.W.pow(3), f.E6 * rat(1, 216), upto));
        RSeries T = contact_term(f);
        Rational thr = contact_threshold(f);
        rep.push_back(check_zero(tag + "T = O(1/u)", T.truncated_q(thr), thr));
        auto [X, rel] = periods_a(f);
        rep.push_back(check_zero(tag + "da/du = omega", rel, upto - 1));
        RSeries T2 = (f.u * Rational(2) - X) * rat(1, 4 - nf);
        rep.push_back(check_equal(tag + "T = (2u - a/omega)/(4-nf)", T, T2, upto - 1));
        if (nf == 2) {
                SWFamily f0 = sw_family(0, P / 2 + 1);
                rep.push_back(check_equal(tag + "u2(tau) = u0(2 tau)", f.u, f0.u.rescale(2, 1), upto));
                rep.push_back(check_equal(tag + "W2(tau) = W0(2 tau)", f.W, f0.W.rescale(2, 1), upto));
        }
        if (nf == 3) {
                /* u0 at -1/tau: theta_2 and theta_4 trade places */
                long p = P + 8;
                RSeries t3 = vartheta(3, p), t4 = vartheta(4, p);
                RSeries u0s = (t4.pow(4) + t3.pow(4)) * (t4 * t3).pow(2).inv() * rat(1, 2);
                RSeries rhs = (u0s - RSeries::constant(Rational(1))).inv() * Rational(-2) - RSeries::constant(rat(1, 2));
                rep.push_back(check_equal(tag + "u3 = -2/(u0(-1/tau) - 1) - 1/2", f.u, rhs, upto));
                rep.push_back(check_value(tag + "c0 = -1/16", cusp_constant(f), rat(-1, 16)));
        }
        return rep;
}

} // namespace qd
