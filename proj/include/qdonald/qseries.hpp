#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclo.hpp"
#include "rational.hpp"

namespace qd {

/* Scalar glue so that QSeries can run over Rational and CycloElem alike. */
inline bool is_zero(const Rational &x) { return sgn(x) == 0; }
inline bool is_zero(const CycloElem &x) { return x.is_zero(); }
inline Rational scalar_inv(const Rational &x) { return rdiv(1, x); }
inline CycloElem scalar_inv(const CycloElem &x) { return x.inverse(); }
inline std::string scalar_str(const Rational &x) { return to_short_string(x); }
inline std::string scalar_str(const CycloElem &x) { return x.str(); }
inline bool is_negative(const Rational &x) { return sgn(x) < 0; }
inline bool is_negative(const CycloElem &x) { return x.is_rational() && sgn(x.rational_part()) < 0; }

/* Precision value standing for "exact": every coefficient past the stored ones is zero. */
inline constexpr long exact_prec = LONG_MAX / 8;

inline bool is_exact(long p) { return p >= exact_prec / 2; }
inline long prec_add(long a, long b) { return (is_exact(a) || is_exact(b)) ? exact_prec : a + b; }
inline long prec_mul(long a, long k) { return is_exact(a) ? exact_prec : a * k; }

/*
 * Truncated Laurent series in w = q^(1/ram):
 *
 *     sum_{lead <= m < prec} c_m w^m + O(w^prec)
 *
 * Coefficients are stored densely from lead; positions past the stored
 * vector but below prec are zero.  A series with lead == prec is known to
 * vanish below prec.  The coefficient at lead is nonzero unless the stored
 * vector is empty.
 */
template <typename T> class QSeries {
public:
        using scalar = T;

        QSeries() : ram_(1), lead_(exact_prec), prec_(exact_prec) {}

        QSeries(int ram, long lead, long prec, std::vector<T> c)
                : ram_(ram), lead_(lead), prec_(prec), c_(std::move(c)) {
                if (ram_ <= 0)
                        throw error("ramification must be positive");
                if (static_cast<long>(c_.size()) > prec_ - lead_ && !is_exact(prec_))
                        c_.resize(std::max<long>(0, prec_ - lead_));
                canonicalize();
        }

        /* c * q^e known to q-precision p (p may be exact_prec). */
        static QSeries monomial(const T &c, const Rational &e, long prec_w, int ram) {
                Rational m = e * ram;
                if (m.get_den() != 1)
                        throw irrepresentable_exponent("exponent " + to_string(e) + " needs ramification " +
                                                       m.get_den().get_str() + "*" + std::to_string(ram));
                long mm = m.get_num().get_si();
                if (!is_exact(prec_w) && mm >= prec_w)
                        return zero(ram, prec_w);
                return QSeries(ram, mm, prec_w, {c});
        }
        static QSeries monomial(const T &c, const Rational &e) {
                return monomial(c, e, exact_prec, static_cast<int>(e.get_den().get_si()));
        }
        static QSeries constant(const T &c, long prec_w = exact_prec, int ram = 1) {
                return monomial(c, Rational(0), prec_w, ram);
        }
        static QSeries zero(int ram, long prec_w) { return QSeries(ram, prec_w, prec_w, {}); }

        /* Builds from (exponent in w-units, coefficient) pairs; coefficients at the same exponent add. */
        static QSeries from_terms(int ram, long prec_w, const std::map<long, T> &terms) {
                if (terms.empty() || terms.begin()->first >= prec_w)
                        return zero(ram, prec_w);
                long lo = terms.begin()->first;
                long hi = std::min(terms.rbegin()->first + 1, prec_w);
                std::vector<T> c(hi - lo, T(Rational(0)));
                for (auto &[m, v] : terms)
                        if (m < hi)
                                c[m - lo] = v;
                return QSeries(ram, lo, prec_w, std::move(c));
        }

        int ram() const { return ram_; }
        long lead() const { return lead_; }
        long prec() const { return prec_; }
        bool exact() const { return is_exact(prec_); }
        const std::vector<T> &coeffs() const { return c_; }
        bool known_zero() const { return c_.empty(); }

        /* Precision as a rational number of q-units. */
        Rational prec_q() const { return rat(prec_, ram_); }
        Rational valuation_q() const { return rat(lead_, ram_); }

        /* Coefficient of w^m (m in w-units) within the known window. */
        T at_w(long m) const {
                if (m >= prec_)
                        throw insufficient_precision("coefficient at w^" + std::to_string(m) +
                                                     " beyond precision w^" + std::to_string(prec_));
                if (m < lead_ || m - lead_ >= static_cast<long>(c_.size()))
                        return T(Rational(0));
                return c_[m - lead_];
        }

        T coeff_at(const Rational &e) const {
                Rational m = e * ram_;
                if (m.get_den() != 1)
                        throw irrepresentable_exponent("exponent " + to_string(e) + " not in (1/" +
                                                       std::to_string(ram_) + ")Z");
                return at_w(m.get_num().get_si());
        }

        T constant_term() const {
                if (prec_ <= 0)
                        throw insufficient_precision("constant term requested but series known only below q^" +
                                                     to_string(prec_q()));
                return at_w(0);
        }

        /* Same series with exponents expressed over ram*k. */
        QSeries lift(int k) const {
                if (k == 1)
                        return *this;
                if (c_.empty())
                        return QSeries(ram_ * k, prec_mul(lead_, k), prec_mul(prec_, k), {});
                std::vector<T> c((c_.size() - 1) * k + 1, T(Rational(0)));
                for (size_t i = 0; i < c_.size(); ++i)
                        c[i * k] = c_[i];
                return QSeries(ram_ * k, lead_ * k, prec_mul(prec_, k), std::move(c));
        }
        QSeries with_ram(int r) const {
                if (r % ram_ != 0)
                        throw error("ramification " + std::to_string(r) + " not a multiple of " +
                                    std::to_string(ram_));
                return lift(r / ram_);
        }

        /* Smallest ramification representing the same data (precision included). */
        QSeries normalized() const {
                long g = ram_;
                if (!exact())
                        g = std::gcd(g, prec_);
                if (!c_.empty())
                        g = std::gcd(g, lead_);
                for (size_t i = 0; i < c_.size() && g > 1; ++i)
                        if (!is_zero(c_[i]))
                                g = std::gcd(g, static_cast<long>(i));
                if (c_.empty() && exact())
                        return QSeries(1, exact_prec, exact_prec, {});
                if (g <= 1)
                        return *this;
                std::vector<T> c;
                for (size_t i = 0; i < c_.size(); i += g)
                        c.push_back(c_[i]);
                return QSeries(static_cast<int>(ram_ / g), c_.empty() ? prec_ / g : lead_ / g,
                               exact() ? exact_prec : prec_ / g, std::move(c));
        }

        /* Drops everything at or above q-precision p (in w-units of this series). */
        QSeries truncated(long prec_w) const {
                if (!exact() && prec_w >= prec_)
                        return *this;
                std::vector<T> c = c_;
                if (static_cast<long>(c.size()) > prec_w - lead_)
                        c.resize(std::max<long>(0, prec_w - lead_));
                return QSeries(ram_, std::min(lead_, prec_w), prec_w, std::move(c));
        }
        QSeries truncated_q(const Rational &p) const {
                Rational m = p * ram_;
                Integer fl;
                mpz_fdiv_q(fl.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
                return truncated(fl.get_si());
        }

        template <typename F> QSeries map_coeffs(F f) const {
                std::vector<T> c;
                c.reserve(c_.size());
                for (size_t i = 0; i < c_.size(); ++i)
                        c.push_back(f(lead_ + static_cast<long>(i), c_[i]));
                return QSeries(ram_, lead_, prec_, std::move(c));
        }

        QSeries operator-() const {
                return map_coeffs([](long, const T &x) -> T { return -x; });
        }

        QSeries &operator+=(const QSeries &o) { return *this = combine(*this, o, false); }
        QSeries &operator-=(const QSeries &o) { return *this = combine(*this, o, true); }
        QSeries &operator*=(const QSeries &o) { return *this = multiply(*this, o); }
        QSeries &operator*=(const Rational &r) {
                for (auto &x : c_)
                        x *= r;
                canonicalize();
                return *this;
        }

        friend QSeries operator+(const QSeries &a, const QSeries &b) { return combine(a, b, false); }
        friend QSeries operator-(const QSeries &a, const QSeries &b) { return combine(a, b, true); }
        friend QSeries operator*(const QSeries &a, const QSeries &b) { return multiply(a, b); }
        friend QSeries operator*(QSeries a, const Rational &r) { return a *= r; }
        friend QSeries operator*(const Rational &r, QSeries a) { return a *= r; }
        friend QSeries operator/(const QSeries &a, const QSeries &b) { return multiply(a, b.inv()); }

        QSeries scaled(const T &s) const {
                return map_coeffs([&](long, const T &x) -> T { return x * s; });
        }

        /* Multiplies by q^e. */
        QSeries shifted(const Rational &e) const {
                Rational m = e * ram_;
                if (m.get_den() != 1) {
                        int k = static_cast<int>(m.get_den().get_si());
                        return lift(k).shifted(e);
                }
                long s = m.get_num().get_si();
                return QSeries(ram_, prec_add(lead_, s), prec_add(prec_, s), c_);
        }

        QSeries inv() const {
                if (c_.empty())
                        throw not_invertible("series is zero to its known precision");
                if (exact() && c_.size() > 1)
                        throw insufficient_precision("inverse of an exact polynomial needs a truncation");
                if (exact())
                        return QSeries(ram_, -lead_, exact_prec, {scalar_inv(c_[0])});
                long n = prec_ - lead_;
                T inv0 = scalar_inv(c_[0]);
                std::vector<std::pair<long, T>> nz;
                for (size_t k = 1; k < c_.size(); ++k)
                        if (!is_zero(c_[k]))
                                nz.emplace_back(static_cast<long>(k), c_[k] * inv0);
                std::vector<T> b(n, T(Rational(0)));
                b[0] = inv0;
                for (long i = 1; i < n; ++i) {
                        T acc(Rational(0));
                        bool any = false;
                        for (auto &[k, ak] : nz) {
                                if (k > i)
                                        break;
                                if (is_zero(b[i - k]))
                                        continue;
                                acc += ak * b[i - k];
                                any = true;
                        }
                        if (any)
                                b[i] = -acc;
                }
                return QSeries(ram_, -lead_, prec_ - 2 * lead_, std::move(b));
        }

        QSeries pow(long k) const {
                if (k < 0)
                        return inv().pow(-k);
                QSeries r = constant(T(Rational(1)), exact_prec, ram_);
                QSeries b = *this;
                while (k) {
                        if (k & 1)
                                r = r * b;
                        k >>= 1;
                        if (k)
                                b = b * b;
                }
                return r;
        }

        /* tau -> (num/den) tau, i.e. q -> q^(num/den). */
        QSeries rescale(long num, long den) const {
                if (num <= 0 || den <= 0)
                        throw error("rescale factors must be positive");
                long g = std::gcd(num, den);
                num /= g;
                den /= g;
                QSeries a = lift(1);
                std::vector<T> c;
                if (!c_.empty()) {
                        c.assign((c_.size() - 1) * num + 1, T(Rational(0)));
                        for (size_t i = 0; i < c_.size(); ++i)
                                c[i * num] = c_[i];
                }
                QSeries r(static_cast<int>(ram_ * den), prec_mul(lead_, num), prec_mul(prec_, num), std::move(c));
                return r.normalized();
        }

        /* (q d/dq)^j: c_m -> (m/ram)^j c_m. */
        QSeries qdq(int j = 1) const {
                if (j == 0)
                        return *this;
                return map_coeffs([&](long m, const T &x) -> T { return x * rpow(rat(m, ram_), j); });
        }

        /* Keeps only exponents m (w-units) with m = r mod k. */
        QSeries sieve_w(long r, long k) const {
                return map_coeffs([&](long m, const T &x) -> T { return mod_pos(m - r, k) == 0 ? x : T(Rational(0)); });
        }

        std::string str(int max_terms = -1) const;

private:
        int            ram_;
        long           lead_;
        long           prec_;
        std::vector<T> c_;

        void canonicalize() {
                size_t first = 0;
                while (first < c_.size() && is_zero(c_[first]))
                        ++first;
                if (first == c_.size()) {
                        c_.clear();
                        lead_ = exact() ? exact_prec : prec_;
                        return;
                }
                if (first) {
                        c_.erase(c_.begin(), c_.begin() + first);
                        lead_ += static_cast<long>(first);
                }
                while (!c_.empty() && is_zero(c_.back()))
                        c_.pop_back();
        }

        static std::pair<QSeries, QSeries> common(const QSeries &a, const QSeries &b) {
                int r = static_cast<int>(std::lcm(a.ram_, b.ram_));
                return {a.with_ram(r), b.with_ram(r)};
        }

        static QSeries combine(const QSeries &x, const QSeries &y, bool subtract) {
                auto [a, b] = common(x, y);
                long p = std::min(a.prec_, b.prec_);
                if (a.c_.empty() && b.c_.empty())
                        return zero(a.ram_, p);
                long lo = std::min(a.c_.empty() ? p : a.lead_, b.c_.empty() ? p : b.lead_);
                long hi = lo;
                if (!a.c_.empty())
                        hi = std::max(hi, a.lead_ + static_cast<long>(a.c_.size()));
                if (!b.c_.empty())
                        hi = std::max(hi, b.lead_ + static_cast<long>(b.c_.size()));
                hi = std::min(hi, p);
                if (hi <= lo)
                        return zero(a.ram_, p);
                std::vector<T> c(hi - lo, T(Rational(0)));
                for (size_t i = 0; i < a.c_.size(); ++i) {
                        long m = a.lead_ + static_cast<long>(i);
                        if (m < hi)
                                c[m - lo] += a.c_[i];
                }
                for (size_t i = 0; i < b.c_.size(); ++i) {
                        long m = b.lead_ + static_cast<long>(i);
                        if (m < hi) {
                                if (subtract)
                                        c[m - lo] -= b.c_[i];
                                else
                                        c[m - lo] += b.c_[i];
                        }
                }
                return QSeries(a.ram_, lo, p, std::move(c));
        }

        static QSeries multiply(const QSeries &x, const QSeries &y) {
                auto [a, b] = common(x, y);
                long p = std::min(prec_add(a.lead_, b.prec_), prec_add(b.lead_, a.prec_));
                if (a.c_.empty() || b.c_.empty())
                        return zero(a.ram_, p);
                long lo = a.lead_ + b.lead_;
                long hi = lo + static_cast<long>(a.c_.size() + b.c_.size()) - 1;
                hi = std::min(hi, p);
                if (hi <= lo)
                        return zero(a.ram_, p);
                std::vector<std::pair<long, const T *>> na, nb;
                for (size_t i = 0; i < a.c_.size(); ++i)
                        if (!is_zero(a.c_[i]))
                                na.emplace_back(static_cast<long>(i), &a.c_[i]);
                for (size_t i = 0; i < b.c_.size(); ++i)
                        if (!is_zero(b.c_[i]))
                                nb.emplace_back(static_cast<long>(i), &b.c_[i]);
                long width = hi - lo;
                std::vector<T> c(width, T(Rational(0)));
                for (auto &[i, ai] : na) {
                        if (i >= width)
                                break;
                        for (auto &[j, bj] : nb) {
                                if (i + j >= width)
                                        break;
                                c[i + j] += (*ai) * (*bj);
                        }
                }
                return QSeries(a.ram_, lo, p, std::move(c));
        }
};

using RSeries = QSeries<Rational>;
using CSeries = QSeries<CycloElem>;

inline CSeries to_cyclo(const RSeries &a, int order = default_cyclo_order) {
        std::vector<CycloElem> c;
        c.reserve(a.coeffs().size());
        for (auto &x : a.coeffs())
                c.emplace_back(x, order);
        return CSeries(a.ram(), a.lead(), a.prec(), std::move(c));
}

inline RSeries to_rational(const CSeries &a) {
        std::vector<Rational> c;
        c.reserve(a.coeffs().size());
        for (size_t i = 0; i < a.coeffs().size(); ++i) {
                auto &x = a.coeffs()[i];
                if (!x.is_rational())
                        throw non_rational_result("coefficient at q^" +
                                                  to_string(rat(a.lead() + static_cast<long>(i), a.ram())) +
                                                  " is not rational: " + x.str());
                c.push_back(x.rational_part());
        }
        return RSeries(a.ram(), a.lead(), a.prec(), std::move(c));
}

/* tau -> tau + k: the coefficient of w^m picks up zeta_ram^(k m). */
template <typename T> CSeries shift_tau(const QSeries<T> &a, long k, int order = default_cyclo_order) {
        CSeries c;
        if constexpr (std::is_same_v<T, Rational>)
                c = to_cyclo(a, order);
        else
                c = a;
        int r = c.ram();
        return c.map_coeffs([&](long m, const CycloElem &x) -> CycloElem {
                if (x.is_zero())
                        return x;
                Rational e = rat(mod_pos(k * m, r), r);
                e.canonicalize();
                if (order % e.get_den().get_si() != 0)
                        throw incompatible_order("shift by " + std::to_string(k) + " needs zeta_" +
                                                 e.get_den().get_str());
                return x * exp2pii(e, order);
        });
}

/* Series from (q-exponent, coefficient) pairs, known below q^prec; ramification is the lcm of the denominators. */
template <typename T>
QSeries<T> series_from_terms(const std::map<Rational, T> &terms, const Rational &prec) {
        long r = prec.get_den().get_si();
        for (auto &[e, v] : terms)
                if (e < prec && !is_zero(v))
                        r = std::lcm(r, e.get_den().get_si());
        std::map<long, T> w;
        for (auto &[e, v] : terms) {
                if (e >= prec || is_zero(v))
                        continue;
                Rational m = e * r;
                w.emplace(m.get_num().get_si(), v);
        }
        Rational pm = prec * r;
        return QSeries<T>::from_terms(static_cast<int>(r), pm.get_num().get_si(), w);
}

/* First exponent (in q-units) where a and b differ inside their common window. */
template <typename T>
std::optional<Rational> first_difference(const QSeries<T> &a, const QSeries<T> &b) {
        QSeries<T> d = a - b;
        if (d.known_zero())
                return std::nullopt;
        return d.valuation_q();
}

template <typename T> bool agree(const QSeries<T> &a, const QSeries<T> &b) {
        return !first_difference(a, b).has_value();
}

inline std::string exponent_str(const Rational &e) {
        if (e.get_den() == 1 && sgn(e) >= 0)
                return e.get_num().get_str();
        if (e.get_den() == 1)
                return "(" + e.get_num().get_str() + ")";
        return "(" + to_string(e) + ")";
}

/*
 * Text form: leading power factored out, e.g.
 *     q^(-1/8) * (1 + 28*q^(1/2) + 39*q + ... + O(q^5))
 */
template <typename T> std::string QSeries<T>::str(int max_terms) const {
        QSeries a = normalized();
        std::ostringstream os;
        if (a.c_.empty()) {
                if (a.exact())
                        return "0";
                return "O(q^" + exponent_str(a.prec_q()) + ")";
        }
        Rational base = rat(a.lead_, a.ram_);
        base.canonicalize();
        bool factored = sgn(base) != 0;
        if (factored)
                os << "q^" << exponent_str(base) << " * (";
        int shown = 0;
        bool first = true;
        for (size_t i = 0; i < a.c_.size(); ++i) {
                if (is_zero(a.c_[i]))
                        continue;
                if (max_terms >= 0 && shown >= max_terms)
                        break;
                ++shown;
                Rational e = rat(static_cast<long>(i), a.ram_);
                e.canonicalize();
                T c = a.c_[i];
                bool neg = is_negative(c);
                if (neg)
                        c = -c;
                std::string cs = scalar_str(c);
                if (first)
                        os << (neg ? "-" : "");
                else
                        os << (neg ? " - " : " + ");
                first = false;
                if (sgn(e) == 0)
                        os << cs;
                else {
                        if (cs != "1")
                                os << cs << "*";
                        os << "q";
                        if (e != 1)
                                os << "^" << exponent_str(e);
                }
        }
        if (!a.exact()) {
                Rational rel = a.prec_q() - base;
                os << " + O(q" << (rel == 1 ? std::string() : "^" + exponent_str(rel)) << ")";
        } else if (max_terms >= 0 && shown < static_cast<int>(a.c_.size())) {
                os << " + ...";
        }
        if (factored)
                os << ")";
        return os.str();
}

template <typename T> std::ostream &operator<<(std::ostream &os, const QSeries<T> &a) {
        return os << a.str();
}

} // namespace qd
