#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qd {

inline constexpr int default_cyclo_order = 24;

namespace detail {

using poly = std::vector<Rational>;

inline void trim(poly &p) {
        while (!p.empty() && sgn(p.back()) == 0)
                p.pop_back();
}

inline poly poly_mul(const poly &a, const poly &b) {
        if (a.empty() || b.empty())
                return {};
        poly r(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j)
                        r[i + j] += a[i] * b[j];
        trim(r);
        return r;
}

inline poly poly_sub(poly a, const poly &b) {
        if (a.size() < b.size())
                a.resize(b.size());
        for (size_t i = 0; i < b.size(); ++i)
                a[i] -= b[i];
        trim(a);
        return a;
}

/* Returns (quotient, remainder). */
inline std::pair<poly, poly> poly_divmod(poly a, const poly &b) {
        trim(a);
        if (b.empty())
                throw division_by_zero("polynomial division by zero");
        if (a.size() < b.size())
                return {{}, a};
        poly q(a.size() - b.size() + 1);
        const Rational &lead = b.back();
        for (size_t k = a.size() - 1;; --k) {
                Rational c = a[k] / lead;
                size_t s = k - (b.size() - 1);
                q[s] = c;
                if (sgn(c) != 0)
                        for (size_t i = 0; i < b.size(); ++i)
                                a[s + i] -= c * b[i];
                if (k == b.size() - 1)
                        break;
        }
        a.resize(b.size() - 1);
        trim(a);
        trim(q);
        return {q, a};
}

/* Precomputed data for Q(zeta_N): the cyclotomic polynomial and x^k mod Phi_N. */
struct cyclo_field {
        int  order;
        int  degree;
        poly phi;
        /* powers[k] = x^k mod Phi_N for 0 <= k < max(N, 2*degree). */
        std::vector<std::vector<long>> powers;

        explicit cyclo_field(int n) : order(n) {
                /* Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d */
                poly num(n + 1);
                num[0] = -1;
                num[n] = 1;
                for (int d = 1; d < n; ++d)
                        if (n % d == 0)
                                num = poly_divmod(num, field(d)->phi).first;
                phi    = num;
                degree = static_cast<int>(phi.size()) - 1;
                int top = std::max(n, 2 * degree);
                powers.assign(top, std::vector<long>(degree, 0));
                std::vector<long> cur(degree, 0);
                cur[0] = degree > 0 ? 1 : 0;
                for (int k = 0; k < top; ++k) {
                        powers[k] = cur;
                        /* multiply by x, then reduce using monic phi */
                        long carry = cur[degree - 1];
                        for (int i = degree - 1; i > 0; --i)
                                cur[i] = cur[i - 1];
                        cur[0] = 0;
                        if (carry != 0)
                                for (int i = 0; i < degree; ++i)
                                        cur[i] -= carry * phi[i].get_num().get_si();
                }
        }

        static std::shared_ptr<const cyclo_field> field(int n) {
                static std::mutex lock;
                static std::map<int, std::shared_ptr<const cyclo_field>> cache;
                {
                        std::lock_guard<std::mutex> g(lock);
                        auto it = cache.find(n);
                        if (it != cache.end())
                                return it->second;
                }
                /* built outside the lock: construction recurses into field(d) */
                auto f = std::make_shared<const cyclo_field>(n);
                std::lock_guard<std::mutex> g(lock);
                return cache.emplace(n, f).first->second;
        }
};

} // namespace detail

/*
 * Element of Q(zeta_N), stored as the coefficient vector of its canonical
 * representative of degree < phi(N).
 */
class CycloElem {
public:
        CycloElem() : CycloElem(Rational(0)) {}
        CycloElem(const Rational &r, int order = default_cyclo_order)
                : f_(detail::cyclo_field::field(order)), c_(f_->degree) {
                c_[0] = r;
        }
        CycloElem(long n) : CycloElem(Rational(n)) {}

        static CycloElem from_coeffs(std::vector<Rational> c, int order = default_cyclo_order) {
                CycloElem e(Rational(0), order);
                if (static_cast<int>(c.size()) > e.f_->degree)
                        e.reduce_from(c);
                else {
                        c.resize(e.f_->degree);
                        e.c_ = std::move(c);
                }
                return e;
        }

        int order() const { return f_->order; }
        int degree() const { return f_->degree; }
        const std::vector<Rational> &coeffs() const { return c_; }

        bool is_zero() const {
                for (auto &x : c_)
                        if (sgn(x) != 0)
                                return false;
                return true;
        }
        bool is_rational() const {
                for (size_t i = 1; i < c_.size(); ++i)
                        if (sgn(c_[i]) != 0)
                                return false;
                return true;
        }
        const Rational &rational_part() const { return c_[0]; }
        Rational to_rational() const {
                if (!is_rational())
                        throw non_rational_result("cyclotomic element is not rational");
                return c_[0];
        }

        CycloElem &operator+=(const CycloElem &o) {
                check(o);
                for (size_t i = 0; i < c_.size(); ++i)
                        c_[i] += o.c_[i];
                return *this;
        }
        CycloElem &operator-=(const CycloElem &o) {
                check(o);
                for (size_t i = 0; i < c_.size(); ++i)
                        c_[i] -= o.c_[i];
                return *this;
        }
        CycloElem &operator*=(const Rational &r) {
                for (auto &x : c_)
                        x *= r;
                return *this;
        }
        CycloElem &operator*=(const CycloElem &o) {
                check(o);
                if (o.is_rational())
                        return *this *= Rational(o.c_[0]);
                if (is_rational()) {
                        Rational r = c_[0];
                        c_ = o.c_;
                        return *this *= r;
                }
                int d = f_->degree;
                std::vector<Rational> prod(2 * d - 1);
                for (int i = 0; i < d; ++i) {
                        if (sgn(c_[i]) == 0)
                                continue;
                        for (int j = 0; j < d; ++j)
                                if (sgn(o.c_[j]) != 0)
                                        prod[i + j] += c_[i] * o.c_[j];
                }
                reduce_from(prod);
                return *this;
        }
        CycloElem &operator/=(const CycloElem &o) { return *this *= o.inverse(); }

        CycloElem operator-() const {
                CycloElem r = *this;
                for (auto &x : r.c_)
                        x = -x;
                return r;
        }

        CycloElem inverse() const {
                if (is_zero())
                        throw division_by_zero("inverse of zero in cyclotomic field");
                if (is_rational())
                        return CycloElem(Rational(1) / c_[0], order());
                /* extended Euclid: s*a + t*phi = g, g a nonzero constant */
                using detail::poly;
                poly a = c_;
                detail::trim(a);
                poly r0 = f_->phi, r1 = a;
                poly s0 = {}, s1 = {Rational(1)};
                while (r1.size() > 1) {
                        auto [q, r] = detail::poly_divmod(r0, r1);
                        poly s = detail::poly_sub(s0, detail::poly_mul(q, s1));
                        r0 = std::move(r1);
                        r1 = std::move(r);
                        s0 = std::move(s1);
                        s1 = std::move(s);
                }
                Rational g = r1.at(0);
                for (auto &x : s1)
                        x /= g;
                return from_coeffs(s1, order());
        }

        /* Galois-free complex conjugation: zeta -> zeta^{-1}. */
        CycloElem conj() const {
                std::vector<Rational> out(f_->degree);
                int n = f_->order;
                for (int i = 0; i < f_->degree; ++i) {
                        if (sgn(c_[i]) == 0)
                                continue;
                        auto &p = f_->powers[(n - i) % n];
                        for (int k = 0; k < f_->degree; ++k)
                                if (p[k] != 0)
                                        out[k] += c_[i] * p[k];
                }
                CycloElem e(Rational(0), n);
                e.c_ = std::move(out);
                return e;
        }

        friend bool operator==(const CycloElem &a, const CycloElem &b) {
                return a.order() == b.order() && a.c_ == b.c_;
        }
        friend bool operator!=(const CycloElem &a, const CycloElem &b) { return !(a == b); }

        friend CycloElem operator+(CycloElem a, const CycloElem &b) { return a += b; }
        friend CycloElem operator-(CycloElem a, const CycloElem &b) { return a -= b; }
        friend CycloElem operator*(CycloElem a, const CycloElem &b) { return a *= b; }
        friend CycloElem operator*(CycloElem a, const Rational &b) { return a *= b; }
        friend CycloElem operator*(const Rational &b, CycloElem a) { return a *= b; }
        friend CycloElem operator/(CycloElem a, const CycloElem &b) { return a /= b; }

        std::string str() const {
                if (is_rational())
                        return to_short_string(c_[0]);
                std::string s = "(";
                bool first = true;
                for (int i = 0; i < f_->degree; ++i) {
                        if (sgn(c_[i]) == 0)
                                continue;
                        if (!first)
                                s += " + ";
                        first = false;
                        s += to_short_string(c_[i]);
                        if (i > 0)
                                s += "*z" + std::to_string(f_->order) + (i > 1 ? "^" + std::to_string(i) : "");
                }
                return s + ")";
        }

private:
        std::shared_ptr<const detail::cyclo_field> f_;
        std::vector<Rational>                      c_;

        void check(const CycloElem &o) const {
                if (o.f_->order != f_->order)
                        throw order_mismatch("cyclotomic orders differ: " + std::to_string(f_->order) +
                                             " vs " + std::to_string(o.f_->order));
        }

        void reduce_from(const std::vector<Rational> &p) {
                int d = f_->degree;
                std::vector<Rational> out(d);
                for (size_t k = 0; k < p.size(); ++k) {
                        if (sgn(p[k]) == 0)
                                continue;
                        if (k >= f_->powers.size())
                                throw incompatible_order("power beyond reduction table");
                        auto &row = f_->powers[k];
                        for (int i = 0; i < d; ++i)
                                if (row[i] != 0)
                                        out[i] += p[k] * row[i];
                }
                c_ = std::move(out);
        }
};

inline std::ostream &operator<<(std::ostream &os, const CycloElem &e) { return os << e.str(); }

/* zeta_N^k inside Q(zeta_ambient); N must divide the ambient order. */
inline CycloElem root_of_unity(int n, long k, int ambient = default_cyclo_order) {
        if (n <= 0 || ambient % n != 0)
                throw incompatible_order("zeta_" + std::to_string(n) + " not in Q(zeta_" +
                                         std::to_string(ambient) + ")");
        long e = mod_pos(k * (ambient / n), ambient);
        std::vector<Rational> c(static_cast<size_t>(e) + 1);
        c[e] = 1;
        return CycloElem::from_coeffs(std::move(c), ambient);
}

/* exp(2 pi i x) for rational x whose denominator divides the ambient order. */
inline CycloElem exp2pii(const Rational &x, int ambient = default_cyclo_order) {
        Rational y = x * ambient;
        if (y.get_den() != 1)
                throw incompatible_order("exp(2 pi i " + to_string(x) + ") not in Q(zeta_" +
                                         std::to_string(ambient) + ")");
        return root_of_unity(ambient, y.get_num().get_si(), ambient);
}

} // namespace qd
