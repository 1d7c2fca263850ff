#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qseries.hpp"

namespace qd {

/* Outcome of one verified identity: where it first failed, if anywhere. */
struct CheckResult {
        std::string             name;
        bool                    ok = true;
        std::optional<Rational> where;
        std::string             detail;
};

using CheckReport = std::vector<CheckResult>;

inline bool all_ok(const CheckReport &r) {
        for (auto &c : r)
                if (!c.ok)
                        return false;
        return true;
}

/* Passes when s vanishes below q^upto; s must be known that far. */
template <typename T> CheckResult check_zero(std::string name, const QSeries<T> &s, const Rational &upto) {
        CheckResult r{std::move(name)};
        if (!s.exact() && s.prec_q() < upto) {
                r.ok     = false;
                r.detail = "known only below q^" + to_short_string(s.prec_q());
                return r;
        }
        if (!s.known_zero() && s.valuation_q() < upto) {
                r.ok     = false;
                r.where  = s.valuation_q();
                r.detail = "nonzero coefficient " + scalar_str(s.coeff_at(*r.where)) + " at q^" + to_short_string(*r.where);
        }
        return r;
}

template <typename T>
CheckResult check_equal(std::string name, const QSeries<T> &a, const QSeries<T> &b, const Rational &upto) {
        return check_zero(std::move(name), a - b, upto);
}

inline CheckResult check_value(std::string name, const Rational &got, const Rational &want) {
        CheckResult r{std::move(name)};
        if (got != want) {
                r.ok     = false;
                r.detail = "got " + to_short_string(got) + ", expected " + to_short_string(want);
        }
        return r;
}

/* Passes when the listed (exponent, coefficient) pairs all match. */
template <typename T>
CheckResult check_terms(std::string name, const QSeries<T> &s, const std::vector<std::pair<Rational, Rational>> &terms) {
        CheckResult r{std::move(name)};
        for (auto &[e, c] : terms) {
                T got = s.coeff_at(e);
                if (!(got == T(c))) {
                        r.ok     = false;
                        r.where  = e;
                        r.detail = "coefficient at q^" + to_short_string(e) + " is " + scalar_str(got) + ", expected " +
                                   to_short_string(c);
                        return r;
                }
        }
        return r;
}

} // namespace qd
