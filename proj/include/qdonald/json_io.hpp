#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "check.hpp"
#include "invariants.hpp"

namespace qd {

/* {ram, lead, prec, coeffs: [["m", "num/den"], ...]} with m in units of q^(1/ram); zeros omitted. */
template <typename T> nlohmann::json series_to_json(const QSeries<T> &s) {
        nlohmann::json j;
        j["ram"] = s.ram();
        j["lead"] = s.lead();
        if (s.exact())
                j["prec"] = nullptr;
        else
                j["prec"] = s.prec();
        auto arr = nlohmann::json::array();
        for (size_t i = 0; i < s.coeffs().size(); ++i) {
                if (is_zero(s.coeffs()[i]))
                        continue;
                std::string c;
                if constexpr (std::is_same_v<T, Rational>)
                        c = to_short_string(s.coeffs()[i]);
                else
                        c = s.coeffs()[i].str();
                arr.push_back({std::to_string(s.lead() + static_cast<long>(i)), c});
        }
        j["coeffs"] = arr;
        return j;
}

inline RSeries series_from_json(const nlohmann::json &j) {
        try {
                int ram = j.at("ram").get<int>();
                long prec = j.at("prec").is_null() ? exact_prec : j.at("prec").get<long>();
                std::map<long, Rational> t;
                for (auto &e : j.at("coeffs"))
                        t[std::stol(e.at(0).get<std::string>())] = parse_rational(e.at(1).get<std::string>());
                return RSeries::from_terms(ram, prec, t);
        } catch (const nlohmann::json::exception &e) {
                throw parse_error(std::string("malformed series JSON: ") + e.what());
        } catch (const std::logic_error &e) {
                throw parse_error(std::string("malformed series JSON: ") + e.what());
        } catch (const division_by_zero &e) {
                throw parse_error(std::string("malformed series JSON: ") + e.what());
        }
}

inline nlohmann::json combo_to_json(const HCombo &c) {
        auto a = nlohmann::json::array();
        for (auto &[k, w] : c)
                a.push_back({"H" + std::to_string(k), to_short_string(w)});
        return a;
}

inline nlohmann::json table_to_json(const InvariantTable &t) {
        nlohmann::json j;
        j["nf"] = t.nf;
        auto rows = nlohmann::json::array();
        for (auto &r : t.rows) {
                nlohmann::json row;
                row["m"] = r.m;
                row["n"] = r.n;
                row["monomial"] = monomial_name(r.m, r.n);
                row["value"] = to_short_string(r.value);
                row["h_combo"] = combo_to_json(r.h_combo);
                rows.push_back(row);
        }
        j["rows"] = rows;
        return j;
}

inline InvariantTable table_from_json(const nlohmann::json &j) {
        try {
                InvariantTable t{j.at("nf").get<int>(), {}};
                for (auto &r : j.at("rows")) {
                        InvariantRow row{r.at("m").get<long>(), r.at("n").get<long>(),
                                         parse_rational(r.at("value").get<std::string>()), {}};
                        for (auto &c : r.at("h_combo")) {
                                std::string h = c.at(0).get<std::string>();
                                if (h.size() < 2 || h[0] != 'H')
                                        throw parse_error("bad H label " + h);
                                row.h_combo.emplace_back(std::stol(h.substr(1)),
                                                         parse_rational(c.at(1).get<std::string>()));
                        }
                        t.rows.push_back(std::move(row));
                }
                return t;
        } catch (const nlohmann::json::exception &e) {
                throw parse_error(std::string("malformed table JSON: ") + e.what());
        } catch (const division_by_zero &e) {
                throw parse_error(std::string("malformed table JSON: ") + e.what());
        }
}

/* CSV with the JSON columns; the combination is "H2:-49/64;H1:9/4". */
inline std::string table_to_csv(const InvariantTable &t) {
        std::ostringstream os;
        os << "nf,m,n,monomial,value,h_combo\n";
        for (auto &r : t.rows) {
                os << t.nf << ',' << r.m << ',' << r.n << ',' << monomial_name(r.m, r.n) << ',' << to_short_string(r.value)
                   << ',';
                for (size_t i = 0; i < r.h_combo.size(); ++i)
                        os << (i ? ";" : "") << 'H' << r.h_combo[i].first << ':' << to_short_string(r.h_combo[i].second);
                os << '\n';
        }
        return os.str();
}

inline nlohmann::json report_to_json(const std::string &suite, const CheckReport &rep) {
        nlohmann::json j;
        j["suite"] = suite;
        j["ok"] = all_ok(rep);
        auto a = nlohmann::json::array();
        for (auto &c : rep) {
                nlohmann::json e;
                e["name"] = c.name;
                e["ok"] = c.ok;
                if (c.where)
                        e["exponent"] = to_short_string(*c.where);
                if (!c.detail.empty())
                        e["detail"] = c.detail;
                a.push_back(e);
        }
        j["checks"] = a;
        return j;
}

} // namespace qd
