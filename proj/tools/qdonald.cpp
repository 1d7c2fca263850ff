#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdonald/json_io.hpp"
#include "qdonald/qdonald.hpp"

using namespace qd;
using nlohmann::json;

namespace {

struct Options {
        int         nf = 0;
        long        max_weight = 6;
        long        order = 60;
        std::string format = "text";
        std::string suite = "all";
        long        max = 6;
        std::string name;
        std::string out;
};

unsigned thread_cap() {
        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        if (const char *e = std::getenv("QDONALD_THREADS")) {
                long v = std::strtol(e, nullptr, 10);
                if (v >= 1)
                        return static_cast<unsigned>(std::min<long>(v, hw));
        }
        return hw;
}

/* Splits "fm:3" into ("fm", {"3"}) and "ebracket:1,0" into ("ebracket", {"1", "0"}). */
std::pair<std::string, std::vector<std::string>> split_name(const std::string &s) {
        auto c = s.find(':');
        if (c == std::string::npos)
                return {s, {}};
        std::vector<std::string> args;
        std::stringstream ss(s.substr(c + 1));
        for (std::string a; std::getline(ss, a, ',');)
                args.push_back(a);
        return {s.substr(0, c), args};
}

long int_arg(const std::vector<std::string> &a, size_t i, const std::string &name) {
        if (i >= a.size())
                throw CLI::ValidationError("--name", name + " needs an integer argument");
        try {
                size_t used = 0;
                long v = std::stol(a[i], &used);
                if (used != a[i].size())
                        throw std::invalid_argument(a[i]);
                return v;
        } catch (const std::logic_error &) {
                throw CLI::ValidationError("--name", "bad integer '" + a[i] + "' in " + name);
        }
}

RSeries named_series(const std::string &full, long P) {
        auto [n, a] = split_name(full);
        if (n == "eta")
                return eta(P);
        if (n == "theta2" || n == "theta3" || n == "theta4")
                return theta_big(n.back() - '0', P);
        if (n == "vtheta2" || n == "vtheta3" || n == "vtheta4")
                return vartheta(n.back() - '0', P);
        if (n == "E2")
                return eisenstein_E2(P);
        if (n == "E4")
                return eisenstein_E4_E6(4, P);
        if (n == "E6")
                return eisenstein_E4_E6(6, P);
        if (n == "Estar")
                return eisenstein_Estar(P);
        if (n == "Eodd")
                return eisenstein_Eodd(P);
        if (n == "A")
                return form_A(P);
        if (n == "B")
                return form_B(P);
        if (n == "A38")
                return form_A38(P);
        if (n == "A78")
                return form_A78(P);
        if (n == "h")
                return form_h(P);
        if (n == "fm")
                return form_fm(int_arg(a, 0, full), P);
        if (n == "Delta")
                return form_Delta(P);
        if (n == "Ft")
                return F_t(int_arg(a, 0, full), P);
        if (n == "calFt")
                return calF(int_arg(a, 0, full), P);
        if (n == "M")
                return mock_M(P);
        if (n == "Qplus")
                return Q_plus(P);
        if (n == "QcalQ")
                return calQ(P);
        if (n == "QtransS")
                return Q_transform_S(P);
        if (n == "Z0")
                return form_Z0(P);
        if (n == "ebracket")
                return e_bracket(int_arg(a, 0, full), int_arg(a, 1, full), P);
        throw CLI::ValidationError("--name", "unknown series '" + full + "'");
}

std::string hcombo_text(const HCombo &c) {
        std::string s;
        for (auto &[k, w] : c) {
                bool neg = sgn(w) < 0;
                std::string mag = to_short_string(neg ? Rational(-w) : w);
                if (s.empty())
                        s += neg ? "-" : "";
                else
                        s += neg ? " - " : " + ";
                s += mag + "*H" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
}

int emit_report(std::ostream &os, const std::string &suite, const CheckReport &rep, const std::string &fmt) {
        if (fmt == "json") {
                os << report_to_json(suite, rep).dump(2) << "\n";
        } else {
                size_t fails = 0;
                const CheckResult *first = nullptr;
                for (auto &c : rep) {
                        os << (c.ok ? "PASS " : "FAIL ") << c.name;
                        if (!c.ok && !c.detail.empty())
                                os << ": " << c.detail;
                        os << "\n";
                        if (!c.ok && !first)
                                first = &c;
                        fails += !c.ok;
                }
                os << suite << ": " << rep.size() - fails << "/" << rep.size() << " passed\n";
                if (first) {
                        os << "first failure: " << first->name;
                        if (first->where)
                                os << " at q^" << to_short_string(*first->where);
                        os << "\n";
                }
        }
        return all_ok(rep) ? 0 : 1;
}

CheckReport run_suite(const std::string &s, const Options &o) {
        if (s == "criterion")
                return suite_criterion(o.max);
        if (s == "identities")
                return suite_identities(o.order);
        if (s == "swcurves")
                return suite_swcurves(o.order);
        if (s == "tables")
                return suite_tables();
        if (s == "nf4")
                return suite_nf4(o.order);
        throw CLI::ValidationError("--suite", "unknown suite '" + s + "'");
}

int cmd_verify(std::ostream &os, const Options &o) {
        std::vector<std::string> names;
        if (o.suite == "all")
                names = {"criterion", "identities", "swcurves", "tables", "nf4"};
        else
                names = {o.suite};
        for (auto &n : names)
                if (n != "criterion" && n != "identities" && n != "swcurves" && n != "tables" && n != "nf4")
                        throw CLI::ValidationError("--suite", "unknown suite '" + n + "'");
        int rc = 0;
        if (o.format == "json" && names.size() > 1) {
                json all = json::array();
                for (auto &n : names) {
                        CheckReport r = run_suite(n, o);
                        rc |= all_ok(r) ? 0 : 1;
                        all.push_back(report_to_json(n, r));
                }
                os << all.dump(2) << "\n";
                return rc;
        }
        for (auto &n : names)
                rc |= emit_report(os, n, run_suite(n, o), o.format);
        return rc;
}

int cmd_series(std::ostream &os, const Options &o) {
        if (o.name.empty())
                throw CLI::ValidationError("--name", "series needs --name");
        RSeries s = named_series(o.name, o.order);
        if (o.format == "json")
                os << series_to_json(s).dump() << "\n";
        else
                os << s.str() << "\n";
        return 0;
}

int cmd_invariants(std::ostream &os, const Options &o) {
        InvariantTable t = invariant_table(o.nf, o.max_weight, true, thread_cap());
        if (o.format == "json") {
                os << table_to_json(t).dump(2) << "\n";
        } else if (o.format == "csv") {
                os << table_to_csv(t);
        } else {
                for (auto &r : t.rows)
                        os << monomial_name(r.m, r.n) << "\t" << to_short_string(r.value) << "\t"
                           << hcombo_text(r.h_combo) << "\n";
        }
        return 0;
}

int cmd_goettsche(std::ostream &os, const Options &o) {
        json rows = json::array();
        std::ostringstream txt, csv;
        csv << "k,m,n,monomial,value\n";
        for (long w = 0; w <= o.max_weight; w += 2)
                for (long m = 0; m <= w; ++m) {
                        long n = w - m, k = w / 2 + 1;
                        Rational v = goettsche_phi(k, m, n);
                        rows.push_back({{"k", k}, {"m", m}, {"n", n}, {"monomial", monomial_name(m, n)},
                                        {"value", to_short_string(v)}});
                        txt << "k=" << k << "\t" << monomial_name(m, n) << "\t" << to_short_string(v) << "\n";
                        csv << k << ',' << m << ',' << n << ',' << monomial_name(m, n) << ',' << to_short_string(v)
                            << '\n';
                }
        if (o.format == "json")
                os << json{{"rows", rows}}.dump(2) << "\n";
        else if (o.format == "csv")
                os << csv.str();
        else
                os << txt.str();
        return 0;
}

int cmd_hurwitz(std::ostream &os, const Options &o) {
        auto h = hurwitz(o.max);
        if (o.format == "json") {
                json j = json::object();
                for (size_t n = 0; n < h.size(); ++n)
                        j[std::to_string(n)] = to_short_string(h[n]);
                os << j.dump(2) << "\n";
        } else {
                if (o.format == "csv")
                        os << "n,H\n";
                for (size_t n = 0; n < h.size(); ++n)
                        os << n << (o.format == "csv" ? "," : "\t") << to_short_string(h[n]) << "\n";
        }
        return 0;
}

int cmd_nf4(std::ostream &os, const Options &o) {
        RSeries r = nf4_partition(o.order);
        if (o.format == "json")
                os << series_to_json(r).dump() << "\n";
        else
                os << r.str() << "\n";
        return 0;
}

int cmd_swcheck(std::ostream &os, const Options &o) {
        return emit_report(os, "swcheck nf=" + std::to_string(o.nf), sw_checks(o.nf, o.order), o.format);
}

} // namespace

int main(int argc, char **argv) {
        CLI::App app{"Exact q-series engine for Donaldson invariants of CP^2"};
        app.require_subcommand(1);
        Options o;
        auto fmt = [&](CLI::App *c, std::vector<std::string> allowed) {
                c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
                c->add_option("--out", o.out, "Write output to this file");
        };
        auto order = [&](CLI::App *c) {
                c->add_option("--order", o.order, "Precision in q-units")->check(CLI::PositiveNumber);
        };

        auto *series = app.add_subcommand("series", "Print a named q-series");
        series->add_option("--name", o.name, "Series name, e.g. Qplus, fm:3, Ft:2, ebracket:1,0")->required();
        order(series);
        fmt(series, {"text", "json"});

        auto *inv = app.add_subcommand("invariants", "Table of u-plane coefficients");
        inv->add_option("--nf", o.nf)->check(CLI::IsMember({0, 2, 3}));
        inv->add_option("--max-weight", o.max_weight)->check(CLI::NonNegativeNumber);
        fmt(inv, {"text", "json", "csv"});

        auto *goe = app.add_subcommand("goettsche", "Table of Goettsche's invariants");
        goe->add_option("--max-weight", o.max_weight)->check(CLI::NonNegativeNumber);
        fmt(goe, {"text", "json", "csv"});

        auto *ver = app.add_subcommand("verify", "Run verification suites");
        ver->add_option("--suite", o.suite)->check(
                CLI::IsMember({"criterion", "identities", "swcurves", "tables", "nf4", "all"}));
        ver->add_option("--max", o.max, "Largest m + n for the criterion grid")->check(CLI::NonNegativeNumber);
        order(ver);
        fmt(ver, {"text", "json"});

        auto *hur = app.add_subcommand("hurwitz", "Hurwitz class numbers H(0..max)");
        hur->add_option("--max", o.max)->check(CLI::NonNegativeNumber);
        fmt(hur, {"text", "json", "csv"});

        auto *n4 = app.add_subcommand("nf4", "Massless N_f = 4 partition function");
        order(n4);
        fmt(n4, {"text", "json"});

        auto *sw = app.add_subcommand("swcheck", "Identities of a Seiberg-Witten family");
        sw->add_option("--nf", o.nf)->check(CLI::IsMember({0, 2, 3}));
        order(sw);
        fmt(sw, {"text", "json"});

        try {
                app.parse(argc, argv);
        } catch (const CLI::ParseError &e) {
                int rc = app.exit(e);
                return rc == 0 ? 0 : 2;
        }

        std::ofstream file;
        if (!o.out.empty()) {
                file.open(o.out);
                if (!file) {
                        std::cerr << "cannot open " << o.out << "\n";
                        return 2;
                }
        }
        std::ostream &os = o.out.empty() ? std::cout : file;

        std::map<CLI::App *, std::function<int(std::ostream &, const Options &)>> dispatch = {
                {series, cmd_series}, {inv, cmd_invariants}, {goe, cmd_goettsche}, {ver, cmd_verify},
                {hur, cmd_hurwitz},   {n4, cmd_nf4},         {sw, cmd_swcheck}};
        try {
                for (auto &[sub, fn] : dispatch)
                        if (sub->parsed())
                                return fn(os, o);
        } catch (const CLI::ValidationError &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
        } catch (const insufficient_precision &e) {
                std::cerr << "error: " << e.what() << "\n"
                          << "hint: retry with --order " << 2 * o.order << "\n";
                return 1;
        } catch (const qd::error &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
        }
        return 2;
}
