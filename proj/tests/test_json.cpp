#include <gtest/gtest.h>

#include "property_support.hpp"
#include "qdonald/json_io.hpp"
#include "qdonald/qdonald.hpp"

using namespace qd;

TEST(Json, SeriesRoundTrip) {
        qdt::Gen g(7);
        for (int i = 0; i < 300; ++i) {
                RSeries s = g.series();
                RSeries back = series_from_json(nlohmann::json::parse(series_to_json(s).dump()));
                EXPECT_EQ(back.exact(), s.exact());
                if (!s.exact())
                        EXPECT_EQ(back.prec_q(), s.prec_q());
                EXPECT_FALSE(first_difference(back, s).has_value()) << s.str(8);
        }
}

TEST(Json, SeriesSchema) {
        nlohmann::json j = series_to_json(theta_big(4, 5));
        EXPECT_EQ(j["ram"], 1);
        EXPECT_EQ(j["prec"], 5);
        EXPECT_EQ(j["coeffs"][1][0], "4");
        EXPECT_EQ(j["coeffs"][1][1], "-2");
        EXPECT_TRUE(series_to_json(RSeries::constant(Rational(3)))["prec"].is_null());
}

TEST(Json, TableRoundTrip) {
        InvariantTable t = invariant_table(2, 2);
        InvariantTable back = table_from_json(nlohmann::json::parse(table_to_json(t).dump()));
        ASSERT_EQ(back.nf, 2);
        ASSERT_EQ(back.rows.size(), t.rows.size());
        for (size_t i = 0; i < t.rows.size(); ++i) {
                EXPECT_EQ(back.rows[i].m, t.rows[i].m);
                EXPECT_EQ(back.rows[i].n, t.rows[i].n);
                EXPECT_EQ(back.rows[i].value, t.rows[i].value);
                EXPECT_EQ(back.rows[i].h_combo, t.rows[i].h_combo);
        }
        EXPECT_EQ(table_to_json(t)["rows"][0]["value"], "-3");
}

TEST(Json, Csv) {
        std::string csv = table_to_csv(invariant_table(0, 0));
        EXPECT_EQ(csv, "nf,m,n,monomial,value,h_combo\n0,0,0,1,-1,H1:-1/4;H0:6\n");
}

TEST(Json, MalformedInput) {
        EXPECT_THROW(series_from_json(nlohmann::json::parse(R"({"ram":1})")), parse_error);
        EXPECT_THROW(series_from_json(nlohmann::json::parse(R"({"ram":1,"prec":null,"coeffs":[["x","1"]]})")),
                     parse_error);
        EXPECT_THROW(table_from_json(nlohmann::json::parse(R"({"nf":0,"rows":[{"m":0}]})")), parse_error);
        EXPECT_THROW(table_from_json(nlohmann::json::parse(
                             R"({"nf":0,"rows":[{"m":0,"n":0,"value":"1/0","h_combo":[]}]})")),
                     parse_error);
}
