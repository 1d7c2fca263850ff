#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qd::ref {

/*
 * Published values used as fixed targets by the tests and the `tables`
 * verification suite.  Rationals are kept as strings so the tables read
 * the way they were printed.
 */

struct PrintedRow {
        long                                     m, n;
        std::string                              value;
        std::vector<std::pair<long, std::string>> combo; /* (k, weight of H_k) */
};

inline const std::vector<PrintedRow> &printed_table_nf0() {
        static const std::vector<PrintedRow> t = {
                {0, 0, "-1", {{1, "-1/4"}, {0, "6"}}},
                {0, 2, "-3/16", {{2, "-49/64"}, {1, "9/4"}, {0, "-2133/64"}}},
                {1, 1, "-5/16", {{2, "-7/64"}, {1, "1/4"}, {0, "-195/64"}}},
                {2, 0, "-19/16", {{2, "-1/64"}, {1, "-1/4"}, {0, "411/64"}}},
                {0, 4, "-29/32", {{3, "-14641/1024"}, {2, "2401/128"}, {1, "44631/1024"}, {0, "108741/128"}}},
                {1, 3, "-19/32", {{3, "-1331/1024"}, {2, "-49/128"}, {1, "10341/1024"}, {0, "-1749/128"}}},
                {2, 2, "-17/32", {{3, "-121/1024"}, {2, "-91/128"}, {1, "2895/1024"}, {0, "-3687/128"}}},
                {3, 1, "-23/32", {{3, "-11/1024"}, {2, "-29/128"}, {1, "589/1024"}, {0, "-753/128"}}},
                {4, 0, "-85/32", {{3, "-1/1024"}, {2, "-7/128"}, {1, "-505/1024"}, {0, "1725/128"}}},
                {0, 6, "-69525/4096", {{4, "-11390625/16384"}, {2, "44838675/16384"}, {1, "6075/4"}, {0, "-76478175/2048"}}},
                {1, 5, "-26907/4096", {{4, "-759375/16384"}, {3, "-43923/512"}, {2, "4833213/16384"}, {1, "185733/512"}, {0, "5340591/2048"}}},
                {2, 4, "-12853/4096", {{4, "-50625/16384"}, {3, "-9317/512"}, {2, "462707/16384"}, {1, "43587/512"}, {0, "1179489/2048"}}},
                {3, 3, "-7803/4096", {{4, "-3375/16384"}, {3, "-363/128"}, {2, "861/16384"}, {1, "2829/128"}, {0, "-69201/2048"}}},
                {4, 2, "-6357/4096", {{4, "-225/16384"}, {3, "-99/256"}, {2, "-21549/16384"}, {1, "1653/256"}, {0, "-108639/2048"}}},
                {5, 1, "-8155/4096", {{4, "-15/16384"}, {3, "-25/512"}, {2, "-9475/16384"}, {1, "815/512"}, {0, "-29265/2048"}}},
                {6, 0, "-29557/4096", {{4, "-1/16384"}, {3, "-3/512"}, {2, "-3021/16384"}, {1, "-619/512"}, {0, "71649/2048"}}},
        };
        return t;
}

inline const std::vector<PrintedRow> &printed_table_nf2() {
        static const std::vector<PrintedRow> t = {
                {0, 0, "-3", {{2, "-1/4"}, {0, "27/4"}}},
                {0, 1, "0", {{3, "-11/16"}, {1, "77/16"}}},
                {1, 0, "0", {{3, "-1/16"}, {1, "7/16"}}},
                {0, 2, "-21/16", {{4, "-225/64"}, {2, "1043/64"}, {0, "-567/8"}}},
                {1, 1, "-27/16", {{4, "-15/64"}, {2, "61/64"}, {0, "-9/8"}}},
                {2, 0, "-53/16", {{4, "-1/64"}, {2, "-13/64"}, {0, "57/8"}}},
                {0, 3, "0", {{5, "-6859/256"}, {3, "22869/256"}, {1, "12555/128"}}},
                {1, 2, "0", {{5, "-361/256"}, {3, "759/256"}, {1, "2217/128"}}},
                {2, 1, "0", {{5, "-19/256"}, {3, "-115/256"}, {1, "659/128"}}},
                {3, 0, "0", {{5, "-1/256"}, {3, "-33/256"}, {1, "129/128"}}},
                {0, 4, "-3955/256", {{6, "-279841/1024"}, {4, "664875/1024"}, {2, "366667/256"}, {0, "4203535/1024"}}},
                {1, 3, "-1925/256", {{6, "-12167/1024"}, {4, "10125/1024"}, {2, "37709/256"}, {0, "-195895/1024"}}},
                {2, 2, "-1219/256", {{6, "-529/1024"}, {4, "-2565/1024"}, {2, "5051/256"}, {0, "-61409/1024"}}},
                {3, 1, "-949/256", {{6, "-23/1024"}, {4, "-451/256"}, {2, "541/256"}, {0, "-1735/1024"}}},
                {4, 0, "-1811/256", {{6, "-1/1024"}, {4, "-53/1024"}, {2, "-85/256"}, {0, "15151/1024"}}},
        };
        return t;
}

inline const std::vector<PrintedRow> &printed_table_nf3() {
        static const std::vector<PrintedRow> t = {
                {0, 0, "-5/4", {{4, "-1/16"}, {2, "3/16"}, {0, "3/2"}}},
                {0, 1, "-95/96", {{6, "-23/128"}, {4, "119/384"}, {2, "45/32"}, {0, "313/128"}}},
                {1, 0, "45/32", {{6, "-1/128"}, {4, "11/128"}, {2, "-5/32"}, {0, "-209/128"}}},
                {0, 2, "-1787/768", {{8, "-961/1024"}, {6, "851/1024"}, {4, "133/24"}, {2, "4587/1024"}, {0, "-171/128"}}},
                {1, 1, "201/256", {{8, "-31/1024"}, {6, "743/3076"}, {4, "-5/24"}, {2, "-4577/3072"}, {0, "-991/384"}}},
                {2, 0, "-489/256", {{8, "-1/1024"}, {6, "19/1024"}, {4, "-1/8"}, {2, "171/1024"}, {0, "277/128"}}},
                {0, 3, "-189187/18432", {{10, "-59319/8192"}, {8, "12493/8192"}, {6, "70403/2048"}, {4, "3091945/73728"}, {2, "600451/12288"}, {0, "-970759/12288"}}},
                {1, 2, "2211/2048", {{10, "-1521/8192"}, {8, "9579/8192"}, {6, "-2065/6144"}, {4, "-128731/24576"}, {2, "-29563/12288"}, {0, "35039/12288"}}},
                {2, 1, "-1627/2048", {{10, "-39/8192"}, {8, "1751/24576"}, {6, "-2087/6144"}, {4, "4051/24576"}, {2, "7953/4096"}, {0, "40585/12288"}}},
                {3, 0, "5843/2048", {{10, "-1/8192"}, {8, "27/8192"}, {6, "-75/2048"}, {4, "1575/8192"}, {2, "-825/4096"}, {0, "-12987/4096"}}},
        };
        return t;
}

inline const std::vector<PrintedRow> &printed_table(int nf) {
        switch (nf) {
        case 0:
                return printed_table_nf0();
        case 2:
                return printed_table_nf2();
        default:
                return printed_table_nf3();
        }
}

/* H_0 .. H_10 of Q+ */
inline const std::vector<long> &printed_H() {
        static const std::vector<long> h = {1, 28, 39, 196, 161, 756, 602, 2352, 1671, 6440, 4396};
        return h;
}

/* Leading three coefficients of Lambda^(side)(3,1,k,j), from q^-8 (side 1) or q^-12 (side 2) in steps of q^4. */
struct PrintedLambda {
        int                      side;
        long                     k, j;
        std::vector<std::string> lead;
};

inline const std::vector<PrintedLambda> &printed_lambda_3_1() {
        static const std::vector<PrintedLambda> t = {
                {1, 0, 0, {"1/256", "43/256", "7/16"}},
                {1, 1, 0, {"1/768", "35/768", "-13/48"}},
                {1, 1, 1, {"-1/768", "-59/768", "-85/96"}},
                {2, 0, 0, {"-1/3072", "-7/256", "-11/16", "-85/96"}},
                {2, 1, 0, {"1/3072", "5/256", "13/64", "-247/48"}},
                {2, 1, 1, {"1/1024", "-13/256", "-203/64", "85/16"}},
        };
        return t;
}

/* Coefficients of the eta^6-normalized Vafa-Witten series, q^1 .. q^7. */
inline const std::vector<long> &printed_vafa_witten() {
        static const std::vector<long> v = {1, 9, 48, 203, 729, 2346, 6918};
        return v;
}

/* (exponent, coefficient) pairs, renormalized variable */
using Terms = std::vector<std::pair<Rational, Rational>>;

inline Terms printed_calQ() {
        return {{-1, 1}, {3, 28}, {7, 39}, {11, 196}, {15, 161}, {19, 756}};
}
inline Terms printed_Z0() { return {{-1, 1}, {3, 24}, {7, 27}, {11, 168}}; }
inline Terms printed_Z0_f0() { return {{-4, 1}, {0, 0}, {4, -276}, {8, 4096}, {12, -33606}}; }
inline Terms printed_Z0_f3() { return {{-10, 1}, {-6, 60}, {-2, 738}, {2, -11256}}; }

/* S-transformed Q in the original variable */
inline Terms printed_Q_transform_S() {
        return {{rat(-1, 8), rat(5, 2)},
                {rat(7, 8), rat(111, 2)},
                {rat(15, 8), rat(413, 2)},
                {rat(23, 8), 819},
                {rat(31, 8), rat(4407, 2)}};
}

} // namespace qd::ref
