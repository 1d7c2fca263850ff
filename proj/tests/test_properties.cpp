#include <gtest/gtest.h>

#include "property_support.hpp"

namespace {

void expect_property(std::uint64_t seed, std::string (*prop)(qdt::Gen &)) {
        qdt::PropertyOutcome o = qdt::run_property(1000, seed, prop);
        EXPECT_EQ(o.cases, 1000);
        EXPECT_EQ(o.failures, 0) << o.first;
}

} // namespace

TEST(Properties, RingLaws) { expect_property(101, qdt::prop_ring); }
TEST(Properties, DerivationLaw) { expect_property(202, qdt::prop_derivation); }
TEST(Properties, RescaleAndShiftInverses) { expect_property(303, qdt::prop_inverses); }
TEST(Properties, PrecisionSoundness) { expect_property(404, qdt::prop_precision); }
