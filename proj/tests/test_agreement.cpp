#include <doctest.h>

#include "support/agreement.hpp"

using namespace monorec::testing;

TEST_CASE("decisions agree with oracle windows on 500 random specs [property]") {
    const AgreementStats stats = run_agreement_suite(20240601, 500);
    for (const auto& f : stats.failures) {
        MESSAGE(f);
    }
    CHECK(stats.specs == 500);
    CHECK(stats.negative_discriminant == 250);
    CHECK(stats.h_type > 100);
    CHECK(stats.failures.empty());
}

TEST_CASE("agreement also holds on a second seed [property]") {
    const AgreementStats stats = run_agreement_suite(77, 300);
    for (const auto& f : stats.failures) {
        MESSAGE(f);
    }
    CHECK(stats.failures.empty());
}
