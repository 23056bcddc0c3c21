#include "doctest.h"
#include "midlayer/suites.hpp"

using namespace midlayer;

namespace {

void require_pass(const SuiteReport& r) {
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.passed());
  CHECK(r.checks > 0);
}

}  // namespace

TEST_CASE("lattice suite") { require_pass(lattice_suite(12, 10)); }
TEST_CASE("trees suite") { require_pass(trees_suite(6, 12)); }
TEST_CASE("lemmas suite") { require_pass(lemmas_suite(5, 256, 1, 6)); }
TEST_CASE("parity suite") {
  require_pass(parity_suite(5));
  require_pass(parity_suite(7, 100, 3));
}
TEST_CASE("tau suite") { require_pass(tau_suite(4)); }
TEST_CASE("distinct suite") {
  require_pass(distinct_suite(4));
  require_pass(distinct_suite(5, 200, 2));
}
TEST_CASE("divisibility suite") { require_pass(divisibility_suite(5, 50, 4)); }
TEST_CASE("all-zero suite") { require_pass(all_zero_suite(7)); }

TEST_CASE("suite report caps stored failures") {
  SuiteReport r;
  for (int i = 0; i < 80; ++i) r.expect(false, "x");
  CHECK(r.checks == 80);
  CHECK_FALSE(r.passed());
  CHECK(r.failures.size() <= 51);
}
