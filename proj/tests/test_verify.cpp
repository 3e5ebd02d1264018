#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qvt/verify.hpp"

using namespace qvt;

namespace {

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

// Everything except the timing, which legitimately varies between runs.
bool same_outcomes(const std::vector<VerificationReport>& a,
                   const std::vector<VerificationReport>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].identity != b[i].identity || a[i].point != b[i].point ||
        a[i].expected != b[i].expected || a[i].actual != b[i].actual ||
        a[i].passed != b[i].passed) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("dm sweep passes and covers every weight split") {
  const auto reports = verify_dm_identity(6);
  CHECK(reports.size() == 15);  // (alpha, beta) pairs with 2 <= a+b <= 6
  CHECK(all_passed(reports));
  CHECK(reports.front().identity == "dm");
  CHECK(reports.front().point.to_string() == "alpha=1 beta=1");
  CHECK(reports.front().expected == reports.front().actual);
}

TEST_CASE("cardinality sweep passes and carries the m0 bound") {
  const auto reports = verify_cardinality(6);
  CHECK(all_passed(reports));
  const auto bounds = std::count_if(
      reports.begin(), reports.end(), [](const VerificationReport& r) {
        return r.identity == "cardinality_bound";
      });
  const auto counts = std::count_if(
      reports.begin(), reports.end(), [](const VerificationReport& r) {
        return r.identity == "cardinality";
      });
  CHECK(bounds == counts);
  CHECK(counts > 0);
}

TEST_CASE("sphere sweep passes") {
  const auto reports = verify_sphere_theorem(3);
  CHECK(reports.size() == 12);  // sum of 2*gamma points
  CHECK(all_passed(reports));
}

TEST_CASE("run-class sweep passes and includes the symmetry pairing") {
  const auto reports = verify_r_poly(4);
  CHECK(all_passed(reports));
  CHECK(std::count_if(reports.begin(), reports.end(),
                      [](const VerificationReport& r) {
                        return r.identity == "rpoly_symmetry";
                      }) == 16);  // gamma <= 4: sum of (2*gamma - 1)
}

TEST_CASE("root-of-unity sweep passes and records its tolerance") {
  const auto reports = verify_root_of_unity(3, 1e-6);
  CHECK(all_passed(reports));
  for (const auto& r : reports) CHECK(r.tolerance == 1e-6);
  CHECK_THROWS_AS(verify_root_of_unity(3, 0.0), std::invalid_argument);
}

TEST_CASE("decoder sweep passes") {
  const auto reports = verify_decoder(6);
  CHECK(all_passed(reports));
  for (const auto& r : reports) {
    CHECK(r.actual.find("spheres disjoint") != std::string::npos);
  }
}

TEST_CASE("sweeps are deterministic") {
  CHECK(same_outcomes(verify_dm_identity(5), verify_dm_identity(5)));
  CHECK(same_outcomes(verify_cardinality(5), verify_cardinality(5)));
  CHECK(same_outcomes(verify_r_poly(3), verify_r_poly(3)));
  CHECK(same_outcomes(verify_root_of_unity(3, 1e-6),
                      verify_root_of_unity(3, 1e-6)));
}

TEST_CASE("reports stream through the sink in emission order") {
  std::vector<VerificationReport> streamed;
  const auto returned = verify_dm_identity(
      5, [&](const VerificationReport& r) { streamed.push_back(r); });
  REQUIRE(streamed.size() == returned.size());
  CHECK(same_outcomes(streamed, returned));
}

TEST_CASE("parameter points render in emission order") {
  const ParamPoint point{{{"alpha", 2}, {"beta", 3}, {"m", 1}}};
  CHECK(point.to_string() == "alpha=2 beta=3 m=1");
  CHECK(ParamPoint{}.to_string().empty());
}
