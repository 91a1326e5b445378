#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twistkit::testing {

/// Outcome of one randomized property suite.
struct Tally {
  std::string name;
  unsigned passed = 0;
  unsigned total = 0;
  std::string first_failure;

  bool ok() const { return total > 0 && passed == total; }
  void record(bool good, const std::string& what);
};

/// Gauge diagram commutes (50 cases), perturbed inputs are caught (10),
/// every mu_from_gauge output passes MCH, and both formulas for Lambda agree.
std::vector<Tally> gauge_suite(std::uint64_t seed);

/// d_mu and L^mu for mu = df against their gauged forms (20 forms each),
/// and d_mu o d_mu = 0 for flat mu (scalar and matrix).
std::vector<Tally> deformed_suite(std::uint64_t seed);

/// check_mu_prolongation accepts prolong_mu outputs (10) and rejects them
/// with one coefficient bumped (10).
std::vector<Tally> prolongation_criterion_suite(std::uint64_t seed);

/// mu_deviation vanishes on Q = 0 (u_x eliminated), 20 cases, orders 1-3.
Tally mu_deviation_suite(std::uint64_t seed);

}  // namespace twistkit::testing
