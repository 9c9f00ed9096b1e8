#pragma once

#include <cstdint>
#include <string>

#include "ordrel/duality.hpp"

namespace ordrel {

// Configuration for the acceptance suite.  The defaults match the shipped
// acceptance gate: exhaustive up to 3-element posets, a seeded random tier
// at 4 elements, exact equality everywhere (no tolerances).
struct suite_config {
  std::size_t max_poset_size = 3; // exhaustive tier bound
  std::size_t sampled_size = 4;   // random tier poset size
  std::uint64_t random_seed = 1;
  std::size_t sample_count = 1000;
  limits lim = default_limits();
};

// Runs the ten acceptance criteria and returns one entry per criterion.
// A criterion that throws (for example on a size-guard trip) is reported
// as a failing entry, never as an aborted run.
check_report run_suite(const suite_config& cfg = {});

// One "PASS/FAIL  name  [instances]  witness" line per entry.
std::string format_report(const check_report& rep);

} // namespace ordrel
