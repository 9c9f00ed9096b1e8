// Acceptance gate: runs the ten shipped criteria and prints one line per
// criterion.  Exit status 0 iff every criterion passes.
//
// All criteria compare mathematical objects (posets, lattices, relations,
// maps) for exact equality -- there are no numeric tolerances anywhere in
// the suite.  The instance tiers are pinned here: exhaustive over all
// labeled posets with at most kExhaustiveSize elements, plus a seeded
// random tier of kSampleCount instances at kSampledSize elements where a
// criterion calls for one.

#include <cstdio>

#include "ordrel/suite.hpp"

namespace {

constexpr std::size_t kExhaustiveSize = 3;
constexpr std::size_t kSampledSize = 4;
constexpr std::uint64_t kRandomSeed = 1;
constexpr std::size_t kSampleCount = 1000;

} // namespace

int main() {
  ordrel::suite_config cfg;
  cfg.max_poset_size = kExhaustiveSize;
  cfg.sampled_size = kSampledSize;
  cfg.random_seed = kRandomSeed;
  cfg.sample_count = kSampleCount;

  ordrel::check_report rep = ordrel::run_suite(cfg);
  std::fputs(ordrel::format_report(rep).c_str(), stdout);
  return rep.all_pass() ? 0 : 1;
}
