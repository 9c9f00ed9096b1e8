#pragma once

#include <cstddef>

namespace ordrel {

// Size guards for the operations whose outputs grow exponentially.  The
// environment variable ORDREL_MAX_SIZE=N (read once) rescales the defaults:
// max_dual_space = N, max_hom_product = N*N, max_dual_algebra = 2^N capped
// at 2^20.  Callers that pass an explicit limits object win over the
// environment.
struct limits {
  std::size_t max_dual_space = 6;    // |X| when building the upset lattice
  std::size_t max_dual_algebra = 64; // |A| when extracting prime filters
  std::size_t max_hom_product = 20;  // |A^op x B| for relation enumeration
  std::size_t max_enum_posets = 5;   // n for poset enumeration
  // upset posets built internally as middles of span/cospan duals
  std::size_t max_internal_upsets = 4096;
  // output size of a cocomma of lattices (meet/join tables are quadratic)
  std::size_t max_cocomma_lattice = 1024;
};

const limits& default_limits();

// the ORDREL_MAX_SIZE=N rescaling, also used by the CLI --max-size flag
limits limits_for_size(std::size_t n);

} // namespace ordrel
