#pragma once

#include <cstddef>

namespace varlat {

  // Size bounds shared by every exhaustive procedure in the library.
  struct Caps {
    unsigned    max_letters   = 8;
    unsigned    max_p         = 6;
    std::size_t max_carrier   = 1'000'000;
    std::size_t max_instances = 20'000'000;
    std::size_t max_table     = 2048;
    std::size_t lattice_cap   = 512;
  };

}  // namespace varlat
