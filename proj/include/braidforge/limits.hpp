#pragma once

#include <cstdint>

namespace braidforge {

// Size guards for the brute-force enumerations.
struct Limits {
  int64_t enum_guard = 256;  // max |G| for subgroup and isotropic enumeration
  int64_t aut_guard = 64;    // max |G| for automorphism and isomorphism search
  int64_t rank_guard = 12;   // max fusion-ring rank for the subring lattice
  int64_t max_automorphisms = 2'000'000;
  int64_t max_subgroups = 200'000;
};

}  // namespace braidforge
