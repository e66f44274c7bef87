#pragma once

namespace detline {

// Fault-injection switches for the verification harness: each flips one sign
// in a canonical-isomorphism formula so the diagram suites can demonstrate
// they would catch that mistake.  All off in normal operation.
struct SignTweaks {
  bool flip_triple_sign = false;   // epsilon in the exact-triple map
  bool flip_sum_sign = false;      // sign of the direct-sum map
  bool flip_comp_sign = false;     // sign of the composition map
  bool flip_dual_sign = false;     // sign of the dualization map
};

inline SignTweaks& sign_tweaks() {
  static SignTweaks t;
  return t;
}

}  // namespace detline
