#pragma once

// Deliberately broken variants of the fast algorithms, compiled only into the
// mutant build used to prove that `check` catches wrong answers.

namespace gridloc::detail {

#ifdef GRIDLOC_INJECT_FAULTS
inline constexpr bool kInjectFaults = true;
#else
inline constexpr bool kInjectFaults = false;
#endif

}  // namespace gridloc::detail
