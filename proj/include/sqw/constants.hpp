#pragma once

namespace sqw {

// Numeric tolerances and size caps used across the library.
// Operator-equality checks compare entrywise maxima; norm checks are
// absolute. Caps guard the exponential searches and dense materialization.
inline constexpr double kOperatorTol = 1e-10; // operator equality, entrywise max
inline constexpr double kNormTol = 1e-12;     // state norms, stochastic row sums
inline constexpr int kDenseCap = 4096;        // largest dimension built densely
inline constexpr int kCliqueGuard = 64;       // maximal-clique enumeration vertex guard
inline constexpr int kIsoCap = 12;            // exact isomorphism vertex cap
inline constexpr int kKrauszCap = 40;         // Krausz-partition search vertex cap
inline constexpr int kMatchingCap = 2000;     // perfect matchings examined per graph
inline constexpr int kBruteTessCap = 8;       // exhaustive tessellation search vertex cap

} // namespace sqw
