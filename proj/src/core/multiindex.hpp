#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace su3t {

// Multi-indices on {1..6} are bitmasks: bit i-1 set iff index i present.
// Coefficients are always stored on increasing multi-indices; every wedge
// canonicalizes by counting inversions.

using Mask = std::uint8_t;
inline constexpr Mask kFullMask = 0x3F;

inline int mask_degree(Mask m) { return __builtin_popcount(m); }

inline constexpr std::array<int, 7> kBinom6 = {1, 6, 15, 20, 15, 6, 1};

/// Masks of the given degree, ordered by increasing index tuple.
const std::vector<Mask>& degree_masks(int k);

/// Position of a mask within degree_masks(degree(m)).
int mask_position(Mask m);

/// Sign of e^A wedge e^B as a reordering of e^{A union B}; 0 if A,B overlap.
int wedge_sign(Mask a, Mask b);

/// Sign s with e^M wedge e^{M^c} = s * e^{123456}.
int complement_sign(Mask m);

/// Sign picked up when index i (1-based, must be in m) is pulled to the front.
int interior_sign(Mask m, int i);

std::string mask_to_digits(Mask m);  // e.g. {1,4,5} -> "145"
Mask mask_from_digits(const std::string& s);

}  // namespace su3t
