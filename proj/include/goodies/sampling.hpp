#pragma once

#include "goodies/assortment.hpp"
#include "goodies/rng.hpp"

namespace goodies {

// k independent entries, each uniform on {lo, ..., hi}. Requires
// 1 <= lo <= hi and k >= 1.
Assortment sample_uniform_box(int k, int lo, int hi, SplitMix64& rng);

// Uniform over the compositions of total into k positive parts (entry order
// significant), drawn by picking k-1 distinct cut points among the total-1
// interior positions. Requires total >= k >= 1.
Assortment sample_composition(int k, int total, SplitMix64& rng);

}  // namespace goodies
