#pragma once

#include <vector>

#include "tandiv/circle_set.hpp"
#include "tandiv/schedule.hpp"

namespace tandiv {

// The alternating indicator construction: U_k = comb(n_k, 5 delta_k),
// E_1 = U_1, then E_k = E_{k-1} \ U_k for even k and E_{k-1} u U_k for odd k.
// E_depth stands in for the limit set; every downstream bound transfers
// through the certified tail masses.
struct SetSequence {
    std::vector<IntervalUnion> combs; // U_1..U_K
    std::vector<IntervalUnion> sets;  // E_1..E_K

    const IntervalUnion& comb(int k) const { return combs.at((std::size_t)k - 1); }
    const IntervalUnion& set(int k) const { return sets.at((std::size_t)k - 1); }
    const IntervalUnion& final_set() const { return sets.back(); }
    int depth() const { return (int)sets.size(); }
};

SetSequence build_sets(const Schedule& s);

} // namespace tandiv
