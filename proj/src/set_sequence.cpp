#include "tandiv/set_sequence.hpp"

#include "tandiv/error.hpp"

namespace tandiv {

SetSequence build_sets(const Schedule& s) {
    require(s.variant == Variant::theorem1, errc::invalid_argument,
            "build_sets: the indicator construction belongs to the theorem1 variant");
    require(!s.entries.empty(), errc::invalid_argument, "build_sets: empty schedule");
    SetSequence seq;
    seq.combs.reserve(s.entries.size());
    seq.sets.reserve(s.entries.size());
    for (int k = 1; k <= s.depth; ++k) {
        const ScheduleEntry& e = s.level(k);
        IntervalUnion u = comb_set(e.n, s.comb_delta(k));
        if (k == 1) {
            seq.sets.push_back(u);
        } else if (k % 2 == 0) {
            seq.sets.push_back(subtract(seq.sets.back(), u));
        } else {
            seq.sets.push_back(unite(seq.sets.back(), u));
        }
        seq.combs.push_back(std::move(u));
    }
    return seq;
}

} // namespace tandiv
