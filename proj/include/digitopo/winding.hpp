#pragma once

#include "path.hpp"

namespace digitopo {

// The 4-point digital circle {(1,0),(0,1),(-1,0),(0,-1)} based at (1,0).
inline DigitalImage diamond() {
    return DigitalImage(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, Point{1, 0});
}

// Covering projection Z -> D.
inline Point wrap(Coord n) {
    switch (floor_mod(n, 4)) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

inline LatticeLoop diamond_generator() { return LatticeLoop({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}}); }

// Unique lift through wrap starting in [0,4).
inline std::vector<Coord> lift_path_D(const LatticePath& a) {
    if (a.steps.empty()) throw Error(Error::Kind::precondition, "lift of an empty path");
    std::vector<Coord> lift;
    Coord start = -1;
    for (Coord n = 0; n < 4; ++n)
        if (wrap(n) == a.front()) start = n;
    if (start < 0) throw Error(Error::Kind::membership, "(" + to_string(a.front()) + ") is not a point of D");
    lift.push_back(start);
    for (std::size_t i = 1; i < a.steps.size(); ++i) {
        Coord cur = lift.back();
        int hits = 0;
        Coord next = 0;
        for (Coord d = -1; d <= 1; ++d)
            if (wrap(cur + d) == a.steps[i]) {
                ++hits;
                next = cur + d;
            }
        if (hits != 1)
            throw Error(Error::Kind::precondition,
                        "lift: step " + std::to_string(i) + " (" + to_string(a.steps[i]) + ") has " + std::to_string(hits) +
                            " candidate lifts");
        lift.push_back(next);
    }
    return lift;
}

inline Coord winding(const LatticeLoop& a) {
    auto lift = lift_path_D(a);
    return lift.back() - lift.front();
}

inline Coord winding_class(const LatticeLoop& a) {
    Coord w = winding(a);
    if (floor_mod(w, 4) != 0) throw Error(Error::Kind::precondition, "winding of a closed loop must be a multiple of 4");
    return w / 4;
}

}  // namespace digitopo
