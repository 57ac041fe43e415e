#pragma once

#include <optional>
#include <vector>

#include "birlinks/blowup.hpp"
#include "birlinks/catalog.hpp"

namespace birlinks {

// alpha * (-K_Y) + beta * E on the Kawamata blowup of a terminal CQS
struct DivisorClass2 {
    Rat alpha;
    Rat beta;
};

// E^3 on the Kawamata blowup of 1/r(1,a,r-a): r^2 / (a (r - a))
Rat e_cubed(const Cqs& s);

// Intersection geometry needed for triple products: only iota^3 A^3 and the
// centre's E^3 enter (phi^*(-K_X)^2 E = phi^*(-K_X) E^2 = 0).
struct BlowupNumbers {
    Rat k_cubed;  // iota^3 A^3
    Rat inv_r;    // 1/r
    Rat e3;

    BlowupNumbers(const WciFamily& f, const Cqs& centre);
    explicit BlowupNumbers(const KawamataBlowup& b);
};

Rat triple_product(const BlowupNumbers& b, const DivisorClass2& c1, const DivisorClass2& c2,
                   const DivisorClass2& c3);

struct CurveVerdict {
    bool all_excluded = false;
    Rat bound; // iota^2 A^3 when not all excluded
};
CurveVerdict curve_exclusion(const WciFamily& f);

// 4 / (iota^2 A^3)
Rat isolating_threshold(const WciFamily& f);

// max over l not in {j} or K of lcm(a_j, a_l)
long long lcm_isolation(const WciFamily& f, int j, const std::vector<int>& excluded);

struct NefTest {
    Rat c;      // max(e_i / b_i)
    Rat value;  // M (-K_Y)^2 for M = -K_Y + c E
};
// lifts are pairs (b_i > 0, e_i >= 0) of user-declared isolating divisors
NefTest nef_test_class(const BlowupNumbers& b, const std::vector<std::pair<Rat, Rat>>& lifts);

} // namespace birlinks
