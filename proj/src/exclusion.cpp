#include "birlinks/exclusion.hpp"

#include <numeric>
#include <stdexcept>

namespace birlinks {

Rat e_cubed(const Cqs& s) {
    if (!is_terminal(s)) throw std::invalid_argument("e_cubed: " + s.str() + " is not terminal");
    Cqs n = cqs_normal_form(s);
    if (n.r == 1) throw std::invalid_argument("e_cubed: trivial germ");
    return Rat(n.r * n.r) / (Rat(n.b[1]) * Rat(n.b[2]));
}

BlowupNumbers::BlowupNumbers(const WciFamily& f, const Cqs& centre) {
    Cqs n = cqs_normal_form(centre);
    Rat i3 = Rat(f.fano_index) * Rat(f.fano_index) * Rat(f.fano_index);
    k_cubed = i3 * anticanonical_degree(f);
    inv_r = Rat(1, n.r);
    e3 = e_cubed(n);
}

BlowupNumbers::BlowupNumbers(const KawamataBlowup& b) : BlowupNumbers(b.family, b.point.cqs) {}

Rat triple_product(const BlowupNumbers& b, const DivisorClass2& c1, const DivisorClass2& c2,
                   const DivisorClass2& c3) {
    // expand over (phi^*(-K_X), E): alpha(-K_Y) + beta E = alpha P + (beta - alpha/r) E
    Rat g1 = c1.beta - c1.alpha * b.inv_r;
    Rat g2 = c2.beta - c2.alpha * b.inv_r;
    Rat g3 = c3.beta - c3.alpha * b.inv_r;
    return c1.alpha * c2.alpha * c3.alpha * b.k_cubed + g1 * g2 * g3 * b.e3;
}

CurveVerdict curve_exclusion(const WciFamily& f) {
    Rat bound = Rat(f.fano_index) * Rat(f.fano_index) * anticanonical_degree(f);
    if (bound <= Rat(1)) return {true, bound};
    return {false, bound};
}

Rat isolating_threshold(const WciFamily& f) {
    return Rat(4) / (Rat(f.fano_index) * Rat(f.fano_index) * anticanonical_degree(f));
}

long long lcm_isolation(const WciFamily& f, int j, const std::vector<int>& excluded) {
    if (j < 0 || j >= static_cast<int>(f.weights.size()))
        throw std::invalid_argument("lcm_isolation: index out of range");
    long long best = -1;
    for (int l = 0; l < static_cast<int>(f.weights.size()); ++l) {
        if (l == j) continue;
        bool skip = false;
        for (int k : excluded)
            if (k == l) skip = true;
        if (skip) continue;
        best = std::max(best, std::lcm(f.weights[static_cast<std::size_t>(j)],
                                       f.weights[static_cast<std::size_t>(l)]));
    }
    if (best < 0) throw std::invalid_argument("lcm_isolation: empty comparison set");
    return best;
}

NefTest nef_test_class(const BlowupNumbers& b, const std::vector<std::pair<Rat, Rat>>& lifts) {
    Rat c(0);
    for (const auto& [bi, ei] : lifts) {
        if (bi <= Rat(0) || ei < Rat(0))
            throw std::invalid_argument("nef_test_class: lifts must have b_i > 0 and e_i >= 0");
        Rat q = ei / bi;
        if (q > c) c = q;
    }
    if (c > b.inv_r)
        throw std::invalid_argument("hypothesis (3) of the nef criterion fails: c > 1/r");
    DivisorClass2 M{Rat(1), c};
    DivisorClass2 K{Rat(1), Rat(0)};
    return {c, triple_product(b, M, K, K)};
}

} // namespace birlinks
