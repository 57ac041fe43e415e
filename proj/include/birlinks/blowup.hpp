#pragma once

#include <array>
#include <optional>
#include <vector>

#include "birlinks/catalog.hpp"
#include "birlinks/toric.hpp"
#include "birlinks/wps.hpp"

namespace birlinks {

using Expo = std::array<long long, 6>; // exponents over the family's weights

// Generic monomial of a defining equation, lifted to the blowup: the proper
// transform carries u^upow against the minimal vanishing order.
struct LiftedMono {
    Expo e{};
    long long upow = 0;
    bool leading = false; // the xi^r x_elim term fixing the normalization
};

// The computed Kawamata blowup of a terminal coordinate CQS (Lemma utbl
// data: k, per-variable vanishing orders, lift classes, the rank-2 ambient).
struct KawamataBlowup {
    WciFamily family;
    int centre = -1;
    CoordinatePointType point;

    long long k = 1;             // inverse of iota mod a_xi
    std::array<Rat, 6> nu{};     // vanishing order of each variable at E
    std::array<Rat, 2> m{};      // m_f, m_g for the d1- and d2-equation
    std::array<Rat, 6> alpha{};  // integer alpha_i: x_i in -(a_i/iota)K - (alpha_i/iota)E

    RankTwoToric ambient;            // columns u, then x0..x5 with centre second
    std::array<Vec2, 2> eq_bidegree{};
    Vec2 anticanonical{};            // bidegree of -K_Y
    std::array<std::vector<LiftedMono>, 2> support;

    long long centre_weight() const { return family.weights[static_cast<std::size_t>(centre)]; }
    Rat discrepancy() const { return Rat(1, centre_weight()); }
    int column_of_var(int var) const; // ambient column index of x_var
    int var_of_column(int col) const; // -1 for u
};

std::vector<Expo> enumerate_monomials(const std::vector<long long>& weights, long long degree);

// Minimal vanishing order of the degree-d equation at the exceptional divisor
// of the blowup centred at the given coordinate (d must be one of the two
// equation degrees; d = 0 returns 0).
Rat min_vanishing_order(const WciFamily& f, int centre, long long d);

KawamataBlowup kawamata_blowup(const WciFamily& f, int centre);

bool is_linear(const WciFamily& f, int centre);

struct LinearWitness {
    bool found = false;
    int centre = -1;   // coordinate index of the witnessing centre
    Cqs cqs;           // its normal form
};
LinearWitness has_linear_cqs(const WciFamily& f);

// Coordinate index realizing the given singularity (normal-form match);
// nullopt when the germ is not a coordinate point of the generic member.
std::optional<int> find_centre(const WciFamily& f, const Cqs& s);

} // namespace birlinks
