#pragma once

#include <array>
#include <optional>
#include <vector>

#include "birlinks/rational.hpp"

namespace birlinks {

struct WciFamily;

// A cyclic quotient singularity germ 1/r(b1,b2,b3), weights taken mod r.
struct Cqs {
    long long r = 1;
    std::array<long long, 3> b{1, 1, 1};

    friend bool operator==(const Cqs&, const Cqs&) = default;
    std::string str() const;
};

bool is_well_formed(const std::vector<long long>& weights);

// Normal form 1/r(1,a,r-a) when a unit multiple of that shape exists,
// otherwise the unit-reduced triple with smallest entry 1.
Cqs cqs_normal_form(const Cqs& s);

bool is_terminal(const Cqs& s);

// A^3 = d1*d2 / prod(a_i)
Rat anticanonical_degree(const WciFamily& f);

enum class PointKind { NotOnX, SmoothPoint, Cqs, Ambiguous };

// The elimination data at a coordinate point of a generic member: for each
// defining equation the variable x_j killed by the leading term xi^m x_j.
struct Elimination {
    int var = -1;       // index into the family's weight vector
    long long power = 0; // the xi-exponent m
};

struct CoordinatePointType {
    PointKind kind = PointKind::NotOnX;
    Cqs cqs;                       // normal form, valid when kind == Cqs
    Cqs raw;                       // local weights mod r before normalization
    std::array<Elimination, 2> elim{}; // per equation (d1-eq, d2-eq)
    std::array<int, 3> local{};    // indices of the transverse coordinates
    std::vector<Cqs> candidates;   // populated when Ambiguous
};

// Singularity analysis of the i-th coordinate point of a generic member.
// Assumption tags on the family are respected.
CoordinatePointType coordinate_point_type(const WciFamily& f, int i);

} // namespace birlinks
