#pragma once

#include <array>
#include <string>
#include <vector>

#include "birlinks/rational.hpp"

namespace birlinks {

using Vec2 = std::array<long long, 2>;
using Mat2 = std::array<std::array<long long, 2>, 2>; // row-major

inline long long cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline Vec2 mul(const Mat2& m, const Vec2& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}
inline long long det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
Vec2 primitive(Vec2 v);

struct Column {
    std::string name;
    Vec2 deg{};
};

// A rank-2 toric variety given by a 2xm integer weight matrix with named
// columns and an irrelevant-ideal partition: columns [0, split) form the
// first block, [split, m) the second.
struct RankTwoToric {
    std::vector<Column> cols;
    int split = 1;
    std::string provenance;

    const Column& col(const std::string& name) const;
    int index_of(const std::string& name) const;
};

struct Ray {
    Vec2 dir{};                 // primitive
    std::vector<int> cols;      // column indices on this ray
};

struct ChamberDecomposition {
    std::vector<Ray> rays;      // angularly ordered, first block side first
    int eff_lo = 0, eff_hi = 0; // boundary ray indices of Eff
    int mov_lo = 0, mov_hi = 0; // boundary ray indices of Mov
    std::vector<std::pair<int, int>> chambers; // consecutive ray pairs inside Mov

    const Ray& ray(int i) const { return rays[static_cast<std::size_t>(i)]; }
};

// Throws on zero columns or a non strictly convex column set.
ChamberDecomposition chambers(const RankTwoToric& t);

// Unimodular A with det +-1 such that in A*t the chosen ray's columns have
// second coordinate zero and positive first coordinate.
std::pair<Mat2, RankTwoToric> normalize_wall(const RankTwoToric& t, Vec2 ray);

struct WallLoci {
    std::vector<long long> contracted; // residual weights, first-block side
    std::vector<long long> extracted;  // second-block side
    std::vector<long long> base;       // wall column weights along the ray
};

// Loci exchanged when crossing an interior wall of Mov.
WallLoci wall_loci(const RankTwoToric& t, Vec2 ray);

// Clears common row factors; returns the transformed variety and the order
// r of the residual cyclic quotient action (1 when none remains).
std::pair<RankTwoToric, long long> well_form_rank2(const RankTwoToric& t);

} // namespace birlinks
