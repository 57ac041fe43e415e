#include "birlinks/toric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace birlinks {

Vec2 primitive(Vec2 v) {
    long long g = std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]);
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    return {v[0] / g, v[1] / g};
}

const Column& RankTwoToric::col(const std::string& name) const {
    return cols[static_cast<std::size_t>(index_of(name))];
}

int RankTwoToric::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("no column named '" + name + "'");
}

ChamberDecomposition chambers(const RankTwoToric& t) {
    if (t.cols.empty() || t.split <= 0 || t.split >= static_cast<int>(t.cols.size()))
        throw std::invalid_argument("chambers: both irrelevant-ideal blocks must be nonempty");
    for (const auto& c : t.cols)
        if (c.deg[0] == 0 && c.deg[1] == 0)
            throw std::invalid_argument("chambers: zero column '" + c.name + "'");

    std::vector<Ray> rays;
    for (std::size_t i = 0; i < t.cols.size(); ++i) {
        Vec2 p = primitive(t.cols[i].deg);
        bool placed = false;
        for (auto& r : rays)
            if (r.dir == p) {
                r.cols.push_back(static_cast<int>(i));
                placed = true;
            }
        if (!placed) rays.push_back(Ray{p, {static_cast<int>(i)}});
    }

    // An extreme ray sees every other ray strictly on its counterclockwise
    // side; its existence is exactly strict convexity of the span.
    int extreme = -1;
    for (std::size_t e = 0; e < rays.size() && extreme < 0; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < rays.size(); ++x)
            if (x != e && cross(rays[e].dir, rays[x].dir) <= 0) ok = false;
        if (ok) extreme = static_cast<int>(e);
    }
    if (extreme < 0 && rays.size() > 1)
        throw std::invalid_argument("chambers: column rays must span a strictly convex cone");
    if (extreme < 0) extreme = 0;

    std::swap(rays[0], rays[static_cast<std::size_t>(extreme)]);
    std::sort(rays.begin() + 1, rays.end(),
              [](const Ray& a, const Ray& b) { return cross(a.dir, b.dir) > 0; });

    ChamberDecomposition out;
    out.rays = std::move(rays);
    out.eff_lo = 0;
    out.eff_hi = static_cast<int>(out.rays.size()) - 1;
    auto mov_side = [&](int boundary, int step) {
        if (out.rays[static_cast<std::size_t>(boundary)].cols.size() >= 2) return boundary;
        int inner = boundary + step;
        if (inner < 0 || inner >= static_cast<int>(out.rays.size())) return boundary;
        return inner;
    };
    out.mov_lo = mov_side(out.eff_lo, +1);
    out.mov_hi = mov_side(out.eff_hi, -1);
    if (out.mov_lo > out.mov_hi) { out.mov_lo = out.eff_lo; out.mov_hi = out.eff_hi; }
    for (int i = out.mov_lo; i < out.mov_hi; ++i) out.chambers.push_back({i, i + 1});
    return out;
}

std::pair<Mat2, RankTwoToric> normalize_wall(const RankTwoToric& t, Vec2 ray) {
    Vec2 p = primitive(ray);
    bool found = false;
    for (const auto& c : t.cols)
        if (primitive(c.deg) == p) found = true;
    if (!found)
        throw std::invalid_argument("normalize_wall: ray is not spanned by any column");

    // extended gcd: x*p0 + y*p1 = 1, so [[x, y], [-p1, p0]] is unimodular
    long long x, y;
    {
        long long a = p[0], b = p[1];
        long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            long long q = a / b;
            long long t2;
            t2 = a - q * b; a = b; b = t2;
            t2 = x0 - q * x1; x0 = x1; x1 = t2;
            t2 = y0 - q * y1; y0 = y1; y1 = t2;
        }
        if (a < 0) { x0 = -x0; y0 = -y0; }
        x = x0;
        y = y0;
    }
    Mat2 A{{{x, y}, {-p[1], p[0]}}};
    if (det(A) != 1 && det(A) != -1)
        throw std::logic_error("normalize_wall: transform not unimodular");
    RankTwoToric out = t;
    for (auto& c : out.cols) c.deg = mul(A, c.deg);
    out.provenance = t.provenance.empty() ? "normalized" : t.provenance + ";normalized";
    return {A, out};
}

WallLoci wall_loci(const RankTwoToric& t, Vec2 ray) {
    Vec2 p = primitive(ray);
    auto dec = chambers(t);
    bool interior = false;
    for (int i = dec.mov_lo + 1; i < dec.mov_hi; ++i)
        if (dec.rays[static_cast<std::size_t>(i)].dir == p) interior = true;
    if (!interior)
        throw std::invalid_argument("wall_loci: ray is not strictly inside Mov");

    // the block-1 side carries the contracted locus
    long long s1 = 0;
    for (int i = 0; i < t.split && s1 == 0; ++i) s1 = cross(p, t.cols[static_cast<std::size_t>(i)].deg);
    if (s1 == 0) throw std::invalid_argument("wall_loci: first block lies on the wall");

    WallLoci out;
    for (const auto& c : t.cols) {
        long long x = cross(p, c.deg);
        if (x == 0) {
            long long lambda = (p[0] != 0) ? c.deg[0] / p[0] : c.deg[1] / p[1];
            out.base.push_back(lambda < 0 ? -lambda : lambda);
        } else if ((x > 0) == (s1 > 0)) {
            out.contracted.push_back(x > 0 ? x : -x);
        } else {
            out.extracted.push_back(x > 0 ? x : -x);
        }
    }
    if (out.contracted.empty() || out.extracted.empty())
        throw std::invalid_argument("wall_loci: wall has an empty side");
    std::sort(out.contracted.rbegin(), out.contracted.rend());
    std::sort(out.extracted.rbegin(), out.extracted.rend());
    std::sort(out.base.begin(), out.base.end());
    return out;
}

std::pair<RankTwoToric, long long> well_form_rank2(const RankTwoToric& t) {
    RankTwoToric out = t;
    long long residual = 1;
    for (int row = 0; row < 2; ++row) {
        long long g = 0;
        for (const auto& c : out.cols)
            g = std::gcd(g, c.deg[static_cast<std::size_t>(row)] < 0
                                ? -c.deg[static_cast<std::size_t>(row)]
                                : c.deg[static_cast<std::size_t>(row)]);
        if (g > 1) {
            for (auto& c : out.cols) c.deg[static_cast<std::size_t>(row)] /= g;
            residual *= g;
        }
    }
    if (residual > 1)
        out.provenance = (out.provenance.empty() ? "" : out.provenance + ";") + std::string("mu_") +
                         std::to_string(residual) + "-quotient";
    return {out, residual};
}

} // namespace birlinks
