#include "birlinks/wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "birlinks/catalog.hpp"

namespace birlinks {

std::string Cqs::str() const {
    return "1/" + std::to_string(r) + "(" + std::to_string(b[0]) + "," +
           std::to_string(b[1]) + "," + std::to_string(b[2]) + ")";
}

bool is_well_formed(const std::vector<long long>& weights) {
    if (weights.empty()) throw std::invalid_argument("is_well_formed: empty weight list");
    for (std::size_t skip = 0; skip < weights.size(); ++skip) {
        long long g = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (i != skip) g = std::gcd(g, weights[i]);
        if (g != 1) return false;
    }
    return true;
}

Cqs cqs_normal_form(const Cqs& s) {
    long long r = s.r;
    if (r == 1) return Cqs{1, {0, 0, 0}};
    for (long long w : s.b)
        if (std::gcd(mod_pos(w, r), r) != 1)
            throw std::invalid_argument("cqs_normal_form: not isolated/ill-formed germ " + s.str());

    std::optional<std::array<long long, 3>> best_terminal;
    std::optional<std::array<long long, 3>> best_unit;
    for (long long u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        std::array<long long, 3> t;
        for (int i = 0; i < 3; ++i) t[i] = mod_pos(u * s.b[i], r);
        std::sort(t.begin(), t.end());
        if (t[0] == 1 && (t[1] + t[2]) % r == 0) {
            if (!best_terminal || t < *best_terminal) best_terminal = t;
        }
        if (t[0] == 1 && (!best_unit || t < *best_unit)) best_unit = t;
    }
    if (best_terminal) return Cqs{r, *best_terminal};
    if (best_unit) return Cqs{r, *best_unit};
    // all weights are units, so u = b[0]^-1 always lands here
    throw std::logic_error("cqs_normal_form: no unit-reduced representative");
}

bool is_terminal(const Cqs& s) {
    if (s.r == 1) return true;
    for (long long w : s.b)
        if (std::gcd(mod_pos(w, s.r), s.r) != 1) return false;
    Cqs n = cqs_normal_form(s);
    return n.b[0] == 1 && (n.b[1] + n.b[2]) % n.r == 0 && n.b[1] > 0 &&
           std::gcd(n.b[1], n.r) == 1;
}

Rat anticanonical_degree(const WciFamily& f) {
    Rat prod(1);
    for (long long a : f.weights) prod *= Rat(a);
    return Rat(f.degrees[0]) * Rat(f.degrees[1]) / prod;
}

namespace {

// true iff some monomial in the given weights has the given degree
bool degree_representable(const std::vector<long long>& w, long long d) {
    if (d == 0) return true;
    if (w.empty()) return false;
    std::vector<char> reach(static_cast<std::size_t>(d) + 1, 0);
    reach[0] = 1;
    for (long long a : w)
        for (long long v = a; v <= d; ++v)
            if (reach[v - a]) reach[v] = 1;
    return reach[d] != 0;
}

} // namespace

CoordinatePointType coordinate_point_type(const WciFamily& f, int i) {
    const auto& a = f.weights;
    if (i < 0 || i >= static_cast<int>(a.size()))
        throw std::invalid_argument("coordinate_point_type: index out of range");
    long long r = a[i];

    CoordinatePointType out;
    if (r == 1) {
        out.kind = PointKind::SmoothPoint;
        return out;
    }

    // Stratum test: the point survives on X iff the number of defining
    // equations with nonzero restriction to P(Lambda) is at most dim P(Lambda),
    // where Lambda collects the coordinates of weight divisible by a_i.
    std::vector<long long> stratum;
    for (long long w : a)
        if (w % r == 0) stratum.push_back(w);
    int nonzero = 0;
    for (long long d : f.degrees)
        if (degree_representable(stratum, d)) ++nonzero;
    if (nonzero > static_cast<int>(stratum.size()) - 1) {
        out.kind = PointKind::NotOnX;
        return out;
    }

    // Active monomial-exclusion tags remove eliminator candidates too.
    std::vector<std::pair<int, std::array<long long, 6>>> excluded;
    for (const auto& name : f.assumptions) {
        auto tag = find_tag(name, f.id);
        if (!tag)
            throw std::invalid_argument("unknown assumption tag '" + name + "' for family " +
                                        std::to_string(f.id));
        for (const auto& e : tag->excluded) excluded.push_back(e);
    }

    // Eliminator candidates per equation: minimal xi-power first.
    auto candidates = [&](int eq) {
        long long d = f.degrees[static_cast<std::size_t>(eq)];
        std::vector<Elimination> c;
        for (long long m = 1; m * r < d; ++m) {
            long long need = d - m * r;
            for (int j = 0; j < static_cast<int>(a.size()); ++j) {
                if (j == i || a[j] != need) continue;
                std::array<long long, 6> mono{};
                mono[static_cast<std::size_t>(i)] = m;
                mono[static_cast<std::size_t>(j)] = 1;
                bool dropped = false;
                for (const auto& [teq, tex] : excluded)
                    if (teq == eq && tex == mono) dropped = true;
                if (!dropped) c.push_back({j, m});
            }
        }
        return c;
    };
    auto cf = candidates(0);
    auto cg = candidates(1);
    if (cf.empty() || cg.empty())
        throw std::runtime_error("generic member not quasismooth at coordinate point of weight " +
                                 std::to_string(r) + " in family " + std::to_string(f.id));

    // All valid assignments at minimal xi-power for each equation; distinct
    // choices may leave inequivalent local types, which we report as Ambiguous.
    long long mf = cf.front().power, mg = cg.front().power;
    std::vector<std::pair<Elimination, Elimination>> assignments;
    for (const auto& ef : cf) {
        if (ef.power != mf) break;
        for (const auto& eg : cg) {
            if (eg.power != mg) break;
            if (ef.var != eg.var) assignments.push_back({ef, eg});
        }
    }
    if (assignments.empty()) {
        // the unique minimal candidates collide; try bumping one equation
        for (const auto& ef : cf)
            for (const auto& eg : cg)
                if (ef.var != eg.var) {
                    assignments.push_back({ef, eg});
                    goto found;
                }
        if (f.degrees[0] % r == 0 || f.degrees[1] % r == 0) {
            out.kind = PointKind::NotOnX; // pure powers cannot both be absorbed
            return out;
        }
        throw std::runtime_error("generic member not quasismooth at coordinate point of weight " +
                                 std::to_string(r) + " in family " + std::to_string(f.id));
    }
found:;

    std::set<std::array<long long, 3>> types;
    std::vector<Cqs> normal_forms;
    for (auto& [ef, eg] : assignments) {
        std::array<long long, 3> loc;
        int n = 0;
        for (int j = 0; j < static_cast<int>(a.size()); ++j)
            if (j != i && j != ef.var && j != eg.var) loc[n++] = a[j];
        Cqs raw{r, {mod_pos(loc[0], r), mod_pos(loc[1], r), mod_pos(loc[2], r)}};
        Cqs nf = cqs_normal_form(raw);
        if (types.insert(nf.b).second) normal_forms.push_back(nf);
    }
    if (normal_forms.size() > 1) {
        out.kind = PointKind::Ambiguous;
        out.candidates = normal_forms;
        return out;
    }

    auto [ef, eg] = assignments.front();
    out.kind = PointKind::Cqs;
    out.elim = {ef, eg};
    int n = 0;
    std::array<long long, 3> loc;
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
        if (j != i && j != ef.var && j != eg.var) {
            out.local[n] = j;
            loc[n++] = a[j];
        }
    out.raw = Cqs{r, {mod_pos(loc[0], r), mod_pos(loc[1], r), mod_pos(loc[2], r)}};
    out.cqs = normal_forms.front();
    return out;
}

} // namespace birlinks
