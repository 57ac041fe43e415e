#include "birlinks/blowup.hpp"

#include <algorithm>
#include <stdexcept>

namespace birlinks {

std::vector<Expo> enumerate_monomials(const std::vector<long long>& weights, long long degree) {
    std::vector<Expo> out;
    Expo cur{};
    auto rec = [&](auto&& self, std::size_t i, long long left) -> void {
        if (i == weights.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (long long e = 0; e * weights[i] <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e * weights[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

struct Setup {
    CoordinatePointType pt;
    long long k = 1;
    std::array<int, 2> elim_var{};
    std::array<long long, 2> elim_power{};
    std::array<std::vector<Expo>, 2> supp; // normalized generic support, no leading term
    std::array<Expo, 2> leading{};
};

Setup prepare(const WciFamily& f, int centre) {
    Setup s;
    s.pt = coordinate_point_type(f, centre);
    if (s.pt.kind != PointKind::Cqs) {
        std::string what = s.pt.kind == PointKind::Ambiguous
                               ? "ambiguous quasismoothness normalization"
                               : "centre is not a cyclic quotient singularity of the generic member";
        throw std::invalid_argument("family " + std::to_string(f.id) + ", coordinate " +
                                    std::to_string(centre) + ": " + what);
    }
    if (!is_terminal(s.pt.cqs))
        throw std::invalid_argument("centre " + s.pt.cqs.str() + " is not terminal");
    long long r = f.weights[static_cast<std::size_t>(centre)];
    s.k = inv_mod(f.fano_index, r);

    // active assumption tags
    std::vector<std::pair<int, Expo>> excluded;
    for (const auto& name : f.assumptions) {
        auto tag = find_tag(name, f.id);
        if (!tag)
            throw std::invalid_argument("unknown assumption tag '" + name + "' for family " +
                                        std::to_string(f.id));
        for (const auto& [eq, ex] : tag->excluded) excluded.push_back({eq, ex});
    }

    for (int eq = 0; eq < 2; ++eq) {
        s.elim_var[static_cast<std::size_t>(eq)] = s.pt.elim[static_cast<std::size_t>(eq)].var;
        s.elim_power[static_cast<std::size_t>(eq)] = s.pt.elim[static_cast<std::size_t>(eq)].power;
        Expo lead{};
        lead[static_cast<std::size_t>(centre)] = s.elim_power[static_cast<std::size_t>(eq)];
        lead[static_cast<std::size_t>(s.elim_var[static_cast<std::size_t>(eq)])] = 1;
        s.leading[static_cast<std::size_t>(eq)] = lead;

        for (const auto& mono : enumerate_monomials(f.weights, f.degrees[static_cast<std::size_t>(eq)])) {
            if (mono[static_cast<std::size_t>(centre)] >= s.elim_power[static_cast<std::size_t>(eq)])
                continue; // absorbed into the leading term by a coordinate change
            bool drop = false;
            for (const auto& [teq, tex] : excluded)
                if (teq == eq && tex == mono) drop = true;
            if (!drop) s.supp[static_cast<std::size_t>(eq)].push_back(mono);
        }
        if (s.supp[static_cast<std::size_t>(eq)].empty())
            throw std::runtime_error("degenerate general member: empty support in degree " +
                                     std::to_string(f.degrees[static_cast<std::size_t>(eq)]));
    }
    return s;
}

// joint least fixed point of the two minimal vanishing orders
std::array<Rat, 2> solve_orders_once(const WciFamily& f, int centre, const Setup& s,
                                     std::array<Rat, 6>& nu_out) {
    long long r = f.weights[static_cast<std::size_t>(centre)];
    std::array<std::optional<Rat>, 6> nu;
    nu[static_cast<std::size_t>(centre)] = Rat(0);
    for (int i = 0; i < 6; ++i) {
        if (i == centre || i == s.elim_var[0] || i == s.elim_var[1]) continue;
        nu[static_cast<std::size_t>(i)] = Rat(mod_pos(s.k * f.weights[static_cast<std::size_t>(i)], r), r);
    }

    std::array<std::optional<Rat>, 2> m;
    auto order_of = [&](const Expo& e) -> std::optional<Rat> {
        Rat total(0);
        for (int i = 0; i < 6; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            if (!nu[static_cast<std::size_t>(i)]) return std::nullopt;
            total += Rat(e[static_cast<std::size_t>(i)]) * *nu[static_cast<std::size_t>(i)];
        }
        return total;
    };

    for (int round = 0; round < 200; ++round) {
        bool changed = false;
        for (int eq = 0; eq < 2; ++eq) {
            std::optional<Rat> best;
            for (const auto& mono : s.supp[static_cast<std::size_t>(eq)]) {
                auto o = order_of(mono);
                if (o && (!best || *o < *best)) best = o;
            }
            if (best && (!m[static_cast<std::size_t>(eq)] || *best < *m[static_cast<std::size_t>(eq)])) {
                m[static_cast<std::size_t>(eq)] = best;
                nu[static_cast<std::size_t>(s.elim_var[static_cast<std::size_t>(eq)])] = best;
                changed = true;
            }
        }
        if (!changed && m[0] && m[1]) break;
        if (!changed)
            throw std::runtime_error("degenerate general member: vanishing orders undetermined");
    }
    for (int i = 0; i < 6; ++i) nu_out[static_cast<std::size_t>(i)] = *nu[static_cast<std::size_t>(i)];
    return {*m[0], *m[1]};
}

// The two equations generate an ideal: the higher-degree one is normalized
// modulo weight-(d2-d1) multiples of the lower. When the lower equation has a
// unique monomial of minimal vanishing order, those multiples are absorbed
// and leave the generic support of the higher equation.
std::array<Rat, 2> solve_orders(const WciFamily& f, int centre, Setup& s,
                                std::array<Rat, 6>& nu_out) {
    auto m = solve_orders_once(f, centre, s, nu_out);
    if (f.degrees[0] == f.degrees[1]) return m;
    for (int round = 0; round < 5; ++round) {
        auto ord = [&](const Expo& e) {
            Rat total(0);
            for (int i = 0; i < 6; ++i)
                total += Rat(e[static_cast<std::size_t>(i)]) * nu_out[static_cast<std::size_t>(i)];
            return total;
        };
        // candidates whose multiples cannot be re-absorbed into the higher
        // equation's leading term: centre exponent below its leading power
        std::vector<Expo> low;
        for (const auto& mono : s.supp[0])
            if (mono[static_cast<std::size_t>(centre)] < s.elim_power[1]) low.push_back(mono);
        if (low.empty()) return m;
        Rat lowest = ord(low.front());
        for (const auto& mono : low) lowest = std::min(lowest, ord(mono));
        std::vector<Expo> minimal;
        for (const auto& mono : low)
            if (ord(mono) == lowest) minimal.push_back(mono);
        if (minimal.size() != 1) return m;
        const Expo mu = minimal.front();
        auto multiples = enumerate_monomials(f.weights, f.degrees[1] - f.degrees[0]);
        bool changed = false;
        for (const auto& p : multiples) {
            Expo prod{};
            for (int i = 0; i < 6; ++i)
                prod[static_cast<std::size_t>(i)] =
                    p[static_cast<std::size_t>(i)] + mu[static_cast<std::size_t>(i)];
            auto it = std::find(s.supp[1].begin(), s.supp[1].end(), prod);
            if (it != s.supp[1].end()) {
                s.supp[1].erase(it);
                changed = true;
            }
        }
        if (!changed) return m;
        if (s.supp[1].empty())
            throw std::runtime_error("degenerate general member: support emptied by normalization");
        m = solve_orders_once(f, centre, s, nu_out);
    }
    return m;
}

} // namespace

Rat min_vanishing_order(const WciFamily& f, int centre, long long d) {
    if (d == 0) return Rat(0);
    Setup s = prepare(f, centre);
    std::array<Rat, 6> nu;
    auto m = solve_orders(f, centre, s, nu);
    if (d == f.degrees[0]) return m[0];
    if (d == f.degrees[1]) return m[1];
    throw std::invalid_argument("min_vanishing_order: degree is not a degree of the family");
}

int KawamataBlowup::column_of_var(int var) const {
    for (std::size_t c = 0; c < ambient.cols.size(); ++c)
        if (ambient.cols[c].name == "x" + std::to_string(var)) return static_cast<int>(c);
    throw std::logic_error("column_of_var: bad variable index");
}

int KawamataBlowup::var_of_column(int col) const {
    const auto& n = ambient.cols[static_cast<std::size_t>(col)].name;
    if (n == "u") return -1;
    return std::stoi(n.substr(1));
}

KawamataBlowup kawamata_blowup(const WciFamily& f, int centre) {
    Setup s = prepare(f, centre);
    long long r = f.weights[static_cast<std::size_t>(centre)];

    KawamataBlowup b;
    b.family = f;
    b.centre = centre;
    b.point = s.pt;
    b.k = s.k;
    b.m = solve_orders(f, centre, s, b.nu);

    auto as_integer = [](const Rat& q, const char* what) -> long long {
        if (!q.is_integer())
            throw std::logic_error(std::string("non-integral ") + what + ": " + q.str());
        return q.num();
    };

    // lift classes x_i in -(a_i/iota) K_Y - (alpha_i/iota) E
    for (int i = 0; i < 6; ++i) {
        Rat a(f.weights[static_cast<std::size_t>(i)]);
        Rat alpha = (Rat(f.fano_index) * Rat(r) * b.nu[static_cast<std::size_t>(i)] - a) / Rat(r);
        if (i == centre) alpha = Rat(-1);
        as_integer(alpha, "lift coefficient alpha_i (Cor. genlift congruence)");
        b.alpha[static_cast<std::size_t>(i)] = alpha;
    }

    // ambient weight matrix: u, xi, then the remaining variables
    b.ambient.cols.push_back({"u", {0, 1}});
    b.ambient.cols.push_back(
        {"x" + std::to_string(centre), {f.weights[static_cast<std::size_t>(centre)], s.k}});
    for (int i = 0; i < 6; ++i) {
        if (i == centre) continue;
        Rat second = (Rat(s.k) * Rat(f.weights[static_cast<std::size_t>(i)]) -
                      Rat(r) * b.nu[static_cast<std::size_t>(i)]) /
                     Rat(r);
        b.ambient.cols.push_back({"x" + std::to_string(i),
                                  {f.weights[static_cast<std::size_t>(i)],
                                   as_integer(second, "ambient matrix entry")}});
    }
    b.ambient.split = 2; // irrelevant ideal (u, xi) cap (x_0 ... x_4)
    b.ambient.provenance = "kawamata blowup of family " + std::to_string(f.id);

    for (int eq = 0; eq < 2; ++eq) {
        long long d = f.degrees[static_cast<std::size_t>(eq)];
        Rat second = (Rat(s.k) * Rat(d) - Rat(r) * b.m[static_cast<std::size_t>(eq)]) / Rat(r);
        b.eq_bidegree[static_cast<std::size_t>(eq)] = {d, as_integer(second, "equation bidegree")};
    }
    b.anticanonical = {f.fano_index, as_integer(Rat(s.k * f.fano_index - 1, r), "-K_Y bidegree")};

    // lifted generic supports
    for (int eq = 0; eq < 2; ++eq) {
        auto ord = [&](const Expo& e) {
            Rat total(0);
            for (int i = 0; i < 6; ++i)
                total += Rat(e[static_cast<std::size_t>(i)]) * b.nu[static_cast<std::size_t>(i)];
            return total;
        };
        for (const auto& mono : s.supp[static_cast<std::size_t>(eq)]) {
            Rat up = ord(mono) - b.m[static_cast<std::size_t>(eq)];
            b.support[static_cast<std::size_t>(eq)].push_back(
                {mono, as_integer(up, "u-power of a lifted monomial"), false});
        }
        b.support[static_cast<std::size_t>(eq)].push_back(
            {s.leading[static_cast<std::size_t>(eq)], 0, true});
    }
    return b;
}

bool is_linear(const WciFamily& f, int centre) {
    auto pt = coordinate_point_type(f, centre);
    if (pt.kind != PointKind::Cqs || !is_terminal(pt.cqs)) return false;
    long long r = f.weights[static_cast<std::size_t>(centre)];
    // xi x3 in f, xi x4 in g with distinct partners, and the transverse
    // weights of that choice contain the Fano index
    for (int j = 0; j < 6; ++j) {
        if (j == centre || f.weights[static_cast<std::size_t>(j)] != f.degrees[0] - r) continue;
        for (int k2 = 0; k2 < 6; ++k2) {
            if (k2 == centre || k2 == j ||
                f.weights[static_cast<std::size_t>(k2)] != f.degrees[1] - r)
                continue;
            for (int l = 0; l < 6; ++l)
                if (l != centre && l != j && l != k2 &&
                    f.weights[static_cast<std::size_t>(l)] == f.fano_index)
                    return true;
        }
    }
    return false;
}

LinearWitness has_linear_cqs(const WciFamily& f) {
    LinearWitness w;
    for (int i = 0; i < 6; ++i) {
        if (f.weights[static_cast<std::size_t>(i)] < 2) continue;
        CoordinatePointType pt;
        try {
            pt = coordinate_point_type(f, i);
        } catch (const std::exception&) {
            continue;
        }
        if (pt.kind != PointKind::Cqs || !is_terminal(pt.cqs)) continue;
        if (!is_linear(f, i)) continue;
        if (!w.found || f.weights[static_cast<std::size_t>(i)] >
                            f.weights[static_cast<std::size_t>(w.centre)]) {
            w.found = true;
            w.centre = i;
            w.cqs = pt.cqs;
        }
    }
    return w;
}

std::optional<int> find_centre(const WciFamily& f, const Cqs& s) {
    Cqs target = cqs_normal_form(s);
    for (int i = 0; i < 6; ++i) {
        if (f.weights[static_cast<std::size_t>(i)] != target.r) continue;
        CoordinatePointType pt;
        try {
            pt = coordinate_point_type(f, i);
        } catch (const std::exception&) {
            continue;
        }
        if (pt.kind == PointKind::Cqs && pt.cqs == target) return i;
    }
    return std::nullopt;
}

} // namespace birlinks
