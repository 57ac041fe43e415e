#include "birlinks/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace birlinks {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::TypeIMoriFibreSpace: return "TypeI-MoriFibreSpace";
        case Verdict::TypeIIFanoModel: return "TypeII-FanoModel";
        case Verdict::BirationalInvolution: return "BirationalInvolution";
        case Verdict::BadLink: return "BadLink";
        case Verdict::RequiresUnprojection: return "RequiresUnprojection";
    }
    return "?";
}

std::string to_string(StepKind k) {
    switch (k) {
        case StepKind::Isomorphism: return "isomorphism";
        case StepKind::Flop: return "flop";
        case StepKind::Flip: return "flip";
        case StepKind::Antiflip: return "antiflip";
        case StepKind::DivisorialToPoint: return "divisorial contraction to a point";
        case StepKind::DivisorialToCurve: return "divisorial contraction to a curve";
        case StepKind::Fibration: return "fibration";
        case StepKind::RequiresUnprojection: return "requires unprojection";
    }
    return "?";
}

DiscrepancyResult discrepancy(const Rat& m1, const Rat& m2, const Rat& n1, const Rat& n2) {
    Rat denom = n2 * m1 - n1 * m2;
    if (m2.is_zero()) return {true, Rat(0)};
    if (denom <= Rat(0))
        throw std::invalid_argument(
            "endpoint class not in strict Eff interior (crepant or invalid)");
    return {false, m2 / denom};
}

namespace {

struct GameFrame {
    ChamberDecomposition dec;
    std::vector<int> order;  // ray indices from the u-side boundary outward
    int mov_first = 0;       // positions in `order`
    int mov_last = 0;
};

GameFrame frame(const KawamataBlowup& b) {
    GameFrame g;
    g.dec = chambers(b.ambient);
    Vec2 u = b.ambient.cols[0].deg; // (0, 1)
    int iu = -1;
    for (std::size_t i = 0; i < g.dec.rays.size(); ++i)
        if (g.dec.rays[i].dir == primitive(u)) iu = static_cast<int>(i);
    if (iu != g.dec.eff_lo && iu != g.dec.eff_hi)
        throw std::logic_error("exceptional ray is not an Eff boundary");
    int n = static_cast<int>(g.dec.rays.size());
    for (int i = 0; i < n; ++i) g.order.push_back(iu == 0 ? i : n - 1 - i);
    auto pos = [&](int ray) {
        for (int p = 0; p < n; ++p)
            if (g.order[static_cast<std::size_t>(p)] == ray) return p;
        return -1;
    };
    g.mov_first = std::min(pos(g.dec.mov_lo), pos(g.dec.mov_hi));
    g.mov_last = std::max(pos(g.dec.mov_lo), pos(g.dec.mov_hi));
    return g;
}

std::vector<int> cols_on_ray(const RankTwoToric& t, Vec2 dir) {
    std::vector<int> out;
    for (std::size_t i = 0; i < t.cols.size(); ++i)
        if (primitive(t.cols[i].deg) == primitive(dir)) out.push_back(static_cast<int>(i));
    return out;
}

// variable indices (into the family weights) whose columns sit on the ray
std::set<int> vars_on_ray(const KawamataBlowup& b, Vec2 dir) {
    std::set<int> out;
    for (int c : cols_on_ray(b.ambient, dir)) {
        int v = b.var_of_column(c);
        if (v >= 0) out.insert(v);
    }
    return out;
}

bool supported_in(const Expo& e, const std::set<int>& vars) {
    for (int i = 0; i < 6; ++i)
        if (e[static_cast<std::size_t>(i)] != 0 && !vars.count(i)) return false;
    return true;
}

// monomials of the equation supported purely on the wall with u-power zero
std::vector<Expo> pure_wall_monomials(const KawamataBlowup& b, int eq, const std::set<int>& wall) {
    std::vector<Expo> out;
    for (const auto& m : b.support[static_cast<std::size_t>(eq)])
        if (m.upow == 0 && supported_in(m.e, wall)) out.push_back(m.e);
    return out;
}

struct WallElims {
    std::set<int> vars;     // eliminated variable indices (-1 for u)
    bool u_eliminated = false;
    std::array<bool, 2> used{}; // equation consumed by an elimination
};

// Global eliminations across a locus cut by the given variables: an equation
// eliminates y via a monomial locus^a * y with u-power 0, or u via a pure
// locus monomial with u-power exactly 1 (Lemmas flipx2/flipx4 bookkeeping).
WallElims eliminations(const KawamataBlowup& b, const std::set<int>& locus) {
    WallElims out;
    for (int eq = 0; eq < 2; ++eq) {
        bool done = false;
        for (const auto& m : b.support[static_cast<std::size_t>(eq)]) {
            if (done) break;
            long long locus_deg = 0;
            int extra_var = -1;
            bool extra_linear = true;
            for (int i = 0; i < 6 && extra_linear; ++i) {
                long long e = m.e[static_cast<std::size_t>(i)];
                if (e == 0) continue;
                if (locus.count(i)) {
                    locus_deg += e;
                } else if (extra_var < 0 && e == 1) {
                    extra_var = i;
                } else {
                    extra_linear = false;
                }
            }
            if (!extra_linear || locus_deg == 0) continue;
            if (extra_var < 0) {
                if (m.upow == 1 && !out.u_eliminated) {
                    out.u_eliminated = true;
                    out.used[static_cast<std::size_t>(eq)] = true;
                    done = true;
                }
            } else if (m.upow == 0 && !out.vars.count(extra_var)) {
                out.vars.insert(extra_var);
                out.used[static_cast<std::size_t>(eq)] = true;
                done = true;
            }
        }
    }
    return out;
}

long long signed_residual(const KawamataBlowup& b, Vec2 wall, Vec2 cls) {
    // u-side entries negative
    long long su = cross(primitive(wall), b.ambient.cols[0].deg) > 0 ? 1 : -1;
    long long v = cross(primitive(wall), cls);
    return (v == 0) ? 0 : ((v > 0) == (su > 0) ? -(v > 0 ? v : -v) : (v > 0 ? v : -v));
}

} // namespace

LinkStep classify_wall(const KawamataBlowup& b, Vec2 wall) {
    Vec2 w = primitive(wall);
    LinkStep step;
    step.wall = w;

    std::set<int> wall_vars = vars_on_ray(b, w);
    std::array<std::vector<Expo>, 2> pure = {pure_wall_monomials(b, 0, wall_vars),
                                             pure_wall_monomials(b, 1, wall_vars)};
    int pure_eqs = (pure[0].empty() ? 0 : 1) + (pure[1].empty() ? 0 : 1);

    if (pure_eqs == 2) {
        step.kind = StepKind::Isomorphism;
        step.note = "both equations carry pure wall monomials (contracted loci miss Y)";
        return step;
    }
    if (pure_eqs == 1) {
        // the restricted locus is the zero set of one generic wall form
        std::set<Expo> distinct;
        for (const auto& e : pure[0]) distinct.insert(e);
        for (const auto& e : pure[1]) distinct.insert(e);
        long long s = static_cast<long long>(distinct.size()) - 1;
        if (s == 0) {
            step.kind = StepKind::Isomorphism;
            step.note = "single pure wall monomial, restricted locus is empty";
            return step;
        }
        step.count = s;
    }

    // before(w, -K) <=> cross(w, -K) < 0: crossing before the anticanonical
    // ray is an antiflip, on it a flop, after it a flip
    long long k_side = cross(w, primitive(b.anticanonical));
    step.kind = k_side == 0 ? StepKind::Flop
               : k_side < 0 ? StepKind::Antiflip
                            : StepKind::Flip;

    step.loci = wall_loci(b.ambient, w);

    auto elims = eliminations(b, wall_vars);
    std::vector<long long> tuple;
    int remaining = 0;
    for (std::size_t c = 0; c < b.ambient.cols.size(); ++c) {
        int var = b.var_of_column(static_cast<int>(c));
        if (var < 0 && elims.u_eliminated) continue;
        if (var >= 0 && wall_vars.count(var)) continue;
        if (var >= 0 && elims.vars.count(var)) continue;
        long long r = signed_residual(b, w, b.ambient.cols[c].deg);
        if (r != 0) {
            tuple.push_back(r);
            ++remaining;
        }
    }
    std::sort(tuple.begin(), tuple.end());
    step.tuple = tuple;
    if (remaining == 5) {
        // hypersurface modification; the flipping equation is the one not
        // consumed by an elimination
        int eq = elims.used[0] ? 1 : 0;
        long long d = signed_residual(b, w, b.eq_bidegree[static_cast<std::size_t>(eq)]);
        step.hypersurface_degree = -d; // opposite orientation to the tuple
    }
    return step;
}

LinkStep classify_end(const KawamataBlowup& b, Vec2 boundary_ray) {
    Vec2 R = primitive(boundary_ray);
    auto dec = chambers(b.ambient);
    LinkStep step;
    step.wall = R;

    Vec2 eff_far{};
    {
        // the Eff boundary on the far side from u
        Vec2 u = primitive(b.ambient.cols[0].deg);
        const Ray& lo = dec.ray(dec.eff_lo);
        const Ray& hi = dec.ray(dec.eff_hi);
        eff_far = (lo.dir == u) ? hi.dir : lo.dir;
    }

    std::set<int> wall_vars = vars_on_ray(b, R);
    auto wall_cols = cols_on_ray(b.ambient, R);

    if (R == eff_far) {
        // fibration: base = the boundary columns
        step.kind = StepKind::Fibration;
        for (int c : wall_cols) {
            const Vec2& d = b.ambient.cols[static_cast<std::size_t>(c)].deg;
            long long lambda = (R[0] != 0) ? d[0] / R[0] : d[1] / R[1];
            step.base_weights.push_back(lambda < 0 ? -lambda : lambda);
        }
        std::sort(step.base_weights.begin(), step.base_weights.end());
        step.fiber = wall_cols.size() >= 3 ? FiberKind::Conic : FiberKind::DelPezzo;

        auto elims = eliminations(b, wall_vars);
        for (std::size_t c = 0; c < b.ambient.cols.size(); ++c) {
            int var = b.var_of_column(static_cast<int>(c));
            if (var < 0 && elims.u_eliminated) continue;
            if (var >= 0 && (wall_vars.count(var) || elims.vars.count(var))) continue;
            long long r = cross(R, b.ambient.cols[c].deg);
            if (r != 0) step.fiber_weights.push_back(r < 0 ? -r : r);
        }
        std::sort(step.fiber_weights.begin(), step.fiber_weights.end());
        for (int eq = 0; eq < 2; ++eq) {
            if (elims.used[static_cast<std::size_t>(eq)]) continue;
            long long d = cross(R, b.eq_bidegree[static_cast<std::size_t>(eq)]);
            step.fiber_degrees.push_back(d < 0 ? -d : d);
        }
        std::sort(step.fiber_degrees.begin(), step.fiber_degrees.end());

        if (step.fiber == FiberKind::DelPezzo) {
            // K^2 of the generic fibre: (sum w - sum d)^2 * prod d / prod w
            Rat s(0);
            for (long long x : step.fiber_weights) s += Rat(x);
            for (long long x : step.fiber_degrees) s -= Rat(x);
            Rat deg = s * s;
            for (long long x : step.fiber_degrees) deg *= Rat(x);
            for (long long x : step.fiber_weights) deg /= Rat(x);
            if (!deg.is_integer())
                throw std::runtime_error("degenerate fiber data: non-integral del Pezzo degree " +
                                         deg.str());
            step.dp_degree = deg.num();
        }
        return step;
    }

    // divisorial contraction: the columns strictly past the Mov boundary
    // (u comes first in the sweep, so "past" means cross(R, col) < 0)
    std::vector<int> beyond;
    for (std::size_t c = 0; c < b.ambient.cols.size(); ++c)
        if (cross(R, b.ambient.cols[c].deg) < 0) beyond.push_back(static_cast<int>(c));
    if (beyond.size() != 1)
        throw std::runtime_error("unsupported end: expected a single contracted column");
    int xc = beyond.front();
    Vec2 xc_raw = b.ambient.cols[static_cast<std::size_t>(xc)].deg;
    Vec2 xc_prim = primitive(xc_raw);
    long long xc_content = std::gcd(xc_raw[0] < 0 ? -xc_raw[0] : xc_raw[0],
                                    xc_raw[1] < 0 ? -xc_raw[1] : xc_raw[1]);

    EndData end;
    end.residual_quotient = xc_content;

    std::set<int> xc_set = {b.var_of_column(xc)};
    auto elims = eliminations(b, xc_set);

    auto tweight = [&](Vec2 v) {
        long long x = cross(v, xc_prim);
        return x < 0 ? -x : x;
    };
    for (std::size_t c = 0; c < b.ambient.cols.size(); ++c) {
        if (static_cast<int>(c) == xc) continue;
        int var = b.var_of_column(static_cast<int>(c));
        if (var < 0 && elims.u_eliminated) continue;
        if (var >= 0 && elims.vars.count(var)) continue;
        end.target_weights.push_back(tweight(b.ambient.cols[c].deg));
    }
    std::sort(end.target_weights.begin(), end.target_weights.end());
    for (int eq = 0; eq < 2; ++eq) {
        if (elims.used[static_cast<std::size_t>(eq)]) continue;
        end.target_degrees.push_back(tweight(b.eq_bidegree[static_cast<std::size_t>(eq)]));
    }
    std::sort(end.target_degrees.begin(), end.target_degrees.end());
    end.new_fano_index = std::accumulate(end.target_weights.begin(), end.target_weights.end(), 0LL) -
                         std::accumulate(end.target_degrees.begin(), end.target_degrees.end(), 0LL);

    // Lemma discr data: pullback of -K_X' is iota' multiples of the boundary
    // class, E' is the contracted column
    Vec2 kappa = b.anticanonical;
    auto to_KE = [&](const Rat& a0, const Rat& a1) {
        Rat m1 = a0 / Rat(kappa[0]);
        Rat m2 = m1 * Rat(kappa[1]) - a1;
        return std::pair<Rat, Rat>{m1, m2};
    };
    auto [m1, m2] = to_KE(Rat(end.new_fano_index) * Rat(R[0]), Rat(end.new_fano_index) * Rat(R[1]));
    auto [n1, n2] = to_KE(Rat(xc_raw[0]), Rat(xc_raw[1]));
    auto disc = discrepancy(m1, m2, n1, n2);
    end.crepant = disc.crepant;
    end.discrepancy_value = disc.value;

    // blowup weights of the last extraction: residuals against the boundary
    // ray, scaled by the contracted column's own residual
    long long delta = cross(R, xc_raw);
    if (delta < 0) delta = -delta;
    for (std::size_t c = 0; c < b.ambient.cols.size(); ++c) {
        if (static_cast<int>(c) == xc) continue;
        int var = b.var_of_column(static_cast<int>(c));
        if (var < 0 && elims.u_eliminated) continue;
        if (var >= 0 && elims.vars.count(var)) continue;
        long long x = cross(R, b.ambient.cols[c].deg);
        if (x != 0) end.blowup_weights.push_back(Rat(x < 0 ? -x : x, delta));
    }
    std::sort(end.blowup_weights.begin(), end.blowup_weights.end());

    if (wall_cols.size() >= 2) {
        step.kind = StepKind::DivisorialToCurve;
        end.germ = GermKind::Curve;
    } else {
        step.kind = StepKind::DivisorialToPoint;
        // local quotient index at the contracted point
        end.ambient_index = delta;
        if (delta <= 1) {
            end.germ = GermKind::CDV;
        } else {
            // a pure wall power lifting with u-exponent one locally eliminates
            // u at the point, leaving a genuine quotient germ
            bool witness = false;
            for (int eq = 0; eq < 2 && !witness; ++eq)
                for (const auto& m : b.support[static_cast<std::size_t>(eq)])
                    if (m.upow == 1 && supported_in(m.e, wall_vars)) witness = true;
            std::set<int> local_gone;
            for (int eq = 0; eq < 2; ++eq) {
                if (elims.used[static_cast<std::size_t>(eq)]) continue;
                for (const auto& m : b.support[static_cast<std::size_t>(eq)]) {
                    long long wall_deg = 0;
                    int extra = -1;
                    bool linear = true;
                    for (int i = 0; i < 6 && linear; ++i) {
                        long long e = m.e[static_cast<std::size_t>(i)];
                        if (e == 0) continue;
                        if (wall_vars.count(i))
                            wall_deg += e;
                        else if (extra < 0 && e == 1)
                            extra = i;
                        else
                            linear = false;
                    }
                    if (linear && wall_deg > 0 && extra >= 0 && m.upow == 0 &&
                        !elims.vars.count(extra) && !local_gone.count(extra)) {
                        local_gone.insert(extra);
                        break;
                    }
                }
            }
            // transverse local weights: residuals against the boundary ray,
            // in units of 1/delta
            std::vector<long long> trans;
            for (std::size_t c = 0; c < b.ambient.cols.size(); ++c) {
                if (static_cast<int>(c) == xc) continue;
                int var = b.var_of_column(static_cast<int>(c));
                if (var < 0) continue; // u handled by the witness
                if (wall_vars.count(var) || elims.vars.count(var) || local_gone.count(var))
                    continue;
                long long x = cross(R, b.ambient.cols[c].deg);
                trans.push_back(x < 0 ? -x : x);
            }
            if (witness && trans.size() == 3) {
                Cqs raw{delta,
                        {mod_pos(trans[0], delta), mod_pos(trans[1], delta),
                         mod_pos(trans[2], delta)}};
                bool ok = true;
                for (long long w : raw.b)
                    if (w == 0 || std::gcd(w, delta) != 1) ok = false;
                if (ok) {
                    end.germ = GermKind::CqsPoint;
                    end.point_cqs = cqs_normal_form(raw);
                } else {
                    end.germ = GermKind::Hyperquotient;
                }
            } else {
                end.germ = GermKind::Hyperquotient;
            }
        }
    }
    step.end = end;
    return step;
}

SarkisovLink run_link(const WciFamily& f, int centre) {
    SarkisovLink link;
    link.blowup = kawamata_blowup(f, centre);
    const auto& b = link.blowup;

    std::optional<int> unproj_wall;
    for (const auto& mark : unprojection_marks())
        if (mark.family == f.id && mark.centre == b.point.cqs) unproj_wall = mark.wall;

    GameFrame g = frame(b);
    int wall_ordinal = 0;
    for (int p = g.mov_first + 1; p < g.mov_last; ++p) {
        ++wall_ordinal;
        Vec2 w = g.dec.ray(g.order[static_cast<std::size_t>(p)]).dir;
        if (unproj_wall && wall_ordinal == *unproj_wall) {
            LinkStep s;
            s.kind = StepKind::RequiresUnprojection;
            s.wall = primitive(w);
            s.note = "restricted small contraction would contract a divisor on Y (Table cod4)";
            link.steps.push_back(s);
            link.verdict = Verdict::RequiresUnprojection;
            return link;
        }
        link.steps.push_back(classify_wall(b, w));
    }
    ++wall_ordinal;
    if (unproj_wall && wall_ordinal == *unproj_wall) {
        LinkStep s;
        s.kind = StepKind::RequiresUnprojection;
        s.wall = g.dec.ray(g.order[static_cast<std::size_t>(g.mov_last)]).dir;
        link.steps.push_back(s);
        link.verdict = Verdict::RequiresUnprojection;
        return link;
    }
    LinkStep endstep = classify_end(b, g.dec.ray(g.order[static_cast<std::size_t>(g.mov_last)]).dir);
    link.steps.push_back(endstep);

    if (endstep.kind == StepKind::Fibration) {
        link.verdict = Verdict::TypeIMoriFibreSpace;
    } else if (endstep.end && endstep.end->crepant) {
        link.verdict = Verdict::BadLink;
    } else {
        link.verdict = Verdict::TypeIIFanoModel;
        if (endstep.end && endstep.end->target_weights.size() == 6 &&
            endstep.end->target_degrees.size() == 2) {
            std::vector<long long> fw = f.weights;
            std::sort(fw.begin(), fw.end());
            if (fw == endstep.end->target_weights &&
                f.degrees[0] == endstep.end->target_degrees[0] &&
                f.degrees[1] == endstep.end->target_degrees[1])
                link.verdict = Verdict::BirationalInvolution;
            for (const auto& [id, fam] : Catalog::builtin().all()) {
                std::vector<long long> w = fam.weights;
                std::sort(w.begin(), w.end());
                if (w == endstep.end->target_weights &&
                    fam.degrees[0] == endstep.end->target_degrees[0] &&
                    fam.degrees[1] == endstep.end->target_degrees[1])
                    link.endpoint_family = id;
            }
        }
    }
    return link;
}

SarkisovLink run_link(const WciFamily& f, const Cqs& centre) {
    auto idx = find_centre(f, centre);
    if (!idx)
        throw std::invalid_argument("centre " + centre.str() +
                                    " is not a coordinate point of the general member of family " +
                                    std::to_string(f.id));
    return run_link(f, *idx);
}

} // namespace birlinks
