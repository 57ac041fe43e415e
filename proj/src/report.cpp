#include "birlinks/report.hpp"

#include <sstream>

#include <json.hpp>

namespace birlinks {

using nlohmann::json;

std::string weights_str(const std::vector<long long>& w) {
    std::ostringstream os;
    os << "P(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

std::string rat_vec_str(const std::vector<Rat>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << ")";
    return os.str();
}

namespace {

std::string tuple_str(const std::vector<long long>& t, std::optional<long long> deg) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    if (deg) os << ";" << *deg;
    os << ")";
    return os.str();
}

std::string germ_str(const EndData& e) {
    switch (e.germ) {
        case GermKind::CqsPoint: return e.point_cqs.str();
        case GermKind::CDV: return "cDV point";
        case GermKind::Hyperquotient:
            return "hyperquotient point of index " + std::to_string(e.ambient_index);
        case GermKind::Curve: return "rational curve";
    }
    return "?";
}

} // namespace

std::string end_model_str(const LinkStep& s) {
    if (!s.end) return "";
    const EndData& e = *s.end;
    std::ostringstream os;
    if (e.target_degrees.empty()) {
        os << weights_str(e.target_weights);
    } else {
        os << "Z_{";
        for (std::size_t i = 0; i < e.target_degrees.size(); ++i)
            os << (i ? "," : "") << e.target_degrees[i];
        os << "} in " << weights_str(e.target_weights);
    }
    if (e.residual_quotient > 1) os << "/mu_" << e.residual_quotient;
    return os.str();
}

std::string step_brief(const LinkStep& s) {
    std::ostringstream os;
    switch (s.kind) {
        case StepKind::Isomorphism:
            os << "isomorphism";
            break;
        case StepKind::Flop:
            os << "flop";
            if (s.count > 1) os << " over " << s.count << " points";
            break;
        case StepKind::Flip:
        case StepKind::Antiflip:
            os << (s.kind == StepKind::Flip ? "flip " : "antiflip ")
               << tuple_str(s.tuple, s.hypersurface_degree);
            if (s.count > 1) os << " over " << s.count << " points";
            break;
        case StepKind::DivisorialToPoint:
            os << "divisorial contraction to " << germ_str(*s.end) << " in " << end_model_str(s);
            if (s.end->crepant)
                os << ", crepant";
            else
                os << ", discrepancy " << s.end->discrepancy_value.str();
            break;
        case StepKind::DivisorialToCurve:
            os << "divisorial contraction to a curve in " << end_model_str(s);
            break;
        case StepKind::Fibration:
            if (s.fiber == FiberKind::Conic)
                os << "conic bundle over " << weights_str(s.base_weights);
            else
                os << "del Pezzo fibration of degree " << s.dp_degree << " over "
                   << weights_str(s.base_weights);
            break;
        case StepKind::RequiresUnprojection:
            os << "requires unprojection";
            break;
    }
    return os.str();
}

std::string link_row_md(const SarkisovLink& link, const std::string& centre) {
    std::ostringstream mods, blow, endp;
    for (const auto& s : link.steps) {
        switch (s.kind) {
            case StepKind::Flop:
            case StepKind::Flip:
            case StepKind::Antiflip:
            case StepKind::RequiresUnprojection:
                if (mods.tellp() > 0) mods << ", ";
                mods << step_brief(s);
                break;
            case StepKind::DivisorialToPoint:
            case StepKind::DivisorialToCurve:
                if (!s.end->crepant && s.kind == StepKind::DivisorialToPoint)
                    blow << "wt " << rat_vec_str(s.end->blowup_weights) << ", discrepancy "
                         << s.end->discrepancy_value.str();
                if (s.end->crepant)
                    endp << "excluded (crepant endpoint " << end_model_str(s) << ")";
                else
                    endp << end_model_str(s) << ", " << germ_str(*s.end);
                break;
            case StepKind::Fibration:
                endp << step_brief(s);
                break;
            default:
                break;
        }
    }
    if (link.verdict == Verdict::RequiresUnprojection) endp << "(unprojection needed)";
    std::ostringstream os;
    os << "| " << centre << " | " << (mods.tellp() > 0 ? mods.str() : "-") << " | "
       << (blow.tellp() > 0 ? blow.str() : "-") << " | " << endp.str();
    if (link.endpoint_family) os << " (= family " << *link.endpoint_family << ")";
    os << " |";
    return os.str();
}

std::string link_to_json(const SarkisovLink& link, const std::string& centre) {
    json j;
    j["format"] = 1;
    j["family"] = link.blowup.family.id;
    j["centre"] = centre;
    j["verdict"] = to_string(link.verdict);
    json steps = json::array();
    for (const auto& s : link.steps) {
        json js;
        js["kind"] = to_string(s.kind);
        js["wall"] = {s.wall[0], s.wall[1]};
        if (s.kind == StepKind::Flop || s.kind == StepKind::Flip || s.kind == StepKind::Antiflip) {
            js["count"] = s.count;
            js["tuple"] = s.tuple;
            if (s.hypersurface_degree) js["hypersurface_degree"] = *s.hypersurface_degree;
            if (s.loci) {
                js["contracted"] = s.loci->contracted;
                js["extracted"] = s.loci->extracted;
            }
        }
        if (s.kind == StepKind::Fibration) {
            js["base"] = s.base_weights;
            js["fiber"] = s.fiber == FiberKind::Conic ? "conic" : "del-pezzo";
            if (s.fiber == FiberKind::DelPezzo) js["dp_degree"] = s.dp_degree;
        }
        if (s.end) {
            js["target_weights"] = s.end->target_weights;
            js["target_degrees"] = s.end->target_degrees;
            js["crepant"] = s.end->crepant;
            if (!s.end->crepant) js["discrepancy"] = s.end->discrepancy_value.str();
            if (s.end->residual_quotient > 1) js["residual_quotient"] = s.end->residual_quotient;
            js["centre"] = germ_str(*s.end);
            json bw = json::array();
            for (const auto& q : s.end->blowup_weights) bw.push_back(q.str());
            js["blowup_weights"] = bw;
        }
        if (!s.note.empty()) js["note"] = s.note;
        steps.push_back(js);
    }
    j["steps"] = steps;
    if (link.endpoint_family) j["endpoint_family"] = *link.endpoint_family;
    return j.dump(2);
}

ExclusionReport exclusion_report(const WciFamily& f) {
    ExclusionReport r;
    r.family = f.id;
    r.threshold = isolating_threshold(f);
    r.curves = curve_exclusion(f);
    for (const auto& e : f.basket) {
        std::ostringstream os;
        os << e.cqs.str();
        if (e.mult > 1) os << " x" << e.mult;
        BlowupNumbers nums(f, e.cqs);
        DivisorClass2 K{Rat(1), Rat(0)};
        Rat k3 = triple_product(nums, K, K, K);
        os << ": (-K_Y)^3 = " << k3.str();
        r.notes.push_back(os.str());
    }
    return r;
}

std::string exclusion_md(const ExclusionReport& r) {
    std::ostringstream os;
    os << "family " << r.family << "\n";
    os << "  curves: "
       << (r.curves.all_excluded ? std::string("excluded (iota^2 A^3 = ") + r.curves.bound.str() + " <= 1)"
                                 : "degree bound " + r.curves.bound.str())
       << "\n";
    os << "  smooth points: isolating threshold 4/(iota^2 A^3) = " << r.threshold.str() << "\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
    return os.str();
}

std::string exclusion_json(const ExclusionReport& r) {
    json j;
    j["format"] = 1;
    j["family"] = r.family;
    j["isolating_threshold"] = r.threshold.str();
    j["curves_excluded"] = r.curves.all_excluded;
    j["curve_degree_bound"] = r.curves.bound.str();
    j["notes"] = r.notes;
    return j.dump(2);
}

} // namespace birlinks
