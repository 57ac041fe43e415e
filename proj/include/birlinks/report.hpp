#pragma once

#include <string>

#include "birlinks/exclusion.hpp"
#include "birlinks/game.hpp"

namespace birlinks {

std::string weights_str(const std::vector<long long>& w);
std::string rat_vec_str(const std::vector<Rat>& v);

// one-line rendering of a classified step
std::string step_brief(const LinkStep& s);

// description of the end model, e.g. "Z_7 in P(1,1,1,2,3)"
std::string end_model_str(const LinkStep& s);

// Big-Table style row: centre | small modifications | last blowup | endpoint
std::string link_row_md(const SarkisovLink& link, const std::string& centre);

std::string link_to_json(const SarkisovLink& link, const std::string& centre);

struct ExclusionReport {
    int family = 0;
    Rat threshold;
    CurveVerdict curves;
    std::vector<std::string> notes;
};
ExclusionReport exclusion_report(const WciFamily& f);
std::string exclusion_md(const ExclusionReport& r);
std::string exclusion_json(const ExclusionReport& r);

} // namespace birlinks
