#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "birlinks/report.hpp"

using namespace birlinks;

namespace {

// parses "1/r(b1,b2,b3)"
Cqs parse_centre(const std::string& spec) {
    Cqs s;
    char c;
    std::istringstream is(spec);
    long long one;
    if (!(is >> one >> c) || one != 1 || c != '/') throw CLI::ValidationError("--centre", spec);
    if (!(is >> s.r >> c) || c != '(') throw CLI::ValidationError("--centre", spec);
    for (int i = 0; i < 3; ++i) {
        if (!(is >> s.b[static_cast<std::size_t>(i)] >> c) || (i < 2 && c != ',') ||
            (i == 2 && c != ')'))
            throw CLI::ValidationError("--centre", spec);
    }
    return s;
}

Catalog load_catalog(const std::string& path) {
    if (!path.empty()) return Catalog::load(path);
    if (const char* env = std::getenv("BIRLINKS_CATALOG"); env && *env) return Catalog::load(env);
    return Catalog::builtin();
}

WciFamily with_tags(WciFamily f, const std::vector<std::string>& tags) {
    for (const auto& t : tags) {
        if (!find_tag(t, f.id))
            throw std::invalid_argument("unknown assumption tag '" + t + "' for family " +
                                        std::to_string(f.id));
        f.assumptions.push_back(t);
    }
    return f;
}

int run_one_link(const WciFamily& f, int centre_idx, const std::string& centre_label,
                 const std::string& format) {
    SarkisovLink link = run_link(f, centre_idx);
    std::string label =
        centre_label.empty() ? link.blowup.point.cqs.str() : centre_label;
    if (format == "json") {
        std::cout << link_to_json(link, label) << "\n";
    } else {
        std::cout << f.label() << ", centre " << label << "\n";
        for (const auto& s : link.steps) std::cout << "  " << step_brief(s) << "\n";
        std::cout << "verdict: " << to_string(link.verdict);
        if (link.endpoint_family) std::cout << " (endpoint matches family " << *link.endpoint_family << ")";
        std::cout << "\n";
    }
    return link.verdict == Verdict::RequiresUnprojection ? 2 : 0;
}

int cmd_table(const Catalog& cat, int only_family, const std::string& format) {
    std::ostringstream md;
    md << "| family | centre | small modifications | last blowup | endpoint |\n";
    md << "|---|---|---|---|---|\n";
    for (int id : cat.ids()) {
        if (only_family && id != only_family) continue;
        const WciFamily& f = cat.family(id);
        std::string fam = std::to_string(id) + " " + f.label();
        if (!f.data_verified) fam += " (data-unverified)";
        for (const auto& entry : f.basket) {
            std::string row;
            auto idx = find_centre(f, entry.cqs);
            if (!idx) {
                row = "| " + entry.cqs.str() + " | - | - | (not a coordinate point of the general member) |";
            } else {
                try {
                    SarkisovLink link = run_link(f, *idx);
                    row = link_row_md(link, entry.cqs.str());
                } catch (const std::exception& e) {
                    row = "| " + entry.cqs.str() + " | - | - | error: " + e.what() + " |";
                }
            }
            md << "| " << fam << " " << row.substr(1) << "\n";
            fam = std::string(" ");
        }
    }
    std::cout << md.str();
    (void)format;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sarkisov links and maximal-centre exclusion for codimension-2 Fano 3-folds of index >= 2"};
    app.require_subcommand(1);

    std::string catalog_path;
    std::string format = "md";
    app.add_option("--catalog", catalog_path, "catalog JSON file (default: built-in, or $BIRLINKS_CATALOG)");
    app.add_option("--format", format, "output format: md or json")
        ->check(CLI::IsMember({"md", "json"}));

    auto* link = app.add_subcommand("link", "run the 2-ray game from a centre");
    int link_id = 0;
    std::string centre_spec;
    int centre_index = -1;
    std::vector<std::string> tags;
    link->add_option("family", link_id, "family id")->required();
    link->add_option("--centre", centre_spec, "centre as 1/r(b1,b2,b3)");
    link->add_option("--centre-index", centre_index, "coordinate index of the centre (0-5)");
    link->add_option("--assume", tags, "assumption tag (repeatable)");

    auto* table = app.add_subcommand("table", "summary table over basket centres");
    int table_family = 0;
    table->add_option("--family", table_family, "restrict to one family id");

    auto* exclude = app.add_subcommand("exclude", "exclusion data for a family");
    int exclude_id = 0;
    exclude->add_option("family", exclude_id, "family id")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Catalog cat = load_catalog(catalog_path);
        if (link->parsed()) {
            WciFamily f = with_tags(cat.family(link_id), tags);
            int idx = -1;
            if (centre_index >= 0) {
                idx = centre_index;
            } else if (!centre_spec.empty()) {
                auto found = find_centre(f, parse_centre(centre_spec));
                if (!found)
                    throw std::invalid_argument("unknown centre " + centre_spec + " on family " +
                                                std::to_string(link_id));
                idx = *found;
            } else {
                throw CLI::RequiredError("--centre or --centre-index");
            }
            return run_one_link(f, idx, centre_spec, format);
        }
        if (table->parsed()) return cmd_table(cat, table_family, format);
        if (exclude->parsed()) {
            auto rep = exclusion_report(cat.family(exclude_id));
            std::cout << (format == "json" ? exclusion_json(rep) : exclusion_md(rep));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
