#include "birlinks/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace birlinks {

using nlohmann::json;

std::string to_string(Solidity s) {
    switch (s) {
        case Solidity::S: return "S";
        case Solidity::Cb: return "Cb";
        case Solidity::dP: return "dP";
    }
    return "S";
}

Solidity solidity_from_string(const std::string& s) {
    if (s == "S") return Solidity::S;
    if (s == "Cb") return Solidity::Cb;
    if (s == "dP") return Solidity::dP;
    throw std::invalid_argument("unknown solidity class '" + s + "'");
}

long long WciFamily::weight_sum() const {
    return std::accumulate(weights.begin(), weights.end(), 0LL);
}

std::string WciFamily::label() const {
    std::ostringstream os;
    os << "X_{" << degrees[0] << "," << degrees[1] << "} in P(";
    for (std::size_t i = 0; i < weights.size(); ++i)
        os << (i ? "," : "") << weights[i];
    os << ")";
    return os.str();
}

void validate_family(const WciFamily& f) {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("family " + std::to_string(f.id) + ": " + what);
    };
    if (f.weights.size() != 6) fail("expected 6 weights");
    for (long long a : f.weights)
        if (a <= 0) fail("weights must be positive");
    if (f.degrees[0] <= 0 || f.degrees[0] > f.degrees[1]) fail("degrees must satisfy 0 < d1 <= d2");
    if (f.fano_index < 1) fail("fano_index must be positive");
    if (f.weight_sum() - f.degrees[0] - f.degrees[1] != f.fano_index)
        fail("adjunction fails: sum(weights) - d1 - d2 != fano_index");
    if (!is_well_formed(f.weights)) fail("weight vector is not well formed");
    if (f.fano_index != 4) {
        int multiples = 0;
        bool has_iota = false;
        for (long long a : f.weights) {
            if (a % f.fano_index == 0) ++multiples;
            if (a == f.fano_index) has_iota = true;
        }
        if (!has_iota || multiples != 2)
            fail("weights must contain fano_index and exactly one further multiple of it");
    } else {
        int even = 0;
        for (long long a : f.weights)
            if (a % 2 == 0) ++even;
        if (even != 2) fail("index-4 family must have exactly two even weights");
    }
    for (const auto& e : f.basket) {
        if (e.mult < 1) fail("basket multiplicity must be positive");
        if (!is_terminal(e.cqs)) fail("basket entry " + e.cqs.str() + " is not terminal");
        if (cqs_normal_form(e.cqs) != e.cqs)
            fail("basket entry " + e.cqs.str() + " is not in normal form");
    }
    // Cross-check basket entries against the coordinate-point analysis where
    // the centre sits at a unique coordinate of that weight.
    if (f.data_verified) {
        for (const auto& e : f.basket) {
            int count = 0, idx = -1;
            for (int i = 0; i < 6; ++i)
                if (f.weights[i] == e.cqs.r) { ++count; idx = i; }
            if (count != 1) continue; // stratum or partner point, not checkable here
            auto t = coordinate_point_type(f, idx);
            if (t.kind == PointKind::Cqs && !(t.cqs == e.cqs))
                fail("basket entry " + e.cqs.str() + " disagrees with coordinate point type " +
                     t.cqs.str());
        }
    }
}

void Catalog::insert(WciFamily f) {
    validate_family(f);
    if (families_.count(f.id))
        throw std::invalid_argument("duplicate family id " + std::to_string(f.id));
    std::sort(f.weights.begin(), f.weights.end());
    families_.emplace(f.id, std::move(f));
}

const WciFamily& Catalog::family(int id) const {
    auto it = families_.find(id);
    if (it == families_.end()) {
        std::ostringstream os;
        os << "unknown family id " << id << "; available:";
        for (auto& [k, v] : families_) os << " " << k;
        throw std::invalid_argument(os.str());
    }
    return it->second;
}

std::vector<int> Catalog::ids() const {
    std::vector<int> out;
    for (auto& [k, v] : families_) out.push_back(k);
    return out;
}

namespace {

WciFamily make(int id, std::vector<long long> w, long long d1, long long d2, long long iota,
               std::vector<BasketEntry> basket, Solidity s, bool verified = true) {
    WciFamily f;
    f.id = id;
    f.weights = std::move(w);
    f.degrees = {d1, d2};
    f.fano_index = iota;
    f.basket = std::move(basket);
    f.solidity = s;
    f.data_verified = verified;
    return f;
}

BasketEntry B(long long r, long long a, int mult = 1) {
    return BasketEntry{Cqs{r, {1, a, r - a}}, mult};
}

Catalog build_builtin() {
    Catalog c;
    using S = Solidity;
    c.insert(make(87, {1, 1, 1, 2, 2, 3}, 4, 4, 2, {B(3, 1)}, S::Cb));
    c.insert(make(88, {1, 1, 2, 2, 3, 3}, 4, 6, 2, {B(3, 1, 2)}, S::dP));
    c.insert(make(89, {1, 1, 2, 2, 3, 5}, 6, 6, 2, {B(5, 1)}, S::dP));
    c.insert(make(90, {1, 1, 2, 3, 4, 5}, 6, 8, 2, {B(5, 2)}, S::dP));
    c.insert(make(91, {1, 2, 2, 3, 3, 3}, 6, 6, 2, {B(3, 1, 4)}, S::dP));
    c.insert(make(92, {1, 2, 2, 3, 3, 5}, 6, 8, 2, {B(3, 1, 2), B(5, 1)}, S::S));
    c.insert(make(93, {1, 2, 2, 3, 5, 5}, 6, 10, 2, {B(5, 1, 2)}, S::S));
    c.insert(make(94, {1, 2, 2, 3, 5, 7}, 8, 10, 2, {B(3, 1), B(7, 1)}, S::S));
    c.insert(make(95, {1, 2, 3, 4, 5, 5}, 8, 10, 2, {B(3, 1), B(5, 2, 2)}, S::S));
    c.insert(make(96, {1, 2, 3, 4, 5, 7}, 8, 12, 2, {B(5, 2), B(7, 2)}, S::S));
    c.insert(make(97, {1, 2, 2, 5, 7, 9}, 10, 14, 2, {B(9, 1)}, S::S));
    c.insert(make(98, {1, 2, 3, 4, 5, 9}, 10, 12, 2, {B(3, 1), B(9, 2)}, S::S));
    c.insert(make(99, {1, 2, 3, 5, 6, 7}, 10, 12, 2, {B(3, 1, 2), B(7, 3)}, S::S));
    c.insert(make(100, {1, 2, 3, 4, 7, 11}, 12, 14, 2, {B(11, 2)}, S::S));
    c.insert(make(101, {2, 2, 3, 5, 5, 7}, 10, 12, 2, {B(5, 1, 2), B(7, 1)}, S::S));
    c.insert(make(102, {2, 2, 3, 5, 7, 7}, 10, 14, 2, {B(3, 1), B(7, 1, 2)}, S::S));
    c.insert(make(103, {2, 3, 3, 4, 5, 7}, 10, 12, 2, {B(3, 1, 4), B(7, 2)}, S::dP));
    c.insert(make(104, {1, 2, 5, 7, 8, 9}, 14, 16, 2, {B(5, 1), B(9, 4)}, S::S));
    c.insert(make(105, {2, 2, 3, 5, 7, 9}, 12, 14, 2, {B(3, 1), B(5, 1), B(9, 1)}, S::S));
    c.insert(make(106, {2, 5, 6, 7, 9, 11}, 18, 20, 2, {B(3, 1), B(7, 1), B(11, 3)}, S::S,
                  /*verified=*/false));
    c.insert(make(107, {2, 3, 4, 5, 7, 7}, 12, 14, 2, {B(5, 1), B(7, 2, 2)}, S::S));
    c.insert(make(108, {2, 3, 4, 5, 7, 11}, 14, 16, 2, {B(3, 1), B(5, 1), B(11, 2)}, S::S));
    c.insert(make(109, {2, 2, 5, 9, 11, 13}, 18, 22, 2, {B(5, 2), B(13, 1)}, S::S));
    c.insert(make(110, {2, 4, 5, 7, 9, 13}, 18, 20, 2, {B(7, 1), B(13, 2)}, S::S));
    c.insert(make(111, {2, 5, 6, 7, 9, 11}, 18, 20, 2, {B(3, 1), B(7, 1), B(11, 3)}, S::S));
    c.insert(make(112, {1, 1, 2, 3, 3, 5}, 6, 6, 3, {B(5, 1)}, S::Cb));
    c.insert(make(113, {1, 2, 2, 3, 3, 4}, 6, 6, 3, {B(2, 1, 4), B(4, 1)}, S::Cb));
    c.insert(make(114, {1, 2, 3, 3, 4, 5}, 6, 9, 3, {B(2, 1), B(4, 1), B(5, 1)}, S::dP));
    c.insert(make(115, {1, 3, 4, 5, 6, 11}, 12, 15, 3, {B(2, 1), B(11, 2)}, S::S));
    c.insert(make(116, {2, 3, 3, 4, 5, 7}, 9, 12, 3, {B(2, 1, 3), B(5, 1), B(7, 1)}, S::dP));
    c.insert(make(117, {3, 3, 4, 5, 7, 8}, 12, 15, 3, {B(2, 1), B(4, 1), B(7, 1), B(8, 1)}, S::S));
    c.insert(make(118, {1, 2, 3, 3, 4, 5}, 6, 8, 4, {B(3, 1, 2), B(5, 2)}, S::Cb));
    c.insert(make(119, {1, 2, 3, 4, 5, 7}, 8, 10, 4, {B(3, 1), B(7, 3)}, S::Cb));
    c.insert(make(120, {1, 3, 4, 4, 5, 7}, 8, 12, 4, {B(5, 1), B(7, 1)}, S::dP));
    c.insert(make(121, {1, 3, 4, 5, 6, 7}, 10, 12, 4, {B(3, 1, 2), B(7, 2)}, S::dP));
    c.insert(make(122, {2, 3, 4, 5, 5, 7}, 10, 12, 4, {B(5, 2, 2), B(7, 3)}, S::dP));
    c.insert(make(123, {2, 3, 4, 5, 7, 9}, 12, 14, 4, {B(3, 1), B(5, 2), B(9, 4)}, S::dP));
    c.insert(make(124, {4, 5, 6, 7, 9, 11}, 18, 20, 4, {B(3, 1), B(7, 3), B(11, 4)}, S::dP));
    c.insert(make(125, {2, 3, 5, 5, 7, 8}, 10, 15, 5, {B(2, 1), B(7, 1), B(8, 1)}, S::dP));
    return c;
}

} // namespace

const Catalog& Catalog::builtin() {
    static const Catalog c = build_builtin();
    return c;
}

const std::vector<AssumptionTag>& assumption_registry() {
    // Exponent vectors are aligned with the ascending weight order.
    static const std::vector<AssumptionTag> reg = {
        // general members of 102/105 written without the xi^3 t term of g
        {"z3t-absent-in-g", 102, {{1, {0, 0, 3, 1, 0, 0}}}},
        {"z3t-absent-in-g", 105, {{1, {0, 0, 3, 1, 0, 0}}}},
        // family 108 with alpha = 0 and y^2 t^2, y^3 t x removed from g
        {"alpha-zero-in-g", 108,
         {{1, {0, 3, 0, 0, 1, 0}}, {1, {0, 2, 0, 2, 0, 0}}, {1, {1, 3, 0, 1, 0, 0}}}},
    };
    return reg;
}

std::optional<AssumptionTag> find_tag(const std::string& name, int family) {
    for (const auto& t : assumption_registry())
        if (t.name == name && t.family == family) return t;
    return std::nullopt;
}

const std::vector<UnprojectionMark>& unprojection_marks() {
    static const std::vector<UnprojectionMark> marks = {
        {99, Cqs{3, {1, 1, 2}}, 2},  {103, Cqs{3, {1, 1, 2}}, 2}, {104, Cqs{5, {1, 1, 4}}, 2},
        {106, Cqs{3, {1, 1, 2}}, 2}, {111, Cqs{7, {1, 1, 6}}, 2},
    };
    return marks;
}

namespace {

WciFamily family_from_json(const json& j) {
    static const std::vector<std::string> known = {"id",     "weights",  "degrees",     "fano_index",
                                                   "basket", "solidity", "assumptions", "unverified"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw std::invalid_argument("unknown key '" + it.key() + "' in catalog entry");

    WciFamily f;
    f.id = j.at("id").get<int>();
    f.weights = j.at("weights").get<std::vector<long long>>();
    auto degs = j.at("degrees").get<std::vector<long long>>();
    if (degs.size() != 2) throw std::invalid_argument("degrees must have 2 entries");
    f.degrees = {degs[0], degs[1]};
    f.fano_index = j.at("fano_index").get<long long>();
    for (const auto& b : j.at("basket")) {
        BasketEntry e;
        e.cqs.r = b.at("r").get<long long>();
        auto arr = b.at("a").get<std::vector<long long>>();
        if (arr.size() != 3) throw std::invalid_argument("basket entry 'a' must have 3 entries");
        e.cqs.b = {arr[0], arr[1], arr[2]};
        e.mult = b.at("mult").get<int>();
        f.basket.push_back(e);
    }
    f.solidity = solidity_from_string(j.at("solidity").get<std::string>());
    if (j.contains("assumptions"))
        f.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    if (j.contains("unverified")) f.data_verified = !j.at("unverified").get<bool>();
    return f;
}

json family_to_json(const WciFamily& f) {
    json j;
    j["id"] = f.id;
    j["weights"] = f.weights;
    j["degrees"] = {f.degrees[0], f.degrees[1]};
    j["fano_index"] = f.fano_index;
    json basket = json::array();
    for (const auto& e : f.basket) {
        json b;
        b["r"] = e.cqs.r;
        b["a"] = {e.cqs.b[0], e.cqs.b[1], e.cqs.b[2]};
        b["mult"] = e.mult;
        basket.push_back(b);
    }
    j["basket"] = basket;
    j["solidity"] = to_string(f.solidity);
    if (!f.assumptions.empty()) j["assumptions"] = f.assumptions;
    if (!f.data_verified) j["unverified"] = true;
    return j;
}

} // namespace

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("catalog parse error in '" + path + "': " + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("catalog file must contain a JSON array");
    Catalog c;
    for (const auto& entry : j) c.insert(family_from_json(entry));
    return c;
}

std::string Catalog::to_json() const {
    json arr = json::array();
    for (const auto& [id, f] : families_) arr.push_back(family_to_json(f));
    return arr.dump(2);
}

} // namespace birlinks
