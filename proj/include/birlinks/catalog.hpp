#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birlinks/wps.hpp"

namespace birlinks {

enum class Solidity { S, Cb, dP };

std::string to_string(Solidity s);
Solidity solidity_from_string(const std::string& s);

struct BasketEntry {
    Cqs cqs;        // stored in normal form 1/r(1,a,r-a)
    int mult = 1;
};

struct WciFamily {
    int id = 0;
    std::vector<long long> weights;      // six entries, stored ascending
    std::array<long long, 2> degrees{};  // d1 <= d2
    long long fano_index = 0;
    std::vector<BasketEntry> basket;
    Solidity solidity = Solidity::S;
    std::vector<std::string> assumptions; // active monomial-exclusion tags
    bool data_verified = true;            // false only for family 106

    long long weight_sum() const;
    std::string label() const; // e.g. "X_{10,14} in P(1,2,2,5,7,9)"
};

// A named assumption: generic monomials excluded from one of the two
// defining equations. Exponents are aligned with the ascending weights.
struct AssumptionTag {
    std::string name;
    int family = 0;
    // (equation index 0/1, exponent vector over the 6 variables)
    std::vector<std::pair<int, std::array<long long, 6>>> excluded;
};

const std::vector<AssumptionTag>& assumption_registry();
std::optional<AssumptionTag> find_tag(const std::string& name, int family);

// (family, centre) pairs whose 2-ray game departs from the ambient game and
// needs an unprojection; the int is the 1-based wall ordinal of departure.
struct UnprojectionMark {
    int family = 0;
    Cqs centre;       // normal form
    int wall = 2;
};
const std::vector<UnprojectionMark>& unprojection_marks();

class Catalog {
public:
    static const Catalog& builtin();

    // Parses and validates a JSON catalog file (schema in the README).
    static Catalog load(const std::string& path);

    const WciFamily& family(int id) const;
    bool has(int id) const { return families_.count(id) != 0; }
    std::vector<int> ids() const;
    const std::map<int, WciFamily>& all() const { return families_; }

    std::string to_json() const;

    void insert(WciFamily f); // validates invariants

private:
    std::map<int, WciFamily> families_;
};

// Throws std::invalid_argument naming the failing invariant.
void validate_family(const WciFamily& f);

} // namespace birlinks
