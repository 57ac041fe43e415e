#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birlinks/blowup.hpp"
#include "birlinks/toric.hpp"

namespace birlinks {

enum class StepKind {
    Isomorphism,
    Flop,
    Flip,
    Antiflip,
    DivisorialToPoint,
    DivisorialToCurve,
    Fibration,
    RequiresUnprojection,
};

enum class FiberKind { Conic, DelPezzo };

enum class GermKind { CqsPoint, CDV, Hyperquotient, Curve };

// Data of the final divisorial contraction or fibration.
struct EndData {
    std::vector<long long> target_weights;  // ambient weights of the new model
    std::vector<long long> target_degrees;  // remaining equation degrees
    long long residual_quotient = 1;        // mu_r on the target ambient
    std::vector<Rat> blowup_weights;        // of the last extraction
    bool crepant = false;
    Rat discrepancy_value;                  // valid when !crepant
    GermKind germ = GermKind::CDV;
    Cqs point_cqs;                          // valid when germ == CqsPoint
    long long ambient_index = 1;            // quotient index of the contracted point
    long long new_fano_index = 0;           // sum(weights) - sum(degrees)
};

struct LinkStep {
    StepKind kind = StepKind::Isomorphism;
    Vec2 wall{};
    // small modifications
    long long count = 1;                       // s for flops/flips over s points
    std::vector<long long> tuple;              // residual weights, u-side negative
    std::optional<long long> hypersurface_degree;
    std::optional<WallLoci> loci;
    // fibrations
    std::vector<long long> base_weights;
    FiberKind fiber = FiberKind::Conic;
    long long dp_degree = 0;
    std::vector<long long> fiber_weights;
    std::vector<long long> fiber_degrees;
    // divisorial ends
    std::optional<EndData> end;
    std::string note;
};

enum class Verdict {
    TypeIMoriFibreSpace,
    TypeIIFanoModel,
    BirationalInvolution,
    BadLink,
    RequiresUnprojection,
};

std::string to_string(Verdict v);
std::string to_string(StepKind k);

struct SarkisovLink {
    KawamataBlowup blowup;
    std::vector<LinkStep> steps;
    Verdict verdict = Verdict::TypeIIFanoModel;
    std::optional<int> endpoint_family; // catalog id with matching model data
};

struct DiscrepancyResult {
    bool crepant = false;
    Rat value;
};

// Lemma-discr arithmetic: the pullback of -K_X' is -m1 K_Y - m2 E and the
// exceptional divisor is -n1 K_Y - n2 E; crepant when m2 = 0.
DiscrepancyResult discrepancy(const Rat& m1, const Rat& m2, const Rat& n1, const Rat& n2);

LinkStep classify_wall(const KawamataBlowup& b, Vec2 wall);
LinkStep classify_end(const KawamataBlowup& b, Vec2 boundary_ray);

SarkisovLink run_link(const WciFamily& f, int centre);
SarkisovLink run_link(const WciFamily& f, const Cqs& centre);

} // namespace birlinks
