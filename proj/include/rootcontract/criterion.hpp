#pragma once

#include "rootcontract/groups.hpp"
#include "rootcontract/parabolic.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rootcontract {

/// Two distinct simple roots sigma1, sigma2 (both != gamma) whose reports are
/// at least Bounded, one of them StrictlyContracting.
struct Witness {
    int gamma{0};
    int sigma1{0};
    int sigma2{0};
    SigmaReport report1;
    SigmaReport report2;
};

struct Failure {
    int failing_sigma{-1};  // -1 when both are Bounded
    std::string reason;
    SigmaReport report1;
    SigmaReport report2;
};

using PairResult = std::variant<Witness, Failure>;

/// Throws RankTooSmall when fewer than two sigmas besides gamma exist and
/// SameRoot when the three roots are not distinct.
PairResult check_pair(const ParabolicData& pd, int sigma1, int sigma2);

/// Exponent threshold for the vanishing statement.
enum class PThreshold { AllPGreaterThan1, PGreaterThanConfdim };

enum class CanonicalStatus { NotApplicable, Succeeds, Fails };
enum class NoWitnessReason { None, RankTooSmall, AllPairsFail };

std::string to_string(PThreshold t);
std::string to_string(CanonicalStatus s);
std::string to_string(NoWitnessReason r);

/// The fixed choice of gamma = tau_1 and two sigmas per irreducible kind:
/// A: (tau_2, tau_3); B, C, BC, D: (tau_r, tau_{r-1}). Empty for products.
struct CanonicalChoice {
    int gamma{0};
    std::optional<int> sigma1;
    std::optional<int> sigma2;
};
std::optional<CanonicalChoice> canonical_choice(const RootSystem& rs);

struct WitnessSearch {
    std::optional<Witness> witness;
    NoWitnessReason reason{NoWitnessReason::None};
    CanonicalStatus canonical{CanonicalStatus::NotApplicable};
    std::optional<SigmaReport> canonical_report1;
    std::optional<SigmaReport> canonical_report2;
    long long q_gamma{0};  // Q of the witness gamma, 0 without witness
};

/// All gammas ascending, then pairs (sigma1 < sigma2) lexicographically; the
/// first witness wins.
WitnessSearch search_witness(const std::shared_ptr<const RootSystem>& rs, const Multiplicities& mult);

/// First witness with this parabolic's gamma, in lexicographic pair order.
std::optional<Witness> first_witness(const ParabolicData& pd);

struct Verdict {
    GroupInstance instance;
    WitnessSearch search;
    PThreshold threshold{PThreshold::AllPGreaterThan1};

    bool vanishes() const { return search.witness.has_value(); }
};

/// Validates the instance (propagating ValidationError) and searches.
Verdict search_witness(const GroupInstance& instance);

/// Simple roots sigma with n_sigma(alpha) = 1 on every alpha with n_sigma(alpha) > 0.
std::vector<int> good_roots(const RootSystem& rs);

/// Q_sigma + 1 for the good root sigma = pd.gamma; throws NotGoodRoot otherwise.
long long hyperbolic_dimension(const ParabolicData& pd);

struct GoodRootInfo {
    int sigma{0};
    long long q{0};
    long long dimension{0};
};

struct UniformResult {
    bool uniform{false};
    std::vector<GoodRootInfo> good;
    long long max_good_q{0};
    int best_good_sigma{-1};
    std::optional<int> gamma;  // gamma with witness and minimal Q
    long long min_q_gamma{0};
    std::string reason;
};

/// Uniform iff 2 * min Q_gamma <= max good Q_sigma, where the minimum runs
/// over gammas admitting a witness. Throws NotAdmissible without good roots.
UniformResult uniform_vanishing(const std::shared_ptr<const RootSystem>& rs, const Multiplicities& mult);

/// Requires an Archimedean instance (ValidationError otherwise).
UniformResult uniform_vanishing(const GroupInstance& instance);

}  // namespace rootcontract
