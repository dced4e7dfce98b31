#pragma once

#include "rootcontract/groups.hpp"
#include "rootcontract/rational.hpp"
#include "rootcontract/rootsys.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rootcontract {

/// Everything attached to the maximal parabolic of a simple root gamma.
struct ParabolicData {
    std::shared_ptr<const RootSystem> rs;
    Multiplicities mult;
    int gamma{0};
    std::vector<PositiveRoot> contracted;  // n_gamma(alpha) > 0
    std::vector<PositiveRoot> levi_pos;    // n_gamma(alpha) = 0
    long long Q{0};                        // sum over contracted of n_gamma(alpha) m(alpha)
    std::vector<Rat> weight_coeffs;        // c with sum_i c_i log|tau_i(g)| = 0 on A^gamma
};

/// How the modular exponent M compares with Q * D.
enum class Relation { StrictlyContracting, Bounded, Fails };

struct SigmaReport {
    int sigma{0};
    Rat C;          // log|gamma(g)| / log|sigma(g)| along the sigma coweight line
    Rat R;          // max over contracted of n_sigma / n_gamma
    Rat D;          // R + C
    long long M{0};  // sum over levi roots of n_sigma(alpha) m(alpha)
    Relation relation{Relation::Fails};
};

std::string to_string(Relation relation);

ParabolicData parabolic_data(std::shared_ptr<const RootSystem> rs, Multiplicities mult, int gamma);

/// -c_sigma / c_gamma. Throws SameRoot when sigma == gamma.
Rat c_sigma(const ParabolicData& pd, int sigma);
Rat max_ratio(const ParabolicData& pd, int sigma);
long long modular_exponent(const ParabolicData& pd, int sigma);

/// Exact comparison of M against Q * D; D is never divided by.
SigmaReport sigma_report(const ParabolicData& pd, int sigma);

/// Log of Delta(g) * ||g||_gamma^Q for the torus element with log-coordinates
/// t (t_i = log|tau_i(g)|):
///   E(t) = -sum_{levi} m(alpha) alpha(t) + Q * max_{contracted} alpha(t) / n_gamma(alpha).
/// E(t) < 0 certifies a contracting element, E(t) = 0 a bounded one.
/// Throws ConstraintViolated unless sum_i c_i t_i = 0.
Rat log_certificate(const ParabolicData& pd, std::span<const Rat> t);

/// The direction used for sigma: t_sigma = 1, t_gamma = C_sigma, zero elsewhere.
std::vector<Rat> coweight_direction(const ParabolicData& pd, int sigma);

}  // namespace rootcontract
