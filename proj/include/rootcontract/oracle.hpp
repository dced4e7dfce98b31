#pragma once

// Brute-force cross-checks. Nothing here calls into the formula path for
// roots, coefficients or C_sigma: roots are re-enumerated from coordinate
// patterns and every linear solve goes through the local elimination routine.

#include "rootcontract/groups.hpp"
#include "rootcontract/parabolic.hpp"
#include "rootcontract/rational.hpp"
#include "rootcontract/rootsys.hpp"

#include <span>
#include <vector>

namespace rootcontract::oracle {

/// Positive roots in ambient coordinates, found by scanning every integer
/// vector of support <= 2 with entries in [-2, 2] against the kind's root
/// pattern. A vector is positive when its first nonzero entry is.
std::vector<std::vector<int>> enumerate_positive_roots(std::span<const Factor> factors);

/// Simple roots in ambient coordinates, generated from scratch.
std::vector<std::vector<int>> simple_roots(std::span<const Factor> factors);

/// Solves alpha = sum_i n_i tau_i by row reduction. Throws NotARoot unless
/// +-alpha is in the enumerated set.
std::vector<int> oracle_coefficients(std::span<const Factor> factors, std::span<const int> root);
std::vector<int> oracle_coefficients(Kind kind, int rank, std::span<const int> root);

/// gamma(v) / sigma(v) for the cocharacter v spanned by the coroots other than
/// gamma and killed by every simple root outside {gamma, sigma}. Throws
/// SameRoot for gamma == sigma and DegenerateDirection when sigma(v) = 0.
Rat oracle_c_sigma(std::span<const Factor> factors, int gamma, int sigma);
Rat oracle_c_sigma(Kind kind, int rank, int gamma, int sigma);

struct TableConstants {
    long long Q{0};
    long long M{0};
    Rat C;
    Rat R;
    Rat D;
};

/// Q_gamma, M_sigma, C_sigma, the max ratio and D_sigma recomputed from the
/// enumerated roots.
TableConstants recompute_constants(std::span<const Factor> factors, const Multiplicities& mult, int gamma,
                                   int sigma);

enum class ScanOutcome { FoundStrict, FoundBoundedOnly, None };

struct ScanOptions {
    int grid_bound{4};
    /// Number of free (non-gamma) coordinates allowed to be nonzero.
    int max_support{2};
    /// When non-empty, only the coweight lines of these sigmas are scanned
    /// (both orientations).
    std::vector<int> lines;
};

struct ScanResult {
    ScanOutcome outcome{ScanOutcome::None};
    std::vector<Rat> t;  // certificate direction (strict or bounded)
    Rat value;           // E(t) at that direction
    std::size_t directions{0};
};

std::string to_string(ScanOutcome outcome);

/// Rational values p/q with |p| <= bound and 1 <= q <= bound, sorted.
std::vector<Rat> grid_values(int bound);

/// Scans directions on the A^gamma hyperplane: free coordinates take grid
/// values, t_gamma is solved from the hyperplane equation. Stops at the first
/// E(t) < 0. Absence of a strict direction is inconclusive, not a proof.
ScanResult oracle_scan(const ParabolicData& pd, int grid_bound);
ScanResult oracle_scan(const ParabolicData& pd, const ScanOptions& options);

}  // namespace rootcontract::oracle
