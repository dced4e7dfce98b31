#pragma once

#include "rootcontract/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rootcontract {

/// Irreducible infinite families. Products are represented as a list of
/// factors (see RootSystem::factors).
enum class Kind { A, B, C, BC, D };

/// Class of a positive root, used to look up its multiplicity.
enum class RootClass { EiMinusEj, EiPlusEj, Ei, TwoEi, AmbientA };

inline constexpr std::size_t kRootClassCount = 5;

struct Factor {
    Kind kind{Kind::A};
    int rank{1};

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// A positive root, stored both in ambient coordinates e_1..e_m and as its
/// expansion n_sigma(alpha) in the simple roots.
struct PositiveRoot {
    std::vector<int> coords;
    std::vector<int> simple_coeffs;
    RootClass root_class{RootClass::AmbientA};
    int factor_index{0};
};

/// A reduced or non-reduced root system, or a finite product of such.
///
/// Simple roots follow Bourbaki numbering inside each factor:
///   tau_i = e_i - e_{i+1} for i < r, and the last simple root is
///   A: e_r - e_{r+1}, B and BC: e_r, C: 2 e_r, D: e_{r-1} + e_r.
/// Indices are 0-based in code; tau_1 is index 0. For products the simple
/// roots of factor k follow those of factor k-1, and the ambient coordinates
/// are concatenated the same way.
///
/// Values are immutable after construction.
class RootSystem {
public:
    const std::vector<Factor>& factors() const { return factors_; }
    bool is_product() const { return factors_.size() > 1; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_dim_; }

    const std::vector<PositiveRoot>& simple_roots() const { return simple_roots_; }
    const std::vector<PositiveRoot>& positives() const { return positives_; }

    /// cartan()[i][j] = <tau_i, tau_j^vee> = 2 (tau_i, tau_j) / (tau_j, tau_j).
    /// For BC this is the Cartan matrix of the reduced subsystem (type B).
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<std::vector<Rat>>& inverse_cartan() const { return inverse_cartan_; }

    /// Factor owning simple root `index`, and the first simple index of a factor.
    int factor_of(int simple_index) const { return factor_of_simple_.at(simple_index); }
    int factor_offset(int factor) const { return simple_offset_.at(factor); }

    /// Set for D_3, which is isomorphic to A_3.
    bool d3_alias() const { return d3_alias_; }

    std::string name() const;

    /// Shared builder for simple systems and products (any number of factors).
    static RootSystem assemble(std::span<const Factor> factors);

private:

    std::vector<Factor> factors_;
    int rank_{0};
    int ambient_dim_{0};
    std::vector<PositiveRoot> simple_roots_;
    std::vector<PositiveRoot> positives_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<Rat>> inverse_cartan_;
    // Row sigma holds the coweight dual to tau_sigma in ambient coordinates,
    // so that n_sigma(alpha) = <dual_basis_[sigma], alpha>.
    std::vector<std::vector<Rat>> dual_basis_;
    std::vector<int> factor_of_simple_;
    std::vector<int> simple_offset_;
    bool d3_alias_{false};
    std::map<std::vector<int>, int> index_by_coords_;

    friend std::vector<int> coefficients(const RootSystem& rs, std::span<const int> root);
};

int min_rank(Kind kind);
std::string to_string(Kind kind);
std::string to_string(RootClass cls);
/// Accepts "A", "B", "C", "BC", "D" (case-insensitive); throws ValidationError.
Kind parse_kind(std::string_view text);

/// Number of positive roots of an irreducible system.
int positive_root_count(Kind kind, int rank);

/// Throws InvalidRank when rank is below the kind's minimum.
RootSystem build_root_system(Kind kind, int rank);

/// Disjoint union of at least two irreducible systems.
RootSystem build_product(std::span<const Factor> factors);

/// n_sigma(alpha) for every simple root sigma. Works for negative roots too.
/// Throws NotARoot when `root` is not in positives or -positives.
std::vector<int> coefficients(const RootSystem& rs, std::span<const int> root);

/// Coefficients of the fundamental weight omega_gamma in the simple-root basis,
/// scaled to coprime integers with a positive gamma entry. The support is
/// confined to gamma's factor.
std::vector<Rat> fundamental_weight_coeffs(const RootSystem& rs, int gamma);

/// Positive roots with n_excluded(alpha) = 0.
std::vector<PositiveRoot> subsystem_positive(const RootSystem& rs, int excluded);

/// Largest simple coefficient over all positive roots.
int max_mark(const RootSystem& rs);

/// "tau_3" for index 2.
std::string simple_root_label(int index);

}  // namespace rootcontract
