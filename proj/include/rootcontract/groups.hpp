#pragma once

#include "rootcontract/rootsys.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rootcontract {

enum class FieldKind { RealLike, ComplexSplit, NonArchimedean };

/// Classical families of absolutely simple groups over a local field, plus
/// complex groups viewed over R and semisimple products.
///
///   SL    SL_{r+1}(D), D central division algebra of degree d
///   SUh   SU(h), h hermitian in n variables over a quadratic extension
///   SOq   SO(q), q quadratic in n variables
///   Sp    Sp_{2r}(F)
///   SUht  SU(h~), h~ quaternionic hermitian in n variables
///   SOqt  SO(q~), q~ quaternionic skew-hermitian in n variables
///
/// For the form families `rank` is the Witt index.
enum class Family { SL, SUh, SOq, Sp, SUht, SOqt, ComplexSimple, SemisimpleProduct };

struct GroupInstance {
    Family family{Family::SL};
    int rank{1};
    FieldKind field{FieldKind::RealLike};
    int n{0};                  // number of variables (form families)
    int d{1};                  // division-algebra degree (SL)
    Kind complex_kind{Kind::A};  // ComplexSimple only
    std::vector<GroupInstance> factors;  // SemisimpleProduct only

    static GroupInstance sl(int rank, int d, FieldKind field);
    static GroupInstance form(Family family, int n, int rank, FieldKind field);
    static GroupInstance sp(int rank, FieldKind field);
    static GroupInstance complex_simple(Kind kind, int rank);
    /// Rank is the sum of factor ranks; field is NonArchimedean iff every
    /// factor is.
    static GroupInstance product(std::vector<GroupInstance> factors);

    friend bool operator==(const GroupInstance&, const GroupInstance&) = default;
};

/// Multiplicity m(alpha) by root class for one irreducible factor.
struct MultiplicityTable {
    std::array<int, kRootClassCount> m{};

    int operator[](RootClass cls) const { return m[static_cast<std::size_t>(cls)]; }
    int& operator[](RootClass cls) { return m[static_cast<std::size_t>(cls)]; }

    friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

/// One table per factor of the restricted root system.
struct Multiplicities {
    std::vector<MultiplicityTable> per_factor;

    int of(const PositiveRoot& root) const { return per_factor.at(root.factor_index)[root.root_class]; }
    /// Every entry multiplied by k.
    Multiplicities scaled(int k) const;

    friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

std::string to_string(Family family);
std::string to_string(FieldKind field);
/// "SL", "SUh", "SOq", "Sp", "SUht", "SOqt" (case-insensitive).
Family parse_family(std::string_view text);
/// "real", "complex", "nonarch".
FieldKind parse_field(std::string_view text);

/// Throws ValidationError naming the violated window.
void validate(const GroupInstance& instance);
bool is_valid(const GroupInstance& instance);

/// Valid n for a form family at a given rank: [lo, hi], hi clamped to
/// 2*rank + `unbounded_extra` for families with no upper bound over the field.
std::optional<std::pair<int, int>> n_window(Family family, int rank, FieldKind field, int unbounded_extra);

/// Factors (kind, rank) of the restricted root system.
std::vector<Factor> restricted_system(const GroupInstance& instance);
RootSystem root_system(const GroupInstance& instance);

Multiplicities multiplicities(const GroupInstance& instance);

/// Human-readable label, e.g. "SU(h) n=9 r=4 nonarch".
std::string describe(const GroupInstance& instance);

}  // namespace rootcontract
