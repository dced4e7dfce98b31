#pragma once

// Hand-derived closed forms used as independent expectations in tests. These
// are written out per family and never call into the library's formula path.

#include "rootcontract/groups.hpp"
#include "rootcontract/parabolic.hpp"
#include "rootcontract/rational.hpp"

#include <optional>

namespace testsupport {

using rootcontract::Family;
using rootcontract::Kind;
using rootcontract::Rat;
using rootcontract::Relation;

struct Table1Row {
    Rat C1, R1, D1, C2, R2, D2;
};

inline Table1Row table1_closed(Kind kind, int r) {
    switch (kind) {
        case Kind::A: return {Rat(-(r - 1), r), 1, Rat(1, r), Rat(-(r - 2), r), 1, Rat(2, r)};
        case Kind::B:
        case Kind::BC: return {-1, 2, 1, -1, 2, 1};
        case Kind::C: return {Rat(-1, 2), 1, Rat(1, 2), -1, 2, 1};
        case Kind::D: return {Rat(-1, 2), 1, Rat(1, 2), Rat(-1, 2), 1, Rat(1, 2)};
    }
    return {};
}

struct Table3Row {
    long long Q, M1, M2;
    Rat D1, D2;
};

inline Table3Row table3_closed(Family f, int r, int n, int d) {
    const long long R = r, N = n, dd = static_cast<long long>(d) * d;
    const bool split = n == 2 * r;
    const Rat half(1, 2);
    switch (f) {
        case Family::SL: return {R * dd, (R - 1) * dd, 2 * (R - 2) * dd, Rat(1, r), Rat(2, r)};
        case Family::SUh:
            return {2 * N - 2, split ? (R - 1) * (R - 1) : 2 * (R - 1) * (N - R - 1), 2 * (N - R) * (R - 2),
                    split ? half : Rat(1), 1};
        case Family::SOq:
            return {N - 2, split ? (R - 1) * (R - 2) / 2 : (R - 1) * (N - R - 2),
                    split ? (R - 1) * (R - 2) / 2 : (R - 2) * (N - R - 1), split ? half : Rat(1),
                    split ? half : Rat(1)};
        case Family::Sp: return {2 * R, R * (R - 1) / 2, (R - 2) * (R + 1), half, 1};
        case Family::SUht:
            return {4 * N - 2, split ? (R - 1) * (2 * R - 1) : 2 * (R - 1) * (2 * N - 2 * R - 1),
                    2 * (R - 2) * (2 * N - 2 * R + 1), split ? half : Rat(1), 1};
        case Family::SOqt:
            return {4 * N - 6, split ? (R - 1) * (2 * R - 3) : 2 * (R - 1) * (2 * N - 2 * R - 3),
                    2 * (R - 2) * (2 * N - 2 * R - 1), split ? half : Rat(1), 1};
        default: return {};
    }
}

// Rank from which the inequality for sigma_i is strict, and the rank at which
// equality is expected. k = n - 2r.
struct Threshold {
    int strict_from;
    std::optional<int> equality_at;
};

inline Threshold sigma1_threshold(Family f, int k) {
    switch (f) {
        case Family::SL: return {3, 2};
        case Family::SUh: return {k <= 1 ? 4 : 3, std::nullopt};
        case Family::SOq:
            if (k == 0) return {5, 4};
            return {k <= 2 ? 4 : 3, std::nullopt};
        case Family::Sp: return {4, 3};
        case Family::SUht: return {k == 0 ? 4 : 3, std::nullopt};
        case Family::SOqt: return {k <= 1 ? 4 : 3, std::nullopt};
        default: return {0, std::nullopt};
    }
}

inline Threshold sigma2_threshold(Family f, int k) {
    switch (f) {
        case Family::SL: return {4, 3};
        case Family::SOq:
            if (k == 0) return {5, 4};
            return {4, std::nullopt};
        default: return {4, std::nullopt};
    }
}

// Relation the thresholds predict; other ranks below the threshold are only
// known not to be strict, reported as Fails.
inline Relation predicted(const Threshold& t, int r) {
    if (r >= t.strict_from) return Relation::StrictlyContracting;
    if (t.equality_at && *t.equality_at == r) return Relation::Bounded;
    return Relation::Fails;
}

inline bool pair_works(Relation a, Relation b) {
    auto ok = [](Relation x) { return x != Relation::Fails; };
    return ok(a) && ok(b) && (a == Relation::StrictlyContracting || b == Relation::StrictlyContracting);
}

// Positive-root counts per irreducible kind.
inline int root_count(Kind kind, int r) {
    switch (kind) {
        case Kind::A: return r * (r + 1) / 2;
        case Kind::B:
        case Kind::C: return r * r;
        case Kind::BC: return r * r + r;
        case Kind::D: return r * (r - 1);
    }
    return 0;
}

}  // namespace testsupport
