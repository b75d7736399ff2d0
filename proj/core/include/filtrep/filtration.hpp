#pragma once

#include "filtrep/stability.hpp"

namespace filtrep {

/// Ascending chain of subobjects 0 = M_0 c M_1 c ... c M_k = M. When strict,
/// every inclusion has a filtered ambient cokernel and the quotients stay in
/// the filtered subcategory.
struct Filtration {
    Representation object;
    std::vector<Subrep> steps;  // includes the zero subrep and the full one
    bool strict = false;

    int length() const { return static_cast<int>(steps.size()) - 1; }
    void validate() const;
};

/// Successive quotients M_i / M_{i-1} of a strict filtration.
std::vector<Representation> strict_quotients(const Filtration& f);

/// Direct sum of the strict quotients, summands in canonical order (by
/// dimension vector, then matrix data).
Representation gr(const Filtration& f);

/// The slope filtration: strict, quotients semistable with strictly monotone
/// slopes (decreasing under sub_nonneg). Built greedily from maximal
/// destabilizing subobjects.
Filtration hn_filtration(const Representation& m, const StabilityParams& p,
                         long long cap = kDefaultEnumerationCap);

/// Strict filtration with stable quotients of equal slope, if one exists.
/// Exhaustive backtracking over stable strict subobjects, so a nullopt on a
/// finite field is a certificate of non-existence.
std::optional<Filtration> jh_filtration(const Representation& m,
                                        const StabilityParams& p,
                                        long long cap = kDefaultEnumerationCap);

/// Jordan-Holder filtration of the underlying relation representation inside
/// the abelian category of theta-semistable objects (quotients theta-stable).
std::optional<Filtration> jh_filtration_rel(const Representation& m,
                                            const StabilityParams& p,
                                            long long cap = kDefaultEnumerationCap);

enum class ScanOrder { canonical, reversed };

/// The unique maximal flag: strict, quotients without proper nonzero strict
/// subobjects. Built bottom-up from minimal strict subobjects; the reversed
/// scan order exists so tests can confirm order independence of the quotient
/// dimension vectors.
Filtration maximal_flag(const Representation& m,
                        long long cap = kDefaultEnumerationCap,
                        ScanOrder order = ScanOrder::canonical);

Representation gr_max(const Representation& m,
                      long long cap = kDefaultEnumerationCap);

bool s_equivalent(const Representation& m, const Representation& n,
                  long long cap = kDefaultEnumerationCap);

struct SjhVerdict {
    enum class State { equivalent, inequivalent, no_jh_left, no_jh_right };
    State state;
    bool equivalent() const { return state == State::equivalent; }
    std::string reason() const;
};

SjhVerdict sjh_equivalent(const Representation& m, const Representation& n,
                          const StabilityParams& p,
                          long long cap = kDefaultEnumerationCap);

/// m is a direct sum of equal-slope stable objects (equivalently m has a
/// strict JH filtration and is isomorphic to its graded object).
bool is_polystable(const Representation& m, const StabilityParams& p,
                   long long cap = kDefaultEnumerationCap);

enum class PointType { type1, type2 };

/// Type-1: the S-equivalence class contains an object with a strict JH
/// filtration (decided on gr_max); Type-2 otherwise.
PointType classify_point_type(const Representation& m, const StabilityParams& p,
                              long long cap = kDefaultEnumerationCap);

/// Quotient of m by a subobject, with the projection (ambient cokernel of
/// the inclusion).
QuotientResult quotient_with_projection(const Subrep& s);

/// Preimage of a subobject of the projection's target.
Subrep preimage_subrep(const Morphism& projection, const Subrep& sub_of_target);

}  // namespace filtrep
