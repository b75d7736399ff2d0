#pragma once

#include <map>
#include <set>

#include "filtrep/filtration.hpp"

namespace filtrep {

/// One-parameter subgroup of the base-change group: integer weights per basis
/// vector of each vertex space, together with the change of basis that
/// diagonalizes the action. Fully general, since any 1-PS of a product of
/// general linear groups diagonalizes.
struct OnePS {
    std::vector<std::vector<long long>> weights;  // per vertex, length dims[w]
    std::vector<Matrix> basis;                    // per vertex, invertible

    void validate(const Representation& m) const;
};

OnePS constant_ops(const Representation& m, long long weight = 0);

enum class Locus { rel, fil };

struct LimitResult {
    bool exists = false;
    std::optional<Representation> limit;
};

/// t -> 0 limit of the 1-PS acting on m. Exists in the relation locus iff
/// every arrow block from a higher weight to a lower one vanishes; the limit
/// keeps the equal-weight blocks. Locus fil additionally requires the limit's
/// horizontal maps injective.
LimitResult ops_limit(const Representation& m, const OnePS& l, Locus locus);

/// Descending chain of weight->=n spans, one entry per distinct weight
/// threshold, ending at 0. Requires the limit to exist in the rel locus.
std::vector<Subrep> filtration_from_ops(const Representation& m, const OnePS& l);

/// Inverse construction: weight i on the i-th layer of the descending chain.
/// The chain must descend from the full object to 0.
OnePS ops_from_filtration(const std::vector<Subrep>& chain);

/// <chi_theta, lambda> = sum_w theta_w * (sum of weights at w).
long long pairing_chi_lambda(const std::vector<long long>& theta, const OnePS& l,
                             const DimVector& d);

/// Hilbert-Mumford test over all two-step weight gradings (they biject with
/// subspace tuples, so the bounded search is complete for the sub-object
/// criterion): semistable iff every 1-PS with a limit in the locus pairs with
/// the convention-consistent sign.
bool hilbert_mumford_semistable(const Representation& m, const StabilityParams& p,
                                Locus locus, long long cap = kDefaultEnumerationCap);

/// Closed orbit inside the semistable filtered locus iff m is isomorphic to
/// the graded object of its maximal flag.
bool is_closed_orbit_point(const Representation& m, const StabilityParams& p,
                           long long cap = kDefaultEnumerationCap);

/// GIT equivalence of semistable points, decided by S-equivalence.
bool git_equivalent(const Representation& m, const Representation& n,
                    const StabilityParams& p, long long cap = kDefaultEnumerationCap);

/// --- brute-force oracles over tiny finite fields -------------------------

/// All tuples of invertible matrices with the given vertex dimensions.
std::vector<std::vector<Matrix>> enumerate_group(const FieldSpec& f,
                                                 const DimVector& dims,
                                                 long long cap = 1000000);

Representation act(const std::vector<Matrix>& g, const Representation& m);

/// Saturation of the orbit of m under group translates and two-step 1-PS
/// degenerations; a literal stand-in for the orbit closure at desk scale.
/// Keys identify points by their matrix data.
std::map<std::string, Representation> orbit_closure_scan(const Representation& m,
                                                         long long cap = 1000000);

/// Orbit of m as canonical point keys.
std::set<std::string> orbit_of(const Representation& m, long long cap = 1000000);

}  // namespace filtrep
