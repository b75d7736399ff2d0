#pragma once

#include <functional>
#include <optional>

#include "filtrep/rep.hpp"

namespace filtrep {

/// Nonnegative weights r_w defining an additive rank function. Positivity:
/// for every base vertex v and every level k, the column tail sum
/// r_(k,v) + ... + r_(l,v) is positive, which makes the rank strictly
/// positive on every nonzero filtered object.
struct RankWeights {
    std::vector<long long> r;  // per ladder vertex

    void validate(const LadderQuiver& L) const;
};

RankWeights unit_rank_weights(const LadderQuiver& L);
/// Weights supported on the sink level (1 at each (l, v), 0 below): the rank
/// that vanishes exactly on torsion objects.
RankWeights sink_rank_weights(const LadderQuiver& L);

using DegreeVector = std::vector<long long>;  // Theta, per ladder vertex

long long rank_of(const DimVector& d, const RankWeights& rk);
long long degree_of(const DimVector& d, const DegreeVector& theta_deg);

/// Exact slope Theta(d) / rk(d); throws domain_error when the rank vanishes.
Rational slope(const DimVector& d, const DegreeVector& theta_deg,
               const RankWeights& rk);

/// The GIT weight theta_w = Theta(d) r_w - rk(d) Theta_w; satisfies
/// theta(d) = 0 exactly.
std::vector<long long> derive_theta(const DegreeVector& theta_deg,
                                    const RankWeights& rk, const DimVector& d);

/// Degree nonnegative on the torsion simples (levels below the sink), the
/// condition under which semistables of a fixed slope form a quasi-abelian
/// category and HN filtrations exist.
bool is_slope_admissible(const DegreeVector& theta_deg, const LadderQuiver& L);

/// Total dimension of the sink copy plus the ranks of the horizontal maps;
/// equals the total dimension for filtered objects.
long long rk_dim_filtered(const Representation& m);

/// Sign convention of the sub-object test. sub_nonneg: subobjects must have
/// theta >= 0 (equivalently slope <= the object's slope).
enum class Convention { sub_nonneg, sub_nonpos };

struct StabilityParams {
    DegreeVector theta_degree;       // Theta
    RankWeights rank_weights;        // rk
    DimVector total_dims;            // the fixed d
    std::vector<long long> derived;  // theta
    Convention convention = Convention::sub_nonneg;

    Rational mu() const {  // the fixed slope Theta(d)/rk(d)
        return slope(total_dims, theta_degree, rank_weights);
    }

    static StabilityParams make(const LadderQuiver& L, DegreeVector theta_deg,
                                RankWeights rk, DimVector d,
                                Convention conv = Convention::sub_nonneg);
};

/// All subspaces of F_p^n as column bases in reduced echelon form, canonical
/// order (dimension, then pivot set, then entries).
std::vector<Matrix> subspaces_of(const FieldSpec& f, int n);
double count_subspaces(std::uint32_t p, int n);

enum class SubrepMode { all, strict };

constexpr long long kDefaultEnumerationCap = 10000000;

/// Visits every arrow-closed subspace tuple of m (mode strict keeps only
/// strict subobjects). F_p only; throws resource_error past the cap. The
/// visitor returns false to stop early.
void for_each_subrep(const Representation& m, SubrepMode mode, long long cap,
                     const std::function<bool(const Subrep&)>& visit);

std::vector<Subrep> enumerate_subreps(const Representation& m, SubrepMode mode,
                                      long long cap = kDefaultEnumerationCap);

struct StabilityOptions {
    enum class Quantify { all_subobjects, strict_only };
    Quantify quantify = Quantify::all_subobjects;
    long long cap = kDefaultEnumerationCap;
};

struct StabilityVerdict {
    bool semistable = false;
    bool stable = false;
    /// true when the verdict was obtained by reduction mod agreeing good
    /// primes rather than direct enumeration (rational field inputs)
    bool oracle_backed = false;
    std::vector<std::uint32_t> primes;
    std::optional<Subrep> destabilizer;  // a witness against semistability
};

/// Slope semistability of a filtered object, by exhaustive subobject
/// enumeration over F_p; over Q by reduction mod three agreeing good primes.
StabilityVerdict decide_stability(const Representation& m, const StabilityParams& p,
                                  const StabilityOptions& opts = {});
bool is_semistable(const Representation& m, const StabilityParams& p,
                   const StabilityOptions& opts = {});
bool is_stable(const Representation& m, const StabilityParams& p,
               const StabilityOptions& opts = {});

/// King-style test on the derived theta: theta(d(m)) = 0 and every nonzero
/// subobject has theta of the convention-consistent sign. Valid for arbitrary
/// relation-satisfying objects.
bool is_theta_semistable(const Representation& m, const StabilityParams& p,
                         const StabilityOptions& opts = {});
bool is_theta_stable(const Representation& m, const StabilityParams& p,
                     const StabilityOptions& opts = {});

/// The strict subobject maximizing (slope, then rank) lexicographically in
/// the convention's destabilizing direction; ties broken by enumeration
/// order. Returns the first Harder-Narasimhan step; equals the full object
/// exactly when m is semistable against strict subobjects.
Subrep maximal_destabilizing_sub(const Representation& m, const StabilityParams& p,
                                 long long cap = kDefaultEnumerationCap);

/// none iff m is semistable against strict subobjects.
std::optional<Subrep> destabilizing_subrep(const Representation& m,
                                           const StabilityParams& p,
                                           long long cap = kDefaultEnumerationCap);

/// Reduction of rational matrix data mod p; nullopt when p divides a
/// denominator.
std::optional<Representation> reduce_mod_p(const Representation& m, std::uint32_t p);
/// A good prime does not divide any denominator and preserves the rank of
/// every arrow matrix and horizontal composite.
bool is_good_prime(const Representation& m, std::uint32_t p);

}  // namespace filtrep
