#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filtrep/matrix.hpp"
#include "filtrep/path.hpp"
#include "filtrep/quiver.hpp"

namespace filtrep {

/// Dimension vector in canonical ladder vertex order.
using DimVector = std::vector<int>;

long long total_dim(const DimVector& d);

/// Representation of the ladder quiver: one space per vertex (given by its
/// dimension), one matrix per arrow, shape dims[tgt] x dims[src]. Relation
/// satisfaction is a property (check_relations), not an invariant, so torsion
/// theory can inspect arbitrary points.
struct Representation {
    LadderPtr ladder;
    FieldSpec field = FieldSpec::rationals();
    DimVector dims;
    std::vector<Matrix> mats;  // per ladder arrow

    void validate() const;
    const Matrix& mat(int arrow) const { return mats[arrow]; }
    bool operator==(const Representation& other) const;
    /// Canonical flat key of the matrix data; used for orbit scans and
    /// deterministic ordering.
    std::string point_key() const;
};

Representation zero_representation(LadderPtr ladder, FieldSpec field);
Representation make_representation(LadderPtr ladder, FieldSpec field,
                                   DimVector dims, std::vector<Matrix> mats);
Representation direct_sum(const Representation& a, const Representation& b);

bool check_relations(const Representation& m);
/// All horizontal matrices injective. Requires check_relations.
bool is_filtered(const Representation& m);

/// Composite of horizontal maps (from_level, v) -> (to_level, v); identity
/// when the levels agree.
Matrix horizontal_composite(const Representation& m, int base_vertex,
                            int from_level, int to_level);

Matrix evaluate_path(const Representation& m, const NormalPath& p);
Matrix evaluate_path_element(const Representation& m, const PathElement& e);

struct Morphism {
    Representation source, target;
    std::vector<Matrix> comps;  // per vertex, dims_target[v] x dims_source[v]

    void validate() const;  // exact intertwining check
    bool is_mono() const;
    bool is_epi() const;
    bool is_zero() const;
};

Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& m, const Representation& n);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f

/// Subrepresentation given by per-vertex column bases of an ambient object.
/// Bases are kept column-reduced, so equal subobjects compare equal.
struct Subrep {
    Representation ambient;
    std::vector<Matrix> basis;  // per vertex, dims[v] x sub_dim[v]

    DimVector dims() const;
    long long total() const;
    bool is_zero() const;
    bool is_full() const;
    bool same_spaces(const Subrep& other) const;
};

/// Builds a subrep from arbitrary spanning sets; throws validation_error if
/// the spans are not arrow-closed.
Subrep sub_from_spans(const Representation& ambient, std::vector<Matrix> spans);
Subrep zero_subrep(const Representation& ambient);
Subrep full_subrep(const Representation& ambient);
bool is_arrow_closed(const Representation& ambient, const std::vector<Matrix>& spans);

/// The subrep as a representation in its own right, with the inclusion.
Representation restrict_to(const Subrep& s);
Morphism inclusion_of(const Subrep& s);

/// Smallest subrep containing the given spans.
Subrep generated_subrep(const Representation& ambient, const std::vector<Matrix>& spans);
Subrep sum_subrep(const Subrep& a, const Subrep& b);
Subrep intersect_subrep(const Subrep& a, const Subrep& b);

/// Basis of the intertwiner space Hom(m, n).
std::vector<Morphism> hom_space(const Representation& m, const Representation& n);
int dim_hom(const Representation& m, const Representation& n);

/// Isomorphism testing. Over F_p the Hom space is scanned exhaustively when
/// |F_p|^dim <= iso_scan_cap; over Q random elements from a growing integer
/// box are tried (a generic element of Hom between isomorphic objects is
/// invertible over an infinite field).
bool is_isomorphic(const Representation& m, const Representation& n,
                   long long iso_scan_cap = 1000000);

Subrep kernel(const Morphism& f);

/// Vertexwise quotient target/im(f), with the projection.
struct QuotientResult {
    Representation rep;
    Morphism projection;
};
QuotientResult cokernel_ambient(const Morphism& f);

/// Cokernel inside the filtered subcategory: at (j,v), the image of the
/// target's (j,v) space inside the level-l ambient cokernel. Always filtered.
Representation cokernel_filtered(const Morphism& f);

/// Quotient of an ambient object by a subrep (ambient cokernel of the
/// inclusion).
QuotientResult quotient_by(const Subrep& s);

/// f is a strict mono iff its ambient cokernel is filtered again.
bool is_strict_mono(const Morphism& f);
/// Inclusion of an arrow-closed subspace tuple is strict.
bool is_strict_sub(const Subrep& s);

/// Torsion objects vanish at the top level.
bool is_torsion(const Representation& b);
/// Largest torsion subobject: kernels of the composite horizontal maps to
/// level l.
Subrep torsion_part(const Representation& b);

/// Left adjoint of the filtered inclusion, realized as the image filtration
/// B / B_tor.
Representation kappa(const Representation& b);

/// Two-term resolution by filtered objects 0 -> N' -> N -> B -> 0 with
/// N(k,v) the direct sum of B(1,v)...B(k,v).
struct TfResolution {
    Representation n;       // filtered cover
    Representation nprime;  // kernel, filtered, vanishes at level 1
    Morphism f;             // n -> b, vertexwise surjective
};
TfResolution tf_resolution(const Representation& b);

/// Indecomposable projective P'_w of the quotient algebra, in the normal path
/// basis.
Representation indecomposable_projective(LadderPtr ladder, int w, FieldSpec field);

/// Morphism P'_w -> n determined by an element of n(w) (a column vector),
/// via dim Hom(P'_w, N) = dim N(w).
Morphism yoneda_morphism(const Representation& projective_w, int w,
                         const Representation& n, const Matrix& element);

}  // namespace filtrep
