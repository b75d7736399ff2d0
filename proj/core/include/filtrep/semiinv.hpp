#pragma once

#include "filtrep/stability.hpp"

namespace filtrep {

/// Map between projective modules, encoded by multiplicity vectors U0, U1 and
/// a block matrix gamma of path elements. Row (w,i) ranges over the U1 copies,
/// column (w',j) over the U0 copies; the entry is a path element from w' to w,
/// i.e. an element of Hom(P'_w, P'_w') under the Yoneda identification.
struct Presentation {
    LadderPtr ladder;
    std::vector<int> u0, u1;                      // per ladder vertex
    std::vector<std::vector<PathElement>> gamma;  // [row][col]

    int rows() const;
    int cols() const;
    int row_vertex(int r) const;
    int col_vertex(int c) const;
    void validate() const;
};

Presentation empty_presentation(LadderPtr ladder);
/// Presentation with all-zero gamma for given multiplicities.
Presentation zero_presentation(LadderPtr ladder, std::vector<int> u0,
                               std::vector<int> u1);

struct MinimalPresentation {
    Presentation pres;
    bool proj_dim_le_one = false;  // the realized gamma is injective
};

/// Minimal projective presentation of a relation-satisfying object: U0 counts
/// the tops (N / rad N), gamma presents the kernel of the projective cover by
/// its own cover.
MinimalPresentation minimal_presentation(const Representation& n);

struct RealizedPresentation {
    Representation p1, p0;
    Morphism gamma;  // p1 -> p0
};

RealizedPresentation realize_presentation(const Presentation& pres, FieldSpec field);

/// Per-vertex multiplicity condition tying U0 - U1 to n times the derived
/// theta. The active convention fixes the sign of the right-hand side:
/// sub_nonneg pairs with U0_w - U1_w = -n theta_w, which gives the
/// determinant below GIT weight chi_theta^n (see chi_u_exponents).
bool weight_check(const Presentation& pres, const StabilityParams& p,
                  int n_multiplier);

/// The evaluation map Hom(P0~, M) -> Hom(P1~, M) in Yoneda coordinates:
/// block (row (w,i), col (w',j)) is M(gamma entry). Shape
/// (sum U1_w d_w) x (sum U0_w d_w).
Matrix hom_matrix(const Presentation& pres, const Representation& m);

/// det of the evaluation map; the determinantal theta function.
Rational theta_value(const Presentation& pres, const Representation& m);

/// Exponents of the character chi_U with
/// theta(g.M) = chi_U(g) theta(M): per vertex U1_w - U0_w (precomposition by
/// gamma makes the U1 blocks act on the left and the U0 blocks on the right).
std::vector<long long> chi_u_exponents(const Presentation& pres);
Rational chi_u_value(const Presentation& pres, const std::vector<Matrix>& g);

struct CertificateBounds {
    int n_max = 2;
    int entry_degree = 2;
    std::uint64_t seed = 1;
    long long combo_cap = 50000;  // exhaustive phase budget
    int random_trials = 200;
};

/// Bounded search for a weight-admissible presentation with nonvanishing
/// theta value. A returned certificate implies semistability; absence within
/// bounds is inconclusive.
std::optional<Presentation> certificate_search(const Representation& m,
                                               const StabilityParams& p,
                                               const CertificateBounds& bounds = {});

enum class KappaClass { proj_dim_one_fil, epi_monic, not_mono };

struct KappaPresentation {
    Presentation pres;  // unchanged: projectives are filtered and kappa
                        // restricts to the identity on them
    KappaClass cls;
};

/// Classification of the presentation after applying the filtered reflection:
/// either the cokernel survives as a filtered object of projective dimension
/// one, or the map becomes epi-monic (cokernel torsion).
KappaPresentation kappa_presentation(const Presentation& pres);

/// Evaluate a family of presentations of a common weight; projective
/// coordinates of the point.
std::vector<Rational> theta_coordinates(const Representation& m,
                                        const std::vector<Presentation>& gammas);

}  // namespace filtrep
