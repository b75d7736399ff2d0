#include "filtrep/semiinv.hpp"

#include <algorithm>
#include <numeric>

#include "filtrep/random.hpp"

namespace filtrep {

int Presentation::rows() const {
    return std::accumulate(u1.begin(), u1.end(), 0);
}
int Presentation::cols() const {
    return std::accumulate(u0.begin(), u0.end(), 0);
}

int Presentation::row_vertex(int r) const {
    for (size_t w = 0; w < u1.size(); ++w) {
        if (r < u1[w]) return static_cast<int>(w);
        r -= u1[w];
    }
    throw shape_error("presentation row out of range");
}

int Presentation::col_vertex(int c) const {
    for (size_t w = 0; w < u0.size(); ++w) {
        if (c < u0[w]) return static_cast<int>(w);
        c -= u0[w];
    }
    throw shape_error("presentation column out of range");
}

void Presentation::validate() const {
    if (!ladder) throw validation_error("presentation without ladder");
    if (static_cast<int>(u0.size()) != ladder->num_vertices() ||
        static_cast<int>(u1.size()) != ladder->num_vertices())
        throw validation_error("presentation multiplicity length mismatch");
    for (int x : u0)
        if (x < 0) throw validation_error("negative multiplicity");
    for (int x : u1)
        if (x < 0) throw validation_error("negative multiplicity");
    if (static_cast<int>(gamma.size()) != rows())
        throw validation_error("gamma row count mismatch");
    for (int r = 0; r < rows(); ++r) {
        if (static_cast<int>(gamma[r].size()) != cols())
            throw validation_error("gamma column count mismatch");
        for (int c = 0; c < cols(); ++c) {
            const PathElement& e = gamma[r][c];
            if (e.src() != col_vertex(c) || e.tgt() != row_vertex(r))
                throw validation_error("gamma entry endpoints mismatch at (" +
                                       std::to_string(r) + "," + std::to_string(c) + ")");
        }
    }
}

Presentation empty_presentation(LadderPtr ladder) {
    Presentation p;
    p.ladder = ladder;
    p.u0.assign(ladder->num_vertices(), 0);
    p.u1.assign(ladder->num_vertices(), 0);
    return p;
}

Presentation zero_presentation(LadderPtr ladder, std::vector<int> u0,
                               std::vector<int> u1) {
    Presentation p;
    p.ladder = ladder;
    p.u0 = std::move(u0);
    p.u1 = std::move(u1);
    p.gamma.assign(p.rows(), {});
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c)
            p.gamma[r].push_back(
                PathElement::zero(ladder, p.col_vertex(c), p.row_vertex(r)));
    p.validate();
    return p;
}

namespace {

/// Radical spans (sums of incoming arrow images) per vertex.
std::vector<Matrix> radical_spans(const Representation& n) {
    const LadderQuiver& L = *n.ladder;
    std::vector<Matrix> rad;
    for (int u = 0; u < L.num_vertices(); ++u)
        rad.push_back(Matrix(n.field, n.dims[u], 0));
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        rad[ar.tgt] = hstack(rad[ar.tgt], n.mat(a));
    }
    for (auto& m : rad) m = column_reduce(m);
    return rad;
}

/// Decompose a coordinate vector of a direct sum of projectives into path
/// element columns. copies[(k)] = (vertex w, projective rep); y is a column
/// in the sum's coordinates at vertex u.
std::vector<PathElement> column_to_path_elements(
    const LadderQuiver& L, LadderPtr lp,
    const std::vector<std::pair<int, const Representation*>>& copies, int u,
    const Matrix& y) {
    std::vector<PathElement> out;
    int offset = 0;
    for (const auto& [w, proj] : copies) {
        auto basis = normal_path_basis(L, w, u);
        PathElement e(lp, w, u);
        for (size_t b = 0; b < basis.size(); ++b) {
            const Rational& c = y.at(offset + static_cast<int>(b), 0);
            if (c != 0) e.add_term(basis[b], c);
        }
        out.push_back(std::move(e));
        offset += static_cast<int>(basis.size());
    }
    return out;
}

}  // namespace

MinimalPresentation minimal_presentation(const Representation& n) {
    if (!check_relations(n))
        throw validation_error("minimal presentation of a non relation-satisfying object");
    const LadderQuiver& L = *n.ladder;
    LadderPtr lp = n.ladder;

    // tops of n: complements of the radical
    std::vector<Matrix> rad = radical_spans(n);
    std::vector<int> u0(L.num_vertices(), 0);
    std::vector<std::pair<int, Matrix>> generators;  // (vertex, lift column)
    for (int u = 0; u < L.num_vertices(); ++u) {
        Matrix comp = extend_to_full_basis(rad[u]);
        u0[u] = comp.cols();
        for (int c = 0; c < comp.cols(); ++c) generators.emplace_back(u, comp.col(c));
    }

    // projective cover
    std::vector<Representation> projs;
    std::vector<std::pair<int, const Representation*>> copies0;
    Representation p0 = zero_representation(lp, n.field);
    projs.reserve(generators.size());
    for (const auto& [w, lift] : generators) {
        projs.push_back(indecomposable_projective(lp, w, n.field));
        p0 = direct_sum(p0, projs.back());
    }
    for (size_t k = 0; k < generators.size(); ++k)
        copies0.emplace_back(generators[k].first, &projs[k]);

    Morphism cover{p0, n, {}};
    for (int u = 0; u < L.num_vertices(); ++u) {
        Matrix comp(n.field, n.dims[u], 0);
        for (size_t k = 0; k < generators.size(); ++k) {
            Morphism yk = yoneda_morphism(projs[k], generators[k].first, n,
                                          generators[k].second);
            comp = hstack(comp, yk.comps[u]);
        }
        cover.comps.push_back(std::move(comp));
    }
    cover.validate();

    // kernel and its tops
    Subrep ker = kernel(cover);
    Representation krep = restrict_to(ker);
    std::vector<Matrix> krad = radical_spans(krep);
    std::vector<int> u1(L.num_vertices(), 0);
    std::vector<std::pair<int, Matrix>> kgens;  // (vertex, column in p0 coords)
    for (int u = 0; u < L.num_vertices(); ++u) {
        Matrix comp = extend_to_full_basis(krad[u]);
        u1[u] = comp.cols();
        for (int c = 0; c < comp.cols(); ++c)
            kgens.emplace_back(u, ker.basis[u].mul(comp.col(c)));
    }

    Presentation pres;
    pres.ladder = lp;
    pres.u0 = u0;
    pres.u1 = u1;
    for (const auto& [u, ycol] : kgens) {
        pres.gamma.push_back(column_to_path_elements(L, lp, copies0, u, ycol));
    }
    pres.validate();

    bool pd1 = true;
    if (pres.rows() > 0) {
        RealizedPresentation real = realize_presentation(pres, n.field);
        pd1 = real.gamma.is_mono();
    }
    return {std::move(pres), pd1};
}

RealizedPresentation realize_presentation(const Presentation& pres, FieldSpec field) {
    pres.validate();
    const LadderQuiver& L = *pres.ladder;
    LadderPtr lp = pres.ladder;

    auto build_sum = [&](const std::vector<int>& mult,
                         std::vector<int>& copy_vertices) {
        Representation sum = zero_representation(lp, field);
        for (int w = 0; w < L.num_vertices(); ++w)
            for (int i = 0; i < mult[w]; ++i) {
                sum = direct_sum(sum, indecomposable_projective(lp, w, field));
                copy_vertices.push_back(w);
            }
        return sum;
    };
    std::vector<int> rowv, colv;
    Representation p1 = build_sum(pres.u1, rowv);
    Representation p0 = build_sum(pres.u0, colv);

    Morphism g{p1, p0, {}};
    for (int x = 0; x < L.num_vertices(); ++x) {
        Matrix comp(field, p0.dims[x], p1.dims[x]);
        int col_off = 0;
        for (int r = 0; r < pres.rows(); ++r) {
            const int w1 = rowv[r];
            auto qbasis = normal_path_basis(L, w1, x);
            int row_off = 0;
            for (int c = 0; c < pres.cols(); ++c) {
                const int w0 = colv[c];
                auto target_basis_count =
                    static_cast<int>(normal_path_basis(L, w0, x).size());
                const PathElement& entry = pres.gamma[r][c];
                for (size_t qi = 0; qi < qbasis.size(); ++qi) {
                    PathElement q(lp, w1, x);
                    q.add_term(qbasis[qi], Rational(1));
                    if (!entry.is_zero()) {
                        PathElement composed = q.compose_after(entry);
                        for (const auto& [np, coeff] : composed.terms()) {
                            int ri = normal_path_index(L, np);
                            comp.set(row_off + ri, col_off + static_cast<int>(qi),
                                     field.normalize(coeff));
                        }
                    }
                }
                row_off += target_basis_count;
            }
            col_off += static_cast<int>(qbasis.size());
        }
        g.comps.push_back(std::move(comp));
    }
    g.validate();
    return {std::move(p1), std::move(p0), std::move(g)};
}

bool weight_check(const Presentation& pres, const StabilityParams& p,
                  int n_multiplier) {
    if (n_multiplier <= 0) throw validation_error("weight multiplier must be positive");
    const long long s = p.convention == Convention::sub_nonneg ? -1 : +1;
    for (size_t w = 0; w < pres.u0.size(); ++w)
        if (pres.u0[w] - pres.u1[w] != s * n_multiplier * p.derived[w]) return false;
    return true;
}

Matrix hom_matrix(const Presentation& pres, const Representation& m) {
    pres.validate();
    if (!(*pres.ladder == *m.ladder))
        throw validation_error("presentation and representation ladders differ");
    int rows = 0, cols = 0;
    for (size_t w = 0; w < pres.u1.size(); ++w) rows += pres.u1[w] * m.dims[w];
    for (size_t w = 0; w < pres.u0.size(); ++w) cols += pres.u0[w] * m.dims[w];
    Matrix out(m.field, rows, cols);
    int roff = 0;
    for (int r = 0; r < pres.rows(); ++r) {
        const int w1 = pres.row_vertex(r);
        int coff = 0;
        for (int c = 0; c < pres.cols(); ++c) {
            const int w0 = pres.col_vertex(c);
            Matrix block = evaluate_path_element(m, pres.gamma[r][c]);
            for (int i = 0; i < m.dims[w1]; ++i)
                for (int j = 0; j < m.dims[w0]; ++j)
                    out.set(roff + i, coff + j, block.at(i, j));
            coff += m.dims[w0];
        }
        roff += m.dims[w1];
    }
    return out;
}

Rational theta_value(const Presentation& pres, const Representation& m) {
    Matrix h = hom_matrix(pres, m);
    if (h.rows() != h.cols())
        throw shape_error("theta value of a non-square evaluation map (" +
                          std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + ")");
    return det(h);
}

std::vector<long long> chi_u_exponents(const Presentation& pres) {
    std::vector<long long> e;
    for (size_t w = 0; w < pres.u0.size(); ++w)
        e.push_back(static_cast<long long>(pres.u1[w]) - pres.u0[w]);
    return e;
}

Rational chi_u_value(const Presentation& pres, const std::vector<Matrix>& g) {
    std::vector<long long> e = chi_u_exponents(pres);
    if (g.size() != e.size()) throw shape_error("chi_U group element length mismatch");
    if (g.empty()) return Rational(1);
    const FieldSpec& f = g[0].field();
    Rational out(1);
    for (size_t w = 0; w < e.size(); ++w) {
        Rational d = det(g[w]);
        long long k = e[w];
        Rational base = k >= 0 ? d : f.inv(d);
        for (long long i = 0; i < std::abs(k); ++i) out = f.mul(out, base);
    }
    return out;
}

namespace {

struct CellCandidates {
    int row, col;
    std::vector<NormalPath> paths;
};

}  // namespace

std::optional<Presentation> certificate_search(const Representation& m,
                                               const StabilityParams& p,
                                               const CertificateBounds& bounds) {
    const LadderQuiver& L = *m.ladder;
    LadderPtr lp = m.ladder;
    const long long s = p.convention == Convention::sub_nonneg ? -1 : +1;
    Rng rng(bounds.seed);

    for (int n = 1; n <= bounds.n_max; ++n) {
        std::vector<int> u0(L.num_vertices()), u1(L.num_vertices());
        for (int w = 0; w < L.num_vertices(); ++w) {
            long long rhs = s * n * p.derived[w];
            u0[w] = static_cast<int>(std::max(0LL, rhs));
            u1[w] = static_cast<int>(std::max(0LL, -rhs));
        }
        // the evaluation map must be square on this particular m
        long long rows = 0, cols = 0;
        for (int w = 0; w < L.num_vertices(); ++w) {
            rows += static_cast<long long>(u1[w]) * m.dims[w];
            cols += static_cast<long long>(u0[w]) * m.dims[w];
        }
        if (rows != cols) continue;
        Presentation base = zero_presentation(lp, u0, u1);
        if (base.rows() == 0 && base.cols() == 0) {
            // empty presentation: det of the 0x0 map is 1, certifies anything
            // with theta == 0
            return base;
        }
        if (rows == 0) continue;

        std::vector<CellCandidates> cells;
        double combos = 1;
        for (int r = 0; r < base.rows(); ++r)
            for (int c = 0; c < base.cols(); ++c) {
                CellCandidates cc{r, c, {}};
                for (const auto& np :
                     normal_path_basis(L, base.col_vertex(c), base.row_vertex(r)))
                    if (np.length() <= bounds.entry_degree) cc.paths.push_back(np);
                combos *= 1.0 + 2.0 * static_cast<double>(cc.paths.size());
                cells.push_back(std::move(cc));
            }

        auto try_candidate = [&](const Presentation& cand) -> bool {
            return theta_value(cand, m) != 0;
        };

        if (combos <= static_cast<double>(bounds.combo_cap)) {
            // exhaustive phase: one path with coefficient in {0, +1, -1} per cell
            std::vector<long long> odo(cells.size(), 0);
            while (true) {
                Presentation cand = base;
                for (size_t t = 0; t < cells.size(); ++t) {
                    long long x = odo[t];
                    if (x > 0) {
                        long long pi = (x - 1) / 2;
                        bool negative = ((x - 1) % 2) == 1;
                        PathElement e(lp, base.col_vertex(cells[t].col),
                                      base.row_vertex(cells[t].row));
                        e.add_term(cells[t].paths[pi],
                                   negative ? Rational(-1) : Rational(1));
                        cand.gamma[cells[t].row][cells[t].col] = e;
                    }
                }
                if (try_candidate(cand)) return cand;
                size_t t = 0;
                while (t < cells.size() &&
                       odo[t] + 1 == 1 + 2 * static_cast<long long>(cells[t].paths.size())) {
                    odo[t] = 0;
                    ++t;
                }
                if (t == cells.size()) break;
                ++odo[t];
            }
        }

        for (int trial = 0; trial < bounds.random_trials; ++trial) {
            long long box = 1 + trial / 16;
            Presentation cand = base;
            for (const auto& cc : cells) {
                PathElement e(lp, base.col_vertex(cc.col), base.row_vertex(cc.row));
                for (const auto& np : cc.paths) {
                    Rational coeff = random_scalar(m.field, rng, box);
                    if (coeff != 0) e.add_term(np, coeff);
                }
                cand.gamma[cc.row][cc.col] = e;
            }
            if (try_candidate(cand)) return cand;
        }
    }
    return std::nullopt;
}

KappaPresentation kappa_presentation(const Presentation& pres) {
    pres.validate();
    RealizedPresentation real = realize_presentation(pres, FieldSpec::rationals());
    if (!real.gamma.is_mono()) return {pres, KappaClass::not_mono};
    Representation coker = cokernel_ambient(real.gamma).rep;
    if (is_torsion(coker)) return {pres, KappaClass::epi_monic};
    return {pres, KappaClass::proj_dim_one_fil};
}

std::vector<Rational> theta_coordinates(const Representation& m,
                                        const std::vector<Presentation>& gammas) {
    if (gammas.empty()) return {};
    std::vector<long long> common = chi_u_exponents(gammas[0]);
    for (size_t i = 1; i < gammas.size(); ++i)
        if (chi_u_exponents(gammas[i]) != common)
            throw validation_error("theta coordinates need presentations of a common weight");
    std::vector<Rational> out;
    for (size_t i = 0; i < gammas.size(); ++i) {
        try {
            out.push_back(theta_value(gammas[i], m));
        } catch (const shape_error& e) {
            throw shape_error("presentation " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace filtrep
