#include "filtrep/rep.hpp"

#include <algorithm>
#include <sstream>

#include "filtrep/random.hpp"

namespace filtrep {

long long total_dim(const DimVector& d) {
    long long t = 0;
    for (int x : d) t += x;
    return t;
}

void Representation::validate() const {
    if (!ladder) throw validation_error("representation without ladder");
    if (static_cast<int>(dims.size()) != ladder->num_vertices())
        throw validation_error("dimension vector length mismatch");
    for (int x : dims)
        if (x < 0) throw validation_error("negative dimension");
    if (static_cast<int>(mats.size()) != ladder->num_arrows())
        throw validation_error("arrow matrix count mismatch");
    for (int a = 0; a < ladder->num_arrows(); ++a) {
        const LadderArrow& ar = ladder->arrow(a);
        if (mats[a].rows() != dims[ar.tgt] || mats[a].cols() != dims[ar.src])
            throw validation_error("matrix shape mismatch on arrow " + ar.name);
        if (!(mats[a].field() == field))
            throw validation_error("matrix field mismatch on arrow " + ar.name);
    }
}

bool Representation::operator==(const Representation& other) const {
    return *ladder == *other.ladder && field == other.field &&
           dims == other.dims && mats == other.mats;
}

std::string Representation::point_key() const {
    std::ostringstream os;
    for (int d : dims) os << d << ";";
    for (const auto& m : mats) {
        for (const auto& e : m.entries()) os << field.to_string(e) << ",";
        os << "|";
    }
    return os.str();
}

Representation zero_representation(LadderPtr ladder, FieldSpec field) {
    Representation r;
    r.ladder = ladder;
    r.field = field;
    r.dims.assign(ladder->num_vertices(), 0);
    for (int a = 0; a < ladder->num_arrows(); ++a)
        r.mats.push_back(Matrix(field, 0, 0));
    return r;
}

Representation make_representation(LadderPtr ladder, FieldSpec field,
                                   DimVector dims, std::vector<Matrix> mats) {
    Representation r;
    r.ladder = std::move(ladder);
    r.field = field;
    r.dims = std::move(dims);
    r.mats = std::move(mats);
    r.validate();
    return r;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(*a.ladder == *b.ladder) || !(a.field == b.field))
        throw validation_error("direct sum over different ladders or fields");
    Representation r;
    r.ladder = a.ladder;
    r.field = a.field;
    for (size_t v = 0; v < a.dims.size(); ++v)
        r.dims.push_back(a.dims[v] + b.dims[v]);
    for (size_t ar = 0; ar < a.mats.size(); ++ar)
        r.mats.push_back(dsum(a.mats[ar], b.mats[ar]));
    return r;
}

namespace {
Matrix evaluate_arrow_sequence(const Representation& m, const std::vector<int>& seq) {
    // application order: seq[0] first
    const LadderQuiver& L = *m.ladder;
    Matrix acc = m.mat(seq[0]);
    for (size_t i = 1; i < seq.size(); ++i) acc = m.mat(seq[i]).mul(acc);
    (void)L;
    return acc;
}
}  // namespace

bool check_relations(const Representation& m) {
    m.validate();
    for (const auto& rel : m.ladder->relations()) {
        if (!(evaluate_arrow_sequence(m, rel.lhs) == evaluate_arrow_sequence(m, rel.rhs)))
            return false;
    }
    return true;
}

bool is_filtered(const Representation& m) {
    if (!check_relations(m))
        throw validation_error("is_filtered on a representation violating the relations");
    for (int a = 0; a < m.ladder->num_arrows(); ++a)
        if (m.ladder->arrow(a).kind == LadderArrow::Kind::horizontal &&
            !is_full_column_rank(m.mat(a)))
            return false;
    return true;
}

Matrix horizontal_composite(const Representation& m, int base_vertex,
                            int from_level, int to_level) {
    const LadderQuiver& L = *m.ladder;
    Matrix acc = Matrix::identity(m.field, m.dims[L.vertex_index(from_level, base_vertex)]);
    for (int j = from_level; j < to_level; ++j)
        acc = m.mat(L.horizontal_index(j, base_vertex)).mul(acc);
    return acc;
}

Matrix evaluate_path(const Representation& m, const NormalPath& p) {
    const LadderQuiver& L = *m.ladder;
    Matrix acc = horizontal_composite(m, p.base_src, p.from_level, p.to_level);
    for (int a : p.q_arrows) acc = m.mat(L.vertical_index(p.to_level, a)).mul(acc);
    return acc;
}

Matrix evaluate_path_element(const Representation& m, const PathElement& e) {
    const LadderQuiver& L = *m.ladder;
    Matrix acc(m.field, m.dims[e.tgt()], m.dims[e.src()]);
    for (const auto& [p, c] : e.terms())
        acc = acc.add(evaluate_path(m, p).scaled(m.field.normalize(c)));
    (void)L;
    return acc;
}

void Morphism::validate() const {
    source.validate();
    target.validate();
    if (!(*source.ladder == *target.ladder) || !(source.field == target.field))
        throw validation_error("morphism between different ladders or fields");
    if (comps.size() != source.dims.size())
        throw validation_error("morphism component count mismatch");
    for (size_t v = 0; v < comps.size(); ++v)
        if (comps[v].rows() != target.dims[v] || comps[v].cols() != source.dims[v])
            throw validation_error("morphism component shape mismatch");
    const LadderQuiver& L = *source.ladder;
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        Matrix lhs = target.mat(a).mul(comps[ar.src]);
        Matrix rhs = comps[ar.tgt].mul(source.mat(a));
        if (!(lhs == rhs))
            throw validation_error("morphism fails intertwining on arrow " + ar.name);
    }
}

bool Morphism::is_mono() const {
    for (const auto& c : comps)
        if (!is_full_column_rank(c)) return false;
    return true;
}

bool Morphism::is_epi() const {
    for (size_t v = 0; v < comps.size(); ++v)
        if (rank_of(comps[v]) != target.dims[v]) return false;
    return true;
}

bool Morphism::is_zero() const {
    for (const auto& c : comps)
        if (!c.is_zero()) return false;
    return true;
}

Morphism identity_morphism(const Representation& m) {
    Morphism f{m, m, {}};
    for (int d : m.dims) f.comps.push_back(Matrix::identity(m.field, d));
    return f;
}

Morphism zero_morphism(const Representation& m, const Representation& n) {
    Morphism f{m, n, {}};
    for (size_t v = 0; v < m.dims.size(); ++v)
        f.comps.push_back(Matrix(m.field, n.dims[v], m.dims[v]));
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism h{f.source, g.target, {}};
    for (size_t v = 0; v < f.comps.size(); ++v)
        h.comps.push_back(g.comps[v].mul(f.comps[v]));
    return h;
}

DimVector Subrep::dims() const {
    DimVector d;
    for (const auto& b : basis) d.push_back(b.cols());
    return d;
}

long long Subrep::total() const { return total_dim(dims()); }

bool Subrep::is_zero() const { return total() == 0; }

bool Subrep::is_full() const {
    for (size_t v = 0; v < basis.size(); ++v)
        if (basis[v].cols() != ambient.dims[v]) return false;
    return true;
}

bool Subrep::same_spaces(const Subrep& other) const {
    return basis == other.basis;  // bases are column-reduced canonical
}

bool is_arrow_closed(const Representation& ambient, const std::vector<Matrix>& spans) {
    const LadderQuiver& L = *ambient.ladder;
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        if (!span_contains(spans[ar.tgt], ambient.mat(a).mul(spans[ar.src])))
            return false;
    }
    return true;
}

Subrep sub_from_spans(const Representation& ambient, std::vector<Matrix> spans) {
    if (spans.size() != ambient.dims.size())
        throw validation_error("subrep span count mismatch");
    for (size_t v = 0; v < spans.size(); ++v) {
        if (spans[v].rows() != ambient.dims[v])
            throw validation_error("subrep span row count mismatch");
        spans[v] = column_reduce(spans[v]);
    }
    if (!is_arrow_closed(ambient, spans))
        throw validation_error("spans are not arrow-closed");
    return Subrep{ambient, std::move(spans)};
}

Subrep zero_subrep(const Representation& ambient) {
    std::vector<Matrix> b;
    for (int d : ambient.dims) b.push_back(Matrix(ambient.field, d, 0));
    return Subrep{ambient, std::move(b)};
}

Subrep full_subrep(const Representation& ambient) {
    std::vector<Matrix> b;
    for (int d : ambient.dims) b.push_back(Matrix::identity(ambient.field, d));
    return Subrep{ambient, std::move(b)};
}

Representation restrict_to(const Subrep& s) {
    Representation r;
    r.ladder = s.ambient.ladder;
    r.field = s.ambient.field;
    r.dims = s.dims();
    const LadderQuiver& L = *r.ladder;
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        auto x = solve(s.basis[ar.tgt], s.ambient.mat(a).mul(s.basis[ar.src]));
        if (!x) throw validation_error("subrep is not arrow-closed");
        r.mats.push_back(*x);
    }
    r.validate();
    return r;
}

Morphism inclusion_of(const Subrep& s) {
    Morphism f{restrict_to(s), s.ambient, s.basis};
    return f;
}

Subrep generated_subrep(const Representation& ambient, const std::vector<Matrix>& spans) {
    std::vector<Matrix> cur;
    for (size_t v = 0; v < spans.size(); ++v) cur.push_back(column_reduce(spans[v]));
    const LadderQuiver& L = *ambient.ladder;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < L.num_arrows(); ++a) {
            const LadderArrow& ar = L.arrow(a);
            Matrix img = ambient.mat(a).mul(cur[ar.src]);
            if (!span_contains(cur[ar.tgt], img)) {
                cur[ar.tgt] = column_reduce(hstack(cur[ar.tgt], img));
                changed = true;
            }
        }
    }
    return Subrep{ambient, std::move(cur)};
}

Subrep sum_subrep(const Subrep& a, const Subrep& b) {
    std::vector<Matrix> spans;
    for (size_t v = 0; v < a.basis.size(); ++v)
        spans.push_back(column_reduce(hstack(a.basis[v], b.basis[v])));
    return Subrep{a.ambient, std::move(spans)};
}

Subrep intersect_subrep(const Subrep& a, const Subrep& b) {
    std::vector<Matrix> spans;
    for (size_t v = 0; v < a.basis.size(); ++v)
        spans.push_back(span_intersection(a.basis[v], b.basis[v]));
    return Subrep{a.ambient, std::move(spans)};
}

std::vector<Morphism> hom_space(const Representation& m, const Representation& n) {
    if (!(*m.ladder == *n.ladder) || !(m.field == n.field))
        throw validation_error("hom between different ladders or fields");
    const LadderQuiver& L = *m.ladder;
    const FieldSpec f = m.field;

    std::vector<int> offset(m.dims.size() + 1, 0);
    for (size_t v = 0; v < m.dims.size(); ++v)
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    const int unknowns = offset.back();

    int eqs = 0;
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        eqs += n.dims[ar.tgt] * m.dims[ar.src];
    }

    Matrix sys(f, eqs, unknowns);
    int row = 0;
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        const int s = ar.src, t = ar.tgt;
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j) {
                // (N(a) f_s - f_t M(a))[i][j] = 0
                for (int k = 0; k < n.dims[s]; ++k)
                    if (n.mat(a).at(i, k) != 0)
                        sys.set(row, offset[s] + k * m.dims[s] + j, n.mat(a).at(i, k));
                for (int k = 0; k < m.dims[t]; ++k)
                    if (m.mat(a).at(k, j) != 0)
                        sys.set(row, offset[t] + i * m.dims[t] + k,
                                f.sub(sys.at(row, offset[t] + i * m.dims[t] + k),
                                      m.mat(a).at(k, j)));
                ++row;
            }
    }

    Matrix kernel = rank_kernel_image(sys).kernel_basis;
    std::vector<Morphism> out;
    for (int c = 0; c < kernel.cols(); ++c) {
        Morphism h{m, n, {}};
        for (size_t v = 0; v < m.dims.size(); ++v) {
            Matrix comp(f, n.dims[v], m.dims[v]);
            for (int i = 0; i < n.dims[v]; ++i)
                for (int j = 0; j < m.dims[v]; ++j)
                    comp.set(i, j, kernel.at(offset[v] + i * m.dims[v] + j, c));
            h.comps.push_back(std::move(comp));
        }
        out.push_back(std::move(h));
    }
    return out;
}

int dim_hom(const Representation& m, const Representation& n) {
    return static_cast<int>(hom_space(m, n).size());
}

namespace {

bool combo_invertible(const std::vector<Morphism>& basis,
                      const std::vector<Rational>& coeffs,
                      const Representation& m) {
    for (size_t v = 0; v < m.dims.size(); ++v) {
        Matrix sum(m.field, basis[0].target.dims[v], m.dims[v]);
        for (size_t b = 0; b < basis.size(); ++b)
            if (coeffs[b] != 0) sum = sum.add(basis[b].comps[v].scaled(coeffs[b]));
        if (!is_invertible(sum)) return false;
    }
    return true;
}

}  // namespace

bool is_isomorphic(const Representation& m, const Representation& n,
                   long long iso_scan_cap) {
    if (!(*m.ladder == *n.ladder) || !(m.field == n.field)) return false;
    if (m.dims != n.dims) return false;
    if (total_dim(m.dims) == 0) return true;
    // cheap isomorphism invariants
    for (size_t a = 0; a < m.mats.size(); ++a)
        if (rank_of(m.mats[a]) != rank_of(n.mats[a])) return false;

    auto basis = hom_space(m, n);
    if (basis.empty()) return false;
    if (dim_hom(n, m) != static_cast<int>(basis.size())) return false;

    const size_t k = basis.size();
    std::vector<Rational> coeffs(k, Rational(0));

    // single basis elements, then prefix sums
    for (size_t b = 0; b < k; ++b) {
        std::fill(coeffs.begin(), coeffs.end(), Rational(0));
        coeffs[b] = 1;
        if (combo_invertible(basis, coeffs, m)) return true;
    }
    std::fill(coeffs.begin(), coeffs.end(), Rational(0));
    for (size_t b = 0; b < k; ++b) {
        coeffs[b] = 1;
        if (combo_invertible(basis, coeffs, m)) return true;
    }

    // randomized draws, deterministic seed; box grows over Q
    Rng rng(0x5eedULL + 31 * k);
    const int trials = m.field.is_prime_field() ? 200 : 64;
    for (int t = 0; t < trials; ++t) {
        long long box = 1 + t / 8;  // >= 8 retries per box size
        for (size_t b = 0; b < k; ++b)
            coeffs[b] = random_scalar(m.field, rng, box);
        if (combo_invertible(basis, coeffs, m)) return true;
    }

    if (m.field.is_prime_field()) {
        // exhaustive scan of the Hom space when small enough
        double space = 1;
        for (size_t b = 0; b < k; ++b) space *= m.field.p();
        if (space <= static_cast<double>(iso_scan_cap)) {
            std::vector<long long> odo(k, 0);
            while (true) {
                size_t i = 0;
                while (i < k && odo[i] + 1 == m.field.p()) {
                    odo[i] = 0;
                    ++i;
                }
                if (i == k) break;
                ++odo[i];
                for (size_t b = 0; b < k; ++b) coeffs[b] = Rational(odo[b]);
                if (combo_invertible(basis, coeffs, m)) return true;
            }
            return false;
        }
    }
    return false;
}

Subrep kernel(const Morphism& f) {
    std::vector<Matrix> spans;
    for (size_t v = 0; v < f.comps.size(); ++v)
        spans.push_back(rank_kernel_image(f.comps[v]).kernel_basis);
    return sub_from_spans(f.source, std::move(spans));
}

QuotientResult cokernel_ambient(const Morphism& f) {
    const Representation& n = f.target;
    const FieldSpec fld = n.field;
    std::vector<Matrix> proj;      // per vertex: q_v x d_v
    std::vector<Matrix> section;   // per vertex: d_v x q_v, proj*section = I
    for (size_t v = 0; v < n.dims.size(); ++v) {
        Matrix img = column_reduce(f.comps[v]);
        Matrix comp = extend_to_full_basis(img);
        Matrix t = hstack(img, comp);
        Matrix tinv = t.cols() == 0 ? Matrix(fld, 0, 0) : *inverse(t);
        Matrix p = tinv.submatrix(img.cols(), 0, comp.cols(), n.dims[v]);
        proj.push_back(p);
        section.push_back(comp);
    }
    Representation q;
    q.ladder = n.ladder;
    q.field = fld;
    for (size_t v = 0; v < n.dims.size(); ++v) q.dims.push_back(proj[v].rows());
    const LadderQuiver& L = *n.ladder;
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        q.mats.push_back(proj[ar.tgt].mul(n.mat(a)).mul(section[ar.src]));
    }
    q.validate();
    Morphism pr{n, q, std::move(proj)};
    return {std::move(q), std::move(pr)};
}

QuotientResult quotient_by(const Subrep& s) {
    return cokernel_ambient(inclusion_of(s));
}

namespace {

/// Image filtration of a relation-satisfying object: spaces are the images of
/// each level inside the top level, horizontal maps are inclusions, vertical
/// maps restrict the top-level vertical maps.
Representation image_filtration(const Representation& b) {
    const LadderQuiver& L = *b.ladder;
    const int nv = L.base().num_vertices();
    const int ell = L.levels();
    std::vector<Matrix> span((size_t)L.num_vertices(), Matrix());
    for (int v = 0; v < nv; ++v)
        for (int j = 1; j <= ell; ++j)
            span[L.vertex_index(j, v)] =
                column_reduce(horizontal_composite(b, v, j, ell));

    Representation out;
    out.ladder = b.ladder;
    out.field = b.field;
    out.dims.resize(L.num_vertices());
    for (int w = 0; w < L.num_vertices(); ++w) out.dims[w] = span[w].cols();
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        Matrix image;
        if (ar.kind == LadderArrow::Kind::horizontal) {
            image = span[ar.src];  // inclusion of nested subspaces
        } else {
            int top = L.vertical_index(ell, ar.base);
            image = b.mat(top).mul(span[ar.src]);
        }
        auto x = solve(span[ar.tgt], image);
        if (!x) throw validation_error("image filtration is not arrow-closed");
        out.mats.push_back(*x);
    }
    out.validate();
    return out;
}

}  // namespace

Representation cokernel_filtered(const Morphism& f) {
    if (!is_filtered(f.source) || !is_filtered(f.target))
        throw validation_error("cokernel_filtered needs filtered endpoints");
    return image_filtration(cokernel_ambient(f).rep);
}

bool is_strict_mono(const Morphism& f) {
    if (!f.is_mono())
        throw validation_error("is_strict_mono on a non-mono morphism");
    if (!is_filtered(f.source) || !is_filtered(f.target))
        throw validation_error("is_strict_mono needs filtered endpoints");
    return is_filtered(cokernel_ambient(f).rep);
}

bool is_strict_sub(const Subrep& s) {
    Representation quo = quotient_by(s).rep;
    return is_filtered(quo);
}

bool is_torsion(const Representation& b) {
    if (!check_relations(b))
        throw validation_error("is_torsion on a representation violating the relations");
    const LadderQuiver& L = *b.ladder;
    for (int v = 0; v < L.base().num_vertices(); ++v)
        if (b.dims[L.vertex_index(L.levels(), v)] != 0) return false;
    return true;
}

Subrep torsion_part(const Representation& b) {
    if (!check_relations(b))
        throw validation_error("torsion_part on a representation violating the relations");
    const LadderQuiver& L = *b.ladder;
    std::vector<Matrix> spans((size_t)L.num_vertices(), Matrix());
    for (int v = 0; v < L.base().num_vertices(); ++v)
        for (int j = 1; j <= L.levels(); ++j) {
            Matrix h = horizontal_composite(b, v, j, L.levels());
            spans[L.vertex_index(j, v)] = rank_kernel_image(h).kernel_basis;
        }
    return sub_from_spans(b, std::move(spans));
}

Representation kappa(const Representation& b) {
    if (!check_relations(b))
        throw validation_error("kappa on a representation violating the relations");
    return image_filtration(b);
}

TfResolution tf_resolution(const Representation& b) {
    if (!check_relations(b))
        throw validation_error("tf_resolution on a representation violating the relations");
    const LadderQuiver& L = *b.ladder;
    const int nv = L.base().num_vertices();
    const int ell = L.levels();
    const FieldSpec f = b.field;

    auto bdim = [&](int j, int v) { return b.dims[L.vertex_index(j, v)]; };

    Representation n;
    n.ladder = b.ladder;
    n.field = f;
    n.dims.resize(L.num_vertices());
    for (int k = 1; k <= ell; ++k)
        for (int v = 0; v < nv; ++v) {
            int s = 0;
            for (int j = 1; j <= k; ++j) s += bdim(j, v);
            n.dims[L.vertex_index(k, v)] = s;
        }
    n.mats.resize(L.num_arrows(), Matrix());
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        if (ar.kind == LadderArrow::Kind::vertical) {
            const Arrow& qa = L.base().arrow(ar.base);
            Matrix blocks(f, 0, 0);
            for (int j = 1; j <= ar.level; ++j)
                blocks = dsum(blocks, b.mat(L.vertical_index(j, ar.base)));
            (void)qa;
            n.mats[a] = blocks;
        } else {
            // canonical inclusion of the first k blocks into k+1 blocks
            int v = ar.base, k = ar.level;
            Matrix inc(f, n.dims[L.vertex_index(k + 1, v)],
                       n.dims[L.vertex_index(k, v)]);
            for (int i = 0; i < n.dims[L.vertex_index(k, v)]; ++i)
                inc.set(i, i, Rational(1));
            n.mats[a] = inc;
        }
    }
    n.validate();

    Morphism fm{n, b, {}};
    for (int k = 1; k <= ell; ++k)
        for (int v = 0; v < nv; ++v) {
            Matrix comp(f, bdim(k, v), n.dims[L.vertex_index(k, v)]);
            int col = 0;
            for (int j = 1; j <= k; ++j) {
                Matrix h = horizontal_composite(b, v, j, k);
                for (int c = 0; c < h.cols(); ++c) {
                    for (int r = 0; r < h.rows(); ++r)
                        comp.set(r, col + c, h.at(r, c));
                }
                col += bdim(j, v);
            }
            fm.comps.resize(L.num_vertices(), Matrix());
            fm.comps[L.vertex_index(k, v)] = comp;
        }
    fm.validate();

    Representation nprime = restrict_to(kernel(fm));
    return {std::move(n), std::move(nprime), std::move(fm)};
}

Representation indecomposable_projective(LadderPtr ladder, int w, FieldSpec field) {
    const LadderQuiver& L = *ladder;
    if (w < 0 || w >= L.num_vertices())
        throw validation_error("projective at unknown vertex");
    Representation p;
    p.ladder = ladder;
    p.field = field;
    p.dims.resize(L.num_vertices());
    std::vector<std::vector<NormalPath>> bases(L.num_vertices());
    for (int u = 0; u < L.num_vertices(); ++u) {
        bases[u] = normal_path_basis(L, w, u);
        p.dims[u] = static_cast<int>(bases[u].size());
    }
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        Matrix m(field, p.dims[ar.tgt], p.dims[ar.src]);
        PathElement arrow_el = PathElement::arrow(ladder, a);
        for (size_t j = 0; j < bases[ar.src].size(); ++j) {
            PathElement pe(ladder, w, ar.src);
            pe.add_term(bases[ar.src][j], Rational(1));
            PathElement composed = arrow_el.compose_after(pe);
            for (const auto& [np, c] : composed.terms()) {
                int i = normal_path_index(L, np);
                m.set(i, static_cast<int>(j), c);
            }
        }
        p.mats.push_back(std::move(m));
    }
    p.validate();
    return p;
}

Morphism yoneda_morphism(const Representation& projective_w, int w,
                         const Representation& n, const Matrix& element) {
    const LadderQuiver& L = *n.ladder;
    if (element.rows() != n.dims[w] || element.cols() != 1)
        throw validation_error("yoneda element shape mismatch");
    Morphism f{projective_w, n, {}};
    for (int u = 0; u < L.num_vertices(); ++u) {
        auto basis = normal_path_basis(L, w, u);
        Matrix comp(n.field, n.dims[u], static_cast<int>(basis.size()));
        for (size_t j = 0; j < basis.size(); ++j) {
            Matrix img = evaluate_path(n, basis[j]).mul(element);
            for (int i = 0; i < img.rows(); ++i) comp.set(i, static_cast<int>(j), img.at(i, 0));
        }
        f.comps.push_back(std::move(comp));
    }
    f.validate();
    return f;
}

}  // namespace filtrep
