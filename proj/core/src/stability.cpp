#include "filtrep/stability.hpp"

#include <algorithm>
#include <cmath>

namespace filtrep {

void RankWeights::validate(const LadderQuiver& L) const {
    if (static_cast<int>(r.size()) != L.num_vertices())
        throw validation_error("rank weight vector length mismatch");
    for (long long x : r)
        if (x < 0) throw validation_error("rank weights must be nonnegative");
    for (int v = 0; v < L.base().num_vertices(); ++v)
        for (int k = 1; k <= L.levels(); ++k) {
            long long tail = 0;
            for (int j = k; j <= L.levels(); ++j) tail += r[L.vertex_index(j, v)];
            if (tail <= 0)
                throw validation_error(
                    "rank weights violate positivity at column " +
                    L.base().vertex_name(v) + ", level " + std::to_string(k));
        }
}

RankWeights unit_rank_weights(const LadderQuiver& L) {
    return RankWeights{std::vector<long long>(L.num_vertices(), 1)};
}

RankWeights sink_rank_weights(const LadderQuiver& L) {
    std::vector<long long> r(L.num_vertices(), 0);
    for (int v = 0; v < L.base().num_vertices(); ++v)
        r[L.vertex_index(L.levels(), v)] = 1;
    return RankWeights{std::move(r)};
}

long long rank_of(const DimVector& d, const RankWeights& rk) {
    long long s = 0;
    for (size_t w = 0; w < d.size(); ++w) s += rk.r[w] * d[w];
    return s;
}

long long degree_of(const DimVector& d, const DegreeVector& theta_deg) {
    long long s = 0;
    for (size_t w = 0; w < d.size(); ++w) s += theta_deg[w] * d[w];
    return s;
}

Rational slope(const DimVector& d, const DegreeVector& theta_deg,
               const RankWeights& rk) {
    long long r = rank_of(d, rk);
    if (r == 0) throw domain_error("slope undefined: rank is zero");
    return Rational(degree_of(d, theta_deg), r);
}

std::vector<long long> derive_theta(const DegreeVector& theta_deg,
                                    const RankWeights& rk, const DimVector& d) {
    long long deg = degree_of(d, theta_deg);
    long long rnk = rank_of(d, rk);
    std::vector<long long> out(d.size());
    for (size_t w = 0; w < d.size(); ++w) out[w] = deg * rk.r[w] - rnk * theta_deg[w];
    return out;
}

bool is_slope_admissible(const DegreeVector& theta_deg, const LadderQuiver& L) {
    for (int v = 0; v < L.base().num_vertices(); ++v)
        for (int j = 1; j < L.levels(); ++j)
            if (theta_deg[L.vertex_index(j, v)] < 0) return false;
    return true;
}

long long rk_dim_filtered(const Representation& m) {
    if (!is_filtered(m))
        throw validation_error("rk_dim_filtered on a non-filtered representation");
    const LadderQuiver& L = *m.ladder;
    long long total = 0;
    for (int v = 0; v < L.base().num_vertices(); ++v)
        total += m.dims[L.vertex_index(L.levels(), v)];
    for (int a = 0; a < L.num_arrows(); ++a)
        if (L.arrow(a).kind == LadderArrow::Kind::horizontal)
            total += rank_of(m.mat(a));
    return total;
}

StabilityParams StabilityParams::make(const LadderQuiver& L, DegreeVector theta_deg,
                                      RankWeights rk, DimVector d, Convention conv) {
    if (static_cast<int>(theta_deg.size()) != L.num_vertices() ||
        static_cast<int>(d.size()) != L.num_vertices())
        throw validation_error("stability parameter length mismatch");
    rk.validate(L);
    StabilityParams p;
    p.theta_degree = std::move(theta_deg);
    p.rank_weights = std::move(rk);
    p.total_dims = std::move(d);
    p.derived = derive_theta(p.theta_degree, p.rank_weights, p.total_dims);
    p.convention = conv;
    long long check = 0;
    for (size_t w = 0; w < p.derived.size(); ++w) check += p.derived[w] * p.total_dims[w];
    if (check != 0) throw domain_error("derived theta fails theta(d) = 0");
    return p;
}

double count_subspaces(std::uint32_t p, int n) {
    // sum of Gaussian binomials [n choose k]_p
    double total = 0;
    for (int k = 0; k <= n; ++k) {
        double g = 1;
        for (int i = 0; i < k; ++i) {
            double num = std::pow(static_cast<double>(p), n - i) - 1;
            double den = std::pow(static_cast<double>(p), k - i) - 1;
            g *= num / den;
        }
        total += g;
    }
    return total;
}

std::vector<Matrix> subspaces_of(const FieldSpec& f, int n) {
    if (!f.is_prime_field())
        throw validation_error("subspace enumeration needs a finite field");
    const long long p = f.p();
    std::vector<Matrix> out;
    std::vector<int> pivots;
    // enumerate echelon row bases for each dimension k
    for (int k = 0; k <= n; ++k) {
        // lexicographic k-subsets of {0..n-1}
        pivots.assign(k, 0);
        for (int i = 0; i < k; ++i) pivots[i] = i;
        while (true) {
            // free positions: (row i, col j) with j > pivots[i], j not a pivot
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_piv(n, false);
            for (int c : pivots) is_piv[c] = true;
            for (int i = 0; i < k; ++i)
                for (int j = pivots[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free_pos.emplace_back(i, j);
            std::vector<long long> odo(free_pos.size(), 0);
            while (true) {
                Matrix rows(f, k, n);
                for (int i = 0; i < k; ++i) rows.set(i, pivots[i], Rational(1));
                for (size_t t = 0; t < free_pos.size(); ++t)
                    rows.set(free_pos[t].first, free_pos[t].second, Rational(odo[t]));
                out.push_back(rows.transposed());
                size_t i = 0;
                while (i < odo.size() && odo[i] + 1 == p) {
                    odo[i] = 0;
                    ++i;
                }
                if (i == odo.size()) break;
                ++odo[i];
            }
            if (k == 0) break;
            // next k-subset in lex order
            int i = k - 1;
            while (i >= 0 && pivots[i] == n - k + i) --i;
            if (i < 0) break;
            ++pivots[i];
            for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
    return out;
}

void for_each_subrep(const Representation& m, SubrepMode mode, long long cap,
                     const std::function<bool(const Subrep&)>& visit) {
    if (!m.field.is_prime_field())
        throw validation_error(
            "subobject enumeration needs a finite field; over the rationals "
            "use decide_stability's mod-p oracle");
    const LadderQuiver& L = *m.ladder;
    double estimate = 1;
    for (int d : m.dims) estimate *= count_subspaces(m.field.p(), d);
    if (estimate > static_cast<double>(cap))
        throw resource_error("subobject enumeration exceeds cap", estimate);

    std::vector<std::vector<Matrix>> choices;
    for (int d : m.dims) choices.push_back(subspaces_of(m.field, d));

    // incoming arrows whose source is already fixed when vertex v is chosen
    const int nv = L.num_vertices();
    std::vector<std::vector<int>> checks(nv);
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        checks[std::max(ar.src, ar.tgt)].push_back(a);
    }

    std::vector<Matrix> spans(nv);
    bool keep_going = true;
    std::function<void(int)> rec = [&](int v) {
        if (!keep_going) return;
        if (v == nv) {
            Subrep s{m, spans};
            if (mode == SubrepMode::strict && !is_strict_sub(s)) return;
            if (!visit(s)) keep_going = false;
            return;
        }
        for (const Matrix& cand : choices[v]) {
            spans[v] = cand;
            bool ok = true;
            for (int a : checks[v]) {
                const LadderArrow& ar = L.arrow(a);
                if (!span_contains(spans[ar.tgt], m.mat(a).mul(spans[ar.src]))) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(v + 1);
            if (!keep_going) return;
        }
    };
    rec(0);
}

std::vector<Subrep> enumerate_subreps(const Representation& m, SubrepMode mode,
                                      long long cap) {
    std::vector<Subrep> out;
    for_each_subrep(m, mode, cap, [&](const Subrep& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

namespace {

// destabilizing direction: +1 when larger slopes destabilize
int destab_sign(Convention c) { return c == Convention::sub_nonneg ? +1 : -1; }

StabilityVerdict decide_stability_fp(const Representation& m,
                                     const StabilityParams& p,
                                     const StabilityOptions& opts) {
    if (!is_filtered(m))
        throw validation_error("slope semistability is for filtered objects");
    StabilityVerdict v;
    v.semistable = true;
    v.stable = true;
    if (total_dim(m.dims) == 0) return v;
    Rational mu_m = slope(m.dims, p.theta_degree, p.rank_weights);
    const int sgn = destab_sign(p.convention);
    SubrepMode mode = opts.quantify == StabilityOptions::Quantify::strict_only
                          ? SubrepMode::strict
                          : SubrepMode::all;
    for_each_subrep(m, mode, opts.cap, [&](const Subrep& s) {
        if (s.is_zero()) return true;
        Rational mu_s = slope(s.dims(), p.theta_degree, p.rank_weights);
        int cmp = mu_s < mu_m ? -1 : (mu_s == mu_m ? 0 : 1);
        if (cmp == sgn) {
            v.semistable = false;
            v.stable = false;
            v.destabilizer = s;
            return false;
        }
        if (cmp == 0 && !s.is_full()) v.stable = false;
        return true;
    });
    return v;
}

}  // namespace

std::optional<Representation> reduce_mod_p(const Representation& m, std::uint32_t p) {
    FieldSpec fp = FieldSpec::prime(p);
    Representation out;
    out.ladder = m.ladder;
    out.field = fp;
    out.dims = m.dims;
    for (const auto& mat : m.mats) {
        Matrix r(fp, mat.rows(), mat.cols());
        for (int i = 0; i < mat.rows(); ++i)
            for (int j = 0; j < mat.cols(); ++j) {
                if (denominator(mat.at(i, j)) % p == 0) return std::nullopt;
                r.set(i, j, fp.normalize(mat.at(i, j)));
            }
        out.mats.push_back(std::move(r));
    }
    return out;
}

bool is_good_prime(const Representation& m, std::uint32_t p) {
    auto red = reduce_mod_p(m, p);
    if (!red) return false;
    for (size_t a = 0; a < m.mats.size(); ++a)
        if (rank_of(m.mats[a]) != rank_of(red->mats[a])) return false;
    const LadderQuiver& L = *m.ladder;
    for (int v = 0; v < L.base().num_vertices(); ++v)
        for (int j = 1; j <= L.levels(); ++j)
            if (rank_of(horizontal_composite(m, v, j, L.levels())) !=
                rank_of(horizontal_composite(*red, v, j, L.levels())))
                return false;
    return true;
}

StabilityVerdict decide_stability(const Representation& m, const StabilityParams& p,
                                  const StabilityOptions& opts) {
    if (m.field.is_prime_field()) return decide_stability_fp(m, p, opts);

    // rational field: reduce mod three agreeing good primes
    static const std::uint32_t candidates[] = {3,  5,  7,  11, 13, 17, 19, 23,
                                               29, 31, 37, 41, 43, 47, 53, 59};
    std::vector<StabilityVerdict> verdicts;
    StabilityVerdict out;
    for (std::uint32_t q : candidates) {
        if (verdicts.size() == 3) break;
        if (!is_good_prime(m, q)) continue;
        auto red = reduce_mod_p(m, q);
        verdicts.push_back(decide_stability_fp(*red, p, opts));
        out.primes.push_back(q);
    }
    if (verdicts.size() < 3)
        throw resource_error("no three good primes found for rational input", 0);
    for (const auto& v : verdicts)
        if (v.semistable != verdicts[0].semistable || v.stable != verdicts[0].stable)
            throw domain_error("mod-p stability oracles disagree; verdict withheld");
    out.semistable = verdicts[0].semistable;
    out.stable = verdicts[0].stable;
    out.oracle_backed = true;
    return out;
}

bool is_semistable(const Representation& m, const StabilityParams& p,
                   const StabilityOptions& opts) {
    return decide_stability(m, p, opts).semistable;
}

bool is_stable(const Representation& m, const StabilityParams& p,
               const StabilityOptions& opts) {
    return decide_stability(m, p, opts).stable;
}

namespace {

bool theta_test(const Representation& m, const StabilityParams& p,
                const StabilityOptions& opts, bool strict_ineq) {
    if (!check_relations(m))
        throw validation_error("theta stability on a non relation-satisfying point");
    long long theta_m = 0;
    for (size_t w = 0; w < m.dims.size(); ++w) theta_m += p.derived[w] * m.dims[w];
    if (theta_m != 0) return false;
    const int sgn = destab_sign(p.convention);
    SubrepMode mode = opts.quantify == StabilityOptions::Quantify::strict_only
                          ? SubrepMode::strict
                          : SubrepMode::all;
    bool ok = true;
    for_each_subrep(m, mode, opts.cap, [&](const Subrep& s) {
        if (s.is_zero() || s.is_full()) return true;
        long long t = 0;
        DimVector sd = s.dims();
        for (size_t w = 0; w < sd.size(); ++w) t += p.derived[w] * sd[w];
        long long signed_t = sgn > 0 ? t : -t;  // must be >= 0 (> 0 for stable)
        if (signed_t < 0 || (strict_ineq && signed_t == 0)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

}  // namespace

bool is_theta_semistable(const Representation& m, const StabilityParams& p,
                         const StabilityOptions& opts) {
    return theta_test(m, p, opts, false);
}

bool is_theta_stable(const Representation& m, const StabilityParams& p,
                     const StabilityOptions& opts) {
    return theta_test(m, p, opts, true);
}

Subrep maximal_destabilizing_sub(const Representation& m, const StabilityParams& p,
                                 long long cap) {
    if (!is_filtered(m))
        throw validation_error("destabilizing subobject search needs a filtered object");
    const int sgn = destab_sign(p.convention);
    std::optional<Subrep> best;
    std::optional<Rational> best_slope;
    long long best_rank = -1;
    for_each_subrep(m, SubrepMode::strict, cap, [&](const Subrep& s) {
        if (s.is_zero()) return true;
        Rational mu_s = slope(s.dims(), p.theta_degree, p.rank_weights);
        long long rk_s = rank_of(s.dims(), p.rank_weights);
        bool better = false;
        if (!best) {
            better = true;
        } else {
            Rational cur = *best_slope;
            if (sgn > 0 ? (mu_s > cur) : (mu_s < cur))
                better = true;
            else if (mu_s == cur && rk_s > best_rank)
                better = true;
        }
        if (better) {
            best = s;
            best_slope = mu_s;
            best_rank = rk_s;
        }
        return true;
    });
    if (!best) throw domain_error("no nonzero strict subobject (zero object?)");
    return *best;
}

std::optional<Subrep> destabilizing_subrep(const Representation& m,
                                           const StabilityParams& p, long long cap) {
    if (total_dim(m.dims) == 0) return std::nullopt;
    Subrep best = maximal_destabilizing_sub(m, p, cap);
    Rational mu_m = slope(m.dims, p.theta_degree, p.rank_weights);
    Rational mu_b = slope(best.dims(), p.theta_degree, p.rank_weights);
    const int sgn = destab_sign(p.convention);
    bool destabilizes = sgn > 0 ? (mu_b > mu_m) : (mu_b < mu_m);
    if (!destabilizes) return std::nullopt;
    return best;
}

}  // namespace filtrep
