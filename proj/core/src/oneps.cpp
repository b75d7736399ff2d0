#include "filtrep/oneps.hpp"

#include <algorithm>
#include <deque>

namespace filtrep {

void OnePS::validate(const Representation& m) const {
    if (weights.size() != m.dims.size() || basis.size() != m.dims.size())
        throw validation_error("1-PS vertex count mismatch");
    for (size_t v = 0; v < m.dims.size(); ++v) {
        if (static_cast<int>(weights[v].size()) != m.dims[v])
            throw validation_error("1-PS weight list length mismatch");
        if (basis[v].rows() != m.dims[v] || basis[v].cols() != m.dims[v] ||
            !is_invertible(basis[v]))
            throw validation_error("1-PS basis must be invertible");
    }
}

OnePS constant_ops(const Representation& m, long long weight) {
    OnePS l;
    for (int d : m.dims) {
        l.weights.emplace_back(d, weight);
        l.basis.push_back(Matrix::identity(m.field, d));
    }
    return l;
}

LimitResult ops_limit(const Representation& m, const OnePS& l, Locus locus) {
    l.validate(m);
    const LadderQuiver& L = *m.ladder;
    std::vector<Matrix> binv;
    for (const auto& b : l.basis) binv.push_back(*inverse(b));

    std::vector<Matrix> limit_mats;
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        Matrix conj = binv[ar.tgt].mul(m.mat(a)).mul(l.basis[ar.src]);
        // block weight (target i, source j): entry scales by t^(w_t[i]-w_s[j])
        for (int i = 0; i < conj.rows(); ++i)
            for (int j = 0; j < conj.cols(); ++j) {
                long long dw = l.weights[ar.tgt][i] - l.weights[ar.src][j];
                if (dw < 0 && conj.at(i, j) != 0) return {false, std::nullopt};
            }
        Matrix kept(m.field, conj.rows(), conj.cols());
        for (int i = 0; i < conj.rows(); ++i)
            for (int j = 0; j < conj.cols(); ++j)
                if (l.weights[ar.tgt][i] == l.weights[ar.src][j])
                    kept.set(i, j, conj.at(i, j));
        limit_mats.push_back(l.basis[ar.tgt].mul(kept).mul(binv[ar.src]));
    }
    Representation y = m;
    y.mats = std::move(limit_mats);
    if (!check_relations(y))
        throw domain_error("limit of a relation point left the relation locus");
    if (locus == Locus::fil && !is_filtered(y)) return {false, std::nullopt};
    return {true, y};
}

std::vector<Subrep> filtration_from_ops(const Representation& m, const OnePS& l) {
    if (!ops_limit(m, l, Locus::rel).exists)
        throw validation_error("filtration_from_ops needs an existing limit");
    std::vector<long long> thresholds;
    for (const auto& ws : l.weights)
        for (long long w : ws) thresholds.push_back(w);
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                     thresholds.end());

    std::vector<Subrep> chain;
    auto span_at_least = [&](long long n) {
        std::vector<Matrix> spans;
        for (size_t v = 0; v < m.dims.size(); ++v) {
            std::vector<int> cols;
            for (int i = 0; i < m.dims[v]; ++i)
                if (l.weights[v][i] >= n) cols.push_back(i);
            spans.push_back(l.basis[v].cols_selected(cols));
        }
        return sub_from_spans(m, std::move(spans));
    };
    for (long long n : thresholds) chain.push_back(span_at_least(n));
    chain.push_back(zero_subrep(m));
    if (total_dim(m.dims) == 0) chain = {zero_subrep(m)};
    return chain;
}

OnePS ops_from_filtration(const std::vector<Subrep>& chain) {
    if (chain.empty()) throw validation_error("empty chain");
    const Representation& m = chain.front().ambient;
    if (!chain.front().is_full())
        throw validation_error("chain must start at the full object");
    if (!chain.back().is_zero())
        throw validation_error("chain must end at zero");
    for (size_t i = 1; i < chain.size(); ++i) {
        for (size_t v = 0; v < m.dims.size(); ++v)
            if (!span_contains(chain[i - 1].basis[v], chain[i].basis[v]))
                throw validation_error("chain is not descending");
        if (chain[i].total() >= chain[i - 1].total())
            throw validation_error("chain is not strictly descending");
    }

    const int k = static_cast<int>(chain.size()) - 1;  // layers 0..k-1
    OnePS l;
    l.weights.resize(m.dims.size());
    l.basis.resize(m.dims.size());
    for (size_t v = 0; v < m.dims.size(); ++v) {
        Matrix cur(m.field, m.dims[v], 0);  // grows from the deepest layer up
        std::vector<long long> wts;
        for (int layer = k - 1; layer >= 0; --layer) {
            const Matrix& target = chain[layer].basis[v];
            for (int c = 0; c < target.cols(); ++c) {
                Matrix col = target.col(c);
                if (!span_contains(cur, col)) {
                    cur = hstack(cur, col);
                    wts.push_back(layer);
                }
            }
        }
        l.basis[v] = cur;
        l.weights[v] = std::move(wts);
    }
    l.validate(m);
    return l;
}

long long pairing_chi_lambda(const std::vector<long long>& theta, const OnePS& l,
                             const DimVector& d) {
    if (theta.size() != l.weights.size() || d.size() != l.weights.size())
        throw shape_error("pairing length mismatch");
    long long total = 0;
    for (size_t w = 0; w < theta.size(); ++w) {
        if (static_cast<int>(l.weights[w].size()) != d[w])
            throw shape_error("pairing weight list length mismatch");
        long long s = 0;
        for (long long x : l.weights[w]) s += x;
        total += theta[w] * s;
    }
    return total;
}

bool hilbert_mumford_semistable(const Representation& m, const StabilityParams& p,
                                Locus locus, long long cap) {
    if (!m.field.is_prime_field())
        throw validation_error("Hilbert-Mumford scan needs a finite field");
    if (!check_relations(m))
        throw validation_error("Hilbert-Mumford scan needs a relation point");
    long long theta_m = 0;
    for (size_t w = 0; w < m.dims.size(); ++w) theta_m += p.derived[w] * m.dims[w];
    if (theta_m != 0) return false;

    double estimate = 1;
    for (int d : m.dims) estimate *= count_subspaces(m.field.p(), d);
    if (estimate > static_cast<double>(cap))
        throw resource_error("two-step grading scan exceeds cap", estimate);

    std::vector<std::vector<Matrix>> choices;
    for (int d : m.dims) choices.push_back(subspaces_of(m.field, d));

    const int sgn = p.convention == Convention::sub_nonneg ? +1 : -1;
    const int nv = static_cast<int>(m.dims.size());
    std::vector<int> pick(nv, 0);
    while (true) {
        // lambda with weight 1 on the chosen subspace, 0 on a complement
        OnePS l;
        l.weights.resize(nv);
        l.basis.resize(nv);
        bool degenerate = false;
        for (int v = 0; v < nv; ++v) {
            const Matrix& s = choices[v][pick[v]];
            Matrix comp = extend_to_full_basis(s);
            l.basis[v] = hstack(s, comp);
            if (m.dims[v] > 0 && !is_invertible(l.basis[v])) degenerate = true;
            l.weights[v].assign(s.cols(), 1);
            l.weights[v].resize(m.dims[v], 0);
        }
        if (!degenerate) {
            LimitResult lim = ops_limit(m, l, locus);
            if (lim.exists) {
                long long pr = pairing_chi_lambda(p.derived, l, m.dims);
                if (sgn * pr < 0) return false;
            }
        }
        int v = 0;
        while (v < nv && pick[v] + 1 == static_cast<int>(choices[v].size())) {
            pick[v] = 0;
            ++v;
        }
        if (v == nv) break;
        ++pick[v];
    }
    return true;
}

bool is_closed_orbit_point(const Representation& m, const StabilityParams& p,
                           long long cap) {
    if (!is_semistable(m, p, StabilityOptions{StabilityOptions::Quantify::all_subobjects, cap}))
        throw validation_error("closed-orbit test is for semistable points");
    return is_isomorphic(m, gr_max(m, cap));
}

bool git_equivalent(const Representation& m, const Representation& n,
                    const StabilityParams& p, long long cap) {
    StabilityOptions opts{StabilityOptions::Quantify::all_subobjects, cap};
    if (!is_semistable(m, p, opts) || !is_semistable(n, p, opts))
        throw validation_error("GIT equivalence is for semistable points");
    return s_equivalent(m, n, cap);
}

std::vector<std::vector<Matrix>> enumerate_group(const FieldSpec& f,
                                                 const DimVector& dims,
                                                 long long cap) {
    if (!f.is_prime_field())
        throw validation_error("group enumeration needs a finite field");
    std::vector<std::vector<Matrix>> per_vertex;
    double total = 1;
    for (int d : dims) {
        std::vector<Matrix> gl;
        // all d x d matrices, keep the invertible ones
        long long entries = static_cast<long long>(d) * d;
        std::vector<long long> odo(entries, 0);
        while (true) {
            Matrix cand(f, d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    cand.set(i, j, Rational(odo[i * d + j]));
            if (is_invertible(cand)) gl.push_back(std::move(cand));
            size_t t = 0;
            while (t < odo.size() && odo[t] + 1 == f.p()) {
                odo[t] = 0;
                ++t;
            }
            if (t == odo.size()) break;
            ++odo[t];
        }
        total *= static_cast<double>(gl.size());
        if (total > static_cast<double>(cap))
            throw resource_error("group enumeration exceeds cap", total);
        per_vertex.push_back(std::move(gl));
    }
    // cartesian product
    std::vector<std::vector<Matrix>> out;
    std::vector<size_t> pick(dims.size(), 0);
    while (true) {
        std::vector<Matrix> g;
        for (size_t v = 0; v < dims.size(); ++v) g.push_back(per_vertex[v][pick[v]]);
        out.push_back(std::move(g));
        size_t v = 0;
        while (v < dims.size() && pick[v] + 1 == per_vertex[v].size()) {
            pick[v] = 0;
            ++v;
        }
        if (v == dims.size()) break;
        ++pick[v];
    }
    return out;
}

Representation act(const std::vector<Matrix>& g, const Representation& m) {
    Representation out = m;
    const LadderQuiver& L = *m.ladder;
    std::vector<Matrix> ginv;
    for (const auto& x : g) ginv.push_back(*inverse(x));
    for (int a = 0; a < L.num_arrows(); ++a) {
        const LadderArrow& ar = L.arrow(a);
        out.mats[a] = g[ar.tgt].mul(m.mat(a)).mul(ginv[ar.src]);
    }
    return out;
}

std::set<std::string> orbit_of(const Representation& m, long long cap) {
    auto group = enumerate_group(m.field, m.dims, cap);
    std::set<std::string> keys;
    for (const auto& g : group) keys.insert(act(g, m).point_key());
    return keys;
}

std::map<std::string, Representation> orbit_closure_scan(const Representation& m,
                                                         long long cap) {
    auto group = enumerate_group(m.field, m.dims, cap);
    std::vector<std::vector<Matrix>> choices;
    for (int d : m.dims) choices.push_back(subspaces_of(m.field, d));

    std::map<std::string, Representation> reached;
    std::deque<Representation> queue;

    auto push = [&](const Representation& x) {
        auto key = x.point_key();
        if (reached.count(key)) return;
        if (static_cast<long long>(reached.size()) >= cap)
            throw resource_error("orbit closure scan exceeds cap",
                                 static_cast<double>(reached.size()));
        reached.emplace(key, x);
        queue.push_back(x);
    };

    push(m);
    while (!queue.empty()) {
        Representation x = queue.front();
        queue.pop_front();
        for (const auto& g : group) {
            Representation y = act(g, x);
            std::string ykey = y.point_key();
            if (!reached.count(ykey)) push(y);
            // two-step degenerations of y
            const int nv = static_cast<int>(m.dims.size());
            std::vector<int> pick(nv, 0);
            while (true) {
                OnePS l;
                l.weights.resize(nv);
                l.basis.resize(nv);
                for (int v = 0; v < nv; ++v) {
                    const Matrix& s = choices[v][pick[v]];
                    l.basis[v] = hstack(s, extend_to_full_basis(s));
                    l.weights[v].assign(s.cols(), 1);
                    l.weights[v].resize(m.dims[v], 0);
                }
                LimitResult lim = ops_limit(y, l, Locus::rel);
                if (lim.exists) push(*lim.limit);
                int v = 0;
                while (v < nv && pick[v] + 1 == static_cast<int>(choices[v].size())) {
                    pick[v] = 0;
                    ++v;
                }
                if (v == nv) break;
                ++pick[v];
            }
        }
    }
    return reached;
}

}  // namespace filtrep
