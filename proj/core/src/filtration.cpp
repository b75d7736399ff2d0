#include "filtrep/filtration.hpp"

#include <algorithm>

namespace filtrep {

namespace {

/// Inner subobject expressed inside restrict_to(outer).
Subrep sub_inside(const Subrep& inner, const Subrep& outer) {
    Representation amb = restrict_to(outer);
    std::vector<Matrix> spans;
    for (size_t v = 0; v < inner.basis.size(); ++v) {
        auto coords = solve(outer.basis[v], inner.basis[v]);
        if (!coords) throw validation_error("filtration steps are not nested");
        spans.push_back(*coords);
    }
    return sub_from_spans(amb, std::move(spans));
}

bool canonical_less(const Representation& a, const Representation& b) {
    if (a.dims != b.dims) return a.dims < b.dims;
    for (size_t i = 0; i < a.mats.size(); ++i)
        if (!(a.mats[i] == b.mats[i])) return a.mats[i].lex_less(b.mats[i]);
    return false;
}

Representation sum_in_canonical_order(std::vector<Representation> parts,
                                      LadderPtr ladder, FieldSpec field) {
    std::sort(parts.begin(), parts.end(), canonical_less);
    Representation acc = zero_representation(ladder, field);
    for (const auto& p : parts) acc = direct_sum(acc, p);
    return acc;
}

}  // namespace

void Filtration::validate() const {
    if (steps.empty()) throw validation_error("empty filtration");
    if (!steps.front().is_zero()) throw validation_error("filtration must start at 0");
    if (!steps.back().is_full()) throw validation_error("filtration must end at the object");
    for (size_t i = 1; i < steps.size(); ++i) {
        if (steps[i].total() <= steps[i - 1].total())
            throw validation_error("filtration steps must strictly increase");
        for (size_t v = 0; v < steps[i].basis.size(); ++v)
            if (!span_contains(steps[i].basis[v], steps[i - 1].basis[v]))
                throw validation_error("filtration steps are not nested");
    }
    if (strict) {
        for (size_t i = 1; i < steps.size(); ++i)
            if (!is_strict_sub(sub_inside(steps[i - 1], steps[i])))
                throw validation_error("filtration step " + std::to_string(i) +
                                       " is not strict");
    }
}

std::vector<Representation> strict_quotients(const Filtration& f) {
    std::vector<Representation> out;
    for (size_t i = 1; i < f.steps.size(); ++i)
        out.push_back(quotient_by(sub_inside(f.steps[i - 1], f.steps[i])).rep);
    return out;
}

Representation gr(const Filtration& f) {
    if (!f.strict)
        throw validation_error("gr of a non-strict filtration");
    return sum_in_canonical_order(strict_quotients(f), f.object.ladder,
                                  f.object.field);
}

QuotientResult quotient_with_projection(const Subrep& s) { return quotient_by(s); }

Subrep preimage_subrep(const Morphism& projection, const Subrep& sub_of_target) {
    std::vector<Matrix> spans;
    for (size_t v = 0; v < projection.comps.size(); ++v) {
        Matrix ker = rank_kernel_image(projection.comps[v]).kernel_basis;
        auto lift = solve(projection.comps[v], sub_of_target.basis[v]);
        if (!lift) throw validation_error("projection is not surjective");
        spans.push_back(hstack(ker, *lift));
    }
    return sub_from_spans(projection.source, std::move(spans));
}

Filtration hn_filtration(const Representation& m, const StabilityParams& p,
                         long long cap) {
    if (!is_filtered(m))
        throw validation_error("HN filtration needs a filtered object");
    if (!is_slope_admissible(p.theta_degree, *m.ladder))
        throw validation_error("HN filtration needs a torsion-nonnegative degree");

    Filtration f;
    f.object = m;
    f.strict = true;
    f.steps.push_back(zero_subrep(m));
    if (total_dim(m.dims) == 0) return f;

    Representation q = m;
    Morphism proj = identity_morphism(m);
    while (total_dim(q.dims) > 0) {
        Subrep s = maximal_destabilizing_sub(q, p, cap);
        f.steps.push_back(preimage_subrep(proj, s));
        if (s.is_full()) break;
        QuotientResult next = quotient_by(s);
        proj = compose(next.projection, proj);
        q = next.rep;
    }
    f.validate();
    return f;
}

namespace {

struct JhSearch {
    const StabilityParams& p;
    long long cap;
    Rational mu;
    bool strict_steps;  // strict JH in the filtered category vs ambient JH

    // Returns the chain of subobjects of q (ascending, without the zero step)
    // realizing a JH filtration of q, or nullopt.
    std::optional<std::vector<Subrep>> build(const Representation& q) {
        if (total_dim(q.dims) == 0) return std::vector<Subrep>{};
        std::vector<Subrep> candidates;
        for_each_subrep(q, strict_steps ? SubrepMode::strict : SubrepMode::all, cap,
                        [&](const Subrep& s) {
                            if (s.is_zero()) return true;
                            if (admissible_piece(s)) candidates.push_back(s);
                            return true;
                        });
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Subrep& a, const Subrep& b) {
                             return a.total() < b.total();
                         });
        for (const Subrep& s : candidates) {
            if (s.is_full()) return std::vector<Subrep>{full_subrep(q)};
            QuotientResult qr = quotient_by(s);
            auto rest = build(qr.rep);
            if (!rest) continue;
            std::vector<Subrep> chain;
            chain.push_back(s);
            for (const Subrep& w : *rest)
                chain.push_back(preimage_subrep(qr.projection, w));
            return chain;
        }
        return std::nullopt;
    }

    // stable piece of the fixed slope (mu form), or theta-stable (theta form)
    bool admissible_piece(const Subrep& s) {
        Representation r = restrict_to(s);
        if (strict_steps) {
            Rational mu_s = slope(s.dims(), p.theta_degree, p.rank_weights);
            if (mu_s != mu) return false;
            return is_stable(r, p, StabilityOptions{StabilityOptions::Quantify::all_subobjects, cap});
        }
        long long t = 0;
        DimVector sd = s.dims();
        for (size_t w = 0; w < sd.size(); ++w) t += p.derived[w] * sd[w];
        if (t != 0) return false;
        return is_theta_stable(r, p, StabilityOptions{StabilityOptions::Quantify::all_subobjects, cap});
    }
};

std::optional<Filtration> jh_generic(const Representation& m,
                                     const StabilityParams& p, long long cap,
                                     bool strict_steps) {
    JhSearch search{p, cap, Rational(0), strict_steps};
    if (strict_steps) {
        if (!is_semistable(m, p, StabilityOptions{StabilityOptions::Quantify::all_subobjects, cap}))
            throw validation_error("JH filtration needs a semistable object");
        if (total_dim(m.dims) > 0)
            search.mu = slope(m.dims, p.theta_degree, p.rank_weights);
    } else {
        if (!is_theta_semistable(m, p, StabilityOptions{StabilityOptions::Quantify::all_subobjects, cap}))
            throw validation_error("ambient JH filtration needs a theta-semistable object");
    }
    auto chain = search.build(m);
    if (!chain) return std::nullopt;
    Filtration f;
    f.object = m;
    f.strict = strict_steps;
    f.steps.push_back(zero_subrep(m));
    for (const Subrep& s : *chain) f.steps.push_back(s);
    if (f.steps.back().total() != total_dim(m.dims))
        f.steps.push_back(full_subrep(m));
    f.validate();
    return f;
}

}  // namespace

std::optional<Filtration> jh_filtration(const Representation& m,
                                        const StabilityParams& p, long long cap) {
    return jh_generic(m, p, cap, true);
}

std::optional<Filtration> jh_filtration_rel(const Representation& m,
                                            const StabilityParams& p, long long cap) {
    return jh_generic(m, p, cap, false);
}

Filtration maximal_flag(const Representation& m, long long cap, ScanOrder order) {
    if (!is_filtered(m))
        throw validation_error("maximal flag needs a filtered object");
    Filtration f;
    f.object = m;
    f.strict = true;
    f.steps.push_back(zero_subrep(m));

    Representation q = m;
    Morphism proj = identity_morphism(m);
    while (total_dim(q.dims) > 0) {
        // minimal nonzero strict subobject of the running quotient
        std::vector<Subrep> all;
        for_each_subrep(q, SubrepMode::strict, cap, [&](const Subrep& s) {
            if (!s.is_zero()) all.push_back(s);
            return true;
        });
        if (order == ScanOrder::reversed) std::reverse(all.begin(), all.end());
        const Subrep* best = nullptr;
        for (const Subrep& s : all)
            if (!best || s.total() < best->total()) best = &s;
        f.steps.push_back(preimage_subrep(proj, *best));
        if (best->is_full()) break;
        QuotientResult next = quotient_by(*best);
        proj = compose(next.projection, proj);
        q = next.rep;
    }
    f.validate();
    return f;
}

Representation gr_max(const Representation& m, long long cap) {
    return gr(maximal_flag(m, cap));
}

bool s_equivalent(const Representation& m, const Representation& n, long long cap) {
    return is_isomorphic(gr_max(m, cap), gr_max(n, cap));
}

std::string SjhVerdict::reason() const {
    switch (state) {
        case State::equivalent: return "graded objects isomorphic";
        case State::inequivalent: return "graded objects not isomorphic";
        case State::no_jh_left: return "left object has no strict Jordan-Holder filtration";
        case State::no_jh_right: return "right object has no strict Jordan-Holder filtration";
    }
    return "";
}

SjhVerdict sjh_equivalent(const Representation& m, const Representation& n,
                          const StabilityParams& p, long long cap) {
    auto jm = jh_filtration(m, p, cap);
    if (!jm) return {SjhVerdict::State::no_jh_left};
    auto jn = jh_filtration(n, p, cap);
    if (!jn) return {SjhVerdict::State::no_jh_right};
    return {is_isomorphic(gr(*jm), gr(*jn)) ? SjhVerdict::State::equivalent
                                            : SjhVerdict::State::inequivalent};
}

bool is_polystable(const Representation& m, const StabilityParams& p, long long cap) {
    auto j = jh_filtration(m, p, cap);
    if (!j) return false;
    return is_isomorphic(m, gr(*j));
}

PointType classify_point_type(const Representation& m, const StabilityParams& p,
                              long long cap) {
    if (!is_semistable(m, p, StabilityOptions{StabilityOptions::Quantify::all_subobjects, cap}))
        throw validation_error("point type is defined on semistable objects");
    Representation g = gr_max(m, cap);
    // an object with a strict JH filtration is semistable, so a non-semistable
    // graded object settles the question
    if (!is_semistable(g, p, StabilityOptions{StabilityOptions::Quantify::all_subobjects, cap}))
        return PointType::type2;
    return jh_filtration(g, p, cap) ? PointType::type1 : PointType::type2;
}

}  // namespace filtrep
