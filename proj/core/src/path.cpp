#include "filtrep/path.hpp"

#include <algorithm>
#include <set>

namespace filtrep {

PathElement PathElement::zero(LadderPtr ladder, int src, int tgt) {
    return PathElement(std::move(ladder), src, tgt);
}

PathElement PathElement::trivial(LadderPtr ladder, int vertex) {
    PathElement e(ladder, vertex, vertex);
    NormalPath p;
    p.from_level = ladder->level_of(vertex);
    p.to_level = p.from_level;
    p.base_src = ladder->base_vertex_of(vertex);
    e.add_term(p, Rational(1));
    return e;
}

PathElement PathElement::arrow(LadderPtr ladder, int arrow_index) {
    const LadderArrow& a = ladder->arrow(arrow_index);
    PathElement e(ladder, a.src, a.tgt);
    NormalPath p;
    if (a.kind == LadderArrow::Kind::vertical) {
        p.from_level = a.level;
        p.to_level = a.level;
        p.base_src = ladder->base().arrow(a.base).src;
        p.q_arrows = {a.base};
    } else {
        p.from_level = a.level;
        p.to_level = a.level + 1;
        p.base_src = a.base;
    }
    e.add_term(p, Rational(1));
    return e;
}

PathElement PathElement::from_arrow_sequence(LadderPtr ladder,
                                             const std::vector<int>& arrows,
                                             const Rational& coeff) {
    if (arrows.empty())
        throw validation_error("empty arrow sequence has no endpoints");
    PathElement e = arrow(ladder, arrows[0]);
    for (size_t i = 1; i < arrows.size(); ++i)
        e = arrow(ladder, arrows[i]).compose_after(e);
    return e.scaled(coeff);
}

void PathElement::add_term(const NormalPath& p, const Rational& c) {
    terms_.emplace_back(p, c);
    canonicalize();
}

void PathElement::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<NormalPath, Rational>> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(t);
    }
    terms_.clear();
    for (auto& t : merged)
        if (t.second != 0) terms_.push_back(std::move(t));
}

PathElement PathElement::add(const PathElement& other) const {
    if (src_ != other.src_ || tgt_ != other.tgt_)
        throw shape_error("path element sum endpoint mismatch");
    PathElement out = *this;
    for (const auto& t : other.terms_) out.terms_.push_back(t);
    out.canonicalize();
    return out;
}

PathElement PathElement::scaled(const Rational& c) const {
    PathElement out = *this;
    for (auto& t : out.terms_) t.second *= c;
    out.canonicalize();
    return out;
}

PathElement PathElement::compose_after(const PathElement& other) const {
    // this o other: other runs src -> mid, this runs mid -> tgt
    if (other.tgt_ != src_)
        throw shape_error("non-composable paths: " + ladder_->vertex_name(other.tgt_) +
                          " then " + ladder_->vertex_name(src_));
    PathElement out(ladder_, other.src_, tgt_);
    for (const auto& [p, cp] : other.terms_)
        for (const auto& [q, cq] : terms_) {
            // p: (j1 -> k1, A at k1), q: (k1 -> k2, B at k2). The horizontal
            // run of q commutes past A, so the composite normal form is
            // (j1 -> k2, A ++ B at k2).
            NormalPath r;
            r.from_level = p.from_level;
            r.to_level = q.to_level;
            r.base_src = p.base_src;
            r.q_arrows = p.q_arrows;
            r.q_arrows.insert(r.q_arrows.end(), q.q_arrows.begin(), q.q_arrows.end());
            out.terms_.emplace_back(std::move(r), cp * cq);
        }
    out.canonicalize();
    return out;
}

bool PathElement::operator==(const PathElement& other) const {
    return src_ == other.src_ && tgt_ == other.tgt_ && terms_ == other.terms_;
}

std::vector<NormalPath> normal_path_basis(const LadderQuiver& L, int w, int u) {
    std::vector<NormalPath> out;
    if (L.level_of(u) < L.level_of(w)) return out;
    const int v = L.base_vertex_of(w);
    const int vp = L.base_vertex_of(u);
    for (const auto& qpath : L.base().enumerate_paths(v, vp)) {
        NormalPath p;
        p.from_level = L.level_of(w);
        p.to_level = L.level_of(u);
        p.base_src = v;
        p.q_arrows = qpath;
        out.push_back(std::move(p));
    }
    return out;
}

int normal_path_index(const LadderQuiver& L, const NormalPath& p) {
    auto basis = normal_path_basis(L, p.src(L), p.tgt(L));
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == p) return static_cast<int>(i);
    throw validation_error("normal path not found in basis");
}

namespace {
void raw_paths_dfs(const LadderQuiver& L, int cur, int goal,
                   std::vector<int>& acc, std::set<NormalPath>& forms,
                   LadderPtr lp) {
    if (cur == goal && !acc.empty()) {
        PathElement e = PathElement::from_arrow_sequence(lp, acc);
        forms.insert(e.terms()[0].first);
    }
    if (cur == goal && acc.empty()) {
        PathElement e = PathElement::trivial(lp, cur);
        forms.insert(e.terms()[0].first);
    }
    for (int a = 0; a < L.num_arrows(); ++a) {
        if (L.arrow(a).src != cur) continue;
        acc.push_back(a);
        raw_paths_dfs(L, L.arrow(a).tgt, goal, acc, forms, lp);
        acc.pop_back();
    }
}
}  // namespace

long long count_paths_by_rewriting(const LadderQuiver& L, int w, int u) {
    auto lp = std::make_shared<const LadderQuiver>(L);
    std::set<NormalPath> forms;
    std::vector<int> acc;
    raw_paths_dfs(L, w, u, acc, forms, lp);
    return static_cast<long long>(forms.size());
}

}  // namespace filtrep
