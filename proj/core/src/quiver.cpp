#include "filtrep/quiver.hpp"

#include <algorithm>
#include <set>

namespace filtrep {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> names(vertices_.begin(), vertices_.end());
    if (names.size() != vertices_.size())
        throw validation_error("duplicate vertex names");
    std::set<std::string> anames;
    for (const auto& a : arrows_) {
        if (a.src < 0 || a.src >= num_vertices() || a.tgt < 0 || a.tgt >= num_vertices())
            throw validation_error("arrow endpoint out of range");
        if (!anames.insert(a.name).second)
            throw validation_error("duplicate arrow name '" + a.name + "'");
    }
    // acyclicity via Kahn's algorithm
    std::vector<int> indeg(vertices_.size(), 0);
    for (const auto& a : arrows_) ++indeg[a.tgt];
    std::vector<int> stack;
    for (int v = 0; v < num_vertices(); ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& a : arrows_)
            if (a.src == v && --indeg[a.tgt] == 0) stack.push_back(a.tgt);
    }
    if (seen != num_vertices())
        throw validation_error("quiver has an oriented cycle");
}

Quiver Quiver::trivial() { return Quiver({"v"}, {}); }

Quiver Quiver::linear(int n) {
    if (n < 1) throw validation_error("linear quiver needs >= 1 vertex");
    std::vector<std::string> vs;
    std::vector<Arrow> as;
    for (int i = 1; i <= n; ++i) vs.push_back("q" + std::to_string(i));
    for (int i = 1; i < n; ++i)
        as.push_back({"a" + std::to_string(i), i - 1, i});
    return Quiver(std::move(vs), std::move(as));
}

int Quiver::vertex_index(const std::string& name) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertices_[v] == name) return v;
    throw validation_error("unknown vertex '" + name + "'");
}

long long Quiver::count_paths(int v, int w) const {
    if (v == w) return 1;
    long long total = 0;
    for (int a = 0; a < num_arrows(); ++a)
        if (arrows_[a].src == v) total += count_paths(arrows_[a].tgt, w);
    return total;
}

namespace {
void paths_dfs(const Quiver& q, int cur, int goal, std::vector<int>& acc,
               std::vector<std::vector<int>>& out) {
    if (cur == goal) out.push_back(acc);
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).src != cur) continue;
        acc.push_back(a);
        paths_dfs(q, q.arrow(a).tgt, goal, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> Quiver::enumerate_paths(int v, int w) const {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    paths_dfs(*this, v, w, acc, out);
    return out;
}

LadderQuiver::LadderQuiver(Quiver base, int levels)
    : base_(std::move(base)), levels_(levels) {
    if (levels < 1) throw validation_error("ladder needs >= 1 level");
    const int nv = base_.num_vertices();
    // vertical copies of base arrows, level-major
    for (int j = 1; j <= levels_; ++j)
        for (int a = 0; a < base_.num_arrows(); ++a) {
            const Arrow& qa = base_.arrow(a);
            LadderArrow la;
            la.kind = LadderArrow::Kind::vertical;
            la.level = j;
            la.base = a;
            la.src = (j - 1) * nv + qa.src;
            la.tgt = (j - 1) * nv + qa.tgt;
            la.name = "alpha[" + std::to_string(j) + "," + qa.name + "]";
            arrows_.push_back(std::move(la));
        }
    // horizontal arrows, level-major
    for (int j = 1; j < levels_; ++j)
        for (int v = 0; v < nv; ++v) {
            LadderArrow la;
            la.kind = LadderArrow::Kind::horizontal;
            la.level = j;
            la.base = v;
            la.src = (j - 1) * nv + v;
            la.tgt = j * nv + v;
            la.name = "beta[" + std::to_string(j) + "," + base_.vertex_name(v) + "]";
            arrows_.push_back(std::move(la));
        }
    // commutation relations beta_k^{t(a)} alpha_k^a = alpha_{k+1}^a beta_k^{s(a)}
    for (int k = 1; k < levels_; ++k)
        for (int a = 0; a < base_.num_arrows(); ++a) {
            const Arrow& qa = base_.arrow(a);
            LadderRelation rel;
            rel.lhs = {vertical_index(k, a), horizontal_index(k, qa.tgt)};
            rel.rhs = {horizontal_index(k, qa.src), vertical_index(k + 1, a)};
            relations_.push_back(std::move(rel));
        }
}

std::string LadderQuiver::vertex_name(int w) const {
    return "(" + std::to_string(level_of(w)) + "," +
           base_.vertex_name(base_vertex_of(w)) + ")";
}

int LadderQuiver::vertex_index_by_name(const std::string& name) const {
    for (int w = 0; w < num_vertices(); ++w)
        if (vertex_name(w) == name) return w;
    throw validation_error("unknown ladder vertex '" + name + "'");
}

int LadderQuiver::arrow_index_by_name(const std::string& name) const {
    for (int a = 0; a < num_arrows(); ++a)
        if (arrows_[a].name == name) return a;
    throw validation_error("unknown ladder arrow '" + name + "'");
}

int LadderQuiver::vertical_index(int level, int base_arrow) const {
    return (level - 1) * base_.num_arrows() + base_arrow;
}

int LadderQuiver::horizontal_index(int level, int base_vertex) const {
    return levels_ * base_.num_arrows() + (level - 1) * base_.num_vertices() +
           base_vertex;
}

long long LadderQuiver::normal_path_count(int w, int u) const {
    if (level_of(u) < level_of(w)) return 0;
    return base_.count_paths(base_vertex_of(w), base_vertex_of(u));
}

LadderPtr build_ladder(const Quiver& q, int levels) {
    return std::make_shared<const LadderQuiver>(q, levels);
}

}  // namespace filtrep
