#pragma once

#include <memory>
#include <string>
#include <vector>

#include "filtrep/errors.hpp"

namespace filtrep {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
    bool operator==(const Arrow&) const = default;
};

/// Finite quiver without oriented cycles. Vertices are ordered; dimension
/// vectors follow this order.
class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    static Quiver trivial();                 // one vertex, no arrows
    static Quiver linear(int n);             // A_n: 1 -> 2 -> ... -> n

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    int vertex_index(const std::string& name) const;

    bool operator==(const Quiver&) const = default;

    /// Number of directed paths v -> w (includes the trivial path when v == w).
    long long count_paths(int v, int w) const;
    /// All paths v -> w as arrow index sequences in application order,
    /// canonical (depth-first, arrows in declaration order).
    std::vector<std::vector<int>> enumerate_paths(int v, int w) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// Arrow of a ladder quiver: a level copy of a base arrow (vertical), or a
/// level-to-level map at a base vertex (horizontal).
struct LadderArrow {
    enum class Kind { vertical, horizontal };
    Kind kind;
    int level;  // vertical: level j in [1, L]; horizontal: source level j in [1, L-1]
    int base;   // vertical: base arrow index; horizontal: base vertex index
    int src = 0, tgt = 0;  // ladder vertex indices
    std::string name;
    bool operator==(const LadderArrow&) const = default;
};

/// A commutation relation: the two length-2 paths (as arrow index sequences in
/// application order) that must agree on every representation.
struct LadderRelation {
    std::vector<int> lhs;  // [alpha_k^a, beta_k^{t(a)}]
    std::vector<int> rhs;  // [beta_k^{s(a)}, alpha_{k+1}^a]
    bool operator==(const LadderRelation&) const = default;
};

/// The grid quiver with `levels` copies of an acyclic base quiver, joined by
/// horizontal arrows, together with its commutation ideal. Ladder vertices are
/// ordered level-major, then by base vertex order; level `levels` is the sink
/// copy of the base.
class LadderQuiver {
public:
    LadderQuiver(Quiver base, int levels);

    const Quiver& base() const { return base_; }
    int levels() const { return levels_; }
    int num_vertices() const { return levels_ * base_.num_vertices(); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    int num_relations() const { return static_cast<int>(relations_.size()); }

    /// level in [1, levels]
    int vertex_index(int level, int base_vertex) const {
        return (level - 1) * base_.num_vertices() + base_vertex;
    }
    int level_of(int w) const { return w / base_.num_vertices() + 1; }
    int base_vertex_of(int w) const { return w % base_.num_vertices(); }
    std::string vertex_name(int w) const;
    int vertex_index_by_name(const std::string& name) const;

    const std::vector<LadderArrow>& arrows() const { return arrows_; }
    const LadderArrow& arrow(int a) const { return arrows_[a]; }
    int arrow_index_by_name(const std::string& name) const;
    /// vertical arrow (level j, base arrow a)
    int vertical_index(int level, int base_arrow) const;
    /// horizontal arrow (source level j, base vertex v)
    int horizontal_index(int level, int base_vertex) const;

    const std::vector<LadderRelation>& relations() const { return relations_; }

    bool operator==(const LadderQuiver&) const = default;

    /// Dimension of the space of paths w -> u modulo the commutation ideal:
    /// the number of base-quiver paths v -> v' when level(u) >= level(w), 0
    /// otherwise.
    long long normal_path_count(int w, int u) const;

private:
    Quiver base_;
    int levels_;
    std::vector<LadderArrow> arrows_;
    std::vector<LadderRelation> relations_;
};

using LadderPtr = std::shared_ptr<const LadderQuiver>;

LadderPtr build_ladder(const Quiver& q, int levels);

}  // namespace filtrep
