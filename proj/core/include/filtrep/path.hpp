#pragma once

#include <vector>

#include "filtrep/field.hpp"
#include "filtrep/quiver.hpp"

namespace filtrep {

/// A path of the ladder quiver in normal form: all horizontal steps first
/// (levels from_level -> to_level at the starting base vertex), then the base
/// quiver path performed at to_level. Every path is congruent to exactly one
/// normal form modulo the commutation ideal, so these are a basis of the
/// quotient path algebra.
struct NormalPath {
    int from_level = 1;
    int to_level = 1;
    int base_src = 0;           // base vertex at the start
    std::vector<int> q_arrows;  // base arrow indices, application order

    int base_tgt(const Quiver& q) const {
        int v = base_src;
        for (int a : q_arrows) v = q.arrow(a).tgt;
        return v;
    }
    int src(const LadderQuiver& L) const { return L.vertex_index(from_level, base_src); }
    int tgt(const LadderQuiver& L) const {
        return L.vertex_index(to_level, base_tgt(L.base()));
    }
    int length() const {
        return (to_level - from_level) + static_cast<int>(q_arrows.size());
    }

    bool operator==(const NormalPath&) const = default;
    auto operator<=>(const NormalPath&) const = default;
};

/// Element of the quotient path algebra with fixed source and target vertex:
/// a finite sum of coefficient * normal-form path. Terms are kept sorted with
/// nonzero coefficients, so equality of elements modulo the ideal is
/// term-by-term equality.
class PathElement {
public:
    PathElement() = default;
    PathElement(LadderPtr ladder, int src, int tgt)
        : ladder_(std::move(ladder)), src_(src), tgt_(tgt) {}

    static PathElement zero(LadderPtr ladder, int src, int tgt);
    static PathElement trivial(LadderPtr ladder, int vertex);
    static PathElement arrow(LadderPtr ladder, int arrow_index);
    /// Builds coeff * (the product of the given arrows, applied left to
    /// right) and rewrites it to normal form.
    static PathElement from_arrow_sequence(LadderPtr ladder,
                                           const std::vector<int>& arrows,
                                           const Rational& coeff = Rational(1));

    const LadderPtr& ladder() const { return ladder_; }
    int src() const { return src_; }
    int tgt() const { return tgt_; }
    const std::vector<std::pair<NormalPath, Rational>>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    PathElement add(const PathElement& other) const;
    PathElement scaled(const Rational& c) const;
    /// Composition: self after other (other is applied first).
    PathElement compose_after(const PathElement& other) const;

    /// Canonical representative; elements are stored normalized, so this is
    /// the identity and exists to make idempotence testable.
    PathElement normal_form() const { return *this; }

    bool operator==(const PathElement& other) const;

    void add_term(const NormalPath& p, const Rational& c);

private:
    LadderPtr ladder_;
    int src_ = 0, tgt_ = 0;
    std::vector<std::pair<NormalPath, Rational>> terms_;
    void canonicalize();
};

/// Canonical basis of normal-form paths w -> u (ordered by the base quiver's
/// depth-first path enumeration).
std::vector<NormalPath> normal_path_basis(const LadderQuiver& L, int w, int u);

/// Index of a normal path in normal_path_basis(L, src, tgt).
int normal_path_index(const LadderQuiver& L, const NormalPath& p);

/// Brute-force oracle: enumerate every raw path w -> u of the ladder quiver
/// and count distinct normal forms after rewriting. Matches
/// normal_path_count; used by tests.
long long count_paths_by_rewriting(const LadderQuiver& L, int w, int u);

}  // namespace filtrep
