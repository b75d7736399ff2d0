#pragma once

#include <cstdint>
#include <random>

#include "filtrep/matrix.hpp"

namespace filtrep {

/// Deterministic engine: identical seeds give identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    long long uniform_int(long long lo, long long hi) {  // inclusive bounds
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Random scalar: F_p uniform residue; Q uniform integer in [-box, box].
Rational random_scalar(const FieldSpec& f, Rng& rng, long long box = 5);

Matrix random_matrix(const FieldSpec& f, int rows, int cols, Rng& rng,
                     long long box = 5);

/// Random matrix with full column rank (requires rows >= cols).
Matrix random_full_column_rank(const FieldSpec& f, int rows, int cols, Rng& rng,
                               long long box = 5);

}  // namespace filtrep
