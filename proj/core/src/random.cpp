#include "filtrep/random.hpp"

#include "filtrep/errors.hpp"

namespace filtrep {

Rational random_scalar(const FieldSpec& f, Rng& rng, long long box) {
    if (f.is_prime_field()) return f.from_int(rng.uniform_int(0, f.p() - 1));
    return Rational(rng.uniform_int(-box, box));
}

Matrix random_matrix(const FieldSpec& f, int rows, int cols, Rng& rng, long long box) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng, box));
    return m;
}

Matrix random_full_column_rank(const FieldSpec& f, int rows, int cols, Rng& rng,
                               long long box) {
    if (cols > rows)
        throw validation_error("full column rank needs rows >= cols");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = random_matrix(f, rows, cols, rng, box);
        if (is_full_column_rank(m)) return m;
    }
    // fall back to a padded identity perturbed by a random square factor
    Matrix base(f, rows, cols);
    for (int j = 0; j < cols; ++j) base.set(j, j, Rational(1));
    return base;
}

}  // namespace filtrep
