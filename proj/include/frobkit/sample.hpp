#pragma once

#include "frobkit/matrix.hpp"
#include "frobkit/poly.hpp"
#include "frobkit/random.hpp"
#include "frobkit/triple.hpp"

namespace frobkit::sample {

Mat matrix(Rng& rng, Field f, std::size_t rows, std::size_t cols);
Mat invertible(Rng& rng, Field f, std::size_t n);
/// Monic of exact degree d with uniform lower coefficients.
Poly monic(Rng& rng, Field f, std::size_t d);
/// Random conjugate of a block diagonal of companion matrices in which
/// blocks are often repeated, so invariant-factor chains longer than one
/// and non-squarefree characteristic polynomials show up regularly.
Mat structured(Rng& rng, Field f, std::size_t n);
/// Uniform A, v and phi.
Triple triple(Rng& rng, Field f, std::size_t n);
/// A triple with vanishing moments: phi is drawn from the annihilator of
/// the cyclic subspace generated by v. A is uniform or structured.
Triple moment_free(Rng& rng, Field f, std::size_t n);

}  // namespace frobkit::sample
