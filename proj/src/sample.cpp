#include "frobkit/sample.hpp"

#include "frobkit/canonical.hpp"

namespace frobkit::sample {

Mat matrix(Rng& rng, Field f, std::size_t rows, std::size_t cols) {
  std::vector<Elem> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(rng.element(f));
  return Mat(f, rows, cols, std::move(e));
}

Mat invertible(Rng& rng, Field f, std::size_t n) {
  for (;;) {
    Mat g = matrix(rng, f, n, n);
    if (is_invertible(g)) return g;
  }
}

Poly monic(Rng& rng, Field f, std::size_t d) {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < d; ++i) c.push_back(rng.element(f));
  c.push_back(f.one());
  return Poly(f, std::move(c));
}

Mat structured(Rng& rng, Field f, std::size_t n) {
  std::vector<Poly> used;
  std::vector<Mat> blocks;
  std::size_t left = n;
  while (left > 0) {
    std::vector<const Poly*> fits;
    for (const auto& p : used)
      if (static_cast<std::size_t>(p.degree()) <= left) fits.push_back(&p);
    if (!fits.empty() && rng.below(2) == 0) {
      blocks.push_back(companion(*fits[rng.below(fits.size())]));
      left -= blocks.back().rows();
      continue;
    }
    const std::size_t d = 1 + rng.below(std::min<std::size_t>(left, 3));
    used.push_back(monic(rng, f, d));
    blocks.push_back(companion(used.back()));
    left -= d;
  }
  const Mat g = invertible(rng, f, n);
  return g * block_diag(blocks, f) * inverse(g);
}

Triple triple(Rng& rng, Field f, std::size_t n) {
  Mat a = matrix(rng, f, n, n);
  Mat v = matrix(rng, f, n, 1);
  Mat phi = matrix(rng, f, 1, n);
  return Triple(std::move(a), std::move(v), std::move(phi));
}

Triple moment_free(Rng& rng, Field f, std::size_t n) {
  Mat a = rng.below(2) ? structured(rng, f, n) : matrix(rng, f, n, n);
  Mat v = matrix(rng, f, n, 1);
  // Rows phi with phi K = 0, K = [v, Av, ..., A^{n-1} v].
  std::vector<Mat> krylov{v};
  for (std::size_t j = 1; j < n; ++j) krylov.push_back(a * krylov.back());
  const Mat k = hconcat(krylov, f, n);
  Mat phi(f, 1, n);
  for (const auto& w : kernel_basis(k.transpose())) phi += rng.element(f) * w.transpose();
  return Triple(std::move(a), std::move(v), std::move(phi));
}

}  // namespace frobkit::sample
