#include "frobkit/canonical.hpp"

#include <algorithm>
#include <map>

#include "frobkit/charpoly.hpp"
#include "frobkit/enumerate.hpp"
#include "frobkit/error.hpp"
#include "frobkit/factor.hpp"

namespace frobkit {

namespace {

void require_square(const Mat& a, const char* what) {
  if (!a.is_square()) raise(ErrorCode::NotSquare, std::string(what) + " needs a square matrix");
}

void require_odd_finite(Field f) {
  if (!f.is_finite()) raise(ErrorCode::NotFiniteField, "elementary divisors need a finite field");
  if (f.characteristic() == 2)
    raise(ErrorCode::EvenCharacteristicUnsupported, "elementary divisors need odd characteristic");
}

using PolyMat = std::vector<std::vector<Poly>>;

// p(A) w by Horner's rule on the vector.
Mat apply_poly(const Poly& p, const Mat& a, const Mat& w) {
  Mat r(a.field(), a.rows(), 1);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = a * r;
    r += c[i] * w;
  }
  return r;
}

std::vector<Mat> krylov(const Mat& a, Mat w, std::size_t length) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(w);
    if (i + 1 < length) w = a * w;
  }
  return out;
}

struct SmithResult {
  std::vector<Poly> diagonal;  // all n entries, monic, divisibility order
  PolyMat left_inverse;        // P with xI - A = P D Q for some unimodular Q
};

// Smith form of xI - A, tracking P = U^{-1} where U is the accumulated row
// transform. Column i of P, pushed through p(x) -> p(A), generates the i-th
// cyclic summand of V.
SmithResult smith(const Mat& a) {
  const Field f = a.field();
  const std::size_t n = a.rows();
  PolyMat m(n, std::vector<Poly>(n, Poly(f))), p(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Poly::constant(-a(i, j));
    m[i][i] += Poly::x(f);
    p[i][i] = Poly::constant(f.one());
  }
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(m[i], m[j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(p[r][i], p[r][j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
  };
  // row_i -= q * row_t
  auto row_sub = [&](std::size_t i, std::size_t t, const Poly& q) {
    for (std::size_t j = 0; j < n; ++j)
      if (!m[t][j].is_zero()) m[i][j] -= q * m[t][j];
    for (std::size_t r = 0; r < n; ++r)
      if (!p[r][i].is_zero()) p[r][t] += q * p[r][i];
  };
  // col_j -= q * col_t
  auto col_sub = [&](std::size_t j, std::size_t t, const Poly& q) {
    for (std::size_t r = 0; r < n; ++r)
      if (!m[r][t].is_zero()) m[r][j] -= q * m[r][t];
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!m[i][j].is_zero() && (bi == n || m[i][j].degree() < m[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;  // remaining block is zero; impossible for xI - A
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m[i][t].is_zero()) continue;
        auto [q, r] = divmod(m[i][t], m[t][t]);
        row_sub(i, t, q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m[t][j].is_zero()) continue;
        auto [q, r] = divmod(m[t][j], m[t][t]);
        col_sub(j, t, q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(m[i][j] % m[t][t]).is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      // row_t += row_bad, i.e. row_sub with q = -1
      row_sub(t, bad, Poly::constant(-f.one()));
    }
    const Elem lc = m[t][t].leading();
    if (!lc.is_one()) {
      const Elem inv = lc.inv();
      for (std::size_t j = 0; j < n; ++j) m[t][j] *= inv;
      for (std::size_t r = 0; r < n; ++r) p[r][t] *= lc;
    }
  }
  SmithResult out;
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(m[i][i]);
  out.left_inverse = std::move(p);
  return out;
}

// Cyclic generators w_i (one per non-unit diagonal entry) and the entries.
struct CyclicDecomposition {
  std::vector<Poly> factors;
  std::vector<Mat> generators;
};

CyclicDecomposition cyclic_decomposition(const Mat& a) {
  const Field f = a.field();
  const std::size_t n = a.rows();
  SmithResult s = smith(a);
  CyclicDecomposition out;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.diagonal[i].degree() == 0) continue;
    Mat w(f, n, 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (s.left_inverse[j][i].is_zero()) continue;
      w += apply_poly(s.left_inverse[j][i], a, Mat::unit_col(f, n, j));
    }
    out.factors.push_back(s.diagonal[i]);
    out.generators.push_back(std::move(w));
  }
  return out;
}

Mat transform_from_columns(const std::vector<Mat>& cols, const Mat& a, const Mat& target) {
  const Mat s = hconcat(cols, a.field(), a.rows());
  if (!is_invertible(s)) raise(ErrorCode::AlgorithmDisagreement, "spun vectors are not a basis");
  Mat g = inverse(s);
  if (!(g * a * s == target))
    raise(ErrorCode::AlgorithmDisagreement, "canonical-form transform failed verification");
  return g;
}

}  // namespace

Mat companion(const Poly& f) {
  if (!f.is_monic()) raise(ErrorCode::NotMonic, "companion matrix needs a monic polynomial");
  const auto n = static_cast<std::size_t>(f.degree());
  const Field fld = f.field();
  Mat c(fld, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = fld.one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return c;
}

std::vector<Poly> smith_invariant_factors(const Mat& a) {
  require_square(a, "smith_invariant_factors");
  std::vector<Poly> out;
  for (auto& d : smith(a).diagonal)
    if (d.degree() > 0) out.push_back(std::move(d));
  return out;
}

Mat FrobeniusForm::form() const {
  const Field f = transform.field();
  std::vector<Mat> blocks;
  for (const auto& p : invariant_factors) blocks.push_back(companion(p));
  return block_diag(blocks, f);
}

FrobeniusForm frobenius_form(const Mat& a) {
  require_square(a, "frobenius_form");
  CyclicDecomposition cd = cyclic_decomposition(a);
  std::vector<Mat> cols;
  for (std::size_t i = 0; i < cd.factors.size(); ++i)
    for (auto& k : krylov(a, cd.generators[i], static_cast<std::size_t>(cd.factors[i].degree())))
      cols.push_back(std::move(k));
  FrobeniusForm out{std::move(cd.factors), Mat(a.field(), 0, 0)};
  out.transform = transform_from_columns(cols, a, out.form());
  return out;
}

Mat ElementaryDivisorForm::form() const {
  std::vector<Mat> blocks;
  for (const auto& b : this->blocks) blocks.push_back(companion(b.power()));
  return block_diag(blocks, transform.field());
}

ElementaryDivisorForm elementary_divisor_form(const Mat& a) {
  require_square(a, "elementary_divisor_form");
  require_odd_finite(a.field());
  CyclicDecomposition cd = cyclic_decomposition(a);
  struct Piece {
    ElementaryBlock block;
    std::vector<Mat> cols;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < cd.factors.size(); ++i) {
    const Poly& fi = cd.factors[i];
    for (const auto& [irr, e] : factor(fi)) {
      const Poly pe = irr.pow(e);
      const Mat w = apply_poly(fi / pe, a, cd.generators[i]);
      pieces.push_back({{irr, e}, krylov(a, w, static_cast<std::size_t>(pe.degree()))});
    }
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
    const Poly& fx = x.block.f;
    const Poly& fy = y.block.f;
    // Linear factors x - r in order of r.
    const int c = (fx.degree() == 1 && fy.degree() == 1) ? (-fx.coeff(0)).compare(-fy.coeff(0)) : fx.compare(fy);
    return c != 0 ? c < 0 : x.block.s < y.block.s;
  });
  ElementaryDivisorForm out{{}, Mat(a.field(), 0, 0)};
  std::vector<Mat> cols;
  for (auto& pc : pieces) {
    out.blocks.push_back(pc.block);
    for (auto& c : pc.cols) cols.push_back(std::move(c));
  }
  out.transform = transform_from_columns(cols, a, out.form());
  return out;
}

Mat transpose_conjugator(const Mat& a) {
  require_square(a, "transpose_conjugator");
  const Field f = a.field();
  const FrobeniusForm ff = frobenius_form(a);
  const Mat s = inverse(ff.transform);  // A = S F S^{-1}
  // F^t = K F K^{-1}, K the Krylov basis of each C^t from its last unit vector.
  std::vector<Mat> kblocks;
  for (const auto& p : ff.invariant_factors) {
    const Mat ct = companion(p).transpose();
    const auto d = static_cast<std::size_t>(p.degree());
    kblocks.push_back(hconcat(krylov(ct, Mat::unit_col(f, d, d - 1), d), f, d));
  }
  const Mat k = block_diag(kblocks, f);
  Mat g = s * inverse(k) * s.transpose();
  if (!(g * a.transpose() == a * g) || !is_invertible(g))
    raise(ErrorCode::AlgorithmDisagreement, "transpose conjugator failed verification");
  return g;
}

Mat commutator_operator(const Mat& a) {
  require_square(a, "commutator_operator");
  const std::size_t n = a.rows();
  Mat ad(a.field(), n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        ad(row, k * n + j) += a(i, k);
        ad(row, i * n + k) -= a(k, j);
      }
    }
  return ad;
}

std::size_t centralizer_dimension(const Mat& a) {
  const std::size_t n = a.rows();
  return n * n - rank(commutator_operator(a));
}

std::size_t centralizer_dimension_from_invariants(const std::vector<Poly>& factors) {
  std::size_t total = 0;
  for (const auto& x : factors)
    for (const auto& y : factors) total += static_cast<std::size_t>(std::min(x.degree(), y.degree()));
  return total;
}

std::size_t orbit_dimension(const Mat& a) { return a.rows() * a.rows() - centralizer_dimension(a); }

mpz_class general_linear_order(std::uint64_t q, std::size_t n) {
  const mpz_class qq(std::to_string(q));
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), qq.get_mpz_t(), n);
  mpz_class order = 1, qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= qq;
  }
  return order;
}

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Poly>> similarity_classes_with_charpoly(const Poly& g) {
  if (!g.is_monic()) raise(ErrorCode::NotMonic, "class enumeration needs a monic polynomial");
  require_odd_finite(g.field());
  const Field f = g.field();
  const auto facs = factor(g);
  std::vector<std::vector<std::vector<unsigned>>> choices;
  for (const auto& fc : facs) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(fc.multiplicity, fc.multiplicity, cur, parts);
    choices.push_back(std::move(parts));
  }
  std::vector<std::vector<Poly>> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < choices.size(); ++j) r = std::max(r, choices[j][pick[j]].size());
    // Largest parts go to the last invariant factor.
    std::vector<Poly> chain(r, Poly::constant(f.one()));
    for (std::size_t j = 0; j < choices.size(); ++j) {
      const auto& parts = choices[j][pick[j]];
      for (std::size_t t = 0; t < parts.size(); ++t) chain[r - 1 - t] *= facs[j].f.pow(parts[t]);
    }
    out.push_back(std::move(chain));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return out;
}

namespace {

std::string chain_key(const std::vector<Poly>& chain) {
  std::string key;
  for (const auto& p : chain) key += to_text(p) + ";";
  return key;
}

}  // namespace

OrbitStats orbit_stats(const Poly& g, std::uint64_t exact_bound) {
  const Field f = g.field();
  OrbitStats out{g, static_cast<std::size_t>(std::max(g.degree(), 0)), {}, std::nullopt, false};
  const std::size_t n = out.n;
  const std::uint64_t q = f.order();

  std::map<std::string, mpz_class> census;
  if (auto total = bounded_power(q, n * n, exact_bound)) {
    mpz_class fiber = 0;
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
      const Mat m = matrix_from_index(f, n, n, idx);
      if (!(charpoly(m) == g)) continue;
      ++fiber;
      census[chain_key(smith_invariant_factors(m))] += 1;
    }
    out.fiber_size = fiber;
  }

  out.exact = true;
  const mpz_class gl = general_linear_order(q, n);
  for (auto& chain : similarity_classes_with_charpoly(g)) {
    ClassRow row{chain, Mat(f, 0, 0), 0, 0, 0, std::nullopt, "none"};
    std::vector<Mat> blocks;
    for (const auto& p : chain) blocks.push_back(companion(p));
    row.representative = block_diag(blocks, f);
    row.centralizer_dim = centralizer_dimension(row.representative);
    row.centralizer_dim_formula = centralizer_dimension_from_invariants(chain);
    row.orbit_dim = n * n - row.centralizer_dim;
    row.size_method = "none";
    if (out.fiber_size) {
      row.class_size = census[chain_key(chain)];
      row.size_method = "census";
    } else if (auto count = bounded_power(q, row.centralizer_dim, exact_bound)) {
      const auto basis = kernel_basis(commutator_operator(row.representative));
      mpz_class units = 0;
      for (std::uint64_t idx = 0; idx < *count; ++idx) {
        Mat c(f, n, n);
        std::uint64_t t = idx;
        for (const auto& b : basis) {
          const Elem coef = f.element(t % q);
          t /= q;
          if (!coef.is_zero()) c += coef * unvec(b, n, n);
        }
        if (is_invertible(c)) ++units;
      }
      row.class_size = gl / units;
      row.size_method = "centralizer";
    }
    if (!row.class_size) out.exact = false;
    out.classes.push_back(std::move(row));
  }
  return out;
}

}  // namespace frobkit
