#pragma once

#include <vector>

#include "frobkit/poly.hpp"
#include "frobkit/random.hpp"

namespace frobkit {

struct Factor {
  Poly f;
  unsigned multiplicity;
};

/// Square-free decomposition of a monic polynomial over a finite field:
/// pairs (g, m) with g square-free, pairwise coprime, and f = prod g^m.
/// Handles f' = 0 by taking p-th roots.
std::vector<Factor> squarefree_decomposition(const Poly& f);

/// Distinct-degree factorization of a monic square-free polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<Factor> distinct_degree_factorization(const Poly& f);

/// Cantor-Zassenhaus splitting of a monic product of distinct irreducibles
/// of degree d. Odd characteristic only.
std::vector<Poly> equal_degree_factorization(const Poly& f, unsigned d, Rng& rng);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by `Poly::compare`. The leading coefficient is dropped.
std::vector<Factor> factor(const Poly& f, Rng& rng);
std::vector<Factor> factor(const Poly& f);

/// Rabin's test; valid in every characteristic.
bool is_irreducible(const Poly& f);

/// Product of f^m over the list.
Poly expand(const std::vector<Factor>& factors, Field field);

}  // namespace frobkit
