#pragma once

#include <map>
#include <string>
#include <vector>

#include "wpcy/common.hpp"

namespace wpcy {

struct Weight {
  std::vector<i64> entries;

  int size() const { return static_cast<int>(entries.size()); }
  i64 sum() const;
  bool operator==(const Weight&) const = default;
};

// A weight is normalized when no n of its n+1 entries share a divisor > 1.
bool is_normalized(const Weight& q);

// Iteratively divide out common divisors (of the whole tuple, then of every
// n-subset); the result names the same weighted projective space.
Weight normalize_weight(Weight q);

enum class HKind { Diagonal, QuasiDiagonal, Deformed };

struct DeformationTerm {
  std::string param;
  std::vector<i64> monomial;  // exponent vector of weighted degree d
  bool operator==(const DeformationTerm&) const = default;
};

// A hypersurface of one of the three supported shapes.  The exponent field
// holds d_i = d/w_i for the diagonal kind and m_0..m_n for the quasi-diagonal
// kind, whose defining form is x_0^{m_0} x_1 + x_1^{m_1} + ... + x_n^{m_n}
// in that coordinate order.  The deformed kind is a diagonal form plus
// parameter-weighted monomials.
struct Hypersurface {
  Weight weight;
  i64 degree = 0;
  HKind kind = HKind::Diagonal;
  std::vector<i64> exponents;
  std::vector<DeformationTerm> deformation;
  bool operator==(const Hypersurface&) const = default;
};

Hypersurface make_diagonal(Weight w, i64 degree);
Hypersurface make_quasi_diagonal(Weight w, i64 degree, std::vector<i64> m);
Hypersurface make_deformed(Weight w, i64 degree,
                           std::vector<DeformationTerm> terms);

// Sum of weights equals the degree.
bool cy_condition(const Hypersurface& h);

// Exponent vectors of the defining monomials, deformation terms excluded.
std::vector<std::vector<i64>> base_monomials(const Hypersurface& h);

using ParamMap = std::map<std::string, i64>;

// Diagonal kind: true iff the characteristic divides no exponent.  The other
// kinds are checked exhaustively for singular points of the affine cone over
// the prime field of the given characteristic, so they need char > 0 (and
// values for any deformation parameters).
bool is_quasi_smooth(const Hypersurface& h, i64 field_char,
                     const ParamMap& params = {});

// Recognize a monomial list as one of the supported shapes, permuting
// coordinates into the standard quasi-diagonal order when needed.
struct CanonicalModel {
  Hypersurface surface;
  std::vector<int> perm;  // perm[new index] = old index
  bool recognized = true;
};
CanonicalModel canonicalize_model(Weight w, i64 degree,
                                  std::vector<std::vector<i64>> monomials);

// Rewrite the hypersurface on the normalized weight, adjusting degree and
// exponents step by step.  A reduction step dividing n of the n+1 weights by
// q replaces the remaining coordinate u by u^q, which needs q | d; when that
// fails the partial result is returned with fully_reduced = false.
struct Normalized {
  Hypersurface surface;
  std::vector<int> perm;  // composed coordinate permutation, new -> old
  bool fully_reduced = true;
};
Normalized normalize_hypersurface(const Hypersurface& h);

}  // namespace wpcy
