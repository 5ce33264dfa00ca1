#pragma once

#include <string>
#include <vector>

#include "wpcy/common.hpp"
#include "wpcy/hypersurface.hpp"

namespace wpcy {

// One monomial of a residual equation, as an exponent vector over the full
// coordinate list; `param` names the deformation parameter multiplying it
// (empty for terms of the base equation).
struct ResidualTerm {
  std::vector<i64> expo;
  std::string param;
  bool operator==(const ResidualTerm&) const = default;
};

// A stratum of the ambient quotient singularities that meets the
// hypersurface.  `indices` lists the coordinates allowed to be nonzero, so a
// stratum of k indices cuts out a locus of dimension k-2 (the distinguished
// vertex of a quasi-diagonal model has a single index and dimension 0).  `m`
// is the order of the cyclic stabilizer and `action` its exponents on the
// coordinates in `transverse`, scaled so that the first entry coprime to m
// becomes 1.  Point loci carry the number of geometric points and the
// positions (within the returned list) of the curve loci passing through
// them.  `genus` stays -1 until filled in from locus_curve_data.
struct SingularLocus {
  int dim = 0;
  std::vector<int> indices;
  i64 m = 1;
  std::vector<int> transverse;
  std::vector<i64> action;
  std::vector<ResidualTerm> residual;
  bool vertex = false;
  i64 points = -1;
  i64 genus = -1;
  std::vector<int> contained_in;
};

// All singular loci of a quasi-smooth hypersurface with normalized weight:
// curve loci first (index sets ascending), then point loci, then the
// distinguished vertex when the model is quasi-diagonal with w0 >= 2.
std::vector<SingularLocus> singular_loci(const Hypersurface& h);

// The normalized cyclic-action exponents on locus.transverse; this is the
// `action` field recomputed from scratch.
std::vector<i64> local_action(const SingularLocus& locus, const Hypersurface& h);

// A curve locus rewritten on its normalized sub-weight, plus the genus of
// its smooth model.  Pure-power equations get the genus from the size of
// the character set; other shapes fall back to point counts over two
// extensions of a prime chosen so the curve attains the Weil bound there.
struct CurveData {
  Hypersurface model;
  i64 genus = 0;
};
CurveData locus_curve_data(const SingularLocus& locus, const Hypersurface& h);

}  // namespace wpcy
