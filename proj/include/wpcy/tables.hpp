#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpcy/hypersurface.hpp"

namespace wpcy {

// The three elliptic fiber curves, each a diagonal curve carrying a cyclic
// symmetry of order ell acting on the distinguished coordinate.
struct EllipticCurve {
  std::string name;  // "E1", "E2", "E3"
  Hypersurface model;
  i64 ell = 0;
};
const std::vector<EllipticCurve>& elliptic_curves();

// K3 surfaces used as fibers of the threefold constructions.  The number
// refers to the row of the K3 table where the surface first appears.
struct K3Fiber {
  std::string name;  // "Y1", "Y4", ...
  int number = 0;
  Hypersurface model;
  i64 ell = 0;
};
const std::vector<K3Fiber>& k3_fibers();

// One row of the construction tables.  Fields that a table does not print
// keep their defaults: genus/h11/h21 are -1 when absent, chi_known marks
// whether an Euler characteristic is recorded, and model is empty for rows
// given as weight data only.
struct TableRow {
  int table = 0;
  int row = 0;  // numbering as printed; the fifth table continues at 24
  Weight base;          // curve or surface weights of the product factor
  std::string fiber;    // name of the cofactor (elliptic curve or K3)
  i64 ell = 0;
  Weight image;         // image weights in ascending order
  i64 degree = 0;
  i64 genus = -1;       // fiber-curve genus (second table only)
  i64 h11 = -1;
  i64 h21 = -1;
  i64 chi = 0;
  bool chi_known = false;
  Weight k3_fiber;      // K3 fibration fiber (fourth table only)
  std::string remark;
  std::optional<Hypersurface> model;  // image hypersurface when one exists
};

// Regenerate all six construction tables: the fiber curves, the K3 quotients
// of curve x elliptic-curve products, the two families of elliptically
// fibered threefolds, the large-weight rows given as weight data only, and
// the K3-fibered threefolds.  Every emitted row satisfies the Calabi-Yau
// weight identity (checked for the weight-only rows, automatic for composed
// ones).
std::vector<TableRow> enumerate_tables();

}  // namespace wpcy
