#include "wpcy/tables.hpp"

#include <algorithm>
#include <numeric>

#include "wpcy/charset.hpp"
#include "wpcy/twist.hpp"

namespace wpcy {

namespace {

// Weight systems (w0, w1, w2) of the fiber curves x0^l + f(x1, x2) scanned
// for the K3 table; the chained system (11,5,6) is appended separately.
const std::vector<std::vector<i64>> kK3CurveSystems = {
    {2, 1, 1}, {3, 1, 2}, {4, 1, 3}, {5, 1, 4}, {7, 1, 6}, {5, 2, 3}};

// Surface weight systems of the elliptically but not K3-fibered threefolds,
// together with the printed Hodge numbers of the rows they generate.
const std::vector<std::vector<i64>> kNonK3Bases = {
    {5, 1, 1, 3}, {5, 1, 2, 2}, {7, 1, 2, 4},  {7, 1, 3, 3},  {7, 2, 2, 3},
    {9, 1, 4, 4}, {10, 2, 3, 5}, {10, 1, 3, 6}, {13, 1, 6, 6}};
struct Hodge {
  i64 h11, h21, chi;
};
const std::vector<Hodge> kNonK3Hodge = {
    {7, 103, -192}, {5, 251, -492}, {6, 242, -228},  {4, 208, -408},
    {8, 116, -216}, {17, 65, -96},  {6, 180, -348},  {7, 151, -288},
    {19, 91, -144}, {12, 48, -108}, {10, 106, -192}, {19, 67, -96},
    {10, 178, -336}, {23, 143, -240}};

// Surface systems whose threefolds carry a K3 fibration, with the recorded
// fiber of that fibration.
struct K3FiberedBase {
  std::vector<i64> w;
  std::vector<i64> fiber;
};
const std::vector<K3FiberedBase> kK3Bases = {
    {{3, 1, 1, 1}, {1, 1, 1, 3}},    {{4, 1, 1, 2}, {1, 1, 2, 4}},
    {{6, 1, 1, 4}, {1, 1, 4, 6}},    {{6, 1, 2, 3}, {1, 2, 3, 6}},
    {{8, 1, 1, 6}, {1, 3, 4, 4}},    {{8, 1, 3, 4}, {1, 1, 4, 6}},
    {{8, 2, 3, 3}, {1, 3, 8, 12}},   {{9, 1, 2, 6}, {1, 2, 6, 9}},
    {{9, 2, 3, 4}, {1, 2, 3, 6}},    {{10, 1, 1, 8}, {1, 4, 5, 10}},
    {{10, 3, 3, 4}, {2, 3, 10, 15}}, {{12, 1, 2, 9}, {1, 3, 4, 4}},
    {{14, 1, 1, 12}, {1, 6, 14, 21}}};
// Base x curve products whose image duplicates a row of another table and is
// therefore not listed again: (8,1,3,4) and (8,2,3,3) with the order-3 fiber.
const std::vector<std::pair<int, int>> kK3BaseSkips = {{5, 0}, {6, 0}};
const std::vector<i64> kK3BasesChi = {
    -216, -324, -540, -192, -288, -480, -312, -528, -144, -480, -360, -240,
    -624, -312, -240, -228, -408, -120, -432, -192, -168, -240, -960};

// Weight-data rows of threefolds with constant order-6 fiber and positive
// Euler characteristic; no defining equation is recorded for these.
struct LargeWeightRow {
  std::vector<i64> w;
  i64 h11, h21, chi;
};
const std::vector<LargeWeightRow> kLargeWeightRows = {
    {{581, 41, 42, 498}, 491, 11, 960}, {{498, 36, 41, 421}, 491, 11, 960},
    {{539, 36, 41, 462}, 462, 12, 900}, {{463, 31, 41, 391}, 462, 12, 900},
    {{433, 31, 36, 366}, 433, 13, 840}, {{414, 24, 41, 349}, 416, 14, 804},
    {{385, 28, 31, 326}, 387, 15, 744}, {{372, 18, 41, 313}, 377, 17, 720}};

// Curve x K3 products of the K3-fibered table, with recorded Euler
// characteristics where available ("new" rows have none).
struct CurveK3Pair {
  std::vector<i64> curve;
  const char* fiber;
  i64 chi;
  bool chi_known;
};
const std::vector<CurveK3Pair> kCurveK3Pairs = {
    {{2, 1, 1}, "Y1", -192, true},  {{2, 1, 1}, "Y4", -312, true},
    {{2, 1, 1}, "Y6", -528, true},  {{2, 1, 1}, "Y9", -960, true},
    {{3, 2, 1}, "Y1", -144, true},  {{3, 2, 1}, "Y4", -228, true},
    {{3, 2, 1}, "Y6", -408, true},  {{3, 2, 1}, "Y9", -720, true},
    {{3, 2, 1}, "Y10", 0, false},   {{4, 1, 3}, "Y1", -120, true},
    {{4, 1, 3}, "Y9", -624, true},  {{5, 1, 4}, "Y4", -168, true},
    {{5, 1, 4}, "Y6", 0, false},    {{5, 1, 4}, "Y10", 0, false},
    {{7, 1, 6}, "Y6", -720, true},  {{7, 1, 6}, "Y9", -480, true},
    {{7, 1, 6}, "Y10", -384, true}, {{5, 2, 3}, "Y1", -72, true},
    {{5, 2, 3}, "Y6", -216, true},  {{5, 2, 3}, "Y9", -384, true}};

// Model x0^l + f for the curve system (w0, tail), of degree l*w0, with the
// distinguished coordinate kept in front.  f is diagonal when the tail
// weights allow, else a two-term chain on the tail; the chain orientation is
// forced by divisibility.  Curves that admit neither shape get no model.
std::optional<Hypersurface> power_curve_model(const std::vector<i64>& w,
                                              i64 ell) {
  i64 d = ell * w[0];
  if (std::all_of(w.begin() + 1, w.end(), [&](i64 wi) { return d % wi == 0; }))
    return make_diagonal(Weight{w}, d);
  if (w.size() == 3) {
    for (int head : {1, 2}) {
      int link = 3 - head;
      if ((d - w[link]) % w[head] == 0 && d % w[link] == 0)
        return make_quasi_diagonal(Weight{{w[head], w[link], w[0]}}, d,
                                   {(d - w[link]) / w[head], d / w[link], ell});
    }
  }
  return std::nullopt;
}

Weight sorted_weight(std::vector<i64> entries) {
  std::sort(entries.begin(), entries.end());
  return Weight{std::move(entries)};
}

// Image weights without a defining equation: each factor's non-distinguished
// weights scaled by the other factor's distinguished one.
Weight image_by_weights(const std::vector<i64>& a, const std::vector<i64>& b) {
  std::vector<i64> entries;
  for (std::size_t i = 1; i < a.size(); ++i) entries.push_back(a[i] * b[0]);
  for (std::size_t i = 1; i < b.size(); ++i) entries.push_back(b[i] * a[0]);
  return sorted_weight(std::move(entries));
}

TableRow composed_row(int table, int row, const std::vector<i64>& base,
                      const Hypersurface& factor, const std::string& fiber,
                      const Hypersurface& cofactor, i64 ell) {
  auto [image, data] = twist_compose(factor, cofactor, ell);
  TableRow r;
  r.table = table;
  r.row = row;
  r.base = Weight{base};
  r.fiber = fiber;
  r.ell = ell;
  r.image = sorted_weight(data.image_weight.entries);
  r.degree = data.image_degree;
  r.model = image;
  return r;
}

}  // namespace

const std::vector<EllipticCurve>& elliptic_curves() {
  static const std::vector<EllipticCurve> curves = {
      {"E1", make_diagonal(Weight{{1, 1, 1}}, 3), 3},
      {"E2", make_diagonal(Weight{{1, 1, 2}}, 4), 4},
      {"E3", make_diagonal(Weight{{1, 2, 3}}, 6), 6}};
  return curves;
}

const std::vector<K3Fiber>& k3_fibers() {
  static const std::vector<K3Fiber> fibers = {
      {"Y1", 1, make_diagonal(Weight{{1, 1, 2, 2}}, 6), 6},
      {"Y4", 4, make_diagonal(Weight{{1, 2, 3, 6}}, 12), 12},
      {"Y6", 6, make_diagonal(Weight{{1, 2, 6, 9}}, 18), 18},
      {"Y9", 9, make_diagonal(Weight{{1, 6, 14, 21}}, 42), 42},
      {"Y10", 10, make_diagonal(Weight{{2, 3, 10, 15}}, 15 * 2), 15},
      {"Y11", 11,
       make_quasi_diagonal(Weight{{5, 6, 22, 33}}, 66, {12, 11, 3, 2}), 12}};
  return fibers;
}

std::vector<TableRow> enumerate_tables() {
  std::vector<TableRow> rows;
  const auto& Es = elliptic_curves();

  // Fiber curves.
  for (int i = 0; i < 3; ++i) {
    TableRow r;
    r.table = 1;
    r.row = i + 1;
    r.fiber = Es[i].name;
    r.ell = Es[i].ell;
    r.image = Es[i].model.weight;
    r.degree = Es[i].model.degree;
    r.model = Es[i].model;
    rows.push_back(std::move(r));
  }

  // K3 quotients of curve x elliptic-curve products.  A system enters with
  // the fibers whose order gives the tail weights a diagonal model; the
  // chained system (11,5,6) only pairs with the order-6 fiber.
  int row = 1;
  for (const auto& w : kK3CurveSystems) {
    for (const auto& E : Es) {
      i64 d = E.ell * w[0];
      if (d % w[1] || d % w[2]) continue;
      if (std::gcd(w[0], E.model.weight.entries[0]) != 1) continue;
      auto curve = make_diagonal(Weight{w}, d);
      auto r = composed_row(2, row++, w, curve, E.name, E.model, E.ell);
      r.genus = curve_genus(curve);
      rows.push_back(std::move(r));
    }
  }
  {
    auto curve = *power_curve_model({11, 5, 6}, 6);
    auto r = composed_row(2, row, {11, 5, 6}, curve, "E3", Es[2].model, 6);
    r.genus = curve_genus(curve);
    rows.push_back(std::move(r));
  }

  // Elliptically but not K3-fibered threefolds.
  row = 1;
  for (const auto& w : kNonK3Bases) {
    for (const auto& E : Es) {
      i64 d = E.ell * w[0];
      if (d % w[1] || d % w[2] || d % w[3]) continue;
      auto r = composed_row(3, row, w, make_diagonal(Weight{w}, d), E.name,
                            E.model, E.ell);
      r.h11 = kNonK3Hodge[row - 1].h11;
      r.h21 = kNonK3Hodge[row - 1].h21;
      r.chi = kNonK3Hodge[row - 1].chi;
      r.chi_known = true;
      rows.push_back(std::move(r));
      ++row;
    }
  }

  // Elliptically and K3 fibered threefolds.
  row = 1;
  for (std::size_t b = 0; b < kK3Bases.size(); ++b) {
    const auto& w = kK3Bases[b].w;
    for (int e = 0; e < 3; ++e) {
      const auto& E = Es[e];
      i64 d = E.ell * w[0];
      if (d % w[1] || d % w[2] || d % w[3]) continue;
      if (std::count(kK3BaseSkips.begin(), kK3BaseSkips.end(),
                     std::make_pair(static_cast<int>(b), e)))
        continue;
      auto r = composed_row(4, row, w, make_diagonal(Weight{w}, d), E.name,
                            E.model, E.ell);
      r.chi = kK3BasesChi[row - 1];
      r.chi_known = true;
      r.k3_fiber = Weight{kK3Bases[b].fiber};
      rows.push_back(std::move(r));
      ++row;
    }
  }

  // Weight-data rows: image (w1, w2, w3, 2*w0, 3*w0) of degree 6*w0.
  row = 24;
  for (const auto& entry : kLargeWeightRows) {
    const auto& w = entry.w;
    TableRow r;
    r.table = 5;
    r.row = row++;
    r.base = Weight{w};
    r.fiber = "E3";
    r.ell = 6;
    r.image = sorted_weight({w[1], w[2], w[3], 2 * w[0], 3 * w[0]});
    r.degree = 6 * w[0];
    require(r.image.sum() == r.degree, ErrorCode::BadInput,
            "weight-data row fails the Calabi-Yau identity");
    r.h11 = entry.h11;
    r.h21 = entry.h21;
    r.chi = entry.chi;
    r.chi_known = true;
    rows.push_back(std::move(r));
  }

  // K3-fibered threefolds from curve x K3 products.
  row = 1;
  for (const auto& pair : kCurveK3Pairs) {
    const auto& fibers = k3_fibers();
    const auto& Y = *std::find_if(fibers.begin(), fibers.end(), [&](auto& f) {
      return f.name == pair.fiber;
    });
    require(std::gcd(pair.curve[0], Y.model.weight.entries[0]) == 1,
            ErrorCode::GcdObstruction, "product weights share a divisor");
    TableRow r;
    if (auto curve = power_curve_model(pair.curve, Y.ell)) {
      r = composed_row(6, row, pair.curve, *curve, Y.name, Y.model, Y.ell);
    } else {
      r.table = 6;
      r.row = row;
      r.base = Weight{pair.curve};
      r.fiber = Y.name;
      r.ell = Y.ell;
      r.image = image_by_weights(pair.curve, Y.model.weight.entries);
      r.degree = Y.ell * Y.model.weight.entries[0] * pair.curve[0];
      require(r.image.sum() == r.degree, ErrorCode::BadInput,
              "weight-data row fails the Calabi-Yau identity");
    }
    r.chi = pair.chi;
    r.chi_known = pair.chi_known;
    if (!pair.chi_known) r.remark = "new";
    rows.push_back(std::move(r));
    ++row;
  }

  return rows;
}

}  // namespace wpcy
