#include "wpcy/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>

#include "wpcy/cyclotomic.hpp"
#include "wpcy/intmath.hpp"
#include "wpcy/jacobi.hpp"

namespace wpcy {

namespace {

i64 to_i64(const Int& v) {
  require(v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max(),
          ErrorCode::BoundExceeded, "count does not fit a 64-bit integer");
  return static_cast<i64>(v);
}

struct Term {
  std::vector<i64> expo;
  uint32_t coeff = 1;
};

// Exhaustive scan of the affine cone.  One coordinate that appears in exactly
// one single-variable term can be "bucketed": instead of looping over its
// values, the number of values completing each partial sum to zero is read
// from a histogram, shaving a factor of q off the scan.
class ConeScan {
 public:
  ConeScan(const FiniteField& E, std::vector<Term> terms, int ncoords)
      : E_(E), terms_(std::move(terms)), nc_(ncoords) {
    const i64 Q = E_.q();
    tab_.resize(terms_.size());
    for (size_t t = 0; t < terms_.size(); ++t) {
      tab_[t].resize(nc_);
      for (int i = 0; i < nc_; ++i) {
        i64 e = terms_[t].expo[i];
        if (e == 0) continue;
        tab_[t][i].resize(Q);
        for (i64 v = 0; v < Q; ++v)
          tab_[t][i][v] = E_.pow(static_cast<uint32_t>(v), e);
      }
    }
    pick_bucket();
    order_.clear();
    for (int i = 0; i < nc_; ++i)
      if (i != bucket_coord_) order_.push_back(i);
    if (bucket_coord_ >= 0) {
      bucket_hist_.assign(Q, 0);
      const Term& bt = terms_[bucket_term_];
      for (i64 v = 0; v < Q; ++v) {
        uint32_t val = E_.mul(bt.coeff, tab_[bucket_term_][bucket_coord_][v]);
        ++bucket_hist_[val];
      }
    }
  }

  i64 run(int threads) const {
    const i64 Q = E_.q();
    if (order_.empty())  // single bucketed coordinate: the cone is one loop
      return bucket_hist_[0];
    i64 top = Q;
    threads = std::clamp<i64>(threads, 1, top);
    if (threads == 1) return chunk(0, top);
    std::vector<i64> part(threads, 0);
    std::vector<std::thread> pool;
    for (i64 w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        i64 lo = top * w / threads, hi = top * (w + 1) / threads;
        part[w] = chunk(lo, hi);
      });
    for (auto& th : pool) th.join();
    i64 total = 0;
    for (i64 v : part) total += v;
    return total;
  }

 private:
  void pick_bucket() {
    for (int i = nc_ - 1; i >= 0; --i) {
      int holder = -1;
      bool sole = true;
      for (size_t t = 0; t < terms_.size() && sole; ++t) {
        if (terms_[t].expo[i] == 0) continue;
        if (holder >= 0) sole = false;
        holder = static_cast<int>(t);
      }
      if (!sole || holder < 0) continue;
      bool pure = true;
      for (int j = 0; j < nc_ && pure; ++j)
        if (j != i && terms_[holder].expo[j] != 0) pure = false;
      if (!pure) continue;
      bucket_coord_ = i;
      bucket_term_ = holder;
      return;
    }
  }

  i64 chunk(i64 lo, i64 hi) const {
    const size_t nt = terms_.size();
    std::vector<std::vector<uint32_t>> cur(order_.size() + 1,
                                           std::vector<uint32_t>(nt));
    for (size_t t = 0; t < nt; ++t) cur[0][t] = terms_[t].coeff;
    i64 count = 0;
    scan(0, lo, hi, cur, count);
    return count;
  }

  void scan(size_t depth, i64 lo, i64 hi,
            std::vector<std::vector<uint32_t>>& cur, i64& count) const {
    const i64 Q = E_.q();
    const size_t nt = terms_.size();
    const int coord = order_[depth];
    const bool leaf = depth + 1 == order_.size();
    for (i64 v = lo; v < hi; ++v) {
      for (size_t t = 0; t < nt; ++t) {
        const auto& tv = tab_[t][coord];
        cur[depth + 1][t] =
            tv.empty() ? cur[depth][t]
                       : E_.mul(cur[depth][t], tv[v]);
      }
      if (!leaf) {
        scan(depth + 1, 0, Q, cur, count);
        continue;
      }
      uint32_t s = 0;
      if (bucket_coord_ >= 0) {
        for (size_t t = 0; t < nt; ++t)
          if (static_cast<int>(t) != bucket_term_) s = E_.add(s, cur[depth + 1][t]);
        count += bucket_hist_[E_.neg(s)];
      } else {
        for (size_t t = 0; t < nt; ++t) s = E_.add(s, cur[depth + 1][t]);
        if (s == 0) ++count;
      }
    }
  }

  const FiniteField& E_;
  std::vector<Term> terms_;
  int nc_;
  std::vector<std::vector<std::vector<uint32_t>>> tab_;  // [term][coord][value]
  std::vector<int> order_;
  int bucket_coord_ = -1, bucket_term_ = -1;
  std::vector<i64> bucket_hist_;
};

}  // namespace

i64 count_bound() {
  const char* s = std::getenv("WPCY_COUNT_BOUND");
  if (s == nullptr || *s == '\0') return 1'000'000'000;
  char* end = nullptr;
  i64 v = std::strtoll(s, &end, 10);
  require(end != s && *end == '\0' && v > 0, ErrorCode::BadInput,
          "WPCY_COUNT_BOUND must be a positive integer");
  return v;
}

i64 count_points(const Hypersurface& h, const FiniteField& F, int nu,
                 const ParamMap& params, int threads) {
  const int nc = h.weight.size();
  require(nc >= 2, ErrorCode::BadInput, "need at least two coordinates");
  require(nu >= 1, ErrorCode::BadInput, "extension degree must be positive");
  const i64 bound = count_bound();
  Int Qbig = boost::multiprecision::pow(Int(F.q()), static_cast<unsigned>(nu));
  Int cost = boost::multiprecision::pow(Qbig, static_cast<unsigned>(nc));
  require(cost <= bound, ErrorCode::BoundExceeded,
          "affine cone larger than the configured counting bound");
  const i64 Q = to_i64(Qbig);

  if (h.degree == 0)  // the whole weighted space
    return to_i64((cost - 1) / (Q - 1));

  FiniteField E(F.p(), F.k() * nu);
  std::vector<Term> terms;
  for (const auto& mono : base_monomials(h)) terms.push_back({mono, E.one()});
  for (const auto& def : h.deformation) {
    auto it = params.find(def.param);
    require(it != params.end(), ErrorCode::BadInput,
            "no value bound to parameter " + def.param);
    uint32_t c = E.from_int(it->second);
    if (c != 0) terms.push_back({def.monomial, c});
  }
  i64 cone = ConeScan(E, std::move(terms), nc).run(threads);
  require((cone - 1) % (Q - 1) == 0, ErrorCode::ValidationFailure,
          "cone count is not of the form 1 + (q-1)N");
  return (cone - 1) / (Q - 1);
}

i64 count_affine_diagonal(const std::vector<i64>& b, const std::vector<i64>& m,
                          const FiniteField& F) {
  const int r = static_cast<int>(m.size());
  require(r >= 1, ErrorCode::BadInput, "need at least one power term");
  require(b.size() == m.size() + 1, ErrorCode::BadInput,
          "need one more coefficient than exponents");
  const i64 q = F.q();
  for (i64 bi : b)
    require(bi > 0 && bi < q, ErrorCode::BadInput,
            "coefficients are nonzero field element codes");
  for (i64 mi : m) require(mi >= 1, ErrorCode::BadInput, "exponents must be positive");
  const i64 M = lcm_all(m);
  require((q - 1) % M == 0, ErrorCode::Undefined,
          "character description needs q = 1 (mod lcm of the exponents)");
  const Character chi = character_of_order(F, M);

  CycInt total(M);
  std::vector<i64> c(r, 1);  // a_i = (M/m_i) * c_i, c_i in 1..m_i-1
  const uint32_t target = F.neg(F.one());
  while (true) {
    std::vector<i64> a(r);
    i64 sum = 0;
    for (int i = 0; i < r; ++i) {
      a[i] = (M / m[i]) * c[i];
      sum += a[i];
    }
    const i64 a0 = mod_norm(-sum, M);
    CycInt j = character_sum(F, M, a, target);
    uint32_t x = F.pow(static_cast<uint32_t>(b[0]), a0);
    for (int i = 0; i < r; ++i)
      x = F.mul(x, F.pow(static_cast<uint32_t>(b[i + 1]), a[i]));
    total += CycInt::root_power(M, mod_norm(-chi.exponent(x), M)) * j;

    int i = r - 1;
    while (i >= 0 && ++c[i] == m[i]) c[i--] = 1;
    if (i < 0) break;
  }
  require(total.is_integer(), ErrorCode::ValidationFailure,
          "weighted character sums do not add up to a rational integer");
  return to_i64(boost::multiprecision::pow(Int(q), static_cast<unsigned>(r - 1)) +
                total.as_integer());
}

Hypersurface reduce_degree(const Hypersurface& h, const FiniteField& F) {
  require(h.kind == HKind::Diagonal, ErrorCode::Unsupported,
          "exponent reduction applies to diagonal forms");
  require(h.degree % F.p() != 0, ErrorCode::Undefined,
          "needs the characteristic prime to the degree");
  std::vector<i64> g(h.exponents.size());
  for (size_t i = 0; i < g.size(); ++i) g[i] = std::gcd(h.exponents[i], F.q() - 1);
  const i64 d = lcm_all(g);
  Weight w;
  for (i64 gi : g) w.entries.push_back(d / gi);
  return make_diagonal(w, d);
}

}  // namespace wpcy
