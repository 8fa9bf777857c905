#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "specbound/bounds.hpp"
#include "specbound/graph.hpp"
#include "specbound/graph_io.hpp"

namespace specbound {

/// One worker's slice of the edge-bitmask space for order n; slices across
/// workers partition [0, 2^C(n,2)).
struct EnumerationTask {
  int n = 0;
  std::uint64_t mask_lo = 0;
  std::uint64_t mask_hi = 0;  // exclusive
  bool connected_only = true;
};

namespace detail {

constexpr int kEnumMinOrder = 3;
constexpr int kEnumMaxOrder = 8;

inline void check_enum_order(int n) {
  if (n < kEnumMinOrder || n > kEnumMaxOrder)
    throw std::invalid_argument("enumeration order must be in [3, 8]");
}

// Pair (i, j), i < j, at lexicographic index b; the edge-bit layout of the
// mask space.
inline std::pair<int, int> pair_at(int n, int b) {
  int i = 0, row = n - 1;
  while (b >= row) {
    b -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + b};
}

// Rebuild adjacency words for one mask; returns false if disconnected.
inline bool decode_connected(int n, std::uint64_t mask, const std::pair<int, int>* pairs,
                             int npairs, std::uint64_t* adj) {
  for (int i = 0; i < n; ++i) adj[i] = 0;
  for (int b = 0; b < npairs; ++b)
    if ((mask >> b) & 1u) {
      adj[pairs[b].first] |= std::uint64_t{1} << pairs[b].second;
      adj[pairs[b].second] |= std::uint64_t{1} << pairs[b].first;
    }
  std::uint64_t seen = 1, frontier = 1;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1u) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
    if (seen == all) return true;
  }
  return seen == all;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  const int npairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int b = 0; b < npairs; ++b)
    if ((mask >> b) & 1u) edges.push_back(pair_at(n, b));
  return Graph::from_edges(n, edges);
}

}  // namespace detail

inline std::vector<EnumerationTask> partition_masks(int n, int workers) {
  detail::check_enum_order(n);
  if (workers < 1) workers = 1;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  std::vector<EnumerationTask> tasks;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t lo = 0; lo < total; lo += chunk)
    tasks.push_back({n, lo, std::min(lo + chunk, total), true});
  return tasks;
}

// Every labeled simple connected graph on t.n vertices whose edge mask lies
// in [mask_lo, mask_hi), in ascending mask order.
template <typename Fn>
void enumerate_connected(const EnumerationTask& t, Fn&& fn) {
  detail::check_enum_order(t.n);
  const int npairs = t.n * (t.n - 1) / 2;
  std::pair<int, int> pairs[28];
  for (int b = 0; b < npairs; ++b) pairs[b] = detail::pair_at(t.n, b);
  std::uint64_t adj[8];
  for (std::uint64_t mask = t.mask_lo; mask < t.mask_hi; ++mask) {
    if (t.connected_only && !detail::decode_connected(t.n, mask, pairs, npairs, adj)) continue;
    fn(detail::graph_from_mask(t.n, mask), mask);
  }
}

template <typename Fn>
void enumerate_connected(int n, Fn&& fn) {
  detail::check_enum_order(n);
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  enumerate_connected(EnumerationTask{n, 0, total, true}, std::forward<Fn>(fn));
}

struct EqualityWitness {
  int n = 0;
  std::uint64_t mask = 0;
  std::string graph6;
  EqualityClass tag = EqualityClass::Other;
};

/// Aggregate of one sweep: counts plus the (expected-empty) violation list
/// and the classified equality witnesses.
struct SweepResult {
  std::uint64_t checked = 0;
  std::uint64_t suspicious = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> violations;
  std::vector<EqualityWitness> equalities;
  std::vector<std::pair<std::string, double>> margins;
  std::map<std::string, std::uint64_t> per_kind_checked;
  double runtime_seconds = 0;

  void merge(SweepResult&& o) {
    checked += o.checked;
    suspicious += o.suspicious;
    skipped += o.skipped;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    equalities.insert(equalities.end(), o.equalities.begin(), o.equalities.end());
    margins.insert(margins.end(), o.margins.begin(), o.margins.end());
    for (auto& [k, v] : o.per_kind_checked) per_kind_checked[k] += v;
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"checked", checked},
                     {"suspicious", suspicious},
                     {"skipped", skipped},
                     {"violations", violations},
                     {"runtime_seconds", runtime_seconds}};
    j["equalities"] = nlohmann::json::array();
    for (const auto& w : equalities)
      j["equalities"].push_back({{"n", w.n}, {"graph6", w.graph6}, {"class", to_string(w.tag)}});
    if (!margins.empty()) {
      j["margins"] = nlohmann::json::array();
      for (const auto& [w, m] : margins) j["margins"].push_back({{"witness", w}, {"margin", m}});
    }
    if (!per_kind_checked.empty()) j["per_kind_checked"] = per_kind_checked;
    return j;
  }
};

namespace detail {

// Hot loop: stack-allocated matrices, no heap traffic until a witness shows
// up. Checks sum of k largest eigenvalues of L or Q against 1 + top-k degrees
// for every connected mask in the range.
inline SweepResult grone_range_sweep(const EnumerationTask& t, int k, MatrixKind kind,
                                     double tol) {
  SweepResult out;
  const int n = t.n;
  const int npairs = n * (n - 1) / 2;
  std::pair<int, int> pairs[28];
  for (int b = 0; b < npairs; ++b) pairs[b] = pair_at(n, b);
  std::uint64_t adj[8];
  double a[64], ev[8];
  int deg[8];
  const bool use_q = kind == MatrixKind::SignlessLaplacian;
  for (std::uint64_t mask = t.mask_lo; mask < t.mask_hi; ++mask) {
    if (!decode_connected(n, mask, pairs, npairs, adj)) continue;
    ++out.checked;
    for (int i = 0; i < n; ++i) deg[i] = std::popcount(adj[i]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const bool e = (adj[i] >> j) & 1u;
        a[i * n + j] = i == j ? deg[i] : (e ? (use_q ? 1.0 : -1.0) : 0.0);
      }
    jacobi_inplace(a, n);
    for (int i = 0; i < n; ++i) ev[i] = a[i * n + i];
    std::sort(ev, ev + n, std::greater<>());
    std::sort(deg, deg + n, std::greater<>());
    double lhs = 0;
    long long dsum = 0;
    for (int i = 0; i < k; ++i) {
      lhs += ev[i];
      dsum += deg[i];
    }
    const double rhs = 1.0 + static_cast<double>(dsum);
    const double d = lhs - rhs;
    if (d < -tol) {
      out.violations.push_back(to_graph6(graph_from_mask(n, mask)));
    } else if (std::abs(d) <= tol) {
      const Graph g = graph_from_mask(n, mask);
      out.equalities.push_back({n, mask, to_graph6(g), classify_graph_shape(g)});
    } else if (d < kSuspiciousBand) {
      ++out.suspicious;
    }
  }
  return out;
}

}  // namespace detail

// Runs check_grone_sum over every labeled connected graph with 3 <= n <=
// n_max, partitioned across workers by contiguous mask ranges. Witness lists
// come back sorted by (n, mask), so any partitioning yields the same result.
inline SweepResult verify_theorem_exhaustive(int n_max, int k, MatrixKind kind, int workers = 0,
                                             std::ostream* progress = nullptr,
                                             double tol = kEqualityTol) {
  if (n_max < detail::kEnumMinOrder || n_max > detail::kEnumMaxOrder)
    throw std::invalid_argument("verify_theorem_exhaustive: n_max must be in [3, 8]");
  if (kind == MatrixKind::Adjacency)
    throw std::invalid_argument("verify_theorem_exhaustive: matrix kind must be L or Q");
  if (k < 1 || k > n_max)
    throw std::invalid_argument("verify_theorem_exhaustive: k must be in [1, n_max]");
  if (workers < 1) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult total;
  // orders below k cannot host a k-sum; start at the first order that can
  for (int n = std::max(detail::kEnumMinOrder, k); n <= n_max; ++n) {
    const auto tasks = partition_masks(n, workers);
    std::vector<SweepResult> parts(tasks.size());
    std::vector<std::thread> pool;
    pool.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i)
      pool.emplace_back([&, i] { parts[i] = detail::grone_range_sweep(tasks[i], k, kind, tol); });
    for (auto& th : pool) th.join();
    SweepResult level;
    for (auto& p : parts) level.merge(std::move(p));
    if (progress)
      (*progress) << "n=" << n << " checked=" << level.checked
                  << " violations=" << level.violations.size()
                  << " equalities=" << level.equalities.size() << '\n';
    total.merge(std::move(level));
  }
  std::sort(total.equalities.begin(), total.equalities.end(),
            [](const EqualityWitness& a, const EqualityWitness& b) {
              return a.n != b.n ? a.n < b.n : a.mask < b.mask;
            });
  total.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return total;
}

// For each n, the star-plus-one-edge graph must satisfy
// sum_{i<=k} q_i < 1 + sum_{i<=k} d_i = n+k+1; margins are recorded.
inline SweepResult counterexample_snplus(int k, int n_lo, int n_hi, double tol = kEqualityTol) {
  if (k < 3) throw std::invalid_argument("counterexample_snplus: needs k >= 3");
  if (n_lo > n_hi) throw std::invalid_argument("counterexample_snplus: empty n range");
  if (n_lo < 5 || n_lo < k + 1)
    throw hypothesis_error("counterexample_snplus: each n must be >= max(5, k+1)");
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const Graph g = make_star_plus_edge(n);
    const Spectrum sp = spectrum(signless_laplacian(g));
    const double lhs = kyfan_sum(sp, k);
    const long long rhs = n + k + 1;
    if (1 + degree_sequence(g).top_sum(k) != rhs)
      throw std::logic_error("counterexample_snplus: degree-sum formula cross-check failed");
    const double margin = static_cast<double>(rhs) - lhs;
    const std::string witness = "S_" + std::to_string(n) + "+ k=" + std::to_string(k);
    out.margins.emplace_back(witness, margin);
    ++out.checked;
    if (margin <= tol) out.violations.push_back(witness);
  }
  out.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

struct ParamRange {
  int lo = 0;
  int hi = 0;  // inclusive
};

// verify_proposition over the Cartesian product of the ranges, restricted to
// each proposition's hypothesis; triples outside every hypothesis count as
// skipped.
inline SweepResult sweep_families(ParamRange pr, ParamRange rr, ParamRange sr,
                                  const std::set<PropositionId>& props,
                                  double tol = kEqualityTol) {
  if (pr.lo > pr.hi || rr.lo > rr.hi || sr.lo > sr.hi)
    throw std::invalid_argument("sweep_families: empty parameter range");
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult out;
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int r = rr.lo; r <= rr.hi; ++r)
      for (int s = sr.lo; s <= sr.hi; ++s) {
        const FamilyParams fp{p, r, s};
        for (PropositionId id : props) {
          if (!proposition_hypothesis(id, fp)) {
            ++out.skipped;
            continue;
          }
          const BoundReport rep = verify_proposition(id, fp, tol);
          ++out.checked;
          ++out.per_kind_checked[to_string(id)];
          if (rep.suspicious) ++out.suspicious;
          if (!proposition_holds(id, fp, rep))
            out.violations.push_back(std::string(to_string(id)) + " " + fp.to_string());
        }
      }
  out.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace specbound
