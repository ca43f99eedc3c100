#include "vcfam/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>
#include <vector>

#include "vcfam/constructions.hpp"
#include "vcfam/enumerate.hpp"
#include "vcfam/errors.hpp"
#include "vcfam/exact.hpp"
#include "vcfam/family_io.hpp"
#include "vcfam/vc.hpp"

namespace vcfam {
namespace {

constexpr std::uint64_t kMaxSearchUniverse = 64;
constexpr std::uint64_t kMaxEnumerateUniverse = 24;

std::uint64_t check_universe(const Parameters& p, const OracleOptions& opts, std::uint64_t hard) {
  const BigInt size = binomial(p.n, p.s);
  if (size > opts.cap)
    throw FeasibilityError("C(" + std::to_string(p.n) + "," + std::to_string(p.s) + ") = " +
                           size.str() + " exceeds the feasibility cap " + std::to_string(opts.cap));
  if (size > hard)
    throw FeasibilityError("universe of " + size.str() + " members exceeds the supported " +
                           std::to_string(hard));
  return size.convert_to<std::uint64_t>();
}

// Shared read-only tables for one (params, d) search.
class CoverSearch {
 public:
  CoverSearch(const Parameters& p, int d, bool incremental) : p_(p), incremental_(incremental) {
    universe_ = enumerate_subsets(p.n, p.s);
    for_each_subset(p.n, p.k, [&](const SubsetMask& t) {
      std::uint64_t c = 0;
      for (std::size_t u = 0; u < universe_.size(); ++u)
        if (t.is_subset_of(universe_[u])) c |= std::uint64_t{1} << u;
      containers_.push_back(c);
      return true;
    });
    probe_size_ = d + 1;
    need_ = std::uint64_t{1} << probe_size_;
    words_ = static_cast<std::size_t>((need_ + 63) / 64);
    if (incremental_) {
      const auto probes = enumerate_subsets(p.n, probe_size_);
      num_probes_ = probes.size();
      pattern_.resize(universe_.size() * num_probes_);
      for (std::size_t u = 0; u < universe_.size(); ++u)
        for (std::size_t q = 0; q < num_probes_; ++q) {
          const auto elems = probes[q].elements();
          std::uint32_t idx = 0;
          for (std::size_t i = 0; i < elems.size(); ++i)
            idx |= std::uint32_t{universe_[u].contains(elems[i])} << i;
          pattern_[u * num_probes_ + q] = idx;
        }
    }
  }

  struct State {
    std::uint64_t chosen = 0;
    std::uint64_t forbidden = 0;
    std::vector<std::uint64_t> seen;    // num_probes * words bits of observed patterns
    std::vector<std::uint32_t> counts;  // distinct patterns per probe
  };

  State root() const {
    State s;
    s.seen.assign(num_probes_ * words_, 0);
    s.counts.assign(num_probes_, 0);
    return s;
  }

  // Adds member u; false if the partial family now shatters a (d+1)-set.
  bool add(State& s, int u) const {
    s.chosen |= std::uint64_t{1} << u;
    if (!incremental_) return !find_shattered_set(family_of(s.chosen), probe_size_);
    bool ok = true;
    const std::uint32_t* row = &pattern_[static_cast<std::size_t>(u) * num_probes_];
    for (std::size_t q = 0; q < num_probes_; ++q) {
      const std::uint32_t idx = row[q];
      auto& w = s.seen[q * words_ + idx / 64];
      const auto bit = std::uint64_t{1} << (idx % 64);
      if (!(w & bit)) {
        w |= bit;
        if (++s.counts[q] == need_) ok = false;
      }
    }
    return ok;
  }

  // Smallest uncovered k-set index; -1 if all covered, -2 if some uncovered
  // k-set has no member left to cover it.
  int pick(const State& s) const {
    int first = -1;
    for (std::size_t t = 0; t < containers_.size(); ++t) {
      if (containers_[t] & s.chosen) continue;
      if (!(containers_[t] & ~s.forbidden)) return -2;
      if (first < 0) first = static_cast<int>(t);
    }
    return first;
  }

  std::uint64_t candidates(const State& s, int t) const { return containers_[t] & ~s.forbidden; }

  SetFamily family_of(std::uint64_t chosen) const {
    std::vector<SubsetMask> members;
    for (auto c = chosen; c; c &= c - 1) members.push_back(universe_[std::countr_zero(c)]);
    return SetFamily::from_masks(p_.n, std::move(members));
  }

  // Returns the chosen mask of the first witness in this subtree.
  std::optional<std::uint64_t> dfs(State& s, std::uint64_t& nodes,
                                   const std::atomic<bool>* stop) const {
    ++nodes;
    if (stop && stop->load(std::memory_order_relaxed)) return std::nullopt;
    const int t = pick(s);
    if (t == -1) return s.chosen;
    if (t == -2) return std::nullopt;
    std::uint64_t earlier = 0;
    for (auto c = candidates(s, t); c; c &= c - 1) {
      const int u = std::countr_zero(c);
      State child = s;
      child.forbidden |= earlier;
      earlier |= std::uint64_t{1} << u;
      if (!add(child, u)) {
        ++nodes;
        continue;
      }
      if (auto hit = dfs(child, nodes, stop)) return hit;
    }
    return std::nullopt;
  }

  const Parameters& params() const { return p_; }

 private:
  Parameters p_;
  bool incremental_;
  std::vector<SubsetMask> universe_;
  std::vector<std::uint64_t> containers_;
  int probe_size_ = 0;
  std::uint64_t need_ = 0;
  std::size_t words_ = 1;
  std::size_t num_probes_ = 0;
  std::vector<std::uint32_t> pattern_;
};

}  // namespace

SearchOutcome search_covering_with_vc_at_most(const Parameters& p, int d, const OracleOptions& opts) {
  check_universe(p, opts, kMaxSearchUniverse);
  if (d < 0 || d > std::min(p.s, p.n - p.s))
    throw DomainError("d must satisfy 0 <= d <= min(s, n - s)");
  if (opts.workers < 1) throw DomainError("worker count must be at least 1");
  if (d + 1 > 31) throw DomainError("d too large for the trace tables");

  const CoverSearch search(p, d, opts.incremental);
  SearchOutcome out;
  out.nodes = 1;  // root
  const auto root = search.root();
  const int t = search.pick(root);
  if (t == -1) {
    out.family = search.family_of(root.chosen);
    return out;
  }
  if (t == -2) return out;

  // Top-level branches: branch i takes member u_i and forbids u_0..u_{i-1}.
  struct Branch {
    CoverSearch::State state;
    bool viable = false;
    std::uint64_t nodes = 0;
    std::optional<std::uint64_t> hit;
  };
  std::vector<Branch> branches;
  std::uint64_t earlier = 0;
  for (auto c = search.candidates(root, t); c; c &= c - 1) {
    const int u = std::countr_zero(c);
    Branch b{root, false, 0, std::nullopt};
    b.state.forbidden |= earlier;
    earlier |= std::uint64_t{1} << u;
    b.viable = search.add(b.state, u);
    branches.push_back(std::move(b));
  }

  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  auto run_branch = [&](std::size_t i, const std::atomic<bool>* stop) {
    auto& b = branches[i];
    if (!b.viable) {
      b.nodes = 1;
      return;
    }
    b.hit = search.dfs(b.state, b.nodes, stop);
    if (b.hit) {
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  };

  if (opts.workers == 1) {
    for (std::size_t i = 0; i < branches.size(); ++i) {
      run_branch(i, nullptr);
      if (branches[i].hit) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    // One stop flag per branch, raised once a lower branch has succeeded.
    std::vector<std::atomic<bool>> stops(branches.size());
    for (auto& s : stops) s.store(false);
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branches.size() || i > best.load()) return;
        run_branch(i, &stops[i]);
        if (branches[i].hit)
          for (std::size_t j = i + 1; j < branches.size(); ++j) stops[j].store(true);
      }
    };
    std::vector<std::thread> threads;
    const int n_threads = std::min<int>(opts.workers, static_cast<int>(branches.size()));
    for (int w = 0; w < n_threads; ++w) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  const std::size_t winner = best.load();
  const std::size_t last = winner == std::numeric_limits<std::size_t>::max() ? branches.size() - 1 : winner;
  for (std::size_t i = 0; i <= last && i < branches.size(); ++i) out.nodes += branches[i].nodes;
  if (winner != std::numeric_limits<std::size_t>::max())
    out.family = search.family_of(*branches[winner].hit);
  return out;
}

std::optional<SetFamily> exists_covering_with_vc_at_most(const Parameters& p, int d,
                                                         const OracleOptions& opts) {
  return search_covering_with_vc_at_most(p, d, opts).family;
}

OracleResult oracle_D(const Parameters& p, const OracleOptions& opts) {
  check_universe(p, opts, kMaxSearchUniverse);
  OracleResult r{p, 0, {}, 0, "branch-and-bound"};
  const int top = std::min(p.s, p.n - p.s);
  for (int d = 0; d <= top; ++d) {
    auto outcome = search_covering_with_vc_at_most(p, d, opts);
    r.nodes_explored += outcome.nodes;
    if (outcome.family) {
      r.value = d;
      r.witness = std::move(*outcome.family);
      return r;
    }
  }
  // Unreachable: the full s-uniform family is a witness at d = min(s, n - s).
  throw std::logic_error("oracle scan exhausted without a witness");
}

OracleResult oracle_D_enumerate(const Parameters& p, const OracleOptions& opts) {
  const auto size = check_universe(p, opts, kMaxEnumerateUniverse);
  const auto universe = enumerate_subsets(p.n, p.s);
  std::vector<std::uint32_t> containers;
  for_each_subset(p.n, p.k, [&](const SubsetMask& t) {
    std::uint32_t c = 0;
    for (std::size_t u = 0; u < universe.size(); ++u)
      if (t.is_subset_of(universe[u])) c |= std::uint32_t{1} << u;
    containers.push_back(c);
    return true;
  });

  OracleResult r{p, std::numeric_limits<int>::max(), {}, 0, "exhaustive"};
  std::uint32_t best_mask = 0;
  const std::uint32_t end = size == 32 ? 0 : (std::uint32_t{1} << size);
  for (std::uint32_t mask = 1; mask != end; ++mask) {
    ++r.nodes_explored;
    if (!std::all_of(containers.begin(), containers.end(),
                     [mask](std::uint32_t c) { return (c & mask) != 0; }))
      continue;
    std::vector<SubsetMask> members;
    for (auto c = mask; c; c &= c - 1) members.push_back(universe[std::countr_zero(c)]);
    const int vc = vc_dimension(SetFamily::from_masks(p.n, std::move(members))).dimension;
    if (vc < r.value) {
      r.value = vc;
      best_mask = mask;
    }
  }
  std::vector<SubsetMask> members;
  for (auto c = best_mask; c; c &= c - 1) members.push_back(universe[std::countr_zero(c)]);
  r.witness = SetFamily::from_masks(p.n, std::move(members));
  return r;
}

nlohmann::json to_json(const OracleResult& r) {
  return {{"k", r.params.k},
          {"s", r.params.s},
          {"n", r.params.n},
          {"value", r.value},
          {"method", r.method},
          {"nodes_explored", r.nodes_explored},
          {"witness", family_to_json(r.witness)}};
}

}  // namespace vcfam
