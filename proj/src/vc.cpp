#include "vcfam/vc.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <thread>

#include "vcfam/enumerate.hpp"
#include "vcfam/errors.hpp"

namespace vcfam {
namespace {

void require_nonempty(const SetFamily& f) {
  if (f.empty()) throw DomainError("VC-dimension is undefined for empty family");
}

void require_within(const SetFamily& f, const SubsetMask& probe) {
  if (probe.max_element() > f.ground_size())
    throw DomainError("probe " + probe.to_string() + " not within [" +
                      std::to_string(f.ground_size()) + "]");
}

// Counts distinct trace patterns of `elems` over the members, stopping as soon
// as all 2^|elems| patterns have appeared or can no longer appear.
class PatternCounter {
 public:
  bool shattered(std::span<const SubsetMask> members, std::span<const int> elems) {
    const std::size_t d = elems.size();
    if (d >= 63 || (std::uint64_t{1} << d) > members.size()) return false;
    const std::uint64_t need = std::uint64_t{1} << d;
    seen_.assign((need + 63) / 64, 0);
    std::uint64_t count = 0;
    std::size_t remaining = members.size();
    for (const auto& s : members) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < d; ++i) idx |= std::uint64_t{s.contains(elems[i])} << i;
      auto& w = seen_[idx / 64];
      const auto bit = std::uint64_t{1} << (idx % 64);
      if (!(w & bit)) {
        w |= bit;
        if (++count == need) return true;
      }
      --remaining;
      if (count + remaining < need) return false;
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> seen_;
};

// Elements that can appear in a shattered set. An element in every member or
// in no member is never shattered; elements with identical membership columns
// cannot both be in a shattered set, and the smallest of each class gives the
// canonically first shattered set, so only class representatives are kept.
std::vector<int> shatter_candidates(const SetFamily& f) {
  std::vector<int> out;
  std::map<std::vector<std::uint64_t>, int> seen_columns;
  const auto members = f.members();
  for (int e = 1; e <= f.ground_size(); ++e) {
    std::vector<std::uint64_t> column((members.size() + 63) / 64, 0);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i].contains(e)) {
        column[i / 64] |= std::uint64_t{1} << (i % 64);
        ++hits;
      }
    if (hits == 0 || hits == members.size()) continue;
    if (seen_columns.emplace(std::move(column), e).second) out.push_back(e);
  }
  return out;
}

int floor_log2(std::size_t v) { return v == 0 ? -1 : static_cast<int>(std::bit_width(v)) - 1; }

std::optional<SubsetMask> first_shattered(const SetFamily& f, const std::vector<int>& pool,
                                          int size, int workers) {
  const auto members = f.members();
  if (size > static_cast<int>(pool.size())) return std::nullopt;
  SubsetEnumerator it(f.ground_size(), pool, size);

  if (workers <= 1) {
    PatternCounter counter;
    SubsetMask probe;
    while (it.next(probe)) {
      const auto elems = probe.elements();
      if (counter.shattered(members, elems)) return probe;
    }
    return std::nullopt;
  }

  // Chunks are handed out in enumeration order; the lowest chunk holding a hit
  // wins, so the answer matches the sequential scan.
  constexpr std::size_t kChunk = 2048;
  std::mutex mu;
  std::size_t next_chunk = 0;
  bool exhausted = false;
  std::atomic<std::size_t> best_chunk{SIZE_MAX};
  std::map<std::size_t, SubsetMask> hits;

  auto worker = [&] {
    PatternCounter counter;
    std::vector<SubsetMask> batch;
    for (;;) {
      std::size_t chunk_id;
      batch.clear();
      {
        std::lock_guard lock(mu);
        if (exhausted || next_chunk > best_chunk.load()) return;
        chunk_id = next_chunk++;
        SubsetMask probe;
        while (batch.size() < kChunk && it.next(probe)) batch.push_back(probe);
        if (batch.size() < kChunk) exhausted = true;
      }
      for (const auto& probe : batch) {
        if (chunk_id > best_chunk.load()) break;
        const auto elems = probe.elements();
        if (counter.shattered(members, elems)) {
          std::lock_guard lock(mu);
          hits.emplace(chunk_id, probe);
          std::size_t cur = best_chunk.load();
          while (chunk_id < cur && !best_chunk.compare_exchange_weak(cur, chunk_id)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool_threads;
  for (int i = 0; i < workers; ++i) pool_threads.emplace_back(worker);
  for (auto& t : pool_threads) t.join();
  if (hits.empty()) return std::nullopt;
  return hits.begin()->second;
}

}  // namespace

TraceSet trace(const SetFamily& f, const SubsetMask& probe) {
  require_within(f, probe);
  const SubsetMask p = probe.ground_size() == f.ground_size() ? probe : probe.widened(f.ground_size());
  TraceSet t{p, {}};
  t.traces.reserve(f.size());
  for (const auto& s : f.members()) t.traces.push_back(s & p);
  std::sort(t.traces.begin(), t.traces.end());
  t.traces.erase(std::unique(t.traces.begin(), t.traces.end()), t.traces.end());
  return t;
}

bool shatters(const SetFamily& f, const SubsetMask& probe) {
  require_nonempty(f);
  require_within(f, probe);
  const auto elems = probe.elements();
  if (elems.empty()) return true;
  PatternCounter counter;
  return counter.shattered(f.members(), elems);
}

std::optional<SubsetMask> find_shattered_set(const SetFamily& f, int size) {
  require_nonempty(f);
  if (size < 0) throw DomainError("size must be non-negative");
  if (size == 0) return SubsetMask(f.ground_size());
  return first_shattered(f, shatter_candidates(f), size, 1);
}

VcReport vc_dimension(const SetFamily& f, int workers) {
  require_nonempty(f);
  const int n = f.ground_size();
  const auto pool = shatter_candidates(f);
  const int upper = std::min({static_cast<int>(pool.size()), f.max_member_size(), floor_log2(f.size())});

  VcReport r{0, SubsetMask(n), 0};
  for (int d = 1; d <= upper; ++d) {
    auto w = first_shattered(f, pool, d, workers);
    if (!w) {
      r.refuted_size = d;
      return r;
    }
    r.dimension = d;
    r.witness = *w;
  }
  // Size upper + 1 is refuted by counting (2^(d) > |F|), by the largest member,
  // or by running out of candidate elements.
  r.refuted_size = std::min(r.dimension + 1, n + 1);
  return r;
}

nlohmann::json to_json(const VcReport& r) {
  return {{"dimension", r.dimension},
          {"witness", r.witness.elements()},
          {"refuted_size", r.refuted_size}};
}

}  // namespace vcfam
