#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

#include "vcfam/constructions.hpp"
#include "vcfam/enumerate.hpp"
#include "vcfam/family_io.hpp"

#ifndef VCFAM_CORPUS_DIR
#error "VCFAM_CORPUS_DIR must point at tests/corpus"
#endif

namespace vcfam::testing {

SetFamily random_family(unsigned seed, int n, int s, int count) {
  std::mt19937 rng(seed);
  std::vector<SubsetMask> members;
  if (s >= 0) {
    auto pool = enumerate_subsets(n, s);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < count; ++i) members.push_back(pool[pick(rng)]);
  } else {
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < count; ++i) {
      SubsetMask m(n);
      for (int e = 1; e <= n; ++e)
        if (coin(rng)) m.insert(e);
      members.push_back(m);
    }
  }
  return SetFamily::from_masks(n, std::move(members));
}

std::vector<CorpusEntry> corpus(int max_n) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, SetFamily f) {
    if (f.ground_size() <= max_n) out.push_back({std::move(name), std::move(f)});
  };
  auto tag = [](const char* what, std::initializer_list<int> args) {
    std::string s = what;
    for (int a : args) s += "_" + std::to_string(a);
    return s;
  };

  for (int n = 1; n <= 8; ++n)
    for (int s = 1; s <= n; ++s) add(tag("full", {n, s}), full_family(n, s));
  for (int n = 2; n <= 10; ++n) add(tag("segments", {n}), initial_segment_family(n));
  for (int k = 1; k <= 5; ++k)
    for (int m = 1; m <= 4; ++m) {
      int g = 1;
      for (int i = 0; i < m; ++i) g *= k + 1;
      if (g <= 27) add(tag("hypercube", {k, m}), hypercube_family(k, m));
    }
  for (int m = 2; m <= 8; ++m)
    for (int k = 1; k <= 3; ++k) add(tag("fk", {m, k}), build_Fk(m, k));
  for (int n = 2; n <= 10; ++n)
    for (int s = 2; s <= n; ++s)
      for (int k = 1; k <= s; ++k)
        if ((n + s + k) % 3 == 0) add(tag("witness", {k, s, n}), covering_witness_family(k, s, n));

  add("cone_full_4_2", cone(full_family(4, 2)));
  add("product_fk_4_1_x2", product(build_Fk(4, 1), 2));
  add("segments_cone_5", cone(initial_segment_family(5)));

  unsigned seed = 1;
  for (int n = 4; n <= 10; ++n)
    for (int s = 1; s < n; s += 2) {
      const int count = 2 + static_cast<int>(seed * 7 % 25);
      add(tag("random_uniform", {n, s, static_cast<int>(seed)}), random_family(seed, n, s, count));
      ++seed;
    }
  for (int n = 3; n <= 9; ++n) {
    add(tag("random_mixed", {n, static_cast<int>(seed)}), random_family(seed, n, -1, 3 + n));
    ++seed;
  }

  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(VCFAM_CORPUS_DIR))
    if (e.path().extension() == ".vcfam") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) add("file_" + p.stem().string(), load_family(p));
  return out;
}

}  // namespace vcfam::testing
