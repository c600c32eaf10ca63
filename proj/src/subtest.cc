// Copyright 2026 The Subcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subcheck/subtest.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <compare>
#include <limits>
#include <thread>
#include <unordered_set>
#include <utility>

#include "subcheck/choice.h"

namespace subcheck {

std::string_view to_string(ViolationKind kind) {
  return kind == ViolationKind::kS1 ? "S1" : "S2";
}

namespace {

constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();

// Position of a triple in the canonical candidate order.
struct CandidateKey {
  std::size_t x_index;
  std::size_t y_index;
  std::size_t alternative;

  friend auto operator<=>(const CandidateKey&, const CandidateKey&) = default;
};

struct Hit {
  CandidateKey key;
  Witness witness;
};

// A member of C(A) whose trace on B fits in no member of C(B).
const AltSet* s1_failing(const std::vector<AltSet>& ca,
                         const std::vector<AltSet>& cb, const AltSet& b) {
  for (const AltSet& chosen : ca) {
    const AltSet trace = chosen & b;
    const bool covered = std::any_of(cb.begin(), cb.end(), [&](const AltSet& z) {
      return trace.is_subset_of(z);
    });
    if (!covered) return &chosen;
  }
  return nullptr;
}

// A member of C(B) containing the trace on B of no member of C(A).
const AltSet* s2_failing(const std::vector<AltSet>& ca,
                         const std::vector<AltSet>& cb, const AltSet& b) {
  for (const AltSet& chosen : cb) {
    const bool covered = std::any_of(ca.begin(), ca.end(), [&](const AltSet& z) {
      return (z & b).is_subset_of(chosen);
    });
    if (!covered) return &chosen;
  }
  return nullptr;
}

struct AltSetPairHash {
  std::size_t operator()(const std::pair<AltSet, AltSet>& p) const {
    return p.first.hash() * 31 + p.second.hash();
  }
};

// (A, B) pairs already evaluated by this worker. Universes of at most 64
// alternatives use a compact key.
class SeenPairs {
 public:
  explicit SeenPairs(std::size_t u) : narrow_(u <= AltSet::kWordBits) {}

  bool insert(const AltSet& a, const AltSet& b) {
    if (narrow_) return narrow_set_.insert({a.word(0), b.word(0)}).second;
    return wide_set_.insert({a, b}).second;
  }

 private:
  struct NarrowHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
      std::uint64_t z = p.first * 0x9e3779b97f4a7c15ULL ^ p.second;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return static_cast<std::size_t>(z ^ (z >> 31));
    }
  };
  bool narrow_;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, NarrowHash> narrow_set_;
  std::unordered_set<std::pair<AltSet, AltSet>, AltSetPairHash> wide_set_;
};

struct WorkerResult {
  std::array<std::optional<Hit>, 2> first;
  std::vector<Hit> all;
  SearchStats stats;
};

struct SearchPlan {
  const PreferenceList& pref;
  SearchOptions options;
  std::array<bool, 2> wanted;
};

void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t cur = target.load(std::memory_order_relaxed);
  while (value < cur &&
         !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Rows (X positions) are dealt round-robin: worker w owns rows w, w + n, ...
// Within its rows a worker visits candidates in canonical order, so its first
// hit of each kind is its local minimum. In first-witness mode a worker stops
// once every wanted kind is either found locally or found by someone else on
// an earlier row; each worker has by then covered every one of its candidates
// before the global first hit.
WorkerResult run_worker(const SearchPlan& plan, std::size_t worker,
                        std::size_t num_workers,
                        std::array<std::atomic<std::size_t>, 2>& best_row) {
  const PreferenceList& pref = plan.pref;
  const auto flat = pref.flat();
  const std::size_t ell = flat.size();
  const bool first_mode = plan.options.mode == SearchMode::kFirstWitness;

  WorkerResult out;
  SeenPairs seen(pref.universe().size());
  std::optional<ChoiceCache> cache;
  if (plan.options.cache_capacity > 0) cache.emplace(plan.options.cache_capacity);

  std::vector<AltSet> ca;
  std::vector<AltSet> cb;
  auto compute = [&](const AltSet& set, std::vector<AltSet>& into) {
    ++out.stats.choice_calls;
    if (cache) {
      into = cache->get(pref, set).chosen;
    } else {
      choice_into(pref, set, into);
    }
  };

  auto active = [&](std::size_t k) {
    return plan.wanted[k] && !(first_mode && out.first[k].has_value());
  };

  for (std::size_t xi = worker; xi < ell; xi += num_workers) {
    if (first_mode) {
      bool needed = false;
      for (std::size_t k = 0; k < 2; ++k) {
        if (active(k) && xi <= best_row[k].load(std::memory_order_relaxed)) needed = true;
      }
      if (!needed) break;
    }

    const AltSet& x_set = flat[xi];
    for (std::size_t yi = 0; yi < ell; ++yi) {
      if (yi == xi) continue;
      const AltSet& y_set = flat[yi];
      const AltSet extra = x_set - y_set;
      if (extra.empty()) continue;

      const AltSet a = x_set | y_set;
      bool have_ca = false;
      bool done = false;
      extra.for_each([&](std::size_t alt) {
        if (done) return;
        const AltSet b = y_set.with(alt);
        ++out.stats.pairs_examined;
        if (plan.options.deduplicate && !seen.insert(a, b)) {
          ++out.stats.duplicates_skipped;
          return;
        }
        if (!have_ca) {
          compute(a, ca);
          have_ca = true;
        }
        compute(b, cb);

        const CandidateKey key{xi, yi, alt};
        for (std::size_t k = 0; k < 2; ++k) {
          if (!active(k)) continue;
          const AltSet* failing = k == 0 ? s1_failing(ca, cb, b) : s2_failing(ca, cb, b);
          if (failing == nullptr) continue;
          Hit hit{key,
                  Witness{k == 0 ? ViolationKind::kS1 : ViolationKind::kS2, a, b,
                          *failing, WitnessOrigin{x_set, y_set, alt}}};
          if (first_mode) {
            out.first[k] = std::move(hit);
            atomic_min(best_row[k], xi);
          } else {
            out.all.push_back(std::move(hit));
          }
        }
        if (first_mode && !active(0) && !active(1)) done = true;
      });
      if (done) return out;
    }
  }
  return out;
}

Verdict run_search(const PreferenceList& pref, const SearchOptions& options,
                   std::array<bool, 2> wanted) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t ell = pref.flat().size();
  const std::size_t num_workers =
      std::max<std::size_t>(1, std::min<std::size_t>(options.threads, ell));

  SearchPlan plan{pref, options, wanted};
  std::array<std::atomic<std::size_t>, 2> best_row;
  for (auto& b : best_row) b.store(kNoRow);

  std::vector<WorkerResult> results(num_workers);
  if (num_workers == 1) {
    results[0] = run_worker(plan, 0, 1, best_row);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(num_workers);
    for (std::size_t w = 0; w < num_workers; ++w) {
      threads.emplace_back([&, w] { results[w] = run_worker(plan, w, num_workers, best_row); });
    }
  }

  Verdict verdict;
  verdict.stats.workers = static_cast<unsigned>(num_workers);
  for (const auto& r : results) {
    verdict.stats.pairs_examined += r.stats.pairs_examined;
    verdict.stats.duplicates_skipped += r.stats.duplicates_skipped;
    verdict.stats.choice_calls += r.stats.choice_calls;
  }

  std::array<std::optional<Hit>, 2> best;
  if (options.mode == SearchMode::kFirstWitness) {
    for (auto& r : results) {
      for (std::size_t k = 0; k < 2; ++k) {
        if (r.first[k] && (!best[k] || r.first[k]->key < best[k]->key)) {
          best[k] = std::move(r.first[k]);
        }
      }
    }
  } else {
    std::vector<Hit> merged;
    for (auto& r : results) {
      std::move(r.all.begin(), r.all.end(), std::back_inserter(merged));
    }
    std::sort(merged.begin(), merged.end(), [](const Hit& l, const Hit& r) {
      if (l.key != r.key) return l.key < r.key;
      return l.witness.kind < r.witness.kind;
    });
    // Workers deduplicate only their own rows; repeat globally so the list
    // keeps the earliest origin of each (kind, A, B) for any thread count.
    std::array<std::unordered_set<std::pair<AltSet, AltSet>, AltSetPairHash>, 2> seen;
    std::vector<Witness> all;
    for (auto& h : merged) {
      const std::size_t k = h.witness.kind == ViolationKind::kS1 ? 0 : 1;
      if (options.deduplicate && !seen[k].insert({h.witness.a, h.witness.b}).second) continue;
      if (!best[k]) best[k] = h;
      all.push_back(std::move(h.witness));
    }
    verdict.all_witnesses = std::move(all);
  }

  if (best[0]) verdict.s1 = best[0]->witness;
  if (best[1]) verdict.s2 = best[1]->witness;
  verdict.substitutable = !verdict.s1 && !verdict.s2;
  verdict.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return verdict;
}

}  // namespace

std::optional<Witness> find_s1_violation(const PreferenceList& pref,
                                         const SearchOptions& options) {
  SearchOptions first = options;
  first.mode = SearchMode::kFirstWitness;
  return run_search(pref, first, {true, false}).s1;
}

std::optional<Witness> find_s2_violation(const PreferenceList& pref,
                                         const SearchOptions& options) {
  SearchOptions first = options;
  first.mode = SearchMode::kFirstWitness;
  return run_search(pref, first, {false, true}).s2;
}

Verdict test_substitutability(const PreferenceList& pref, const SearchOptions& options) {
  return run_search(pref, options, {true, true});
}

bool verify_violation(const PreferenceList& pref, ViolationKind kind, const AltSet& a,
                      const AltSet& b, const AltSet& failing) {
  const Universe& universe = pref.universe();
  if (!universe.owns(a) || !universe.owns(b) || !universe.owns(failing)) return false;
  if (b.empty() || !b.is_subset_of(a)) return false;

  const ChoiceResult ca = choice(pref, a);
  const ChoiceResult cb = choice(pref, b);
  auto in = [](const std::vector<AltSet>& v, const AltSet& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };

  if (kind == ViolationKind::kS1) {
    if (!in(ca.chosen, failing)) return false;
    const AltSet trace = failing & b;
    return std::none_of(cb.chosen.begin(), cb.chosen.end(),
                        [&](const AltSet& z) { return trace.is_subset_of(z); });
  }
  if (!in(cb.chosen, failing)) return false;
  return std::none_of(ca.chosen.begin(), ca.chosen.end(),
                      [&](const AltSet& z) { return (z & b).is_subset_of(failing); });
}

bool verify_witness(const PreferenceList& pref, const Witness& w) {
  const WitnessOrigin& o = w.origin;
  if (!pref.acceptable(o.x_set) || !pref.acceptable(o.y_set)) return false;
  if (o.alternative >= pref.universe().size() || !o.x_set.contains(o.alternative)) {
    return false;
  }
  if (w.a != (o.x_set | o.y_set) || w.b != o.y_set.with(o.alternative)) return false;
  return verify_violation(pref, w.kind, w.a, w.b, w.failing);
}

}  // namespace subcheck
