#include "drad/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "drad/design.hpp"
#include "drad/error.hpp"
#include "drad/subgroups.hpp"

namespace drad {

namespace {

using Clock = std::chrono::steady_clock;

void check_subgroup(const GroupTable& g, const SubsetBits& h) {
  const auto hs = h.count();
  if (hs * hs != g.order() || !is_normal(g, h))
    throw Error(ErrorCode::BadSubgroup, "H must be a normal subgroup of order sqrt|G|");
  (void)drad_params(hs);
}

// Immutable description of one (G, H) instance shared by all tasks.
struct Instance {
  const GroupTable& g;
  std::vector<InversePair> pairs;  // in search order
  std::vector<std::uint32_t> coset_of;
  std::size_t coset_count = 0;
  std::size_t half = 0;
  std::uint64_t lambda = 0;
  std::vector<std::uint32_t> rem_initial;  // pairs touching each coset
};

struct Task {
  std::vector<bool> prefix;  // choices for pairs [0, prefix.size()): true = high
};

class Searcher {
 public:
  Searcher(const Instance& inst, const SearchOptions& opts, const std::atomic<bool>& stop,
           std::optional<Clock::time_point> deadline)
      : inst_(inst), opts_(opts), stop_(stop), deadline_(deadline),
        counts_(inst.g.order(), 0), cnt_(inst.coset_count, 0), rem_(inst.rem_initial) {}

  // Applies a prefix; returns false if it is already pruned.
  bool apply_prefix(const std::vector<bool>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const auto e = prefix[i] ? inst_.pairs[i].high : inst_.pairs[i].low;
      if (!push(i, e)) return false;
    }
    return true;
  }

  void run(std::size_t from) { dfs(from); }

  std::vector<SubsetBits> witnesses;
  SearchStats stats;
  bool timed_out = false;

 private:
  bool out_of_time() {
    if (!deadline_) return false;
    if ((++clock_ticks_ & 0x3ff) != 0) return timed_out;
    if (Clock::now() > *deadline_) timed_out = true;
    return timed_out;
  }

  // Adds element e for pair i. On failure the state is left unchanged.
  bool push(std::size_t i, ElementIndex e) {
    const auto& pr = inst_.pairs[i];
    const auto ce = inst_.coset_of[e];
    const auto c1 = inst_.coset_of[pr.low];
    const auto c2 = inst_.coset_of[pr.high];
    --rem_[c1];
    if (c2 != c1) --rem_[c2];
    ++cnt_[ce];
    if (opts_.prune_balance) {
      bool ok = cnt_[ce] <= inst_.half;
      for (auto c : {c1, c2})
        if (cnt_[c] + rem_[c] < inst_.half) ok = false;
      if (!ok) {
        ++stats.balance_prunes;
        undo_counts(i, e);
        return false;
      }
    }
    const auto& g = inst_.g;
    const auto einv = g.inv(e);
    std::size_t added = 0;
    bool over = false;
    for (; added < chosen_.size(); ++added) {
      const auto d = chosen_[added];
      const auto x = g.mul(e, g.inv(d));
      const auto y = g.mul(d, einv);
      ++counts_[x];
      ++counts_[y];
      if (opts_.prune_lambda && (counts_[x] > inst_.lambda || counts_[y] > inst_.lambda)) {
        ++added;
        over = true;
        break;
      }
    }
    if (over) {
      ++stats.lambda_prunes;
      for (std::size_t t = 0; t < added; ++t) {
        const auto d = chosen_[t];
        --counts_[g.mul(e, g.inv(d))];
        --counts_[g.mul(d, einv)];
      }
      undo_counts(i, e);
      return false;
    }
    chosen_.push_back(e);
    return true;
  }

  void pop(std::size_t i) {
    const auto e = chosen_.back();
    chosen_.pop_back();
    const auto& g = inst_.g;
    const auto einv = g.inv(e);
    for (auto d : chosen_) {
      --counts_[g.mul(e, g.inv(d))];
      --counts_[g.mul(d, einv)];
    }
    undo_counts(i, e);
  }

  void undo_counts(std::size_t i, ElementIndex e) {
    const auto& pr = inst_.pairs[i];
    const auto c1 = inst_.coset_of[pr.low];
    const auto c2 = inst_.coset_of[pr.high];
    ++rem_[c1];
    if (c2 != c1) ++rem_[c2];
    --cnt_[inst_.coset_of[e]];
  }

  bool leaf_ok() const {
    for (std::size_t x = 1; x < counts_.size(); ++x)
      if (counts_[x] != inst_.lambda) return false;
    for (std::size_t c = 1; c < cnt_.size(); ++c)
      if (cnt_[c] != inst_.half) return false;
    return true;
  }

  bool limit_reached() const { return opts_.limit && witnesses.size() >= *opts_.limit; }

  void dfs(std::size_t i) {
    if (stop_.load(std::memory_order_relaxed) || out_of_time() || limit_reached()) return;
    if (i == inst_.pairs.size()) {
      if (leaf_ok()) {
        SubsetBits d(inst_.g.order());
        for (auto e : chosen_) d.insert(e);
        witnesses.push_back(std::move(d));
        ++stats.witnesses;
      }
      return;
    }
    for (auto e : {inst_.pairs[i].low, inst_.pairs[i].high}) {
      ++stats.nodes;
      if (!push(i, e)) continue;
      dfs(i + 1);
      pop(i);
    }
  }

  const Instance& inst_;
  const SearchOptions& opts_;
  const std::atomic<bool>& stop_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> cnt_;
  std::vector<std::uint32_t> rem_;
  std::vector<ElementIndex> chosen_;
  std::uint64_t clock_ticks_ = 0;
};

}  // namespace

std::vector<InversePair> inverse_pairs(const GroupTable& g, const SubsetBits& h) {
  check_subgroup(g, h);
  std::vector<InversePair> out;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    if (h.contains(a)) continue;
    const auto b = g.inv(a);
    if (a == b)
      throw Error(ErrorCode::InvolutionOutsideH,
                  "involution " + std::to_string(a) + " lies outside H");
    if (a < b) out.push_back({a, b});
  }
  return out;
}

SearchResult search_drad(const GroupTable& g, const SubsetBits& h, const SearchOptions& opts) {
  const auto start = Clock::now();
  auto pairs = inverse_pairs(g, h);
  const auto params = drad_params(h.count());

  Instance inst{g, {}, std::vector<std::uint32_t>(g.order(), 0), 0, h.count() / 2, params.lambda, {}};
  const auto cs = cosets(g, h);
  inst.coset_count = cs.size();
  for (std::size_t c = 0; c < cs.size(); ++c)
    cs[c].for_each([&](ElementIndex a) { inst.coset_of[a] = static_cast<std::uint32_t>(c); });
  std::stable_sort(pairs.begin(), pairs.end(), [&](const InversePair& a, const InversePair& b) {
    const auto ka = std::min(inst.coset_of[a.low], inst.coset_of[a.high]);
    const auto kb = std::min(inst.coset_of[b.low], inst.coset_of[b.high]);
    return ka != kb ? ka < kb : a.low < b.low;
  });
  inst.pairs = std::move(pairs);
  inst.rem_initial.assign(cs.size(), 0);
  for (const auto& pr : inst.pairs) {
    ++inst.rem_initial[inst.coset_of[pr.low]];
    if (inst.coset_of[pr.high] != inst.coset_of[pr.low]) ++inst.rem_initial[inst.coset_of[pr.high]];
  }

  std::optional<Clock::time_point> deadline;
  if (opts.time_budget)
    deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opts.time_budget));

  // Split the tree into disjoint prefixes; tasks are enumerated in DFS order
  // so concatenating their results reproduces the sequential order.
  const unsigned threads = std::max(1u, opts.threads);
  std::size_t depth = 0;
  if (threads > 1)
    while ((std::size_t{1} << depth) < threads * 8 && depth < inst.pairs.size() && depth < 16) ++depth;
  std::vector<Task> tasks;
  for (std::size_t code = 0; code < (std::size_t{1} << depth); ++code) {
    Task t;
    for (std::size_t b = 0; b < depth; ++b) t.prefix.push_back((code >> (depth - 1 - b)) & 1);
    tasks.push_back(std::move(t));
  }

  struct TaskResult {
    std::vector<SubsetBits> witnesses;
    SearchStats stats;
    bool timed_out = false;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      const auto t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      Searcher s(inst, opts, stop, deadline);
      if (s.apply_prefix(tasks[t].prefix)) s.run(tasks[t].prefix.size());
      s.stats.nodes += tasks[t].prefix.size();
      results[t] = {std::move(s.witnesses), s.stats, s.timed_out};
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchResult out;
  for (auto& r : results) {
    out.stats.nodes += r.stats.nodes;
    out.stats.balance_prunes += r.stats.balance_prunes;
    out.stats.lambda_prunes += r.stats.lambda_prunes;
    if (r.timed_out) out.stats.complete = false;
    for (auto& w : r.witnesses) {
      if (opts.limit && out.witnesses.size() >= *opts.limit) break;
      out.witnesses.push_back(std::move(w));
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.stats.witnesses = out.witnesses.size();
  out.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::string to_string(CensusSource s) {
  switch (s) {
    case CensusSource::Witness: return "witness";
    case CensusSource::NoCandidateH: return "no-candidate-H";
    case CensusSource::ExhaustedSearch: return "exhausted-search";
    case CensusSource::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::vector<CensusEntry> census(const std::vector<GroupTable>& groups, const SearchOptions& opts) {
  std::vector<CensusEntry> out;
  for (const auto& g : groups) {
    CensusEntry e;
    e.group = g.name();
    bool incomplete = false;
    for (auto& h : candidate_subgroups(g)) {
      auto r = search_drad(g, h, opts);
      if (!r.stats.complete) incomplete = true;
      e.targets.push_back({std::move(h), std::move(r)});
    }
    const bool any = std::any_of(e.targets.begin(), e.targets.end(),
                                 [](const CensusTarget& t) { return !t.result.witnesses.empty(); });
    if (any)
      e.source = CensusSource::Witness;
    else if (e.targets.empty())
      e.source = CensusSource::NoCandidateH;
    else
      e.source = incomplete ? CensusSource::BudgetExceeded : CensusSource::ExhaustedSearch;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace drad
