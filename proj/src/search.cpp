#include "crucialis/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "crucialis/abelian_power.hpp"
#include "crucialis/checkpoint.hpp"
#include "crucialis/errors.hpp"

namespace crucialis {
namespace {

using Clock = std::chrono::steady_clock;

// Budget bookkeeping shared by every worker of one search call.
class Budget {
 public:
  explicit Budget(const SearchConfig& cfg) : limit_(cfg.node_budget) {
    if (cfg.time_budget) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*cfg.time_budget);
    }
    const unsigned workers = std::max(1u, cfg.threads);
    batch_ = limit_ ? std::clamp<std::uint64_t>(*limit_ / (4 * workers), 1, 256) : 4096;
  }

  std::uint64_t batch() const { return batch_; }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }

  void charge(std::uint64_t amount) {
    const auto total = spent_.fetch_add(amount, std::memory_order_relaxed) + amount;
    if (limit_ && total >= *limit_) stop_.store(true, std::memory_order_relaxed);
    if (deadline_ && Clock::now() >= *deadline_) stop_.store(true, std::memory_order_relaxed);
  }

 private:
  std::optional<std::uint64_t> limit_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t batch_;
  std::atomic<std::uint64_t> spent_{0};
  std::atomic<bool> stop_{false};
};

struct LevelParams {
  int n;
  int k;
  std::size_t length;
  bool reverse;        // pruned strategy: letters are placed right to left
  bool whole;          // keep only words whose longest extension suffix is the whole word
  bool symmetry;
  bool collect;        // keep every crucial word instead of the best one
};

struct Outcome {
  std::uint64_t nodes = 0;
  std::uint64_t found = 0;
  // Witness key: the reversal of the best word, letters renamed by first appearance.
  std::optional<Word> best;
  std::vector<Word> words;
  bool complete = true;
};

// Depth-first walk over abelian-power-free words of one fixed length.
//
// With `reverse` set, seq_ holds the candidate read backwards, so seq_ is
// always a suffix of the final word and the extension condition for each
// letter x becomes a prefix condition on x·seq_, decidable block by block.
class Explorer {
 public:
  Explorer(const LevelParams& p, Budget& budget, const std::function<void(const Word&)>* observer)
      : p_(p), budget_(budget), observer_(observer), table_(p.n), sat_(p.n + 1, 0) {
    table_.reserve(p.length);
    seq_.reserve(p.length);
    used_.reserve(p.length + 1);
    used_.push_back(0);
  }

  std::size_t depth() const { return seq_.size(); }

  Letter letter_limit() const {
    return p_.symmetry ? static_cast<Letter>(std::min(p_.n, used_.back() + 1))
                       : static_cast<Letter>(p_.n);
  }

  // Appends c if the result stays free. Leaves the state untouched otherwise.
  bool push(Letter c) {
    const std::size_t m = seq_.size() + 1;
    table_.push_back(c);
    if (suffix_power_at(table_, m, p_.k)) {
      table_.pop_back();
      return false;
    }
    seq_.push_back(c);
    used_.push_back(std::max<int>(used_.back(), c));
    if (p_.reverse && (m + 1) % static_cast<std::size_t>(p_.k) == 0) {
      const std::size_t b = (m + 1) / static_cast<std::size_t>(p_.k);
      for (int x = 1; x <= p_.n; ++x) {
        if (!sat_[x] && prefix_power(static_cast<Letter>(x), b)) sat_[x] = m;
      }
    }
    return true;
  }

  void pop() {
    const std::size_t m = seq_.size();
    for (int x = 1; x <= p_.n; ++x) {
      if (sat_[x] == m) sat_[x] = 0;
    }
    seq_.pop_back();
    used_.pop_back();
    table_.pop_back();
  }

  bool viable() const {
    const std::size_t m = seq_.size();
    if (!p_.reverse || m == p_.length) return true;
    const std::size_t k = static_cast<std::size_t>(p_.k);
    const std::size_t top = (p_.length + 1) / k;
    bool whole_possible = !p_.whole;
    for (int x = 1; x <= p_.n; ++x) {
      if (sat_[x]) continue;
      const Letter lx = static_cast<Letter>(x);
      bool some = false;
      for (std::size_t b = (m + 1) / k + 1; b <= top && !some; ++b) some = consistent(lx, b);
      if (!some) return false;
      if (!whole_possible) whole_possible = consistent(lx, top);
    }
    return whole_possible;
  }

  void node() {
    ++outcome_.nodes;
    if (++pending_ >= budget_.batch()) flush();
    if (observer_ && *observer_) (*observer_)(current());
  }

  void flush() {
    if (pending_) budget_.charge(pending_);
    pending_ = 0;
  }

  // Explores every descendant of the current state.
  void dfs() {
    if (budget_.stopped()) {
      outcome_.complete = false;
      return;
    }
    if (seq_.size() == p_.length) {
      leaf();
      return;
    }
    const Letter hi = letter_limit();
    for (Letter c = 1; c <= hi; ++c) {
      if (!push(c)) continue;
      node();
      if (viable()) dfs();
      pop();
      if (!outcome_.complete) return;
    }
  }

  // Lists the viable states at `depth` below the current one, in visiting order.
  void frontier(std::size_t depth, std::vector<std::vector<Letter>>& out) {
    if (budget_.stopped()) {
      outcome_.complete = false;
      return;
    }
    if (seq_.size() == depth) {
      out.push_back(seq_);
      return;
    }
    const Letter hi = letter_limit();
    for (Letter c = 1; c <= hi; ++c) {
      if (!push(c)) continue;
      node();
      if (viable()) frontier(depth, out);
      pop();
      if (!outcome_.complete) return;
    }
  }

  Outcome take() {
    flush();
    return std::move(outcome_);
  }

 private:
  Word current() const {
    std::vector<Letter> letters(seq_);
    if (p_.reverse) std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters), p_.n);
  }

  // Is x·seq_ (of length k*b exactly) an abelian k-th power?
  bool prefix_power(Letter x, std::size_t b) const {
    const auto base = table_.row(b - 1);
    for (int j = 1; j < p_.k; ++j) {
      const auto lo = table_.row(j * b - 1);
      const auto hi = table_.row((j + 1) * b - 1);
      for (int c = 0; c < p_.n; ++c) {
        const std::uint32_t want = base[c] + (c + 1 == x ? 1u : 0u);
        if (hi[c] - lo[c] != want) return false;
      }
    }
    return true;
  }

  // Can x·(some extension of seq_) still start with an abelian k-th power of block b?
  bool consistent(Letter x, std::size_t b) const {
    const std::size_t m = seq_.size();
    if (b - 1 > m) return true;
    const auto base = table_.row(b - 1);
    const auto now = table_.row(m);
    for (int j = 1; j < p_.k; ++j) {
      const std::size_t s = j * b - 1;
      if (s >= m) break;
      const std::size_t e = (j + 1) * b - 1;
      const auto lo = table_.row(s);
      if (e <= m) {
        const auto hi = table_.row(e);
        for (int c = 0; c < p_.n; ++c) {
          if (hi[c] - lo[c] != base[c] + (c + 1 == x ? 1u : 0u)) return false;
        }
      } else {
        for (int c = 0; c < p_.n; ++c) {
          if (now[c] - lo[c] > base[c] + (c + 1 == x ? 1u : 0u)) return false;
        }
        break;
      }
    }
    return true;
  }

  bool crucial_leaf() const {
    if (p_.reverse) {
      for (int x = 1; x <= p_.n; ++x) {
        if (!sat_[x]) return false;
      }
      return true;
    }
    for (int x = 1; x <= p_.n; ++x) {
      if (!suffix_power_with_appended(table_, seq_.size(), static_cast<Letter>(x), p_.k)) {
        return false;
      }
    }
    return true;
  }

  void leaf() {
    if (!crucial_leaf()) return;
    ++outcome_.found;
    Word w = current();
    if (p_.collect) {
      outcome_.words.push_back(std::move(w));
      return;
    }
    Word key = first_occurrence_form(w.reversed());
    if (!outcome_.best || key < *outcome_.best) outcome_.best = std::move(key);
  }

  const LevelParams& p_;
  Budget& budget_;
  const std::function<void(const Word&)>* observer_;
  ParikhTable table_;
  std::vector<Letter> seq_;
  std::vector<int> used_;
  std::vector<std::size_t> sat_;  // depth at which letter x gained its extension, 0 if not yet
  Outcome outcome_;
  std::uint64_t pending_ = 0;
};

class LevelRunner {
 public:
  LevelRunner(const SearchConfig& cfg, Budget& budget, Checkpoint* ckpt)
      : cfg_(cfg), budget_(budget), ckpt_(ckpt) {}

  Outcome run(const LevelParams& p) {
    const auto* observer = cfg_.observer ? &cfg_.observer : nullptr;
    Explorer root(p, budget_, observer);
    std::vector<std::vector<Letter>> branches;
    root.frontier(std::min(cfg_.split_depth, p.length), branches);
    Outcome total = root.take();
    if (!total.complete) return total;

    std::vector<std::optional<Outcome>> results(branches.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&] {
      try {
        for (std::size_t i = next++; i < branches.size(); i = next++) {
          if (budget_.stopped()) return;
          results[i] = run_branch(p, branches[i], observer);
        }
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    };

    const unsigned threads = std::max<unsigned>(
        1, std::min<std::size_t>(cfg_.threads ? cfg_.threads : std::thread::hardware_concurrency(),
                                 branches.size()));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& r : results) {
      if (!r) {
        total.complete = false;
        continue;
      }
      total.nodes += r->nodes;
      total.found += r->found;
      if (r->best && (!total.best || *r->best < *total.best)) total.best = std::move(r->best);
      std::move(r->words.begin(), r->words.end(), std::back_inserter(total.words));
      total.complete = total.complete && r->complete;
    }
    return total;
  }

 private:
  Outcome run_branch(const LevelParams& p, const std::vector<Letter>& prefix,
                     const std::function<void(const Word&)>* observer) {
    if (ckpt_) {
      if (auto rec = ckpt_->find(p.length, prefix)) {
        Outcome o;
        o.nodes = rec->nodes;
        o.found = rec->found;
        o.best = rec->best;
        return o;
      }
    }
    Explorer e(p, budget_, observer);
    for (Letter c : prefix) {
      if (!e.push(c)) throw StateError("branch prefix is not power-free");
    }
    e.dfs();
    Outcome o = e.take();
    if (ckpt_ && o.complete) {
      ckpt_->record(BranchRecord{p.length, prefix, o.nodes, o.found, o.best});
    }
    return o;
  }

  const SearchConfig& cfg_;
  Budget& budget_;
  Checkpoint* ckpt_;
};

std::string checkpoint_config(const SearchConfig& cfg) {
  std::ostringstream os;
  os << "n=" << cfg.n << " k=" << cfg.k
     << " strategy=" << (cfg.strategy == SearchStrategy::Pruned ? "pruned" : "plain")
     << " symmetry=" << (cfg.symmetry_reduction ? 1 : 0) << " split=" << cfg.split_depth;
  return os.str();
}

// Shared driver for FindMinimalCrucial and VerifyNoneBelow: tries lengths
// 1..last in order and stops at the first one holding a crucial word.
SearchResult scan_lengths(const SearchConfig& cfg, std::size_t last) {
  Budget budget(cfg);
  std::optional<Checkpoint> ckpt;
  if (cfg.checkpoint) ckpt.emplace(*cfg.checkpoint, checkpoint_config(cfg), cfg.n);
  LevelRunner runner(cfg, budget, ckpt ? &*ckpt : nullptr);

  const bool pruned = cfg.strategy == SearchStrategy::Pruned;
  SearchResult res;
  for (std::size_t len = 1; len <= last; ++len) {
    // A crucial word of minimal length is its own longest extension suffix,
    // and that suffix has length k*b - 1.
    if (pruned && (len + 1) % static_cast<std::size_t>(cfg.k) != 0) {
      res.lengths_completed = len;
      continue;
    }
    LevelParams p{cfg.n, cfg.k, len, pruned, pruned, cfg.symmetry_reduction, false};
    Outcome o = runner.run(p);
    res.nodes_expanded += o.nodes;
    if (!o.complete) {
      res.exhaustive = false;
      return res;
    }
    res.lengths_completed = len;
    if (o.found) {
      res.minimal_length = len;
      res.witness = o.best->reversed();
      res.crucial_words_found = o.found;
      res.exhaustive = true;
      return res;
    }
  }
  res.exhaustive = true;
  return res;
}

}  // namespace

void validate(const SearchConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxAlphabet) {
    throw ArgumentError("alphabet size must be in 1.." + std::to_string(kMaxAlphabet) + ", got " +
                        std::to_string(cfg.n));
  }
  if (cfg.k < 2) throw ArgumentError("exponent must be >= 2, got " + std::to_string(cfg.k));
  if (cfg.mode == SearchMode::FindMinimalCrucial && cfg.max_length < 1) {
    throw ArgumentError("max_length must be positive");
  }
  if (cfg.mode != SearchMode::FindMinimalCrucial && cfg.target_length < 1) {
    throw ArgumentError("target length must be positive");
  }
  if (cfg.observer && cfg.threads != 1) {
    throw ArgumentError("an observer requires threads == 1");
  }
  if (cfg.split_depth < 1) throw ArgumentError("split_depth must be positive");
  if (cfg.node_budget && *cfg.node_budget == 0) throw ArgumentError("node budget must be positive");
  if (cfg.time_budget && cfg.time_budget->count() <= 0) {
    throw ArgumentError("time budget must be positive");
  }
  if (cfg.checkpoint && cfg.mode == SearchMode::EnumerateAllCrucialAtLength) {
    throw ArgumentError("enumeration does not support checkpoints");
  }
}

SearchResult search(const SearchConfig& cfg) {
  switch (cfg.mode) {
    case SearchMode::FindMinimalCrucial:
      return search_minimal(cfg);
    case SearchMode::VerifyNoneBelow:
      return verify_none_below(cfg, cfg.target_length);
    case SearchMode::EnumerateAllCrucialAtLength:
      return enumerate_crucial(cfg, cfg.target_length);
  }
  throw ArgumentError("unknown search mode");
}

SearchResult search_minimal(SearchConfig cfg) {
  cfg.mode = SearchMode::FindMinimalCrucial;
  validate(cfg);
  return scan_lengths(cfg, cfg.max_length);
}

SearchResult verify_none_below(SearchConfig cfg, std::size_t length) {
  cfg.mode = SearchMode::VerifyNoneBelow;
  cfg.target_length = length;
  validate(cfg);
  return scan_lengths(cfg, length - 1);
}

SearchResult enumerate_crucial(SearchConfig cfg, std::size_t length) {
  cfg.mode = SearchMode::EnumerateAllCrucialAtLength;
  cfg.target_length = length;
  validate(cfg);

  Budget budget(cfg);
  LevelRunner runner(cfg, budget, nullptr);
  const bool pruned = cfg.strategy == SearchStrategy::Pruned;
  LevelParams p{cfg.n, cfg.k, length, pruned, false, cfg.symmetry_reduction, true};
  Outcome o = runner.run(p);

  SearchResult res;
  res.nodes_expanded = o.nodes;
  res.words.reserve(o.words.size());
  for (const Word& w : o.words) {
    res.words.push_back(cfg.symmetry_reduction ? first_occurrence_form(w) : w);
  }
  std::sort(res.words.begin(), res.words.end());
  res.crucial_words_found = res.words.size();
  res.exhaustive = o.complete;
  res.truncated = !o.complete;
  res.lengths_completed = o.complete ? length : 0;
  return res;
}

Word first_occurrence_form(const Word& w) {
  std::vector<Letter> map(static_cast<std::size_t>(w.alphabet_size()) + 1, 0);
  Letter next = 1;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter c : w.letters()) {
    if (!map[c]) map[c] = next++;
    out.push_back(map[c]);
  }
  return Word(std::move(out), w.alphabet_size());
}

}  // namespace crucialis
