#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "crucialis/word.hpp"

namespace crucialis {

enum class SearchMode {
  FindMinimalCrucial,
  /// Every crucial word of length exactly `target_length`.
  EnumerateAllCrucialAtLength,
  /// Certify that no crucial word is shorter than `target_length`.
  VerifyNoneBelow,
};

enum class SearchStrategy {
  /// Builds candidates right to left and prunes on the extension structure.
  Pruned,
  /// Appends letters left to right and tests cruciality only at the leaves.
  Plain,
};

struct SearchConfig {
  int n = 1;
  int k = 3;
  std::size_t max_length = 64;
  SearchMode mode = SearchMode::FindMinimalCrucial;
  std::size_t target_length = 0;
  /// Only words whose letters first appear in the order 1, 2, ..., n.
  bool symmetry_reduction = true;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::duration<double>> time_budget;

  SearchStrategy strategy = SearchStrategy::Pruned;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 1;
  /// Depth at which the tree is cut into independently explored branches.
  std::size_t split_depth = 6;
  /// Resumable progress log (FindMinimalCrucial and VerifyNoneBelow only).
  std::optional<std::filesystem::path> checkpoint;
  /// Called with every expanded node's word (suffix of the candidate for the
  /// pruned strategy, prefix for the plain one). Requires threads == 1.
  std::function<void(const Word&)> observer;
};

struct SearchResult {
  std::optional<std::size_t> minimal_length;
  /// Crucial word of minimal length whose reversal is lexicographically least
  /// once letters are renamed in order of first appearance in that reversal.
  std::optional<Word> witness;
  /// No budget tripped and every length the mode covers was fully explored.
  bool exhaustive = false;
  std::uint64_t nodes_expanded = 0;
  /// Crucial words (canonical representatives under symmetry reduction)
  /// at the reported length.
  std::uint64_t crucial_words_found = 0;
  /// Every length <= this value was explored completely.
  std::size_t lengths_completed = 0;
  /// EnumerateAllCrucialAtLength output, sorted lexicographically.
  std::vector<Word> words;
  /// Enumeration stopped early; `words` is incomplete.
  bool truncated = false;
};

/// Throws ArgumentError on an invalid configuration.
void validate(const SearchConfig& cfg);

/// Dispatches on cfg.mode.
SearchResult search(const SearchConfig& cfg);

SearchResult search_minimal(SearchConfig cfg);
SearchResult verify_none_below(SearchConfig cfg, std::size_t length);
SearchResult enumerate_crucial(SearchConfig cfg, std::size_t length);

/// Relabels letters in order of first appearance (1, 2, ...).
Word first_occurrence_form(const Word& w);

}  // namespace crucialis
