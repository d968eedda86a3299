#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crucialis/word.hpp"

namespace crucialis {

/// Outcome of one fully explored top-level branch.
struct BranchRecord {
  std::size_t length = 0;
  std::vector<Letter> prefix;
  std::uint64_t nodes = 0;
  std::uint64_t found = 0;
  std::optional<Word> best;
};

/// Append-only text log of completed branches.
///
///   # crucialis checkpoint v1
///   config <free-form configuration line>
///   done L=<len> branch=<l1,l2,...> nodes=<count> found=<count> best=<l1,l2,...|->
///
/// Opening an existing file with a different config line throws StateError.
class Checkpoint {
 public:
  Checkpoint(std::filesystem::path path, std::string config, int alphabet_size);

  std::optional<BranchRecord> find(std::size_t length, const std::vector<Letter>& prefix) const;
  void record(const BranchRecord& r);
  std::size_t size() const;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::string config_;
  int n_;
  mutable std::mutex mu_;
  std::map<std::pair<std::size_t, std::vector<Letter>>, BranchRecord> done_;
};

}  // namespace crucialis
