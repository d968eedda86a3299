#include "crucialis/checkpoint.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "crucialis/errors.hpp"

namespace crucialis {
namespace {

constexpr std::string_view kMagic = "# crucialis checkpoint v1";

std::string join_letters(std::span<const Letter> letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<Letter> split_letters(std::string_view s, int n) {
  std::vector<Letter> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = s.substr(0, comma);
    int v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || p != item.data() + item.size() || v < 1 || v > n) {
      throw ParseError("bad letter in checkpoint: '" + std::string(item) + "'");
    }
    out.push_back(static_cast<Letter>(v));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw ParseError("expected checkpoint field '" + std::string(key) + "', got '" +
                     std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError("bad number in checkpoint: '" + std::string(s) + "'");
  }
  return v;
}

BranchRecord parse_record(const std::string& line, int n) {
  std::istringstream in(line);
  std::string tag, l, branch, nodes, found, best;
  in >> tag >> l >> branch >> nodes >> found >> best;
  if (tag != "done" || best.empty()) throw ParseError("malformed checkpoint line: " + line);
  BranchRecord r;
  r.length = static_cast<std::size_t>(to_u64(field(l, "L")));
  r.prefix = split_letters(field(branch, "branch"), n);
  r.nodes = to_u64(field(nodes, "nodes"));
  r.found = to_u64(field(found, "found"));
  const auto b = field(best, "best");
  if (b != "-") r.best = Word(split_letters(b, n), n);
  return r;
}

}  // namespace

Checkpoint::Checkpoint(std::filesystem::path path, std::string config, int alphabet_size)
    : path_(std::move(path)), config_(std::move(config)), n_(alphabet_size) {
  std::ifstream in(path_);
  if (!in) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_);
    if (!out) throw StateError("cannot create checkpoint file " + path_.string());
    out << kMagic << "\nconfig " << config_ << "\n";
    return;
  }
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw StateError("not a checkpoint file: " + path_.string());
  }
  if (!std::getline(in, line) || line != "config " + config_) {
    throw StateError("checkpoint " + path_.string() + " was written for a different search (" +
                     line + ")");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A trailing partial line from an interrupted write is dropped.
    if (in.eof()) {
      try {
        auto r = parse_record(line, n_);
        done_[{r.length, r.prefix}] = std::move(r);
      } catch (const ParseError&) {
      }
      break;
    }
    auto r = parse_record(line, n_);
    done_[{r.length, r.prefix}] = std::move(r);
  }
}

std::optional<BranchRecord> Checkpoint::find(std::size_t length,
                                             const std::vector<Letter>& prefix) const {
  std::lock_guard lock(mu_);
  auto it = done_.find({length, prefix});
  if (it == done_.end()) return std::nullopt;
  return it->second;
}

void Checkpoint::record(const BranchRecord& r) {
  std::lock_guard lock(mu_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw StateError("cannot append to checkpoint file " + path_.string());
  out << "done L=" << r.length << " branch=" << join_letters(r.prefix) << " nodes=" << r.nodes
      << " found=" << r.found << " best=" << (r.best ? join_letters(r.best->letters()) : "-")
      << "\n";
  out.flush();
  done_[{r.length, r.prefix}] = r;
}

std::size_t Checkpoint::size() const {
  std::lock_guard lock(mu_);
  return done_.size();
}

}  // namespace crucialis
