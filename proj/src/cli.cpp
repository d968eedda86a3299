#include "crucialis/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "crucialis/abelian_power.hpp"
#include "crucialis/constructions.hpp"
#include "crucialis/cruciality.hpp"
#include "crucialis/errors.hpp"
#include "crucialis/search.hpp"
#include "crucialis/table.hpp"

namespace crucialis::cli {
namespace {

struct WordArgs {
  std::string text;
  bool spaced = false;
  std::optional<int> n;
  int k = 3;

  Word parse() const {
    return parse_word(text, spaced ? WordFormat::Spaced : WordFormat::Compact, n);
  }
};

struct Options {
  // construct
  std::string family;
  int n = 0;
  std::optional<int> k;
  std::string format;
  std::uint64_t construct_cap = ConstructionLimits{}.max_length;

  // check, decompose, profile
  WordArgs word;
  std::string what = "crucial";

  // search
  int search_n = 0;
  int search_k = 3;
  std::string mode = "min";
  std::size_t max_length = 64;
  std::optional<std::size_t> length;
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  unsigned threads = 0;
  bool no_symmetry = false;
  std::string strategy = "pruned";

  // table
  std::string kind;
  std::optional<std::string> n_range;
  std::optional<std::string> k_range;
  std::string output = "text";
  std::uint64_t table_cap = 2000;
};

// Compact when every letter is a single digit, comma-separated otherwise, so
// the word stays one token inside a RESULT line. The empty word prints as '-'.
std::string token(const Word& w) {
  if (w.empty()) return "-";
  if (w.alphabet_size() <= 9) return render_word(w, WordFormat::Compact);
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

void add_word_flags(CLI::App* cmd, WordArgs& w, bool k_required) {
  cmd->add_option("--word", w.text, "Word to examine")->required();
  cmd->add_flag("--spaced", w.spaced, "Word is whitespace-separated integers");
  cmd->add_option("--n", w.n, "Alphabet size (default: largest letter)")->check(CLI::Range(1, kMaxAlphabet));
  auto* k = cmd->add_option("--k", w.k, "Exponent")->check(CLI::Range(2, 1000));
  if (k_required) k->required();
}

int do_construct(const Options& o, std::ostream& out) {
  const auto f = family_from_name(o.family);
  if (!f) throw ArgumentError("unknown family '" + o.family + "'");
  const auto fixed = fixed_exponent(*f);
  if (fixed && o.k && *o.k != *fixed) {
    throw ArgumentError("family " + o.family + " requires --k " + std::to_string(*fixed));
  }
  const int k = o.k ? *o.k : fixed.value_or(0);
  if (k == 0) throw ArgumentError("--k is required for family " + o.family);
  ConstructionLimits limits;
  limits.max_length = o.construct_cap;
  const Word w = construct(*f, o.n, k, limits);
  WordFormat fmt = o.n <= 9 ? WordFormat::Compact : WordFormat::Spaced;
  if (o.format == "compact") fmt = WordFormat::Compact;
  if (o.format == "spaced") fmt = WordFormat::Spaced;
  out << render_word(w, fmt) << '\n';
  return kExitOk;
}

void print_extensions(const Word& w, int k, std::ostream& out) {
  const auto blocks = extension_blocks(w, k);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out << "letter " << i + 1 << ": ";
    if (blocks[i]) {
      out << "extension power with block " << blocks[i] << '\n';
    } else {
      out << "no extension power\n";
    }
  }
}

int do_check(const Options& o, std::ostream& out) {
  const Word w = o.word.parse();
  const int k = o.word.k;
  const auto power = find_abelian_power(w, k);
  auto describe_power = [&] {
    out << "abelian power of block " << power->block_length << " over positions " << power->start
        << ".." << power->end() << '\n';
  };
  if (o.what == "free") {
    if (power) {
      out << "RESULT: not free\n";
      describe_power();
      return kExitNegative;
    }
    out << "RESULT: free\n";
    return kExitOk;
  }
  const bool maximal = o.what == "maximal";
  const bool ok = maximal ? is_maximal(w, k) : is_crucial(w, k);
  out << "RESULT: " << (ok ? "" : "not ") << (maximal ? "maximal" : "crucial") << '\n';
  if (power) {
    describe_power();
  } else {
    print_extensions(w, k, out);
  }
  return ok ? kExitOk : kExitNegative;
}

int do_decompose(const Options& o, std::ostream& out) {
  const Word w = o.word.parse();
  const int k = o.word.k;
  try {
    const auto d = decompose(w, k);
    out << "RESULT: decomposed\n";
    const int n = w.alphabet_size();
    for (int i = 1; i <= n; ++i) {
      const auto x = static_cast<Letter>(i);
      out << "delta " << i << ": length " << d.delta_length(x) << ", block " << d.block_length(x)
          << ": " << token(d.delta(x)) << '\n';
    }
    out << "head: " << token(d.head()) << '\n';
    for (int i = 2; i <= n; ++i) out << "gap " << i << ": " << token(d.gap(static_cast<Letter>(i))) << '\n';
    for (int i = 1; i <= n; ++i) {
      out << "blocks " << i << ":";
      for (int j = 1; j <= k; ++j) out << ' ' << token(d.block(static_cast<Letter>(i), j));
      out << '\n';
    }
    return kExitOk;
  } catch (const NamingError& e) {
    out << "RESULT: not nested letters=" << e.first_letter << ',' << e.second_letter << '\n';
    out << e.what() << '\n';
    try {
      out << "normalized: " << token(normalize(w, k).word) << '\n';
    } catch (const std::logic_error&) {
    }
    return kExitNegative;
  } catch (const StateError& e) {
    out << "RESULT: not crucial\n" << e.what() << '\n';
    return kExitNegative;
  }
}

int do_profile(const Options& o, std::ostream& out) {
  const Word w = o.word.parse();
  const auto p = occurrence_profile(w);
  const auto check = profile_violations(p, o.word.k);
  if (check.ok()) {
    out << "RESULT: consistent\n";
  } else {
    out << "RESULT: violations=";
    for (std::size_t i = 0; i < check.violations.size(); ++i) {
      out << (i ? "," : "") << to_string(check.violations[i]);
    }
    out << '\n';
  }
  out << "profile: " << p.a0 << ';';
  for (std::size_t i = 0; i < p.rest.size(); ++i) out << (i ? ", " : " ") << p.rest[i];
  out << '\n';
  if (!check.configurations_checked) out << "note: only the divisibility constraint applies for k != 3\n";
  return check.ok() ? kExitOk : kExitNegative;
}

std::optional<std::filesystem::path> checkpoint_path(const SearchConfig& cfg) {
  const char* dir = std::getenv("CRUCIALIS_CHECKPOINT_DIR");
  if (!dir || !*dir || cfg.mode == SearchMode::EnumerateAllCrucialAtLength) return std::nullopt;
  std::ostringstream name;
  name << "search-n" << cfg.n << "-k" << cfg.k << '-'
       << (cfg.strategy == SearchStrategy::Pruned ? "pruned" : "plain")
       << (cfg.symmetry_reduction ? "" : "-nosym") << ".ckpt";
  return std::filesystem::path(dir) / name.str();
}

int do_search(const Options& o, std::ostream& out) {
  SearchConfig cfg;
  cfg.n = o.search_n;
  cfg.k = o.search_k;
  cfg.max_length = o.max_length;
  cfg.symmetry_reduction = !o.no_symmetry;
  cfg.node_budget = o.node_budget;
  if (o.time_budget) cfg.time_budget = std::chrono::duration<double>(*o.time_budget);
  cfg.threads = o.threads;
  cfg.strategy = o.strategy == "plain" ? SearchStrategy::Plain : SearchStrategy::Pruned;
  if (o.mode == "min") {
    cfg.mode = SearchMode::FindMinimalCrucial;
  } else {
    if (!o.length) throw ArgumentError("--length is required for --mode " + o.mode);
    cfg.target_length = *o.length;
    cfg.mode = o.mode == "enumerate" ? SearchMode::EnumerateAllCrucialAtLength
                                     : SearchMode::VerifyNoneBelow;
  }
  cfg.checkpoint = checkpoint_path(cfg);

  const SearchResult r = search(cfg);
  auto details = [&] {
    out << "nodes_expanded=" << r.nodes_expanded << '\n';
    out << "lengths_completed=" << r.lengths_completed << '\n';
  };

  if (cfg.mode == SearchMode::EnumerateAllCrucialAtLength) {
    out << "RESULT: " << (r.truncated ? "truncated" : "complete") << " count=" << r.words.size()
        << " length=" << cfg.target_length << '\n';
    details();
    for (const Word& w : r.words) out << token(w) << '\n';
    if (r.truncated) out << "# truncated\n";
    return r.truncated ? kExitBudget : kExitOk;
  }

  if (!r.exhaustive) {
    out << "RESULT: budget_exhausted lengths_completed=" << r.lengths_completed << '\n';
    details();
    return kExitBudget;
  }
  if (cfg.mode == SearchMode::VerifyNoneBelow) {
    if (r.minimal_length) {
      out << "RESULT: found length=" << *r.minimal_length << " witness=" << token(*r.witness)
          << '\n';
      details();
      return kExitNegative;
    }
    out << "RESULT: none_below=" << cfg.target_length << " exhaustive=true\n";
    details();
    return kExitOk;
  }
  if (!r.minimal_length) {
    out << "RESULT: minimal_length=none max_length=" << cfg.max_length << " exhaustive=true\n";
    details();
    return kExitNegative;
  }
  out << "RESULT: minimal_length=" << *r.minimal_length << " witness=" << token(*r.witness)
      << " exhaustive=true\n";
  out << "crucial_words_found=" << r.crucial_words_found << '\n';
  details();
  return kExitOk;
}

int do_table(const Options& o, std::ostream& out) {
  const TableFormat format = table_format_from_name(o.output);
  if (o.kind == "bounds") {
    const IntRange n = parse_range(o.n_range.value_or("1..12"));
    const IntRange k = parse_range(o.k_range.value_or("2..6"));
    out << emit_bounds_table(n, k, format);
  } else {
    const IntRange n = parse_range(o.n_range.value_or("1..8"));
    const IntRange k = parse_range(o.k_range.value_or("2..5"));
    out << render_table(families_table(n, k, o.table_cap), format);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crucial abelian-power-free words: constructions, checks and exhaustive search",
               "crucialis"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "Print a construction");
  std::vector<std::string> names;
  for (Family f : kAllFamilies) names.emplace_back(family_name(f));
  construct_cmd->add_option("--family", o.family, "Construction family")
      ->required()
      ->check(CLI::IsMember(names));
  construct_cmd->add_option("--n", o.n, "Alphabet size")->required()->check(CLI::Range(1, kMaxAlphabet));
  construct_cmd->add_option("--k", o.k, "Exponent")->check(CLI::Range(2, 1000));
  construct_cmd->add_option("--format", o.format, "compact or spaced")
      ->check(CLI::IsMember({"compact", "spaced"}));
  construct_cmd->add_option("--max-length", o.construct_cap, "Refuse words longer than this");

  auto* check_cmd = app.add_subcommand("check", "Test a word for freeness, cruciality or maximality");
  add_word_flags(check_cmd, o.word, true);
  check_cmd->add_option("--what", o.what, "free, crucial or maximal")
      ->check(CLI::IsMember({"free", "crucial", "maximal"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a crucial word into its suffix chain");
  add_word_flags(decompose_cmd, o.word, true);

  auto* profile_cmd = app.add_subcommand("profile", "Letter-count profile and forbidden configurations");
  add_word_flags(profile_cmd, o.word, false);

  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for minimal crucial words");
  search_cmd->add_option("--n", o.search_n, "Alphabet size")->required()->check(CLI::Range(1, kMaxAlphabet));
  search_cmd->add_option("--k", o.search_k, "Exponent")->check(CLI::Range(2, 1000));
  search_cmd->add_option("--mode", o.mode, "min, none-below or enumerate")
      ->check(CLI::IsMember({"min", "none-below", "enumerate"}));
  search_cmd->add_option("--length", o.length, "Target length for none-below and enumerate")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-length", o.max_length, "Longest length tried by min")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--node-budget", o.node_budget, "Stop after this many nodes")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--time-budget", o.time_budget, "Stop after this many seconds")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  search_cmd->add_flag("--no-symmetry", o.no_symmetry, "Explore every letter naming");
  search_cmd->add_option("--strategy", o.strategy, "pruned or plain")
      ->check(CLI::IsMember({"pruned", "plain"}));

  auto* table_cmd = app.add_subcommand("table", "Bounds or construction tables");
  table_cmd->add_option("kind", o.kind, "bounds or families")
      ->required()
      ->check(CLI::IsMember({"bounds", "families"}));
  table_cmd->add_option("--n", o.n_range, "Alphabet sizes, e.g. 4..12");
  table_cmd->add_option("--k", o.k_range, "Exponents, e.g. 2..6");
  table_cmd->add_option("--output", o.output, "text, csv or markdown")
      ->check(CLI::IsMember({"text", "csv", "markdown"}));
  table_cmd->add_option("--max-length", o.table_cap, "Omit constructions longer than this");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (construct_cmd->parsed()) return do_construct(o, out);
    if (check_cmd->parsed()) return do_check(o, out);
    if (decompose_cmd->parsed()) return do_decompose(o, out);
    if (profile_cmd->parsed()) return do_profile(o, out);
    if (search_cmd->parsed()) return do_search(o, out);
    if (table_cmd->parsed()) return do_table(o, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace crucialis::cli
