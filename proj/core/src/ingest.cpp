#include "netdiff/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "netdiff/error.hpp"
#include "netdiff/io.hpp"

namespace netdiff {
namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

unsigned char fold(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<unsigned char>(c - 'A' + 'a') : c;
}

// Lowercase ASCII, runs of whitespace collapsed to one space, trimmed.
std::string normalize_alias(std::string_view alias) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : alias) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(fold(c)));
  }
  return out;
}

// Marks the bytes of `text` that belong to word characters: ASCII letters
// and digits plus any non-ASCII code point outside the no-break space and
// the general punctuation block (curly quotes, dashes).
std::vector<bool> word_mask(std::string_view text) {
  std::vector<bool> word(text.size(), false);
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      word[i] = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
      ++i;
      continue;
    }
    std::size_t len = 1;
    if ((c & 0xE0) == 0xC0) len = 2;
    else if ((c & 0xF0) == 0xE0) len = 3;
    else if ((c & 0xF8) == 0xF0) len = 4;
    len = std::min(len, text.size() - i);

    bool is_word = true;
    const auto b1 = len > 1 ? static_cast<unsigned char>(text[i + 1]) : 0;
    if (c == 0xC2 && b1 == 0xA0) is_word = false;                      // U+00A0
    if (c == 0xE2 && (b1 == 0x80 || b1 == 0x81)) is_word = false;      // U+2000..U+207F
    for (std::size_t k = 0; k < len; ++k) word[i + k] = is_word;
    i += len;
  }
  return word;
}

struct CompiledAlias {
  std::string pattern;  // normalized
  NodeLabel owner;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text), word_(word_mask(text)) {}

  // A hyphen glued between two word characters joins them into one token.
  bool joining_hyphen(std::size_t i) const {
    return text_[i] == '-' && i > 0 && word_[i - 1] && i + 1 < text_.size() && word_[i + 1];
  }

  bool boundary_before(std::size_t pos) const {
    return pos == 0 || (!word_[pos - 1] && !joining_hyphen(pos - 1));
  }

  bool boundary_after(std::size_t end) const {
    return end == text_.size() || (!word_[end] && !joining_hyphen(end));
  }

  // End offset of `pattern` matched at `pos`, if it matches as a whole word.
  std::optional<std::size_t> match(std::size_t pos, std::string_view pattern) const {
    std::size_t t = pos;
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      if (pattern[k] == ' ') {
        if (t >= text_.size() || !is_space(static_cast<unsigned char>(text_[t]))) {
          return std::nullopt;
        }
        while (t < text_.size() && is_space(static_cast<unsigned char>(text_[t]))) ++t;
        continue;
      }
      if (t >= text_.size() || fold(static_cast<unsigned char>(text_[t])) !=
                                   static_cast<unsigned char>(pattern[k])) {
        return std::nullopt;
      }
      ++t;
    }
    if (!boundary_after(t)) return std::nullopt;
    return t;
  }

  std::size_t size() const { return text_.size(); }

 private:
  std::string_view text_;
  std::vector<bool> word_;
};

}  // namespace

ProfileCorpus load_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::MissingProfile, "'" + dir.string() + "' is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  ProfileCorpus corpus;
  for (const auto& path : files) {
    NodeLabel label(path.stem().string());
    if (corpus.profiles.contains(label)) {
      throw Error(ErrorCode::InvalidLabel, "two profiles map to '" + label.str() + "'");
    }
    corpus.profiles.emplace(std::move(label), read_file(path.string()));
  }
  return corpus;
}

void AliasTable::set(const NodeLabel& label, std::vector<std::string> aliases) {
  if (aliases.empty()) {
    throw Error(ErrorCode::InvalidLabel, "alias list for '" + label.str() + "' is empty");
  }
  for (const std::string& a : aliases) {
    if (normalize_alias(a).empty()) {
      throw Error(ErrorCode::InvalidLabel, "blank alias for '" + label.str() + "'");
    }
  }
  entries_[label] = std::move(aliases);
}

std::vector<std::string> AliasTable::aliases_for(const NodeLabel& label) const {
  auto it = entries_.find(label);
  if (it == entries_.end()) return {label.str()};
  return it->second;
}

AliasTable parse_alias_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("alias JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "alias JSON must be an object");
  AliasTable table;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_array()) {
      throw Error(ErrorCode::ParseError, "aliases of '" + key + "' must be an array");
    }
    std::vector<std::string> aliases;
    for (const auto& a : value) {
      if (!a.is_string()) {
        throw Error(ErrorCode::ParseError, "alias of '" + key + "' is not a string");
      }
      aliases.push_back(a.get<std::string>());
    }
    table.set(NodeLabel(key), std::move(aliases));
  }
  return table;
}

void MentionCounts::add(const NodeLabel& mentioner, const NodeLabel& mentioned, std::uint64_t n) {
  if (mentioner == mentioned) {
    throw Error(ErrorCode::SelfLoop, "'" + mentioner.str() + "' mentioning itself");
  }
  if (n == 0) return;
  counts_[{mentioner, mentioned}] += n;
}

std::uint64_t MentionCounts::get(const NodeLabel& mentioner, const NodeLabel& mentioned) const {
  auto it = counts_.find({mentioner, mentioned});
  return it == counts_.end() ? 0 : it->second;
}

MentionCounts count_mentions(const ProfileCorpus& corpus, const AliasTable& aliases,
                             std::span<const NodeLabel> external) {
  std::set<NodeLabel> targets(external.begin(), external.end());
  for (const auto& [label, text] : corpus.profiles) targets.insert(label);
  for (const auto& [label, list] : aliases.entries()) {
    if (!targets.contains(label)) {
      throw Error(ErrorCode::MissingProfile,
                  "'" + label.str() + "' has aliases but no profile and is not external");
    }
  }

  std::map<std::string, NodeLabel> owner;
  for (const NodeLabel& label : targets) {
    for (const std::string& alias : aliases.aliases_for(label)) {
      std::string pattern = normalize_alias(alias);
      auto [it, inserted] = owner.emplace(pattern, label);
      if (!inserted && it->second != label) {
        throw Error(ErrorCode::AliasCollision, "'" + alias + "' names both '" +
                                                   it->second.str() + "' and '" + label.str() +
                                                   "'");
      }
    }
  }

  std::vector<CompiledAlias> compiled;
  compiled.reserve(owner.size());
  for (auto& [pattern, label] : owner) compiled.push_back({pattern, label});
  std::stable_sort(compiled.begin(), compiled.end(), [](const auto& a, const auto& b) {
    return a.pattern.size() > b.pattern.size();
  });

  MentionCounts counts;
  for (const auto& [profile, text] : corpus.profiles) {
    const Scanner scan(text);
    std::map<NodeLabel, std::uint64_t> found;
    std::size_t pos = 0;
    while (pos < scan.size()) {
      std::optional<std::size_t> end;
      const CompiledAlias* hit = nullptr;
      if (scan.boundary_before(pos)) {
        for (const CompiledAlias& alias : compiled) {
          if ((end = scan.match(pos, alias.pattern))) {
            hit = &alias;
            break;
          }
        }
      }
      if (hit == nullptr) {
        ++pos;
        continue;
      }
      if (hit->owner != profile) ++found[hit->owner];
      pos = *end;
    }
    for (const auto& [mentioned, n] : found) counts.add(profile, mentioned, n);
  }
  return counts;
}

WeightedNetwork symmetrize(const MentionCounts& m, std::span<const NodeLabel> universe) {
  const std::set<NodeLabel> unique(universe.begin(), universe.end());
  std::vector<NodeLabel> labels(unique.begin(), unique.end());
  const std::size_t n = labels.size();
  auto index = [&](const NodeLabel& l) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) {
      throw Error(ErrorCode::UnknownLabel, "'" + l.str() + "' is not in the node universe");
    }
    return static_cast<std::size_t>(it - labels.begin());
  };

  std::vector<double> adjacency(n * n, 0.0);
  for (const auto& [key, count] : m.entries()) {
    const std::size_t i = index(key.first);
    const std::size_t j = index(key.second);
    adjacency[i * n + j] += static_cast<double>(count);
    adjacency[j * n + i] += static_cast<double>(count);
  }
  return WeightedNetwork::from_matrix(std::move(labels), std::move(adjacency));
}

void write_mention_counts(std::ostream& out, const MentionCounts& m) {
  out << "mentioner,mentioned,count\n";
  for (const auto& [key, count] : m.entries()) {
    out << csv_field(key.first.str()) << ',' << csv_field(key.second.str()) << ',' << count
        << '\n';
  }
}

}  // namespace netdiff
