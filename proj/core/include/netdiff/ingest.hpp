#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netdiff/network.hpp"

namespace netdiff {

/// Profile text per node.
struct ProfileCorpus {
  std::map<NodeLabel, std::string> profiles;
};

/// Loads every `<label>.txt` file in `dir`. Throws MissingProfile when the
/// directory cannot be read and InvalidLabel when two files map to the
/// same label.
ProfileCorpus load_corpus(const std::filesystem::path& dir);

/// Strings that count as a mention of each node. Labels without an entry
/// are matched by their own text only.
class AliasTable {
 public:
  /// Throws InvalidLabel on an empty list or an empty/blank alias.
  void set(const NodeLabel& label, std::vector<std::string> aliases);
  std::vector<std::string> aliases_for(const NodeLabel& label) const;
  const std::map<NodeLabel, std::vector<std::string>>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<NodeLabel, std::vector<std::string>> entries_;
};

/// `{"label": ["alias", ...], ...}`. Throws ParseError.
AliasTable parse_alias_json(std::string_view json);

/// Directed counts n(i, j): how often profile i mentions j. Zero counts are
/// not stored.
class MentionCounts {
 public:
  using Key = std::pair<NodeLabel, NodeLabel>;

  void add(const NodeLabel& mentioner, const NodeLabel& mentioned, std::uint64_t n);
  std::uint64_t get(const NodeLabel& mentioner, const NodeLabel& mentioned) const;
  const std::map<Key, std::uint64_t>& entries() const noexcept { return counts_; }

  friend bool operator==(const MentionCounts&, const MentionCounts&) = default;

 private:
  std::map<Key, std::uint64_t> counts_;
};

/// Counts whole-word, case-insensitive, non-overlapping occurrences of every
/// alias in every profile, trying longer aliases first. A profile's own
/// aliases are consumed but not counted. `external` lists nodes that can be
/// mentioned without having a profile.
///
/// Throws MissingProfile when an alias-table label is neither in the corpus
/// nor external, and AliasCollision when one alias belongs to two labels.
MentionCounts count_mentions(const ProfileCorpus& corpus, const AliasTable& aliases,
                             std::span<const NodeLabel> external = {});

/// Weight of {i, j} = n(i, j) + n(j, i). Every label in `universe` becomes a
/// node, possibly isolated. Throws UnknownLabel when `m` names a label
/// outside `universe`.
WeightedNetwork symmetrize(const MentionCounts& m, std::span<const NodeLabel> universe);

/// `mentioner,mentioned,count`, sorted, zero counts omitted.
void write_mention_counts(std::ostream& out, const MentionCounts& m);

}  // namespace netdiff
