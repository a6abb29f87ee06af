#pragma once

#include <string>
#include <vector>

#include "latmorph/inclusion.hpp"
#include "latmorph/json_codec.hpp"

namespace latmorph {

/// Fixture pack compiled into the library: worked counterexamples with their
/// exact grids and verdicts, and nested sequences.
const std::string& embedded_pack_text();
Json embedded_pack();
Json parse_pack(const std::string& text);

struct PackEntryResult {
  std::string name;
  std::string kind;  // "counterexample" or "sequence"
  bool passed = true;
  std::vector<std::string> diffs;
};

struct PackReport {
  std::vector<PackEntryResult> entries;
  std::size_t counterexample_entries = 0;
  std::size_t sequence_entries = 0;

  bool passed() const;
  /// One line per entry plus indented diff lines.
  std::string summary() const;
};

PackReport run_pack(const Json& pack, unsigned jobs = 0);

/// (B1, B2, P) of every counterexample entry, for the implication audit.
std::vector<AuditInstance> audit_corpus(const Json& pack);

struct PackCase {
  std::string name;
  StructuringElement b1;
  StructuringElement b2;
  PixelSet pixels;
  std::optional<Image> image;
};
std::vector<PackCase> pack_cases(const Json& pack);
std::vector<std::pair<std::string, std::vector<StructuringElement>>> pack_sequences(const Json& pack);

}  // namespace latmorph
