#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "jrl/classifier.hpp"

namespace jrl {

/// Names are `builtin:<name>` or a path to a ring/group file.
struct CatalogEntry {
  std::string ring_name;
  std::string group_name;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

FiniteRing resolve_ring(std::string_view name);
FiniteGroup resolve_group(std::string_view name);

/// All built-in rings × all built-in groups, ring major.
std::vector<CatalogEntry> default_catalog();
/// Every `*.ring` file × every `*.group` file in `dir`, sorted by file name.
std::vector<CatalogEntry> catalog_from_directory(const std::filesystem::path& dir);

enum class Status { Agree, Disagree, Skipped, Error };
std::string_view to_string(Status status);

struct CrossCheckRecord {
  CatalogEntry entry;
  std::optional<ClassificationResult> predicted;  // empty on Error
  std::optional<int> oracle;                      // minimal index, empty = not within bound
  Status status = Status::Error;
  std::string note;  // reason for Skipped / Error
  double elapsed_ms = 0;
};

struct CrossCheckOptions {
  int max_index = default_max_index;
  unsigned jobs = 1;
  /// Entries whose spanning set has more than this many degree-4 tuples are skipped.
  double tuple_budget = 1e8;
};

/// Index(n) agrees with oracle n; NotWithinFour agrees with an oracle that
/// finds nothing up to 4.
bool agrees(const ClassificationResult& predicted, std::optional<int> oracle);

/// Records come back in input order. A failing entry yields an Error record;
/// the run continues.
std::vector<CrossCheckRecord> crosscheck(const std::vector<CatalogEntry>& entries, const CrossCheckOptions& options = {});

/// Header plus one TSV row per record:
/// ring, group, predicted, clause, oracle, status, ms.
void write_report(std::ostream& out, const std::vector<CrossCheckRecord>& records, bool include_timing = true);
void emit_report(const std::vector<CrossCheckRecord>& records, const std::filesystem::path& path,
                 bool include_timing = true);

bool any_disagree(const std::vector<CrossCheckRecord>& records);

}  // namespace jrl
