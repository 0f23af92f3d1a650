#include "jrl/crosscheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include "jrl/builtins.hpp"
#include "jrl/text_format.hpp"

namespace jrl {
namespace {

constexpr std::string_view builtin_prefix = "builtin:";

std::optional<std::string_view> builtin_name(std::string_view name) {
  if (name.starts_with(builtin_prefix)) return name.substr(builtin_prefix.size());
  return std::nullopt;
}

}  // namespace

FiniteRing resolve_ring(std::string_view name) {
  if (const auto b = builtin_name(name)) return builtin_ring(*b);
  return parse_ring_file(std::filesystem::path(name));
}

FiniteGroup resolve_group(std::string_view name) {
  if (const auto b = builtin_name(name)) return builtin_group(*b);
  return parse_group_file(std::filesystem::path(name));
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> entries;
  for (const auto& r : builtin_ring_names())
    for (const auto& g : builtin_group_names())
      entries.push_back({std::string(builtin_prefix) + r, std::string(builtin_prefix) + g});
  return entries;
}

std::vector<CatalogEntry> catalog_from_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::Io, dir.string() + " is not a directory");
  std::vector<std::string> rings, groups;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (!item.is_regular_file()) continue;
    if (item.path().extension() == ".ring") rings.push_back(item.path().string());
    if (item.path().extension() == ".group") groups.push_back(item.path().string());
  }
  std::sort(rings.begin(), rings.end());
  std::sort(groups.begin(), groups.end());
  std::vector<CatalogEntry> entries;
  for (const auto& r : rings)
    for (const auto& g : groups) entries.push_back({r, g});
  return entries;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Agree: return "Agree";
    case Status::Disagree: return "Disagree";
    case Status::Skipped: return "Skipped";
    case Status::Error: return "Error";
  }
  return "?";
}

bool agrees(const ClassificationResult& predicted, std::optional<int> oracle) {
  if (predicted.index) return oracle == predicted.index;
  return !oracle || *oracle > 4;
}

std::vector<CrossCheckRecord> crosscheck(const std::vector<CatalogEntry>& entries, const CrossCheckOptions& options) {
  if (options.max_index < 4) throw Error(ErrorKind::InvalidExponent, "cross-check needs a maximum index of at least 4");
  std::vector<CrossCheckRecord> records;
  records.reserve(entries.size());
  for (const auto& entry : entries) {
    CrossCheckRecord record;
    record.entry = entry;
    const auto started = std::chrono::steady_clock::now();
    try {
      FiniteRing ring = resolve_ring(entry.ring_name);
      FiniteGroup group = resolve_group(entry.group_name);
      record.predicted = classify(ring, group);
      const SpanningSet span(GroupRing::make(std::move(ring), std::move(group)));
      const double tuples = std::pow(static_cast<double>(span.size()), 4);
      if (tuples > options.tuple_budget) {
        record.status = Status::Skipped;
        record.note = "spanning set of " + std::to_string(span.size()) + " exceeds the degree-4 tuple budget";
      } else {
        record.oracle = minimal_jordan_index(span, options.max_index, {options.jobs});
        record.status = agrees(*record.predicted, record.oracle) ? Status::Agree : Status::Disagree;
      }
    } catch (const Error& e) {
      record.status = Status::Error;
      record.note = e.what();
    }
    record.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    records.push_back(std::move(record));
  }
  return records;
}

void write_report(std::ostream& out, const std::vector<CrossCheckRecord>& records, bool include_timing) {
  out << "ring\tgroup\tpredicted\tclause\toracle\tstatus\tms\n";
  for (const auto& r : records) {
    out << r.entry.ring_name << '\t' << r.entry.group_name << '\t';
    if (r.predicted) {
      out << verdict_text(*r.predicted) << '\t' << to_string(r.predicted->clause) << '\t';
    } else {
      out << "-\t-\t";
    }
    if (r.status == Status::Agree || r.status == Status::Disagree) {
      out << (r.oracle ? std::to_string(*r.oracle) : std::string("NotWithinBound"));
    } else {
      out << '-';
    }
    out << '\t' << to_string(r.status) << '\t';
    if (include_timing) {
      out << static_cast<long long>(std::llround(r.elapsed_ms));
    } else {
      out << '-';
    }
    out << '\n';
  }
}

void emit_report(const std::vector<CrossCheckRecord>& records, const std::filesystem::path& path, bool include_timing) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_report(out, records, include_timing);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

bool any_disagree(const std::vector<CrossCheckRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.status == Status::Disagree; });
}

}  // namespace jrl
