#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "jrl/builtins.hpp"
#include "jrl/crosscheck.hpp"
#include "jrl/text_format.hpp"
#include "test_util.hpp"

using namespace jrl;
namespace fs = std::filesystem;

namespace {

constexpr const char* z4_text = R"(# integers mod 4
ring Z4 4
zero 0
one 1
add
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
mul
0 0 0 0
0 1 2 3
0 2 0 2
0 3 2 1
)";

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("jrl-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

std::size_t line_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no ParseError");
  return 0;
}

}  // namespace

TEST_CASE("parse a well-formed ring") {
  const FiniteRing r = parse_ring_text(z4_text);
  CHECK(r.order() == 4);
  CHECK(r.name() == "Z4");
  CHECK(r == builtin_ring("Z4"));
}

TEST_CASE("parse errors carry line numbers") {
  std::string short_row = z4_text;
  short_row.replace(short_row.find("0 3 2 1"), 7, "0 3 2");
  CHECK(line_of([&] { parse_ring_text(short_row); }) == 14);

  CHECK(line_of([] { parse_ring_text(""); }) == 1);
  CHECK(line_of([] { parse_ring_text("ring Z4 four\n"); }) == 1);
  CHECK(line_of([&] { parse_ring_text(std::string(z4_text) + "extra\n"); }) == 15);
  std::string out_of_range = z4_text;
  out_of_range.replace(out_of_range.find("3 0 1 2"), 7, "3 0 1 9");
  CHECK(line_of([&] { parse_ring_text(out_of_range); }) == 9);
}

TEST_CASE("parsed tables are validated") {
  // Corrupt 3·3 = 1 into 3·3 = 3: associative still, but 3·(1 + 2) != 3·1 + 3·2.
  std::string bad = z4_text;
  bad.replace(bad.rfind("0 3 2 1"), 7, "0 3 2 3");
  const std::string msg = expect_error(ErrorKind::NotDistributive, [&] { parse_ring_text(bad); });
  CHECK(msg.find("NotDistributive") != std::string::npos);
  expect_error(ErrorKind::NoInverse, [] { parse_group_text("group M 2\nidentity 0\nmul\n0 1\n1 1\n"); });
}

TEST_CASE("emit then parse reproduces every built-in") {
  for (const auto& name : builtin_ring_names()) {
    const FiniteRing r = builtin_ring(name);
    CHECK(parse_ring_text(emit_ring_text(r)) == r);
  }
  for (const auto& name : builtin_group_names()) {
    const FiniteGroup g = builtin_group(name);
    CHECK(parse_group_text(emit_group_text(g)) == g);
  }
}

TEST_CASE("files and catalogs") {
  TempDir dir;
  const auto ring = dir.write("z4.ring", z4_text);
  const auto group = dir.write("d4.group", emit_group_text(builtin_group("D4")));
  dir.write("c2.group", emit_group_text(builtin_group("C2")));
  dir.write("notes.txt", "ignored\n");

  CHECK(std::holds_alternative<FiniteRing>(parse_structure_file(ring)));
  CHECK(std::holds_alternative<FiniteGroup>(parse_structure_file(group)));
  CHECK(resolve_ring(ring.string()) == builtin_ring("Z4"));
  CHECK(resolve_group("builtin:Q8") == builtin_group("Q8"));
  expect_error(ErrorKind::Io, [&] { parse_ring_file(dir.path / "missing.ring"); });
  expect_error(ErrorKind::UnknownName, [] { resolve_ring("builtin:R7"); });

  const auto entries = catalog_from_directory(dir.path);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0] == CatalogEntry{ring.string(), (dir.path / "c2.group").string()});
  CHECK(entries[1] == CatalogEntry{ring.string(), group.string()});
  const auto records = crosscheck(entries);
  CHECK(records[0].oracle == 3);
  CHECK(records[1].oracle == 4);
  CHECK_FALSE(any_disagree(records));
  expect_error(ErrorKind::Io, [&] { catalog_from_directory(dir.path / "nope"); });
}

TEST_CASE("cross-check records") {
  const auto records = crosscheck({{"builtin:Z4", "builtin:D4"},
                                   {"builtin:M2(F2)", "builtin:C2"},
                                   {"builtin:Z3", "builtin:C2"},
                                   {"builtin:H16", "builtin:D4xD4"}});
  REQUIRE(records.size() == 4);
  CHECK(records[0].predicted->index == 4);
  CHECK(records[0].oracle == 4);
  CHECK(records[0].status == Status::Agree);

  CHECK_FALSE(records[1].predicted->index.has_value());
  CHECK_FALSE(records[1].oracle.has_value());
  CHECK(records[1].status == Status::Agree);

  // Z3 is odd characteristic: not Jordan nilpotent, predicted NotWithinFour.
  CHECK(records[2].status == Status::Agree);

  CHECK(records[3].status == Status::Skipped);
  CHECK_FALSE(records[3].note.empty());

  const auto bad = crosscheck({{"builtin:Nope", "builtin:C2"}, {"builtin:Z2", "builtin:C2"}});
  CHECK(bad[0].status == Status::Error);
  CHECK(bad[0].note.find("UnknownName") != std::string::npos);
  CHECK(bad[1].status == Status::Agree);

  expect_error(ErrorKind::InvalidExponent, [] { crosscheck({}, {3}); });
}

TEST_CASE("agreement rule") {
  ClassificationResult index3;
  index3.index = 3;
  CHECK(agrees(index3, 3));
  CHECK_FALSE(agrees(index3, 4));
  CHECK_FALSE(agrees(index3, std::nullopt));
  const ClassificationResult none;
  CHECK(agrees(none, std::nullopt));
  CHECK(agrees(none, 5));
  CHECK_FALSE(agrees(none, 4));
  CHECK_FALSE(agrees(none, 2));
}

TEST_CASE("report format") {
  std::ostringstream empty;
  write_report(empty, {});
  CHECK(empty.str() == "ring\tgroup\tpredicted\tclause\toracle\tstatus\tms\n");

  auto records = crosscheck({{"builtin:Z2", "builtin:C2"}, {"builtin:Z2", "builtin:S3"}});
  std::ostringstream out;
  write_report(out, records, false);
  CHECK(out.str() ==
        "ring\tgroup\tpredicted\tclause\toracle\tstatus\tms\n"
        "builtin:Z2\tbuiltin:C2\t2\tcommutative-char2-abelian\t2\tAgree\t-\n"
        "builtin:Z2\tbuiltin:S3\tNotWithinFour\tnone\tNotWithinBound\tAgree\t-\n");
  CHECK_FALSE(any_disagree(records));

  // A fabricated mismatch is flagged.
  records[0].oracle = 3;
  records[0].status = agrees(*records[0].predicted, records[0].oracle) ? Status::Agree : Status::Disagree;
  CHECK(records[0].status == Status::Disagree);
  CHECK(any_disagree(records));

  TempDir dir;
  emit_report({}, dir.path / "empty.tsv");
  std::ifstream in(dir.path / "empty.tsv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "ring\tgroup\tpredicted\tclause\toracle\tstatus\tms");
  expect_error(ErrorKind::Io, [&] { emit_report({}, dir.path / "no" / "such" / "dir.tsv"); });
}
