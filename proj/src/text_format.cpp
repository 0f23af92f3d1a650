#include "jrl/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace jrl {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(std::move(w));
    if (!line.words.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t to_index(const Line& line, const std::string& word) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line.number, "expected a non-negative integer, got '" + word + "'");
  }
  return value;
}

/// Sequential reader over the non-empty lines.
class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  const Line& next(const char* expecting) {
    if (pos_ >= lines_.size()) {
      const std::size_t last = lines_.empty() ? 0 : lines_.back().number;
      throw ParseError(last + 1, std::string("unexpected end of input, expected ") + expecting);
    }
    return lines_[pos_++];
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

  /// `keyword <value>`
  std::size_t keyed_value(const char* keyword) {
    const Line& line = next(keyword);
    if (line.words.size() != 2 || line.words[0] != keyword) {
      throw ParseError(line.number, std::string("expected '") + keyword + " <index>'");
    }
    return to_index(line, line.words[1]);
  }

  Table table(const char* keyword, std::size_t order) {
    const Line& header = next(keyword);
    if (header.words.size() != 1 || header.words[0] != keyword) {
      throw ParseError(header.number, std::string("expected '") + keyword + "'");
    }
    Table table;
    table.reserve(order * order);
    for (std::size_t row = 0; row < order; ++row) {
      const Line& line = next("a table row");
      if (line.words.size() != order) {
        throw ParseError(line.number, std::string(keyword) + " row " + std::to_string(row) + " has " +
                                          std::to_string(line.words.size()) + " entries, expected " +
                                          std::to_string(order));
      }
      for (const auto& w : line.words) {
        const std::size_t v = to_index(line, w);
        if (v >= order) throw ParseError(line.number, "index " + w + " out of range");
        table.push_back(static_cast<Elem>(v));
      }
    }
    return table;
  }

  void expect_end() {
    if (!done()) throw ParseError(peek().number, "trailing content after table");
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::pair<std::string, std::size_t> header(Reader& reader, const char* keyword) {
  const Line& line = reader.next(keyword);
  if (line.words.size() != 3 || line.words[0] != keyword) {
    throw ParseError(line.number, std::string("expected '") + keyword + " <name> <order>'");
  }
  const std::size_t order = to_index(line, line.words[2]);
  if (order == 0) throw ParseError(line.number, "order must be positive");
  return {line.words[1], order};
}

Elem checked_elem(std::size_t value, std::size_t order, const char* what) {
  if (value >= order) throw Error(ErrorKind::InvalidTable, std::string(what) + " index out of range");
  return static_cast<Elem>(value);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit_table(std::ostringstream& out, const char* keyword, const Table& table, std::size_t order) {
  out << keyword << '\n';
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) out << (b ? " " : "") << table[a * order + b];
    out << '\n';
  }
}

}  // namespace

FiniteRing parse_ring_text(std::string_view text) {
  Reader reader(text);
  auto [name, order] = header(reader, "ring");
  const Elem zero = checked_elem(reader.keyed_value("zero"), order, "zero");
  const Elem one = checked_elem(reader.keyed_value("one"), order, "one");
  Table add = reader.table("add", order);
  Table mul = reader.table("mul", order);
  reader.expect_end();
  return validate_ring(order, std::move(add), std::move(mul), zero, one, std::move(name));
}

FiniteGroup parse_group_text(std::string_view text) {
  Reader reader(text);
  auto [name, order] = header(reader, "group");
  const Elem identity = checked_elem(reader.keyed_value("identity"), order, "identity");
  Table mul = reader.table("mul", order);
  reader.expect_end();
  return validate_group(order, std::move(mul), identity, std::move(name));
}

FiniteRing parse_ring_file(const std::filesystem::path& path) { return parse_ring_text(read_file(path)); }

FiniteGroup parse_group_file(const std::filesystem::path& path) { return parse_group_text(read_file(path)); }

std::variant<FiniteRing, FiniteGroup> parse_structure_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty file");
  const std::string& keyword = lines.front().words.front();
  if (keyword == "ring") return parse_ring_text(text);
  if (keyword == "group") return parse_group_text(text);
  throw ParseError(lines.front().number, "expected 'ring' or 'group' header, got '" + keyword + "'");
}

std::string emit_ring_text(const FiniteRing& ring) {
  std::ostringstream out;
  out << "ring " << (ring.name().empty() ? "R" : ring.name()) << ' ' << ring.order() << '\n';
  out << "zero " << ring.zero() << '\n';
  out << "one " << ring.one() << '\n';
  emit_table(out, "add", ring.add_table(), ring.order());
  emit_table(out, "mul", ring.mul_table(), ring.order());
  return out.str();
}

std::string emit_group_text(const FiniteGroup& group) {
  std::ostringstream out;
  out << "group " << (group.name().empty() ? "G" : group.name()) << ' ' << group.order() << '\n';
  out << "identity " << group.identity() << '\n';
  emit_table(out, "mul", group.mul_table(), group.order());
  return out.str();
}

}  // namespace jrl
