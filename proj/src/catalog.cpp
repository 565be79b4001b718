#include "hyperlat/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hyperlat/errors.hpp"
#include "hyperlat/folding.hpp"
#include "hyperlat/fusion.hpp"

#ifndef HYPERLAT_DEFAULT_DATA_DIR
#define HYPERLAT_DEFAULT_DATA_DIR "data/modules"
#endif

namespace hyperlat {

namespace {

std::size_t a_rank(int k) { return static_cast<std::size_t>((k + 1) * (k + 2) / 2); }

struct Line {
  int number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  Line next(const std::string& expecting) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::string t = trim(raw);
      if (!t.empty()) return {number_, t};
    }
    throw ParseError(number_ + 1, "unexpected end of file, expected " + expecting);
  }

  std::optional<Line> next_optional() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::string t = trim(raw);
      if (!t.empty()) return Line{number_, t};
    }
    return std::nullopt;
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::string value_of(const Line& line, const std::string& key) {
  const std::string prefix = key + ":";
  if (line.text.compare(0, prefix.size(), prefix) != 0)
    throw ParseError(line.number, "expected '" + prefix + "'");
  return trim(line.text.substr(prefix.size()));
}

long parse_long(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "not an integer: '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "not an integer: '" + tok + "'");
  return v;
}

std::vector<long> parse_row(const Line& line, const std::string& text) {
  std::istringstream is(text);
  std::vector<long> out;
  std::string tok;
  while (is >> tok) out.push_back(parse_long(tok, line.number));
  return out;
}

}  // namespace

std::vector<CatalogEntry> supported_modules() {
  std::vector<CatalogEntry> out;
  for (int k = 0; k <= 6; ++k) out.push_back({"A", k, a_rank(k)});
  out.push_back({"D", 3, 6});
  out.push_back({"D", 6, 12});
  out.push_back({"E5", 5, 12});
  out.push_back({"E9", 9, 12});
  out.push_back({"E21", 21, 24});
  return out;
}

std::optional<std::size_t> expected_rank(const std::string& name, int level) {
  if (level < 0) return std::nullopt;
  if (name == "A") return a_rank(level);
  if (name == "D" && level % 3 == 0 && level > 0) return (a_rank(level) - 1) / 3 + 3;
  if (name == "E5" && level == 5) return 12;
  if (name == "E9" && level == 9) return 12;
  if (name == "E21" && level == 21) return 24;
  return std::nullopt;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("HYPERLAT_DATA_DIR"); env && *env) return env;
  return HYPERLAT_DEFAULT_DATA_DIR;
}

QuantumModule parse_module(std::istream& in) {
  LineReader reader(in);
  QuantumModule m;

  const Line name_line = reader.next("'name:'");
  m.name = value_of(name_line, "name");
  if (m.name.empty()) throw ParseError(name_line.number, "empty module name");

  const Line level_line = reader.next("'level:'");
  const long level = parse_long(value_of(level_line, "level"), level_line.number);
  if (level < 0) throw ParseError(level_line.number, "level must be non-negative");
  m.level = static_cast<int>(level);

  const Line rank_line = reader.next("'rank:'");
  const long r = parse_long(value_of(rank_line, "rank"), rank_line.number);
  if (r <= 0) throw ParseError(rank_line.number, "rank must be positive");
  const auto rank = static_cast<std::size_t>(r);

  const Line tri_line = reader.next("'triality:'");
  const auto tri = parse_row(tri_line, value_of(tri_line, "triality"));
  if (tri.size() != rank) {
    std::ostringstream os;
    os << "triality has " << tri.size() << " entries, expected " << rank;
    throw ParseError(tri_line.number, os.str());
  }
  for (long t : tri) {
    if (t < 0 || t > 2) throw ParseError(tri_line.number, "triality values must lie in 0..2");
    m.triality.push_back(static_cast<int>(t));
  }

  const Line adj_line = reader.next("'adjacency:'");
  if (!value_of(adj_line, "adjacency").empty())
    throw ParseError(adj_line.number, "matrix rows must start on the next line");
  m.adjacency = IntMatrix(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const Line row_line = reader.next("adjacency row " + std::to_string(i + 1));
    const auto row = parse_row(row_line, row_line.text);
    if (row.size() != rank) {
      std::ostringstream os;
      os << "adjacency row has " << row.size() << " entries, expected " << rank;
      throw ParseError(row_line.number, os.str());
    }
    for (std::size_t j = 0; j < rank; ++j) {
      if (row[j] < 0) throw ParseError(row_line.number, "adjacency entries must be non-negative");
      m.adjacency(i, j) = row[j];
    }
  }
  if (auto extra = reader.next_optional()) throw ParseError(extra->number, "trailing content after adjacency");
  return m;
}

QuantumModule load_module_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open module file " + path.string());
  QuantumModule m = parse_module(in);
  validate_module(m);
  return m;
}

void write_module(std::ostream& out, const QuantumModule& m) {
  out << "name: " << m.name << '\n' << "level: " << m.level << '\n' << "rank: " << m.rank() << '\n';
  out << "triality:";
  for (int t : m.triality) out << ' ' << t;
  out << "\nadjacency:\n" << m.adjacency;
}

void validate_module(const QuantumModule& m) {
  const std::size_t r = m.rank();
  if (r == 0 || !m.adjacency.square()) throw ValidationError("shape: adjacency must be a non-empty square matrix");
  if (m.triality.size() != r) throw ValidationError("shape: one triality value per vertex is required");
  if (m.level < 0) throw ValidationError("level: must be non-negative");
  for (int t : m.triality)
    if (t < 0 || t > 2) throw ValidationError("triality: values must lie in 0..2");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      if (m.adjacency(a, b) < 0) throw ValidationError("adjacency: negative entry");
      if (m.adjacency(a, b) > 0 && m.triality[b] != (m.triality[a] + 1) % 3) {
        std::ostringstream os;
        os << "grading: edge " << a << " -> " << b << " joins trialities " << m.triality[a] << " and "
           << m.triality[b];
        throw ValidationError(os.str());
      }
    }
  if (auto want = expected_rank(m.name, m.level); want && *want != r) {
    std::ostringstream os;
    os << "rank: " << m.name << " at level " << m.level << " has " << *want << " vertices, file has " << r;
    throw ValidationError(os.str());
  }
  bool graded = false;
  for (int t : m.triality) graded = graded || t != m.triality.front();
  if (m.level == 0) return;
  const ExtendedFusion ext(build_alcove_fusion(m.adjacency, m.level));
  if (graded) ext.twist_P();
}

QuantumModule get_module(const std::string& name, int level) {
  if (level < 0) throw DomainError("level must be non-negative");
  if (name == "A") return builtin_A_generator(level);
  std::string file;
  if (name == "D") {
    if (level == 0 || level % 3 != 0) throw DomainError("D modules need a positive level divisible by 3");
    file = "D" + std::to_string(level) + ".mod";
  } else if (name == "E5" || name == "E9" || name == "E21") {
    if (!expected_rank(name, level)) throw DomainError(name + " exists only at level " + name.substr(1));
    file = name + ".mod";
  } else {
    throw DomainError("unknown module '" + name + "' (expected A, D, E5, E9 or E21)");
  }
  const auto path = data_dir() / file;
  if (!std::filesystem::exists(path)) throw DomainError("no module data for " + name + " at level " + std::to_string(level) + " (" + path.string() + ")");
  QuantumModule m = load_module_file(path);
  const std::string expect_name = name == "D" ? "D" : name;
  if (m.name != expect_name || m.level != level)
    throw ValidationError("header: " + path.string() + " describes " + m.name + " at level " + std::to_string(m.level));
  return m;
}

}  // namespace hyperlat
