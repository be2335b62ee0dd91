#include "dikin/mps.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace dikin {

namespace {

constexpr double kMpsInfinity = 1e30;
// Dense storage limit for m * n.
constexpr double kMaxDenseEntries = 5e7;

std::string format_message(MpsError::Kind kind, std::size_t line, const std::string& message) {
  std::ostringstream os;
  os << to_string(kind);
  if (line > 0) os << " at line " << line;
  os << ": " << message;
  return os.str();
}

enum class Section { None, Name, Rows, Columns, Rhs, Bounds, End };

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Fixed-format fields at 1-based columns 2-3, 5-12, 15-22, 25-36, 40-47, 50-61.
std::vector<std::string_view> fixed_fields(std::string_view line) {
  static constexpr std::pair<std::size_t, std::size_t> kFields[] = {{1, 2}, {4, 8}, {14, 8}, {24, 12}, {39, 8}, {49, 12}};
  std::vector<std::string_view> out;
  for (const auto& [begin, len] : kFields) {
    if (begin >= line.size()) break;
    out.push_back(trim(line.substr(begin, len)));
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::optional<double> try_number(std::string_view token) {
  std::string text(token);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  for (auto& ch : text) {
    if (ch == 'D' || ch == 'd') ch = 'e';
  }
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || std::isnan(value)) return std::nullopt;
  return value;
}

double parse_number(std::string_view token, std::size_t line) {
  const auto value = try_number(token);
  if (!value) throw MpsError(MpsError::Kind::MalformedNumber, line, "'" + std::string(token) + "' is not a number");
  return *value;
}

// Whitespace tokens read as (name, value) pairs starting at `first`.
bool numeric_pairs(const std::vector<std::string_view>& tok, std::size_t first) {
  for (std::size_t i = first + 1; i < tok.size(); i += 2)
    if (!try_number(tok[i])) return false;
  return true;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  return out;
}

bool any_empty(const std::vector<std::string_view>& fields) {
  return std::any_of(fields.begin(), fields.end(), [](std::string_view f) { return f.empty(); });
}

void read_rows_line(std::string_view line, std::size_t lineno, MpsDocument& doc) {
  auto tok = split_ws(line);
  if (tok.size() != 2) {
    tok = fixed_fields(line);
    if (tok.size() != 2 || any_empty(tok))
      throw MpsError(MpsError::Kind::MalformedLine, lineno, "ROWS entry needs a type and a name");
  }
  const std::string sense = upper(tok[0]);
  if (sense.size() != 1 || std::string_view("NELG").find(sense[0]) == std::string_view::npos)
    throw MpsError(MpsError::Kind::MalformedLine, lineno, "unknown row type '" + std::string(tok[0]) + "'");
  doc.rows.push_back({sense[0], std::string(tok[1]), lineno});
}

void read_columns_line(std::string_view line, std::size_t lineno, MpsDocument& doc) {
  auto tok = split_ws(line);
  for (const auto t : tok) {
    if (upper(t).find("MARKER") != std::string::npos)
      throw MpsError(MpsError::Kind::Unsupported, lineno, "integer MARKER sections are not supported");
  }
  const bool free_shape = tok.size() == 3 || tok.size() == 5;
  if (!free_shape || !numeric_pairs(tok, 1)) {
    auto fixed = fixed_fields(line);
    if (!fixed.empty()) fixed.erase(fixed.begin());  // field 1 is unused in COLUMNS
    const bool fixed_ok = (fixed.size() == 3 || fixed.size() == 5) && !any_empty(fixed) && numeric_pairs(fixed, 1);
    if (fixed_ok) {
      tok = std::move(fixed);
    } else if (!free_shape) {
      throw MpsError(MpsError::Kind::MalformedLine, lineno, "COLUMNS entry needs column, row, value [, row, value]");
    }
  }
  for (std::size_t i = 1; i + 1 < tok.size(); i += 2) {
    doc.columns.push_back({std::string(tok[0]), std::string(tok[i]), parse_number(tok[i + 1], lineno), lineno});
  }
}

// Only the first RHS set is used.
void read_rhs_line(std::string_view line, std::size_t lineno, MpsDocument& doc, std::string& rhs_set) {
  auto tok = split_ws(line);
  std::string_view set;
  std::size_t first = 0;
  const bool with_set = tok.size() == 3 || tok.size() == 5;
  const bool without_set = tok.size() == 2 || tok.size() == 4;
  if (!(with_set && numeric_pairs(tok, 1)) && !(without_set && numeric_pairs(tok, 0))) {
    // Names with embedded spaces only make sense in fixed columns.
    auto fixed = fixed_fields(line);
    if (!fixed.empty()) fixed.erase(fixed.begin());
    const bool fixed_ok = (fixed.size() == 3 || fixed.size() == 5) && !any_empty(fixed) && numeric_pairs(fixed, 1);
    if (fixed_ok) {
      tok = std::move(fixed);
    } else if (!with_set && !without_set) {
      throw MpsError(MpsError::Kind::MalformedLine, lineno, "RHS entry needs [set,] row, value [, row, value]");
    }
  }
  if (tok.size() % 2 == 1) {
    set = tok[0];
    first = 1;
  }
  if (!set.empty()) {
    if (rhs_set.empty()) {
      rhs_set = std::string(set);
    } else if (rhs_set != set) {
      return;
    }
  }
  for (std::size_t i = first; i + 1 < tok.size(); i += 2) {
    doc.rhs.push_back({std::string(tok[i]), parse_number(tok[i + 1], lineno), lineno});
  }
}

void read_bounds_line(std::string_view line, std::size_t lineno, MpsDocument& doc) {
  auto tok = split_ws(line);
  if (tok.empty()) return;
  const std::string type = upper(tok[0]);
  static const std::set<std::string> kValued = {"LO", "UP", "FX"};
  static const std::set<std::string> kValueless = {"FR", "MI", "PL"};
  static const std::set<std::string> kInteger = {"BV", "LI", "UI", "SC"};
  if (kInteger.count(type))
    throw MpsError(MpsError::Kind::Unsupported, lineno, "integer bound type " + type + " is not supported");
  if (!kValued.count(type) && !kValueless.count(type))
    throw MpsError(MpsError::Kind::MalformedLine, lineno, "unknown bound type '" + std::string(tok[0]) + "'");

  const bool valued = kValued.count(type) > 0;
  const std::size_t rest = tok.size() - 1;
  std::string_view col;
  std::string_view value;
  if (valued && rest == 3) {
    col = tok[2];
    value = tok[3];
  } else if (valued && rest == 2) {
    col = tok[1];
    value = tok[2];
  } else if (!valued && rest == 1) {
    col = tok[1];
  } else if (!valued && (rest == 2 || rest == 3)) {
    col = tok[2];
  } else {
    auto f = fixed_fields(line);
    if (f.size() < 3 || f[2].empty() || (valued && (f.size() < 4 || f[3].empty())))
      throw MpsError(MpsError::Kind::MalformedLine, lineno, "BOUNDS entry needs type, [set,] column [, value]");
    col = f[2];
    if (valued) value = f[3];
  }
  MpsBound bound{type, std::string(col), 0.0, lineno};
  if (valued) bound.value = parse_number(value, lineno);
  doc.bounds.push_back(std::move(bound));
}

double to_bound(double v) {
  if (v >= kMpsInfinity) return kInf;
  if (v <= -kMpsInfinity) return -kInf;
  return v;
}

double clamp_value(double v, const MpsOptions& options, bool& clamped) {
  if (options.clamp_inf && std::abs(v) >= kMpsInfinity) {
    clamped = true;
    return v > 0 ? *options.clamp_inf : -*options.clamp_inf;
  }
  return v;
}

}  // namespace

MpsError::MpsError(Kind kind, std::size_t line, const std::string& message)
    : std::runtime_error(format_message(kind, line, message)), kind_(kind), line_(line), message_(message) {}

const char* to_string(MpsError::Kind kind) {
  switch (kind) {
    case MpsError::Kind::TruncatedFile: return "TruncatedFile";
    case MpsError::Kind::Unsupported: return "Unsupported";
    case MpsError::Kind::UndeclaredRow: return "UndeclaredRow";
    case MpsError::Kind::UndeclaredColumn: return "UndeclaredColumn";
    case MpsError::Kind::MalformedNumber: return "MalformedNumber";
    case MpsError::Kind::MalformedLine: return "MalformedLine";
    case MpsError::Kind::DuplicateRow: return "DuplicateRow";
    case MpsError::Kind::MissingObjective: return "MissingObjective";
    case MpsError::Kind::EmptyProblem: return "EmptyProblem";
    case MpsError::Kind::Io: return "Io";
  }
  return "?";
}

MpsDocument read_mps_document(std::string_view text) {
  MpsDocument doc;
  Section section = Section::None;
  std::string rhs_set;
  std::size_t lineno = 0;
  bool seen_rows = false;

  std::size_t pos = 0;
  while (pos < text.size() && section != Section::End) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '*') continue;

    if (!std::isspace(static_cast<unsigned char>(line.front()))) {
      const auto tok = split_ws(line);
      const std::string head = upper(tok.front());
      if (head == "NAME") {
        const auto rest = trim(line.substr(4));
        doc.name = std::string(rest);
        section = Section::Name;
      } else if (head == "ROWS") {
        section = Section::Rows;
        seen_rows = true;
      } else if (head == "COLUMNS") {
        if (!seen_rows) throw MpsError(MpsError::Kind::UndeclaredRow, lineno, "COLUMNS section before ROWS");
        section = Section::Columns;
      } else if (head == "RHS") {
        section = Section::Rhs;
      } else if (head == "BOUNDS") {
        section = Section::Bounds;
      } else if (head == "ENDATA") {
        section = Section::End;
        doc.endata_line = lineno;
      } else if (head == "RANGES") {
        throw MpsError(MpsError::Kind::Unsupported, lineno, "RANGES section is not supported");
      } else {
        throw MpsError(MpsError::Kind::Unsupported, lineno, "unknown section '" + std::string(tok.front()) + "'");
      }
      continue;
    }

    switch (section) {
      case Section::Rows: read_rows_line(line, lineno, doc); break;
      case Section::Columns: read_columns_line(line, lineno, doc); break;
      case Section::Rhs: read_rhs_line(line, lineno, doc, rhs_set); break;
      case Section::Bounds: read_bounds_line(line, lineno, doc); break;
      case Section::None:
      case Section::Name:
        throw MpsError(MpsError::Kind::MalformedLine, lineno, "data line outside of a section");
      case Section::End: break;
    }
  }
  if (section != Section::End) throw MpsError(MpsError::Kind::TruncatedFile, lineno, "missing ENDATA");
  return doc;
}

ParsedMps parse_mps(std::string_view text, const MpsOptions& options) {
  ParsedMps out;
  out.document = read_mps_document(text);
  const MpsDocument& doc = out.document;

  std::unordered_map<std::string, std::size_t> row_index;   // constraint rows only
  std::unordered_map<std::string, char> declared;           // all rows
  std::string objective;
  std::vector<std::string> row_names;
  std::vector<RowSense> senses;
  for (const auto& row : doc.rows) {
    if (!declared.emplace(row.name, row.sense).second)
      throw MpsError(MpsError::Kind::DuplicateRow, row.line, "row '" + row.name + "' declared twice");
    if (row.sense == 'N') {
      if (objective.empty()) {
        objective = row.name;
      } else {
        out.warnings.push_back("additional objective row '" + row.name + "' ignored");
      }
      continue;
    }
    row_index.emplace(row.name, row_names.size());
    row_names.push_back(row.name);
    senses.push_back(row.sense == 'L' ? RowSense::LessEqual
                     : row.sense == 'G' ? RowSense::GreaterEqual
                                        : RowSense::Equal);
  }
  if (objective.empty()) throw MpsError(MpsError::Kind::MissingObjective, doc.endata_line, "no N row declared");

  std::unordered_map<std::string, std::size_t> col_index;
  std::vector<std::string> col_names;
  for (const auto& e : doc.columns) {
    if (!declared.count(e.row))
      throw MpsError(MpsError::Kind::UndeclaredRow, e.line, "row '" + e.row + "' is not declared in ROWS");
    if (col_index.emplace(e.col, col_names.size()).second) col_names.push_back(e.col);
  }

  const auto m = static_cast<Eigen::Index>(row_names.size());
  const auto n = static_cast<Eigen::Index>(col_names.size());
  if (m == 0 || n == 0)
    throw MpsError(MpsError::Kind::EmptyProblem, doc.endata_line, "problem has no constraint rows or no columns");
  if (static_cast<double>(m) * static_cast<double>(n) > kMaxDenseEntries)
    throw MpsError(MpsError::Kind::Unsupported, doc.endata_line, "problem too large for dense storage");

  GeneralLP& lp = out.lp;
  lp.A = Matrix::Zero(m, n);
  lp.b = Vector::Zero(m);
  lp.c = Vector::Zero(n);
  lp.lower = Vector::Zero(n);
  lp.upper = Vector::Constant(n, kInf);
  lp.senses = senses;
  lp.row_names = row_names;
  lp.col_names = col_names;

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : doc.columns) {
    const std::size_t j = col_index.at(e.col);
    if (e.row == objective) {
      lp.c[static_cast<Eigen::Index>(j)] += e.value;
      continue;
    }
    const auto it = row_index.find(e.row);
    if (it == row_index.end()) continue;  // extra N row
    if (!seen.emplace(it->second, j).second) out.merged_duplicates = true;
    lp.A(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(j)) += e.value;
  }
  if (out.merged_duplicates) out.warnings.push_back("duplicate (column, row) entries were summed");

  for (const auto& r : doc.rhs) {
    if (!declared.count(r.row))
      throw MpsError(MpsError::Kind::UndeclaredRow, r.line, "row '" + r.row + "' is not declared in ROWS");
    if (r.row == objective) {
      lp.objective_offset = -r.value;
      continue;
    }
    const auto it = row_index.find(r.row);
    if (it != row_index.end()) lp.b[static_cast<Eigen::Index>(it->second)] = r.value;
  }

  for (const auto& bd : doc.bounds) {
    const auto it = col_index.find(bd.col);
    if (it == col_index.end())
      throw MpsError(MpsError::Kind::UndeclaredColumn, bd.line, "column '" + bd.col + "' is not declared in COLUMNS");
    const auto j = static_cast<Eigen::Index>(it->second);
    const double v = to_bound(bd.value);
    if (bd.type == "UP") {
      lp.upper[j] = v;
      if (v < 0.0 && lp.lower[j] == 0.0) {
        lp.lower[j] = -kInf;
        out.warnings.push_back("negative UP bound on '" + bd.col + "' makes its lower bound -inf");
      }
    } else if (bd.type == "LO") {
      lp.lower[j] = v;
    } else if (bd.type == "FX") {
      lp.lower[j] = v;
      lp.upper[j] = v;
    } else if (bd.type == "FR") {
      lp.lower[j] = -kInf;
      lp.upper[j] = kInf;
    } else if (bd.type == "MI") {
      lp.lower[j] = -kInf;
    } else if (bd.type == "PL") {
      lp.upper[j] = kInf;
    }
  }

  bool clamped = false;
  for (Eigen::Index i = 0; i < m; ++i) lp.b[i] = clamp_value(lp.b[i], options, clamped);
  for (Eigen::Index j = 0; j < n; ++j) lp.c[j] = clamp_value(lp.c[j], options, clamped);
  if (clamped) out.warnings.push_back("infinite right-hand sides or costs were clamped");

  out.nonzeros = static_cast<std::size_t>((lp.A.array() != 0.0).count());
  out.sparsity = static_cast<double>(out.nonzeros) / (static_cast<double>(m) * static_cast<double>(n));
  return out;
}

ParsedMps parse_mps_file(const std::string& path, const MpsOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MpsError(MpsError::Kind::Io, 0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw MpsError(MpsError::Kind::Io, 0, "cannot read '" + path + "'");
  return parse_mps(buffer.str(), options);
}

}  // namespace dikin
