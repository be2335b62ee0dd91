#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dikin/model.hpp"

namespace dikin {

/// Parse failure with the 1-based line number it refers to (0 when not tied to a line).
class MpsError : public std::runtime_error {
 public:
  enum class Kind {
    TruncatedFile,
    Unsupported,
    UndeclaredRow,
    UndeclaredColumn,
    MalformedNumber,
    MalformedLine,
    DuplicateRow,
    MissingObjective,
    EmptyProblem,
    Io,
  };

  MpsError(Kind kind, std::size_t line, const std::string& message);
  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::string message_;
};

const char* to_string(MpsError::Kind kind);

struct MpsRow {
  char sense = 'E';  // N, E, L or G
  std::string name;
  std::size_t line = 0;
};

struct MpsEntry {
  std::string col;
  std::string row;
  double value = 0.0;
  std::size_t line = 0;
};

struct MpsRhs {
  std::string row;
  double value = 0.0;
  std::size_t line = 0;
};

struct MpsBound {
  std::string type;  // LO, UP, FX, FR, MI, PL
  std::string col;
  double value = 0.0;
  std::size_t line = 0;
};

/// Sections of an MPS file as read, before any interpretation.
struct MpsDocument {
  std::string name;
  std::vector<MpsRow> rows;
  std::vector<MpsEntry> columns;
  std::vector<MpsRhs> rhs;
  std::vector<MpsBound> bounds;
  std::size_t endata_line = 0;
};

struct MpsOptions {
  /// Replace infinite (|v| >= 1e30) right-hand sides and costs by +/- this value.
  std::optional<double> clamp_inf;
};

struct ParsedMps {
  GeneralLP lp;
  double sparsity = 0.0;            // nonzeros(A) / (m n)
  std::size_t nonzeros = 0;         // constraint entries after duplicate merging
  bool merged_duplicates = false;
  MpsDocument document;
  std::vector<std::string> warnings;
};

/// Reads the sections of fixed or free MPS text.
MpsDocument read_mps_document(std::string_view text);

/// Parses MPS text (fixed-column or whitespace-delimited) into a GeneralLP.
ParsedMps parse_mps(std::string_view text, const MpsOptions& options = {});

/// Reads a file and parses it; I/O failures raise MpsError::Io.
ParsedMps parse_mps_file(const std::string& path, const MpsOptions& options = {});

}  // namespace dikin
