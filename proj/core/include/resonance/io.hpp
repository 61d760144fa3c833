#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "resonance/solver.hpp"
#include "resonance/types.hpp"

namespace resonance {

/// Raised when a solution sink or source fails.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed solution files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SolutionFormat { csv, jsonl, none };

inline constexpr std::string_view kCsvHeader = "m1,n1,m2,n2,m3,n3,m4,n4,q1,g1,q2,g2";

std::optional<SolutionFormat> parse_format(std::string_view name);

/// Serializes solutions, one line per quad. CSV output starts with kCsvHeader.
/// `none` only counts.
class SolutionWriter {
 public:
  SolutionWriter(std::ostream& out, SolutionFormat format);

  /// Throws IoError once the stream reports failure.
  void write(std::span<const ResonantQuad> batch);
  void write(const ResonantQuad& quad) { write(std::span<const ResonantQuad>(&quad, 1)); }
  void flush();

  std::size_t written() const { return written_; }

 private:
  void append(const ResonantQuad& quad);
  void drain();

  std::ostream* out_;
  SolutionFormat format_;
  std::string buffer_;
  std::size_t written_ = 0;
};

/// Parses the whole stream; the format is inferred from the first line
/// (a JSON object or the CSV header). Throws FormatError on malformed input.
std::vector<ResonantQuad> read_solutions(std::istream& in);

/// Multi-line human-readable run summary.
void write_report(std::ostream& out, const RunReport& report);

}  // namespace resonance
