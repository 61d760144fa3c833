#include "resonance/io.hpp"

#include <charconv>
#include <iomanip>
#include <json.hpp>

namespace resonance {

namespace {

constexpr std::size_t kFlushThreshold = 1 << 20;

void put_int(std::string& buf, std::int64_t v) {
  char tmp[24];
  const auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, v);
  buf.append(tmp, end);
}

void put_vector(std::string& buf, WaveVector k) {
  buf.push_back('[');
  put_int(buf, k.m);
  buf.push_back(',');
  put_int(buf, k.n);
  buf.push_back(']');
}

std::int64_t parse_int(std::string_view field, std::size_t line_no) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw FormatError("line " + std::to_string(line_no) + ": bad integer '" + std::string(field) + "'");
  }
  return v;
}

ResonantQuad parse_csv_line(std::string_view line, std::size_t line_no) {
  std::array<std::int64_t, 12> f{};
  std::size_t count = 0;
  while (true) {
    const auto comma = line.find(',');
    if (count == f.size()) throw FormatError("line " + std::to_string(line_no) + ": too many fields");
    f[count++] = parse_int(line.substr(0, comma), line_no);
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  if (count != f.size()) throw FormatError("line " + std::to_string(line_no) + ": expected 12 fields");
  auto c = [&](std::size_t i) { return static_cast<std::int32_t>(f[i]); };
  return {{c(0), c(1)}, {c(2), c(3)}, {c(4), c(5)}, {c(6), c(7)}, f[8], f[9], f[10], f[11]};
}

ResonantQuad parse_json_line(std::string_view line, std::size_t line_no) {
  try {
    const auto j = nlohmann::json::parse(line);
    auto vec = [&](const char* key) {
      const auto& a = j.at(key);
      if (!a.is_array() || a.size() != 2) throw FormatError(std::string("field ") + key + " is not a pair");
      return WaveVector{a[0].get<std::int32_t>(), a[1].get<std::int32_t>()};
    };
    return {vec("k1"), vec("k2"), vec("k3"), vec("k4"),
            j.at("q1").get<std::int64_t>(), j.at("g1").get<std::int64_t>(),
            j.at("q2").get<std::int64_t>(), j.at("g2").get<std::int64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
  } catch (const FormatError& e) {
    throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

std::optional<SolutionFormat> parse_format(std::string_view name) {
  if (name == "csv") return SolutionFormat::csv;
  if (name == "jsonl") return SolutionFormat::jsonl;
  if (name == "none") return SolutionFormat::none;
  return std::nullopt;
}

SolutionWriter::SolutionWriter(std::ostream& out, SolutionFormat format)
    : out_(&out), format_(format) {
  if (format_ == SolutionFormat::csv) {
    buffer_.append(kCsvHeader);
    buffer_.push_back('\n');
  }
}

void SolutionWriter::append(const ResonantQuad& q) {
  if (format_ == SolutionFormat::csv) {
    for (const auto& k : {q.k1, q.k2, q.k3, q.k4}) {
      put_int(buffer_, k.m);
      buffer_.push_back(',');
      put_int(buffer_, k.n);
      buffer_.push_back(',');
    }
    put_int(buffer_, q.q1);
    buffer_.push_back(',');
    put_int(buffer_, q.g1);
    buffer_.push_back(',');
    put_int(buffer_, q.q2);
    buffer_.push_back(',');
    put_int(buffer_, q.g2);
  } else {
    buffer_.append("{\"k1\":");
    put_vector(buffer_, q.k1);
    buffer_.append(",\"k2\":");
    put_vector(buffer_, q.k2);
    buffer_.append(",\"k3\":");
    put_vector(buffer_, q.k3);
    buffer_.append(",\"k4\":");
    put_vector(buffer_, q.k4);
    buffer_.append(",\"q1\":");
    put_int(buffer_, q.q1);
    buffer_.append(",\"g1\":");
    put_int(buffer_, q.g1);
    buffer_.append(",\"q2\":");
    put_int(buffer_, q.q2);
    buffer_.append(",\"g2\":");
    put_int(buffer_, q.g2);
    buffer_.push_back('}');
  }
  buffer_.push_back('\n');
}

void SolutionWriter::write(std::span<const ResonantQuad> batch) {
  written_ += batch.size();
  if (format_ == SolutionFormat::none) return;
  for (const auto& q : batch) {
    append(q);
    if (buffer_.size() >= kFlushThreshold) drain();
  }
}

void SolutionWriter::drain() {
  out_->write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  buffer_.clear();
  if (!*out_) throw IoError("failed writing solutions");
}

void SolutionWriter::flush() {
  if (format_ == SolutionFormat::none) return;
  drain();
  out_->flush();
  if (!*out_) throw IoError("failed flushing solutions");
}

std::vector<ResonantQuad> read_solutions(std::istream& in) {
  std::vector<ResonantQuad> out;
  std::string line;
  std::size_t line_no = 0;
  std::optional<SolutionFormat> format;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!format) {
      if (line == kCsvHeader) {
        format = SolutionFormat::csv;
        continue;
      }
      if (line.front() != '{') throw FormatError("unrecognized solution file: expected CSV header or JSON lines");
      format = SolutionFormat::jsonl;
    }
    out.push_back(*format == SolutionFormat::csv ? parse_csv_line(line, line_no)
                                                 : parse_json_line(line, line_no));
  }
  if (in.bad()) throw IoError("failed reading solutions");
  return out;
}

void write_report(std::ostream& out, const RunReport& r) {
  out << "run report\n"
      << "  domain limit       " << r.domain_limit << '\n'
      << "  mode               " << to_string(r.mode) << '\n'
      << "  symmetry setting   " << (r.expand_signs ? "sign-expanded" : "canonical") << '\n'
      << "  workers            " << r.workers << '\n'
      << "  classes built      " << r.classes_built << '\n'
      << "  classes discarded  " << r.classes_discarded << '\n'
      << "  classes surviving  " << r.classes_surviving << '\n'
      << "  halves stored      " << r.half_count << '\n'
      << "  halves linked      " << r.linked_half_count << '\n'
      << "  linked up to -v,-u " << r.linked_conjugate_pairs << '\n'
      << "  interaction points " << r.gathered_points << '\n'
      << "  solutions          " << r.solution_count << '\n';
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::fixed << std::setprecision(3);
  for (const auto& t : r.timings) {
    out << "  time " << std::left << std::setw(14) << t.name << std::right << t.seconds << " s\n";
  }
  out << "  time total          " << r.total_seconds << " s\n";
  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace resonance
