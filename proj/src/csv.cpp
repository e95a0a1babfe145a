#include "fqhe/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace fqhe {
namespace {

void append_number(std::string& out, double value) {
  if (!std::isfinite(value)) {
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  out += buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(std::string_view field, std::size_t line_no) {
  if (field.empty()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const std::string copy(field);
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + copy + "'");
  }
  return v;
}

} // namespace

std::string format_csv(std::span<const SweepRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const SweepRecord& r : records) {
    append_number(out, r.alpha);
    out += ',';
    append_number(out, r.a_nm);
    out += ',';
    append_number(out, r.work);
    out += ',';
    if (r.efficiency) {
      append_number(out, *r.efficiency);
    }
    for (double q : {r.q_ab, r.q_bc, r.q_cd, r.q_da}) {
      out += ',';
      append_number(out, q);
    }
    out += ',';
    out += to_string(r.status);
    out += '\n';
  }
  return out;
}

void write_csv(std::span<const SweepRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  const std::string text = format_csv(records);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
  std::vector<SweepRecord> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line_no == 1) {
      if (line != kCsvHeader) {
        throw std::runtime_error("unexpected CSV header");
      }
      continue;
    }
    if (line.empty()) {
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 9) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 9 fields");
    }
    SweepRecord r;
    r.alpha = parse_number(f[0], line_no);
    r.a_nm = parse_number(f[1], line_no);
    r.work = parse_number(f[2], line_no);
    if (!f[3].empty()) {
      r.efficiency = parse_number(f[3], line_no);
    }
    r.q_ab = parse_number(f[4], line_no);
    r.q_bc = parse_number(f[5], line_no);
    r.q_cd = parse_number(f[6], line_no);
    r.q_da = parse_number(f[7], line_no);
    const auto status = parse_status(f[8]);
    if (!status) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": unknown status '" +
                               std::string(f[8]) + "'");
    }
    r.status = *status;
    records.push_back(r);
  }
  return records;
}

} // namespace fqhe
