#pragma once

#include "mixprof/core.hpp"

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace mixprof::io {

/// Shortest locale-independent text for a double at 17 significant digits.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

/// One CSV cell; nullopt renders as an empty field.
using Cell = std::optional<std::string>;

inline Cell cell(double v) { return format_double(v); }
inline Cell cell(std::int64_t v) { return std::to_string(v); }
inline Cell cell(int v) { return std::to_string(v); }
inline Cell cell(const std::string& s) { return s; }
inline Cell blank() { return std::nullopt; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<Cell> row) {
    require(row.size() == header_.size(), "table: row width does not match the header");
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
    os << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].value_or("");
      os << '\n';
    }
  }

  /// Array of objects; numeric-looking cells become numbers, blanks null.
  nlohmann::json to_json() const {
    auto out = nlohmann::json::array();
    for (const auto& row : rows_) {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (!row[i]) {
          obj[header_[i]] = nullptr;
          continue;
        }
        double v = 0;
        const auto& s = *row[i];
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec == std::errc() && res.ptr == s.data() + s.size()) obj[header_[i]] = v;
        else obj[header_[i]] = s;
      }
      out.push_back(std::move(obj));
    }
    return out;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

/// Provenance record written next to every output.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::string version = kVersion;
  double wall_seconds = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["version"] = version;
    j["wall_seconds"] = wall_seconds;
    return j;
  }
};

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `body` to `path` (stdout when empty) and the manifest to
/// `<path>.manifest.json` (stderr when writing to stdout).
template <class Body>
void emit(const std::string& path, const RunManifest& manifest, Body body) {
  if (path.empty()) {
    body(std::cout);
    std::cout.flush();
    std::cerr << manifest.to_json().dump() << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  body(out);
  if (!out) throw IoError("write to " + path + " failed");
  std::ofstream man(path + ".manifest.json");
  if (!man) throw IoError("cannot open " + path + ".manifest.json for writing");
  man << manifest.to_json().dump(2) << '\n';
  if (!man) throw IoError("write to " + path + ".manifest.json failed");
}

}  // namespace mixprof::io
