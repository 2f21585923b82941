#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace k3atlas::cli {

enum class Status { pass, fail, skip };
enum class Format { text, json, csv };

std::string status_name(Status s);

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Check {
  std::string id;
  Status status = Status::pass;
  std::string details;
  Fields values;  // exact values, or decimals with "+/- radius"
};

struct TableRow {
  std::string coord1;
  std::string coord2;
  std::string provenance;
  std::string d;  // empty when unlabeled
};

struct PointTable {
  std::string name;
  std::string curve;
  std::string convention;
  std::vector<TableRow> rows;
};

struct Report {
  std::string command;
  Fields config;
  std::vector<Check> checks;
  std::vector<PointTable> tables;
  std::string timestamp;  // ISO 8601, UTC
  double elapsed_ms = 0;

  std::size_t count(Status s) const;
  bool failed() const { return count(Status::fail) > 0; }
  void append(std::vector<Check> more);
};

inline constexpr const char *kSchemaVersion = "1.0";
inline constexpr const char *kCsvHeader = "curve,coord1,coord2,provenance,d";

nlohmann::ordered_json to_json(const Report &r);
std::string render(const Report &r, Format f);

}  // namespace k3atlas::cli
