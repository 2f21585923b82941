#include "cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#ifndef K3ATLAS_VERSION
#define K3ATLAS_VERSION "0.0.0"
#endif

namespace k3atlas::cli {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check &c) { return c.status == s; }));
}

void Report::append(std::vector<Check> more) {
  checks.insert(checks.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
}

namespace {

nlohmann::ordered_json fields_json(const Fields &f) {
  nlohmann::ordered_json o = nlohmann::ordered_json::object();
  for (const auto &[k, v] : f) o[k] = v;
  return o;
}

std::string elapsed_string(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string render_text(const Report &r) {
  std::ostringstream os;
  os << "k3atlas " << K3ATLAS_VERSION << " " << r.command << "\n";
  for (const auto &[k, v] : r.config) os << "  " << k << " = " << v << "\n";
  for (const auto &c : r.checks) {
    std::string tag = status_name(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << tag << "  " << c.id;
    if (!c.details.empty()) os << "  " << c.details;
    os << "\n";
    for (const auto &[k, v] : c.values) os << "      " << k << " = " << v << "\n";
  }
  for (const auto &t : r.tables) {
    os << "table " << t.name << " [" << t.curve << ", " << t.convention << "] " << t.rows.size()
       << " points\n";
    for (const auto &row : t.rows) {
      os << "  (" << row.coord1 << ", " << row.coord2 << ")  " << row.provenance;
      if (!row.d.empty()) os << "  d=" << row.d;
      os << "\n";
    }
  }
  os << "summary: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
     << r.count(Status::skip) << " skip  (" << elapsed_string(r.elapsed_ms) << " ms)\n";
  return os.str();
}

std::string render_csv(const Report &r) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto &t : r.tables)
    for (const auto &row : t.rows)
      os << t.curve << "," << row.coord1 << "," << row.coord2 << "," << row.provenance << ","
         << row.d << "\n";
  return os.str();
}

}  // namespace

nlohmann::ordered_json to_json(const Report &r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "k3atlas";
  j["version"] = K3ATLAS_VERSION;
  j["command"] = r.command;
  j["config"] = fields_json(r.config);
  j["timestamp"] = r.timestamp;
  j["elapsed_ms"] = elapsed_string(r.elapsed_ms);
  j["summary"] = {{"pass", std::to_string(r.count(Status::pass))},
                  {"fail", std::to_string(r.count(Status::fail))},
                  {"skip", std::to_string(r.count(Status::skip))}};
  auto &checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"id", c.id},
                      {"status", status_name(c.status)},
                      {"details", c.details},
                      {"values", fields_json(c.values)}});
  auto &tables = j["tables"] = nlohmann::ordered_json::array();
  for (const auto &t : r.tables) {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto &row : t.rows)
      pts.push_back({{"coord1", row.coord1},
                     {"coord2", row.coord2},
                     {"provenance", row.provenance},
                     {"d", row.d}});
    tables.push_back({{"name", t.name}, {"curve", t.curve}, {"convention", t.convention},
                      {"points", std::move(pts)}});
  }
  return j;
}

std::string render(const Report &r, Format f) {
  switch (f) {
    case Format::json: return to_json(r).dump(2) + "\n";
    case Format::csv: return render_csv(r);
    case Format::text: break;
  }
  return render_text(r);
}

}  // namespace k3atlas::cli
