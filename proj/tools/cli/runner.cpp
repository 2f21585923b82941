#include "cli/runner.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "cli/checks.hpp"
#include "cli/thread_pool.hpp"
#include "k3atlas/modular.hpp"

namespace k3atlas::cli {
namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Fields config_fields(const RunConfig &cfg) {
  Fields f;
  if (cfg.d) f.emplace_back("d", std::to_string(*cfg.d));
  if (cfg.bits) f.emplace_back("bits", std::to_string(*cfg.bits));
  if (cfg.curve) f.emplace_back("curve", std::string(curve_name(*cfg.curve)));
  if (cfg.height) f.emplace_back("height", std::to_string(*cfg.height));
  if (cfg.box) f.emplace_back("box", std::to_string(*cfg.box));
  if (cfg.command == Command::search || cfg.command == Command::report) {
    f.emplace_back("jobs", std::to_string(cfg.jobs));
    f.emplace_back("partitions", std::to_string(cfg.partitions.value_or(kDefaultPartitions)));
  }
  return f;
}

void add_search(Report &r, CurveId curve, long bound, const RunConfig &cfg) {
  SearchOutcome s = search_checks(curve, bound, cfg.partitions.value_or(kDefaultPartitions),
                                  pool_executor(cfg.jobs));
  r.append(std::move(s.checks));
  r.tables.push_back(std::move(s.table));
}

void run_towers(Report &r, const RunConfig &cfg) {
  if (cfg.d) {
    r.append(tower_checks(*cfg.d, cfg.bits));
    return;
  }
  for (long d : kClassNumberOneD) r.append(tower_checks(d, cfg.bits));
}

void validate(const RunConfig &cfg) {
  if (cfg.format == Format::csv && cfg.command != Command::verify_points &&
      cfg.command != Command::search && cfg.command != Command::report)
    throw UsageError("csv output is available for verify-points, search and report only");
  if (cfg.command == Command::modular && !cfg.d) throw UsageError("modular requires --d");
  if (cfg.d) {
    try {
      ModularContext probe(*cfg.d, cfg.bits.value_or(16));
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  }
  if (cfg.command == Command::search) {
    if (!cfg.curve) throw UsageError("search requires --curve");
    if (*cfg.curve == CurveId::Ks) {
      if (!cfg.height || cfg.box) throw UsageError("search on Ks takes --height, not --box");
    } else if (*cfg.curve == CurveId::K1 || *cfg.curve == CurveId::K3) {
      if (!cfg.box || cfg.height) throw UsageError("integral search takes --box, not --height");
    } else {
      throw UsageError("search supports ks, k1 and k3");
    }
  }
  if (cfg.height && *cfg.height < 1) throw UsageError("--height must be >= 1");
  if (cfg.box && *cfg.box < 1) throw UsageError("--box must be >= 1");
  if (cfg.partitions && *cfg.partitions < 1) throw UsageError("--partitions must be >= 1");
  if (cfg.jobs < 1) throw UsageError("--jobs must be >= 1");
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::verify_points: return "verify-points";
    case Command::verify_maps: return "verify-maps";
    case Command::verify_tower: return "verify-tower";
    case Command::modular: return "modular";
    case Command::search: return "search";
    case Command::report: return "report";
  }
  return "?";
}

Report run(const RunConfig &cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = command_name(cfg.command);
  r.config = config_fields(cfg);
  r.timestamp = utc_timestamp();
  switch (cfg.command) {
    case Command::verify_points:
      r.append(point_checks());
      r.tables = catalog_tables();
      break;
    case Command::verify_maps:
      r.append(map_checks());
      break;
    case Command::verify_tower:
      run_towers(r, cfg);
      if (!cfg.d) r.append(selftest_checks());
      break;
    case Command::modular:
      r.append(tower_checks(*cfg.d, cfg.bits));
      break;
    case Command::search:
      add_search(r, *cfg.curve, cfg.height ? *cfg.height : *cfg.box, cfg);
      break;
    case Command::report:
      r.append(point_checks());
      r.append(singularity_checks());
      r.append(map_checks());
      run_towers(r, cfg);
      r.append(selftest_checks());
      r.tables = catalog_tables();
      add_search(r, CurveId::Ks, kReportHeight, cfg);
      add_search(r, CurveId::K3, kReportBox, cfg);
      add_search(r, CurveId::K1, kReportBox, cfg);
      break;
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  cfg.jobs = default_jobs();

  CLI::App app{"Exact and multiprecision checks of the class-number-one curve atlas", "k3atlas"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("k3atlas ") + K3ATLAS_VERSION);

  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case));
  app.add_option("--out", cfg.out, "Write the report to this file");
  app.add_option("--jobs", cfg.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);

  struct Sub {
    Command cmd;
    const char *name;
    const char *help;
  };
  const Sub subs[] = {
      {Command::verify_points, "verify-points", "Check every published point on its curve"},
      {Command::verify_maps, "verify-maps", "Check the covering and birational maps"},
      {Command::verify_tower, "verify-tower", "Evaluate the modular tower residuals"},
      {Command::modular, "modular", "Modular computations for one d"},
      {Command::search, "search", "Bounded point search on Ks, K1 or K3"},
      {Command::report, "report", "Run the full battery"},
  };
  std::map<CLI::App *, Command> sub_cmd;
  std::map<Command, CLI::App *> by_cmd;
  for (const auto &s : subs) {
    CLI::App *sub = app.add_subcommand(s.name, s.help);
    sub_cmd[sub] = s.cmd;
    by_cmd[s.cmd] = sub;
  }
  for (Command c : {Command::verify_tower, Command::modular}) {
    by_cmd[c]->add_option("--d", cfg.d, "Discriminant label d = 3 (mod 8)");
    by_cmd[c]->add_option("--bits", cfg.bits, "Output precision in bits")->check(CLI::Range(16, 1 << 16));
  }
  const std::map<std::string, CurveId> curves{
      {"ks", CurveId::Ks}, {"k1", CurveId::K1}, {"k3", CurveId::K3}};
  CLI::App *search = by_cmd[Command::search];
  std::string curve_arg;
  search->add_option("--curve", curve_arg, "Curve: ks, k1 or k3")
      ->required()
      ->check(CLI::IsMember({"ks", "k1", "k3"}, CLI::ignore_case));
  search->add_option("--height", cfg.height, "Height bound on z (Ks)")->check(CLI::PositiveNumber);
  search->add_option("--box", cfg.box, "Bound on |x| (K1, K3)")->check(CLI::PositiveNumber);
  for (Command c : {Command::search, Command::report})
    by_cmd[c]->add_option("--partitions", cfg.partitions, "Work partitions")->check(CLI::PositiveNumber);

  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  for (CLI::App *sub : app.get_subcommands()) cfg.command = sub_cmd.at(sub);
  auto lower = [](std::string v) {
    for (char &ch : v) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return v;
  };
  cfg.format = formats.at(lower(format_name));
  if (!curve_arg.empty()) cfg.curve = curves.at(lower(curve_arg));

  Report report;
  try {
    report = run(cfg);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  const std::string text = render(report, cfg.format);
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary | std::ios::trunc);
    if (file) file << text;
    if (!file || !file.flush()) {
      err << "error: cannot write " << *cfg.out << "\n";
      return kExitIo;
    }
    out << report.command << ": " << report.count(Status::pass) << " pass, "
        << report.count(Status::fail) << " fail, " << report.count(Status::skip) << " skip -> "
        << *cfg.out << "\n";
  } else {
    out << text;
  }
  return report.failed() ? kExitCheckFailed : kExitOk;
}

}  // namespace k3atlas::cli
