// Command-line front end; talks to the library only through relucrit_c.h.
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relucrit_c.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kNumeric = 2, kVerify = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family, method = "jump", seeds, format = "csv", output, output_dir, which, only;
  std::optional<double> k, k_min, k_max;
  double lambda_inc = 0.01, factor = 2;
  bool no_timestamp = false;
};

using Ctx = std::unique_ptr<rc_context, decltype(&rc_context_destroy)>;

int status_exit(rc_status s) {
  switch (s) {
    case RC_OK: return kOk;
    case RC_BAD_INPUT:
    case RC_UNKNOWN_FAMILY:
    case RC_DIMENSION_MISMATCH:
    case RC_IO_ERROR: return kUsage;
    default: return kNumeric;
  }
}

std::string iso_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// CSV table -> array of records; numeric cells become numbers.
std::string csv_to_json(const std::string& csv, const std::string& name, bool stamp) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  const auto header = split(line);
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  while (std::getline(in, line)) {
    const auto cells = split(line);
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < header.size(); ++i) {
      const std::string v = i < cells.size() ? cells[i] : "";
      char* end = nullptr;
      const long long n = std::strtoll(v.c_str(), &end, 10);
      if (!v.empty() && *end == '\0') {
        r[header[i]] = n;
        continue;
      }
      const double d = std::strtod(v.c_str(), &end);
      if (!v.empty() && *end == '\0')
        r[header[i]] = d;
      else
        r[header[i]] = v;
    }
    records.push_back(std::move(r));
  }
  nlohmann::ordered_json doc;
  doc["table"] = name;
  if (stamp) doc["timestamp"] = iso_timestamp();
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw UsageError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void emit(const Options& o, const std::string& csv, const std::string& name) {
  const std::string body = o.format == "json" ? csv_to_json(csv, name, !o.no_timestamp) : csv;
  if (o.output.empty())
    std::cout << body;
  else
    write_atomic(o.output, body);
}

void forbid(const std::set<std::string>& given, const std::set<std::string>& allowed, const std::string& cmd) {
  for (const auto& g : given)
    if (!allowed.count(g)) throw UsageError("--" + g + " does not apply to " + cmd);
}

int fail(const Ctx& ctx, rc_status s) {
  std::cerr << "error: " << rc_last_error(ctx.get()) << '\n';
  return status_exit(s);
}

int run(const std::string& cmd, const Options& o, const std::set<std::string>& given) {
  const std::set<std::string> common{"seeds", "format", "output", "no-timestamp", "config"};
  auto allow = [&](std::set<std::string> extra) {
    extra.insert(common.begin(), common.end());
    forbid(given, extra, cmd);
  };
  rc_context* raw = nullptr;
  if (rc_context_create(&raw) != RC_OK) return kNumeric;
  Ctx ctx(raw, rc_context_destroy);
  if (!o.seeds.empty() && cmd != "verify") {
    const rc_status s = rc_context_load_seeds(ctx.get(), o.seeds.c_str());
    if (s != RC_OK) return fail(ctx, s);
  }

  if (cmd == "solve-consistency" || cmd == "solve-critical") {
    if (cmd == "solve-consistency")
      allow({"family", "k"});
    else
      allow({"family", "k", "method", "lambda-inc"});
    if (o.family.empty() || !o.k) throw UsageError(cmd + " needs --family and --k");
    rc_point* p = nullptr;
    const rc_status s = cmd == "solve-consistency"
                            ? rc_solve_consistency(ctx.get(), o.family.c_str(), *o.k, &p)
                            : rc_solve_critical(ctx.get(), o.family.c_str(), *o.k, o.method.c_str(), o.lambda_inc, &p);
    if (s != RC_OK) return fail(ctx, s);
    const std::string csv = rc_point_csv(p);
    rc_point_destroy(p);
    emit(o, csv, cmd == "solve-consistency" ? "consistency" : "critical");
    return kOk;
  }
  if (cmd == "tables") {
    allow({"which", "output-dir"});
    if (o.which.empty()) throw UsageError("tables needs --which");
    const std::vector<std::string> all{"inftable1", "inftable4", "compA", "compI", "compII", "typeM"};
    std::vector<std::string> names = o.which == "all" ? all : std::vector<std::string>{o.which};
    if (names.size() > 1 && o.output_dir.empty()) throw UsageError("--which all needs --output-dir");
    for (const auto& n : names) {
      char* out = nullptr;
      const rc_status s = rc_table_csv(ctx.get(), n.c_str(), &out);
      if (s != RC_OK) return fail(ctx, s);
      const std::string csv = out;
      rc_string_free(out);
      if (!o.output_dir.empty()) {
        Options f = o;
        f.output = (std::filesystem::path(o.output_dir) / (n + (o.format == "json" ? ".json" : ".csv"))).string();
        emit(f, csv, n);
      } else {
        emit(o, csv, n);
      }
    }
    return kOk;
  }
  if (cmd == "decay") {
    allow({"family", "k-min", "k-max", "factor"});
    if (o.family.empty() || !o.k_min || !o.k_max) throw UsageError("decay needs --family, --k-min and --k-max");
    if (*o.k_max < *o.k_min) throw UsageError("empty k range");
    char* out = nullptr;
    const rc_status s = rc_decay_csv(ctx.get(), o.family.c_str(), *o.k_min, *o.k_max, o.factor, &out);
    if (s != RC_OK) return fail(ctx, s);
    const std::string csv = out;
    rc_string_free(out);
    emit(o, csv, "decay");
    return kOk;
  }
  // verify
  allow({"only"});
  char* ledger = nullptr;
  int passed = 0;
  const rc_status s = rc_verify(ctx.get(), o.only.empty() ? nullptr : o.only.c_str(),
                                o.seeds.empty() ? nullptr : o.seeds.c_str(), &ledger, &passed);
  if (s != RC_OK) return fail(ctx, s);
  std::cout << ledger;
  rc_string_free(ledger);
  return passed ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical points of the ReLU student-teacher objective"};
  app.set_config("--config", "", "key=value file supplying option defaults");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--family", o.family, "a | i | ii | m");
  app.add_option("--k", o.k, "number of neurons (real values allowed)");
  app.add_option("--method", o.method, "jump | path")->check(CLI::IsMember({"jump", "path"}));
  app.add_option("--lambda-inc", o.lambda_inc, "lambda step for --method path");
  app.add_option("--seeds", o.seeds, "seed file");
  app.add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", o.output, "output file (default stdout)");
  app.add_option("--output-dir", o.output_dir, "directory for one file per table");
  app.add_option("--which", o.which, "inftable1 | inftable4 | compA | compI | compII | typeM | all");
  app.add_option("--k-min", o.k_min, "smallest k of the scan");
  app.add_option("--k-max", o.k_max, "largest k of the scan");
  app.add_option("--factor", o.factor, "geometric k step");
  app.add_option("--only", o.only, "run a single verification suite");
  app.add_flag("--no-timestamp", o.no_timestamp, "omit timestamps from JSON");

  const char* cmds[] = {"solve-consistency", "solve-critical", "tables", "decay", "verify"};
  for (const char* c : cmds) app.add_subcommand(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::set<std::string> given;
  for (const CLI::Option* opt : app.get_options())
    if (opt->count() > 0 && opt->get_name() != "--help") given.insert(opt->get_name().substr(2));
  try {
    return run(app.get_subcommands().front()->get_name(), o, given);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
}
