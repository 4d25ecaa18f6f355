// pcm: channel capacity bounds, cloner inspection, frontier/ellipsoid meshes
// and randomized verification, with table, CSV, or JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <pcm/pcm.hpp>

#include "CLI11.hpp"

namespace {

using namespace pcm;

enum class OutputFormat { HumanTable, Csv, Json };

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return OutputFormat::HumanTable;
}

// All numbers are serialized with 15 significant digits so that a value
// printed in one format parses back equal to the same value in another.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

// A flat record: ordered key/value pairs, every value already serialized.
// `quoted` marks JSON strings; numbers and booleans pass through raw.
struct Field {
  std::string key;
  std::string value;
  bool quoted = false;
};
using Record = std::vector<Field>;

Field field(const std::string& key, double v) { return {key, num(v), false}; }
Field field(const std::string& key, std::int64_t v) { return {key, num(v), false}; }
Field field(const std::string& key, std::uint64_t v) { return {key, num(v), false}; }
Field field(const std::string& key, bool v) { return {key, v ? "true" : "false", false}; }

void print_json_object(const Record& record) {
  std::printf("{");
  for (std::size_t i = 0; i < record.size(); ++i) {
    const Field& f = record[i];
    std::printf("%s\"%s\":%s%s%s", i ? "," : "", f.key.c_str(), f.quoted ? "\"" : "",
                f.value.c_str(), f.quoted ? "\"" : "");
  }
  std::printf("}");
}

void print_record(const Record& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      print_json_object(record);
      std::printf("\n");
      break;
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < record.size(); ++i)
        std::printf("%s%s", i ? "," : "", record[i].key.c_str());
      std::printf("\n");
      for (std::size_t i = 0; i < record.size(); ++i)
        std::printf("%s%s", i ? "," : "", record[i].value.c_str());
      std::printf("\n");
      break;
    }
    case OutputFormat::HumanTable:
      for (const Field& f : record) std::printf("%-16s %s\n", f.key.c_str(), f.value.c_str());
      break;
  }
}

void print_rows(const std::vector<Record>& rows, OutputFormat format) {
  if (rows.empty()) return;
  switch (format) {
    case OutputFormat::Json: {
      std::printf("[");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::printf("%s", r ? "," : "");
        print_json_object(rows[r]);
      }
      std::printf("]\n");
      break;
    }
    case OutputFormat::Csv: {
      const Record& head = rows.front();
      for (std::size_t i = 0; i < head.size(); ++i)
        std::printf("%s%s", i ? "," : "", head[i].key.c_str());
      std::printf("\n");
      for (const Record& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          std::printf("%s%s", i ? "," : "", row[i].value.c_str());
        std::printf("\n");
      }
      break;
    }
    case OutputFormat::HumanTable: {
      const Record& head = rows.front();
      for (std::size_t i = 0; i < head.size(); ++i)
        std::printf("%s%-22s", i ? " " : "", head[i].key.c_str());
      std::printf("\n");
      for (const Record& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          std::printf("%s%-22s", i ? " " : "", row[i].value.c_str());
        std::printf("\n");
      }
      break;
    }
  }
}

PureState parse_probe(const std::string& arg) {
  double theta = 0.0, phi = 0.0;
  char trailing = 0;
  if (std::sscanf(arg.c_str(), "%lf,%lf%c", &theta, &phi, &trailing) != 2) {
    throw std::invalid_argument("probe must be \"theta,phi\" in radians");
  }
  return PureState({Complex(std::cos(theta / 2), 0.0), std::polar(std::sin(theta / 2), phi)});
}

Record channel_fields(const std::string& prefix, const PauliChannel& ch) {
  return {field(prefix + "_px", ch.px()), field(prefix + "_py", ch.py()),
          field(prefix + "_pz", ch.pz())};
}

int cmd_bound(double px, double py, double pz, OutputFormat format) {
  CapacityBound bound = capacity_upper_bound(PauliChannel(px, py, pz));
  print_record({field("px", px), field("py", py), field("pz", pz), field("q", bound.q),
                field("capacity_upper", bound.upper), field("vanishing", bound.vanishing)},
               format);
  return 0;
}

int cmd_clone(double v, double z, double x, double y, const std::string& probe_arg,
              OutputFormat format) {
  double n2 = v * v + z * z + x * x + y * y;
  if (n2 <= 0.0) {
    std::fprintf(stderr, "error: amplitudes must not all be zero\n");
    return 2;
  }
  if (std::abs(n2 - 1.0) > 1e-9) {
    std::fprintf(stderr, "warning: amplitudes have norm %.6g, normalizing\n", std::sqrt(n2));
  }
  PcmParams params(DoubleBellAmps::normalized(v, z, x, y));
  PcmReport report = clone(params, parse_probe(probe_arg));

  Record record;
  const std::pair<const char*, const PauliChannel*> outputs[] = {
      {"y1", &report.channel_y1}, {"y2", &report.channel_y2}, {"y3", &report.channel_y3}};
  for (const auto& [prefix, ch] : outputs) {
    for (Field& f : channel_fields(prefix, *ch)) record.push_back(std::move(f));
  }
  record.push_back(field("fidelity_y1", report.fidelity_y1));
  record.push_back(field("fidelity_y2", report.fidelity_y2));
  record.push_back(field("depolarizing_y1", report.depolarizing_y1));
  record.push_back(field("depolarizing_y2", report.depolarizing_y2));
  print_record(record, format);
  return 0;
}

int cmd_frontier(int n, OutputFormat format) {
  std::vector<Record> rows;
  for (const FrontierPoint& pt : ellipse_mesh(n)) {
    rows.push_back({field("x", pt.x), field("xp", pt.xp), field("p", pt.p), field("pp", pt.pp)});
  }
  print_rows(rows, format);
  return 0;
}

int cmd_ellipsoid(int n, OutputFormat format) {
  std::vector<Record> rows;
  for (const EllipsoidPoint& pt : ellipsoid_mesh(n)) {
    rows.push_back({field("x", pt.x), field("y", pt.y), field("z", pt.z), field("px", pt.px),
                    field("py", pt.py), field("pz", pt.pz)});
  }
  print_rows(rows, format);
  return 0;
}

int cmd_verify(std::int64_t samples, std::uint64_t seed, OutputFormat format) {
  FrontierSweepReport report = verify_frontier(samples, seed);
  print_record({field("samples", report.samples), field("tested", report.tested),
                field("skipped", report.skipped), field("violations", report.violations),
                field("seed", report.seed)},
               format);
  return report.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-channel cloner toolkit: capacity bounds, cloner inspection,\n"
               "no-cloning frontier data, and randomized verification."};
  app.require_subcommand(1);

  std::string format_name = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
  };

  double px = 0.0, py = 0.0, pz = 0.0;
  CLI::App* bound = app.add_subcommand("bound", "Capacity upper bound of a Pauli channel");
  bound->add_option("--px", px, "Bit-flip probability")->capture_default_str();
  bound->add_option("--py", py, "Bit-phase-flip probability")->capture_default_str();
  bound->add_option("--pz", pz, "Phase-flip probability")->capture_default_str();
  add_format(bound);

  double v = 0.0, z = 0.0, x = 0.0, y = 0.0;
  std::string probe = "0,0";
  CLI::App* clone_cmd = app.add_subcommand("clone", "Inspect a cloner's output channels");
  clone_cmd->add_option("--v", v, "PhiPlus PhiPlus amplitude")->capture_default_str();
  clone_cmd->add_option("--z", z, "PhiMinus PhiMinus amplitude")->capture_default_str();
  clone_cmd->add_option("--x", x, "PsiPlus PsiPlus amplitude")->capture_default_str();
  clone_cmd->add_option("--y", y, "PsiMinus PsiMinus amplitude")->capture_default_str();
  clone_cmd->add_option("--probe", probe, "Probe state \"theta,phi\" (radians)")
      ->capture_default_str();
  add_format(clone_cmd);

  int frontier_n = 100;
  CLI::App* frontier = app.add_subcommand("frontier", "Mesh of the no-cloning frontier");
  frontier->add_option("n", frontier_n, "Number of mesh points (>= 2)")->capture_default_str();
  add_format(frontier);

  int ellipsoid_n = 100;
  CLI::App* ellipsoid = app.add_subcommand("ellipsoid", "Mesh of the symmetric-cloner surface");
  ellipsoid->add_option("n", ellipsoid_n, "Number of mesh points (>= 2)")->capture_default_str();
  add_format(ellipsoid);

  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "Randomized no-cloning bound sweep");
  verify->add_option("--samples", samples, "Number of random cloners")->capture_default_str();
  verify->add_option("--seed", seed, "Generator seed")->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  OutputFormat format = parse_format(format_name);
  try {
    if (bound->parsed()) return cmd_bound(px, py, pz, format);
    if (clone_cmd->parsed()) return cmd_clone(v, z, x, y, probe, format);
    if (frontier->parsed()) return cmd_frontier(frontier_n, format);
    if (ellipsoid->parsed()) return cmd_ellipsoid(ellipsoid_n, format);
    if (verify->parsed()) return cmd_verify(samples, seed, format);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}
