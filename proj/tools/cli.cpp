#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "wls/algebra.hpp"
#include "wls/ccrel.hpp"
#include "wls/config.hpp"
#include "wls/errors.hpp"
#include "wls/server.hpp"
#include "wls/sidecar.hpp"

namespace fs = std::filesystem;

namespace wls::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string codes_footer() { return "License codes: " + std::string(code_list()); }

struct EmbedArgs {
  std::string dataset;
  std::string license;
  std::optional<std::string> title;
  std::optional<std::string> attribution_name;
  std::optional<std::string> attribution_url;
  std::optional<std::string> work_uri;
  bool force = false;
};

struct ExtractArgs {
  std::string path;
  bool json = false;
};

struct AlgebraArgs {
  std::string engine = "matrix";
  std::string mode = "symmetrized";
};

struct CombineArgs {
  std::vector<std::string> inputs;
  AlgebraArgs algebra;
  std::optional<std::string> emit;
  bool force = false;
};

Engine parse_engine(const std::string& s)
{
  if (auto e = engine_from_string(s))
    return *e;
  throw UsageError("unknown engine '" + s + "' (expected matrix or or)");
}

Mode parse_mode(const std::string& s)
{
  if (auto m = mode_from_string(s))
    return *m;
  throw UsageError("unknown mode '" + s + "' (expected raw or symmetrized)");
}

bool looks_like_code(std::string_view s)
{
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isupper(c) || std::isdigit(c) || c == '-';
  });
}

bool names_anything_on_disk(const std::string& arg)
{
  std::error_code ec;
  return fs::exists(arg, ec) || fs::exists(arg + ".lic", ec) || fs::exists(arg + ".shp", ec);
}

nlohmann::ordered_json document_json(const LicenseDocument& doc, const fs::path& sidecar)
{
  auto optional = [](const std::optional<std::string>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  return {
    {"path", sidecar.string()},
    {"designation", code(doc.designation)},
    {"licenseUri", doc.license_uri},
    {"workUri", optional(doc.work_uri)},
    {"title", optional(doc.title)},
    {"attributionName", optional(doc.attribution_name)},
    {"attributionUrl", optional(doc.attribution_url)},
  };
}

int cmd_embed(const EmbedArgs& args, std::ostream& out)
{
  auto doc = LicenseDocument::for_designation(*designation_from_code(args.license));
  doc.title = args.title;
  doc.attribution_name = args.attribution_name;
  doc.attribution_url = args.attribution_url;
  doc.work_uri = args.work_uri;
  const auto written = write_license(DatasetRef::from_path(args.dataset), doc, args.force);
  out << written.string() << '\n';
  return kSuccess;
}

int cmd_extract(const ExtractArgs& args, std::ostream& out)
{
  const auto ref = DatasetRef::from_path(args.path);
  const auto doc = read_license(ref);
  if (args.json)
    out << document_json(doc, ref.sidecar_path()).dump(2) << '\n';
  else
    out << code(doc.designation) << '\n';
  return kSuccess;
}

int cmd_combine(const CombineArgs& args, std::ostream& out, std::ostream& err)
{
  if (args.inputs.size() < 2)
    throw UsageError("combine needs at least two inputs");
  const auto engine = parse_engine(args.algebra.engine);
  const auto mode = parse_mode(args.algebra.mode);

  std::vector<Designation> designations;
  for (const auto& input : args.inputs) {
    if (auto d = designation_from_code(input)) {
      designations.push_back(*d);
    } else if (looks_like_code(input) && !names_anything_on_disk(input)) {
      throw UsageError("unknown license code '" + input + "'; valid codes: " +
                       std::string(code_list()));
    } else {
      designations.push_back(read_license(DatasetRef::from_path(input)).designation);
    }
  }

  const auto result = combine_all(designations, engine, mode);
  out << result.code() << '\n';
  if (!result.is_compatible()) {
    if (args.emit)
      err << "wls: combination is incompatible; " << *args.emit << " not written\n";
    return kDomainFailure;
  }
  if (args.emit) {
    const auto written = write_license(DatasetRef::from_path(*args.emit),
                                       LicenseDocument::for_designation(result.designation()),
                                       args.force);
    err << "wls: wrote " << written.string() << '\n';
  }
  return kSuccess;
}

int cmd_validate(const AlgebraArgs& args, std::ostream& out)
{
  const auto report = validate_algebra(parse_engine(args.engine), parse_mode(args.mode));
  out << render(report);
  return report.clean() ? kSuccess : kDomainFailure;
}

int cmd_diff_engines(std::ostream& out)
{
  for (const auto& d : engines_diff())
    out << d.a << ' ' << d.b << ' ' << d.matrix_outcome << ' ' << d.or_outcome << '\n';
  return kSuccess;
}

int cmd_serve(const std::string& config_path, std::ostream& err)
{
  WlsConfig config;
  try {
    config = WlsConfig::load(config_path);
  } catch (const ConfigError& e) {
    err << "wls: " << config_path << ": " << e.what() << '\n';
    return kUsage;
  }
  for (const auto& w : config.warnings)
    err << "wls: warning: " << config_path << ": " << w << '\n';
  err << "wls: serving " << config.layers.size() << " layer(s) on http://" << config.server.bind
      << ':' << config.server.port << "/wls\n";
  serve(std::move(config));
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Web License Service toolkit: embed, extract and combine dataset licenses", "wls"};
  app.footer(codes_footer());
  app.require_subcommand(1);

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Write a .lic sidecar for a dataset");
  embed_cmd->add_option("dataset", embed.dataset, "Dataset base path, .shp file or .lic file")
    ->required();
  embed_cmd->add_option("--license", embed.license, "License code")
    ->required()
    ->check(CLI::Validator(
      [](std::string& value) -> std::string {
        if (designation_from_code(value))
          return {};
        return "unknown license code '" + value + "'; valid codes: " + std::string(code_list());
      },
      "CODE"));
  embed_cmd->add_option("--title", embed.title, "Title of the work");
  embed_cmd->add_option("--attribution-name", embed.attribution_name, "Name to attribute");
  embed_cmd->add_option("--attribution-url", embed.attribution_url, "URL to attribute");
  embed_cmd->add_option("--work-uri", embed.work_uri, "URI identifying the work");
  embed_cmd->add_flag("--force", embed.force, "Overwrite an existing sidecar");
  embed_cmd->footer(codes_footer());

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Print the license of a dataset or .lic file");
  extract_cmd->add_option("path", extract.path, "Dataset base path, .shp file or .lic file")
    ->required();
  extract_cmd->add_flag("--json", extract.json, "Print the whole document as JSON");
  extract_cmd->footer(codes_footer());

  CombineArgs combine;
  auto* combine_cmd =
    app.add_subcommand("combine", "Compute the license of a mash-up (right fold over inputs)");
  combine_cmd->add_option("inputs", combine.inputs, "License codes or dataset paths")
    ->required()
    ->expected(-1);
  combine_cmd->add_option("--engine", combine.algebra.engine, "matrix or or")
    ->capture_default_str();
  combine_cmd->add_option("--mode", combine.algebra.mode, "raw or symmetrized")
    ->capture_default_str();
  combine_cmd->add_option("--emit", combine.emit, "Write the composite license to this .lic");
  combine_cmd->add_flag("--force", combine.force, "Overwrite the --emit target");
  combine_cmd->footer(codes_footer());

  AlgebraArgs validate;
  auto* validate_cmd = app.add_subcommand(
    "validate-algebra", "Audit symmetry and associativity of a combination engine");
  validate_cmd->add_option("--engine", validate.engine, "matrix or or")->capture_default_str();
  validate_cmd->add_option("--mode", validate.mode, "raw or symmetrized")->capture_default_str();
  validate_cmd->footer(codes_footer());

  auto* diff_cmd = app.add_subcommand(
    "diff-engines", "List ordered pairs where the matrix (raw) and OR engines disagree");
  diff_cmd->footer(codes_footer());

  std::string config_path;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP license service");
  serve_cmd->add_option("--config", config_path, "Service configuration file")->required();
  serve_cmd->footer(codes_footer());

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*embed_cmd)
      return cmd_embed(embed, out);
    if (*extract_cmd)
      return cmd_extract(extract, out);
    if (*combine_cmd)
      return cmd_combine(combine, out, err);
    if (*validate_cmd)
      return cmd_validate(validate, out);
    if (*diff_cmd)
      return cmd_diff_engines(out);
    if (*serve_cmd)
      return cmd_serve(config_path, err);
  } catch (const UsageError& e) {
    err << "wls: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "wls: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace wls::cli
