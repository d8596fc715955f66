#include "wls/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "wls/errors.hpp"

namespace fs = std::filesystem;

namespace wls {

namespace {

std::string_view trim(std::string_view s)
{
  constexpr std::string_view ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos)
    return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

fs::path anchored(std::string_view value, const fs::path& base_dir)
{
  fs::path p(value);
  return p.is_relative() ? base_dir / p : p;
}

struct PendingLayer {
  std::string name;
  std::size_t line;
  std::optional<std::variant<DatasetRef, CatalogRef>> source;
};

}  // namespace

bool is_valid_layer_name(std::string_view name) noexcept
{
  return !name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

const LayerEntry* WlsConfig::find_layer(std::string_view name) const noexcept
{
  auto it = std::find_if(layers.begin(), layers.end(),
                         [&](const LayerEntry& l) { return l.name == name; });
  return it == layers.end() ? nullptr : &*it;
}

WlsConfig WlsConfig::parse(std::string_view text, const fs::path& base_dir)
{
  WlsConfig config;
  std::unordered_map<std::string, std::size_t> layer_lines;
  std::optional<PendingLayer> layer;
  bool in_server = false;

  auto flush = [&]() {
    if (!layer)
      return;
    if (!layer->source)
      throw ConfigError(layer->line, "layer '" + layer->name +
                                       "' has no source (shapefile, lic or catalog)");
    config.layers.push_back({layer->name, *layer->source});
    layer.reset();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    if (line.empty() || line.front() == '#')
      continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(line_no, "unterminated section header");
      flush();
      const auto header = trim(line.substr(1, line.size() - 2));
      if (header == "server") {
        in_server = true;
        continue;
      }
      constexpr std::string_view prefix = "layer";
      if (header.substr(0, prefix.size()) != prefix || header.size() == prefix.size() ||
          (header[prefix.size()] != ' ' && header[prefix.size()] != '\t'))
        throw ConfigError(line_no, "unknown section [" + std::string(header) + "]");
      const auto name = std::string(trim(header.substr(prefix.size())));
      if (!is_valid_layer_name(name))
        throw ConfigError(line_no, "invalid layer name '" + name + "' (allowed: A-Z a-z 0-9 _ -)");
      auto [it, inserted] = layer_lines.emplace(name, line_no);
      if (!inserted)
        throw ConfigError(line_no, "duplicate layer name '" + name + "' (first defined on line " +
                                     std::to_string(it->second) + ")");
      in_server = false;
      layer = PendingLayer{name, line_no, std::nullopt};
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(line_no, "expected 'key = value'");
    const auto key = std::string(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(line_no, "empty key");

    if (in_server) {
      if (key == "port") {
        unsigned port = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), port);
        if (ec != std::errc{} || ptr != value.data() + value.size() || port > 65535)
          throw ConfigError(line_no, "invalid port '" + std::string(value) + "'");
        config.server.port = static_cast<std::uint16_t>(port);
      } else if (key == "bind") {
        if (value.empty())
          throw ConfigError(line_no, "empty bind address");
        config.server.bind = std::string(value);
      } else if (key == "title") {
        config.server.title = std::string(value);
      } else {
        config.warnings.push_back("line " + std::to_string(line_no) + ": unknown key '" + key +
                                  "' in [server]");
      }
      continue;
    }

    if (!layer)
      throw ConfigError(line_no, "key '" + key + "' outside of any section");

    std::optional<std::variant<DatasetRef, CatalogRef>> source;
    if (key == "shapefile") {
      source = DatasetRef::shapefile(anchored(value, base_dir));
    } else if (key == "lic") {
      source = DatasetRef::lic(anchored(value, base_dir));
    } else if (key == "catalog") {
      const auto colon = value.rfind(':');
      if (colon == std::string_view::npos || colon == 0 || colon + 1 == value.size())
        throw ConfigError(line_no, "catalog source must be <path>:<dataset_id>");
      source = CatalogRef{anchored(value.substr(0, colon), base_dir),
                          std::string(value.substr(colon + 1))};
    } else {
      config.warnings.push_back("line " + std::to_string(line_no) + ": unknown key '" + key +
                                "' in [layer " + layer->name + "]");
      continue;
    }
    if (value.empty())
      throw ConfigError(line_no, "empty value for '" + key + "'");
    if (layer->source)
      throw ConfigError(line_no, "layer '" + layer->name + "' has more than one source");
    layer->source = std::move(source);
  }
  flush();

  if (config.layers.empty())
    throw ConfigError(0, "configuration defines no layers");
  return config;
}

WlsConfig WlsConfig::load(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError(0, "cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.parent_path());
}

LicenseDocument read_layer_license(const LayerEntry& layer)
{
  if (const auto* ref = std::get_if<DatasetRef>(&layer.source))
    return read_license(*ref);

  const auto& catalog = std::get<CatalogRef>(layer.source);
  std::vector<CatalogEntry> entries;
  try {
    entries = load_catalog(catalog.catalog_path);
  } catch (const Error& e) {
    throw ResolutionError("catalog " + catalog.catalog_path.string() + ": " + e.what());
  }
  for (const auto& entry : entries) {
    if (entry.dataset_id == catalog.dataset_id)
      return read_license(DatasetRef::lic(entry.lic_path));
  }
  throw ResolutionError("dataset '" + catalog.dataset_id + "' not found in catalog " +
                        catalog.catalog_path.string());
}

}  // namespace wls
