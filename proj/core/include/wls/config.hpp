#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wls/sidecar.hpp"

namespace wls {

struct ServerSettings {
  std::uint16_t port = 8080;
  std::string bind = "127.0.0.1";
  std::string title = "Web License Service";
};

/// A layer whose license lives in a catalog file under `dataset_id`.
struct CatalogRef {
  std::filesystem::path catalog_path;
  std::string dataset_id;
};

struct LayerEntry {
  std::string name;
  std::variant<DatasetRef, CatalogRef> source;
};

struct WlsConfig {
  ServerSettings server;
  std::vector<LayerEntry> layers;
  /// Non-fatal diagnostics collected while parsing (unknown keys).
  std::vector<std::string> warnings;

  const LayerEntry* find_layer(std::string_view name) const noexcept;

  /// Line-based `[server]` / `[layer <name>]` format. Relative paths are
  /// resolved against `base_dir`. Throws ConfigError.
  static WlsConfig parse(std::string_view text, const std::filesystem::path& base_dir);

  /// Throws ConfigError (including for an unreadable file).
  static WlsConfig load(const std::filesystem::path& path);
};

bool is_valid_layer_name(std::string_view name) noexcept;

/// Resolves a layer to its sidecar and reads it. Catalog problems throw
/// ResolutionError; read failures propagate from read_license.
LicenseDocument read_layer_license(const LayerEntry& layer);

}  // namespace wls
