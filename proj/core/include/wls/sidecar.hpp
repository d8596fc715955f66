#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wls/ccrel.hpp"

namespace wls {

enum class DatasetKind { Shapefile, Generic, LicDirect };

/// Locates the `.lic` sidecar of a dataset.
struct DatasetRef {
  std::filesystem::path base_path;
  DatasetKind kind = DatasetKind::Generic;

  static DatasetRef shapefile(std::filesystem::path base);
  static DatasetRef generic(std::filesystem::path base);
  static DatasetRef lic(std::filesystem::path file);

  /// Classifies a user-supplied path: `*.lic` is used directly; `*.shp`,
  /// `*.shx` and `*.dbf` name a shapefile by their stem; a bare base that
  /// has a `.shp` companion on disk is a shapefile; anything else is a
  /// generic dataset whose sidecar is `<path>.lic`.
  static DatasetRef from_path(const std::filesystem::path& path);

  std::filesystem::path sidecar_path() const;

  /// `<base>.<extension>`; meaningful for shapefile and generic refs.
  std::filesystem::path companion(std::string_view extension) const;
};

/// Reads and parses the sidecar. A missing sidecar yields a synthetic NL
/// document. Throws IoError or SidecarParseError.
LicenseDocument read_license(const DatasetRef& ref);

/// Atomically writes emit_ccrel(doc) to the sidecar path (temporary sibling,
/// then rename or link). Throws AlreadyExists when the sidecar exists and
/// overwrite is false, IoError on filesystem failures.
std::filesystem::path write_license(const DatasetRef& ref, const LicenseDocument& doc,
                                    bool overwrite);

struct ShapefileReport {
  bool shp_present = false;
  bool dbf_present = false;
  bool shx_present = false;
  bool header_ok = false;

  friend bool operator==(const ShapefileReport&, const ShapefileReport&) = default;
};

/// Big-endian file code at offset 0 of every .shp/.shx main file header.
inline constexpr std::int32_t kShapefileFileCode = 9994;

/// Checks the three mandatory companions and the .shp file code. Geometry
/// is never read.
ShapefileReport validate_shapefile_presence(const DatasetRef& ref);

struct CatalogEntry {
  std::string dataset_id;
  std::filesystem::path lic_path;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Parses a `dataset_id<TAB>lic_path` catalog. Relative paths are resolved
/// against the catalog's directory. Throws CatalogError or IoError.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

/// Same, from text; `base_dir` anchors relative lic paths.
std::vector<CatalogEntry> parse_catalog(std::string_view text,
                                        const std::filesystem::path& base_dir);

}  // namespace wls
