#include "wls/sidecar.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "wls/errors.hpp"

namespace fs = std::filesystem;

namespace wls {

namespace {

std::string errno_text(int err) { return std::strerror(err); }

std::string lower_extension(const fs::path& p)
{
  auto ext = p.extension().string();
  for (auto& c : ext)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

fs::path temporary_sibling(const fs::path& target)
{
  static std::atomic<unsigned> counter{0};
  auto name = "." + target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
              std::to_string(counter.fetch_add(1));
  return target.parent_path() / name;
}

void write_all(int fd, std::string_view bytes, const fs::path& path)
{
  while (!bytes.empty()) {
    auto n = ::write(fd, bytes.data(), bytes.size());
    if (n < 0) {
      if (errno == EINTR)
        continue;
      throw IoError(path, "write failed: " + errno_text(errno));
    }
    bytes.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

DatasetRef DatasetRef::shapefile(fs::path base) { return {std::move(base), DatasetKind::Shapefile}; }

DatasetRef DatasetRef::generic(fs::path base) { return {std::move(base), DatasetKind::Generic}; }

DatasetRef DatasetRef::lic(fs::path file) { return {std::move(file), DatasetKind::LicDirect}; }

DatasetRef DatasetRef::from_path(const fs::path& path)
{
  const auto ext = lower_extension(path);
  if (ext == ".lic")
    return lic(path);
  if (ext == ".shp" || ext == ".shx" || ext == ".dbf")
    return shapefile(fs::path(path).replace_extension());
  std::error_code ec;
  if (fs::exists(fs::path(path) += ".shp", ec))
    return shapefile(path);
  return generic(path);
}

fs::path DatasetRef::sidecar_path() const
{
  if (kind == DatasetKind::LicDirect)
    return base_path;
  return fs::path(base_path) += ".lic";
}

fs::path DatasetRef::companion(std::string_view extension) const
{
  return fs::path(base_path) += "." + std::string(extension);
}

LicenseDocument read_license(const DatasetRef& ref)
{
  const auto path = ref.sidecar_path();
  std::error_code ec;
  const auto status = fs::status(path, ec);
  if (status.type() == fs::file_type::not_found)
    return LicenseDocument::for_designation(Designation::NL);
  if (ec)
    throw IoError(path, ec.message());
  if (fs::is_directory(status))
    throw IoError(path, "is a directory");

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    // Lost a race with a deleting writer: treat as absent like above.
    if (!fs::exists(path, ec))
      return LicenseDocument::for_designation(Designation::NL);
    throw IoError(path, "cannot open for reading: " + errno_text(errno));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad())
    throw IoError(path, "read failed");

  try {
    return parse_ccrel(buffer.str());
  } catch (const CodecError& e) {
    throw SidecarParseError(path, e);
  }
}

fs::path write_license(const DatasetRef& ref, const LicenseDocument& doc, bool overwrite)
{
  const auto target = ref.sidecar_path();
  std::error_code ec;
  if (!overwrite && fs::exists(target, ec))
    throw AlreadyExists(target);

  const auto bytes = emit_ccrel(doc);
  const auto tmp = temporary_sibling(target);

  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644);
  if (fd < 0)
    throw IoError(tmp, "cannot create temporary file: " + errno_text(errno));
  try {
    write_all(fd, bytes, tmp);
    if (::fsync(fd) != 0)
      throw IoError(tmp, "fsync failed: " + errno_text(errno));
  } catch (...) {
    ::close(fd);
    ::unlink(tmp.c_str());
    throw;
  }
  if (::close(fd) != 0) {
    const int err = errno;
    ::unlink(tmp.c_str());
    throw IoError(tmp, "close failed: " + errno_text(err));
  }

  if (overwrite) {
    if (::rename(tmp.c_str(), target.c_str()) != 0) {
      const int err = errno;
      ::unlink(tmp.c_str());
      throw IoError(target, "rename failed: " + errno_text(err));
    }
  } else {
    // link() refuses to replace an existing file, closing the gap between
    // the exists() check above and publication.
    const int rc = ::link(tmp.c_str(), target.c_str());
    const int err = errno;
    ::unlink(tmp.c_str());
    if (rc != 0) {
      if (err == EEXIST)
        throw AlreadyExists(target);
      throw IoError(target, "link failed: " + errno_text(err));
    }
  }
  return target;
}

ShapefileReport validate_shapefile_presence(const DatasetRef& ref)
{
  std::error_code ec;
  ShapefileReport report;
  const auto shp = ref.companion("shp");
  report.shp_present = fs::is_regular_file(shp, ec);
  report.dbf_present = fs::is_regular_file(ref.companion("dbf"), ec);
  report.shx_present = fs::is_regular_file(ref.companion("shx"), ec);

  if (report.shp_present) {
    std::ifstream in(shp, std::ios::binary);
    unsigned char header[4];
    if (in.read(reinterpret_cast<char*>(header), 4)) {
      const std::uint32_t value = (std::uint32_t{header[0]} << 24) |
                                  (std::uint32_t{header[1]} << 16) |
                                  (std::uint32_t{header[2]} << 8) | std::uint32_t{header[3]};
      report.header_ok = static_cast<std::int32_t>(value) == kShapefileFileCode;
    }
  }
  return report;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text, const fs::path& base_dir)
{
  std::vector<CatalogEntry> entries;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#')
      continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw CatalogError(CatalogError::Kind::Malformed, line_no, "expected dataset_id<TAB>lic_path");
    const auto id = line.substr(0, tab);
    const auto lic = line.substr(tab + 1);
    if (id.empty())
      throw CatalogError(CatalogError::Kind::Malformed, line_no, "empty dataset id");
    if (lic.empty() || lic.find('\t') != std::string_view::npos)
      throw CatalogError(CatalogError::Kind::Malformed, line_no, "expected exactly one TAB and a path");

    auto [it, inserted] = seen.emplace(std::string(id), line_no);
    if (!inserted)
      throw CatalogError(CatalogError::Kind::DuplicateId, line_no,
                         "duplicate dataset id '" + std::string(id) + "' (first on line " +
                           std::to_string(it->second) + ")");

    fs::path lic_path(lic);
    if (lic_path.is_relative())
      lic_path = base_dir / lic_path;
    entries.push_back({std::string(id), std::move(lic_path)});
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError(path, "cannot open catalog");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str(), path.parent_path());
}

}  // namespace wls
