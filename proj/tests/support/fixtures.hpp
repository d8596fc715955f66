#pragma once

#include <map>
#include <optional>
#include <string>

#include "test_support.hpp"
#include "wls/ccrel.hpp"
#include "wls/config.hpp"
#include "wls/sidecar.hpp"

namespace wls::test {

/// A directory of shapefile-style layers plus a matching WlsConfig.
/// Layers mapped to nullopt get no sidecar (they read as NL).
class LayerFixture {
public:
  void add(const std::string& name, std::optional<Designation> designation)
  {
    const auto base = dir_ / name;
    write_file(base.string() + ".shp", std::string("\x00\x00\x27\x0A", 4));
    if (designation) {
      auto doc = LicenseDocument::for_designation(*designation);
      doc.title = name;
      write_license(DatasetRef::shapefile(base), doc, true);
    }
    config_text_ += "[layer " + name + "]\nshapefile = " + name + "\n";
    designations_[name] = designation;
  }

  void add_raw(const std::string& name, const std::string& lic_bytes)
  {
    write_file(dir_ / (name + ".lic"), lic_bytes);
    config_text_ += "[layer " + name + "]\nlic = " + name + ".lic\n";
  }

  WlsConfig config(int port = 0) const
  {
    return WlsConfig::parse("[server]\nport = " + std::to_string(port) +
                              "\nbind = 127.0.0.1\ntitle = test\n" + config_text_,
                            dir_.path());
  }

  /// Designation the layer should read as (NL when it has no sidecar).
  Designation expected(const std::string& name) const
  {
    return designations_.at(name).value_or(Designation::NL);
  }

  const TempDir& dir() const { return dir_; }

private:
  TempDir dir_;
  std::string config_text_;
  std::map<std::string, std::optional<Designation>> designations_;
};

/// roads (BY), restaurants (BY-NC), neighborhoods (PD).
inline void add_scenario_layers(LayerFixture& f)
{
  f.add("roads", Designation::BY);
  f.add("restaurants", Designation::BY_NC);
  f.add("neighborhoods", Designation::PD);
}

}  // namespace wls::test
