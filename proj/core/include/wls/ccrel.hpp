#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wls/designation.hpp"

namespace wls {

/// A ccREL license statement as carried by a `.lic` fragment.
struct LicenseDocument {
  Designation designation = Designation::NL;
  std::string license_uri;
  std::optional<std::string> work_uri;
  std::optional<std::string> title;
  std::optional<std::string> attribution_name;
  std::optional<std::string> attribution_url;
  std::optional<std::string> raw_fragment;

  /// Document for `d` with its canonical license URI and no optional fields.
  static LicenseDocument for_designation(Designation d);

  /// Equality on everything except raw_fragment.
  bool same_content(const LicenseDocument& other) const;
};

/// URI written by emit_ccrel (CC licenses at version 3.0; urn:wls:license:*
/// for designations with no Creative Commons URI).
std::string_view canonical_uri(Designation d) noexcept;

/// Human-readable anchor text used in emitted fragments.
std::string_view label(Designation d) noexcept;

/// Accepts http/https creativecommons.org URIs with any version segment
/// (and optional jurisdiction suffix), plus the urn:wls:license:* names.
/// Throws UnknownLicenseUri.
Designation designation_from_uri(std::string_view uri);

/// Extracts the first rel="license" link and the dc:title,
/// cc:attributionName and cc:attributionURL properties from a restricted
/// XHTML+RDFa fragment. Other markup is skipped. A leading UTF-8 BOM is
/// ignored. Throws MissingLicense, UnknownLicenseUri or ParseError.
LicenseDocument parse_ccrel(std::string_view fragment);

/// Canonical three-line fragment. Attribution markup is only written for
/// BY-family designations.
std::string emit_ccrel(const LicenseDocument& doc);

/// Fragment reporting that a combination has no valid license.
std::string emit_incompatible_ccrel();

/// Escapes & < > " for text and attribute content.
std::string xml_escape(std::string_view text);

/// Inverse of xml_escape; also resolves &apos; and numeric references.
/// Unknown or malformed entities are kept verbatim.
std::string xml_unescape(std::string_view text);

}  // namespace wls
