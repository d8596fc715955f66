#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

namespace wls {

/// The twelve license designations, in the canonical row order of the
/// license matrix.
enum class Designation : std::uint8_t {
  PD,
  CC0,
  BY,
  BY_NC,
  BY_NC_ND,
  BY_NC_ND_SA,
  BY_NC_SA,
  BY_ND,
  BY_ND_SA,
  BY_SA,
  ARR,
  NL,
};

inline constexpr std::size_t kDesignationCount = 12;

inline constexpr std::array<Designation, kDesignationCount> kAllDesignations = {
  Designation::PD,       Designation::CC0,         Designation::BY,       Designation::BY_NC,
  Designation::BY_NC_ND, Designation::BY_NC_ND_SA, Designation::BY_NC_SA, Designation::BY_ND,
  Designation::BY_ND_SA, Designation::BY_SA,       Designation::ARR,      Designation::NL,
};

constexpr std::size_t index_of(Designation d) noexcept { return static_cast<std::size_t>(d); }

/// Canonical text code, e.g. "BY-NC-ND".
std::string_view code(Designation d) noexcept;

/// Exact (case-sensitive) inverse of code().
std::optional<Designation> designation_from_code(std::string_view text) noexcept;

/// All codes joined with ", ", for help and error text.
std::string_view code_list() noexcept;

std::ostream& operator<<(std::ostream& os, Designation d);

/// Result of combining two designations: a designation, or the
/// incompatibility marker X.
class Outcome {
public:
  /// Default-constructed outcomes are X.
  constexpr Outcome() = default;

  static constexpr Outcome compatible(Designation d) noexcept { return Outcome{d}; }
  static constexpr Outcome incompatible() noexcept { return Outcome{}; }

  constexpr bool is_compatible() const noexcept { return value_.has_value(); }
  constexpr std::optional<Designation> value() const noexcept { return value_; }

  /// Throws std::logic_error on an incompatible outcome.
  Designation designation() const;

  /// Designation code, or "X".
  std::string_view code() const noexcept;

  friend constexpr bool operator==(const Outcome&, const Outcome&) = default;

private:
  constexpr explicit Outcome(Designation d) : value_(d) {}

  std::optional<Designation> value_;
};

inline constexpr std::string_view kIncompatibleCode = "X";

/// Parses a designation code or "X".
std::optional<Outcome> outcome_from_code(std::string_view text) noexcept;

std::ostream& operator<<(std::ostream& os, const Outcome& o);

}  // namespace wls
