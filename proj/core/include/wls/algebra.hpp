#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wls/designation.hpp"

namespace wls {

enum class Engine { Matrix, Or };
enum class Mode { Raw, Symmetrized };

std::string_view to_string(Engine e) noexcept;
std::string_view to_string(Mode m) noexcept;
std::optional<Engine> engine_from_string(std::string_view text) noexcept;
std::optional<Mode> mode_from_string(std::string_view text) noexcept;

/// 12x12 combination table; row is the first operand, column the second.
class LicenseMatrix {
public:
  /// The table compiled in from core/data/license_matrix.csv.
  static const LicenseMatrix& builtin();

  /// Parses the golden CSV format (header row plus one row per designation,
  /// LF line endings). Throws ValidationError on any deviation.
  static LicenseMatrix from_csv(std::string_view text);

  Outcome cell(Designation row, Designation column) const noexcept
  {
    return cells_[index_of(row)][index_of(column)];
  }

  std::string to_csv() const;

  friend bool operator==(const LicenseMatrix&, const LicenseMatrix&) = default;

private:
  using Row = std::array<Outcome, kDesignationCount>;

  explicit LicenseMatrix(std::array<Row, kDesignationCount> cells) : cells_(cells) {}

  std::array<Row, kDesignationCount> cells_;
};

// --- attribute encoding ---------------------------------------------------

enum class LicenseClass { PublicDomain, Waiver, CcLicense, AllRightsReserved, NoLicense };

namespace flag {
inline constexpr std::uint8_t NC = 0b001;
inline constexpr std::uint8_t ND = 0b010;
inline constexpr std::uint8_t SA = 0b100;
inline constexpr std::uint8_t All = NC | ND | SA;
}  // namespace flag

/// Class plus NC/ND/SA flag bits. Attribution is implied by CcLicense.
struct AttributeVector {
  LicenseClass license_class = LicenseClass::NoLicense;
  std::uint8_t bits = 0;

  bool has(std::uint8_t f) const noexcept { return (bits & f) == f; }

  friend bool operator==(const AttributeVector&, const AttributeVector&) = default;
};

AttributeVector encode_attributes(Designation d) noexcept;

/// Throws ValidationError for flags on a non-CC class or bits outside NC|ND|SA.
Designation decode_attributes(const AttributeVector& v);

inline bool is_cc_license(Designation d) noexcept
{
  return encode_attributes(d).license_class == LicenseClass::CcLicense;
}

// --- combination engines --------------------------------------------------

/// Table lookup. Symmetrized mode resolves cells whose two orders disagree by
/// taking the more restrictive outcome (X if neither contains the other).
Outcome combine_matrix(Designation a, Designation b, Mode mode = Mode::Raw);

/// Join in the bitwise-OR lattice: PD < CC0 < BY-family (ordered by flag
/// subset); ARR and NL sit above CC0 and below X only.
Outcome combine_or(Designation a, Designation b) noexcept;

/// Outcome-level lifting of either engine: X absorbs on both sides.
Outcome combine(Outcome a, Outcome b, Engine engine, Mode mode = Mode::Raw);

/// Right fold of the pairwise combine over the list:
/// combine(l[0], combine(l[1], ... combine(l[n-2], l[n-1]))).
/// Throws std::invalid_argument on an empty list.
Outcome combine_all(std::span<const Designation> licenses, Engine engine, Mode mode = Mode::Raw);

// --- audit ----------------------------------------------------------------

struct SymmetryViolation {
  Designation a;
  Designation b;
  Outcome forward;
  Outcome reverse;

  friend bool operator==(const SymmetryViolation&, const SymmetryViolation&) = default;
};

struct AssociativityViolation {
  Designation a;
  Designation b;
  Designation c;
  Outcome left_result;   // (a+b)+c
  Outcome right_result;  // a+(b+c)

  friend bool operator==(const AssociativityViolation&, const AssociativityViolation&) = default;
};

struct AlgebraReport {
  std::vector<SymmetryViolation> symmetry_violations;
  std::vector<AssociativityViolation> associativity_violations;
  std::string engine_id;
  std::string mode;

  bool clean() const noexcept
  {
    return symmetry_violations.empty() && associativity_violations.empty();
  }
};

/// Exhaustive scan of all 144 ordered pairs and 1728 ordered triples.
/// The OR engine ignores mode.
AlgebraReport validate_algebra(Engine engine, Mode mode);

/// One `SYM a b forward reverse` or `ASSOC a b c left right` line per
/// violation, LF-terminated, symmetry lines first.
std::string render(const AlgebraReport& report);

struct EngineDisagreement {
  Designation a;
  Designation b;
  Outcome matrix_outcome;
  Outcome or_outcome;

  friend bool operator==(const EngineDisagreement&, const EngineDisagreement&) = default;
};

/// Ordered pairs where combine_matrix(a, b, Raw) != combine_or(a, b).
std::vector<EngineDisagreement> engines_diff();

}  // namespace wls
