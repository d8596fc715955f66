#include "wls/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "wls/errors.hpp"

namespace wls {

std::string_view to_string(Engine e) noexcept { return e == Engine::Matrix ? "matrix" : "or"; }

std::string_view to_string(Mode m) noexcept { return m == Mode::Raw ? "raw" : "symmetrized"; }

std::optional<Engine> engine_from_string(std::string_view text) noexcept
{
  if (text == "matrix")
    return Engine::Matrix;
  if (text == "or")
    return Engine::Or;
  return std::nullopt;
}

std::optional<Mode> mode_from_string(std::string_view text) noexcept
{
  if (text == "raw")
    return Mode::Raw;
  if (text == "symmetrized")
    return Mode::Symmetrized;
  return std::nullopt;
}

// --- attribute encoding ---------------------------------------------------

AttributeVector encode_attributes(Designation d) noexcept
{
  using D = Designation;
  switch (d) {
  case D::PD: return {LicenseClass::PublicDomain, 0};
  case D::CC0: return {LicenseClass::Waiver, 0};
  case D::BY: return {LicenseClass::CcLicense, 0};
  case D::BY_NC: return {LicenseClass::CcLicense, flag::NC};
  case D::BY_NC_ND: return {LicenseClass::CcLicense, flag::NC | flag::ND};
  case D::BY_NC_ND_SA: return {LicenseClass::CcLicense, flag::NC | flag::ND | flag::SA};
  case D::BY_NC_SA: return {LicenseClass::CcLicense, flag::NC | flag::SA};
  case D::BY_ND: return {LicenseClass::CcLicense, flag::ND};
  case D::BY_ND_SA: return {LicenseClass::CcLicense, flag::ND | flag::SA};
  case D::BY_SA: return {LicenseClass::CcLicense, flag::SA};
  case D::ARR: return {LicenseClass::AllRightsReserved, 0};
  case D::NL: return {LicenseClass::NoLicense, 0};
  }
  return {};
}

Designation decode_attributes(const AttributeVector& v)
{
  if ((v.bits & ~flag::All) != 0)
    throw ValidationError("attribute vector has bits outside NC|ND|SA");
  if (v.license_class != LicenseClass::CcLicense && v.bits != 0)
    throw ValidationError("flags are only meaningful for CC licenses");

  switch (v.license_class) {
  case LicenseClass::PublicDomain: return Designation::PD;
  case LicenseClass::Waiver: return Designation::CC0;
  case LicenseClass::AllRightsReserved: return Designation::ARR;
  case LicenseClass::NoLicense: return Designation::NL;
  case LicenseClass::CcLicense: break;
  }

  // Indexed by bits: NC=1, ND=2, SA=4.
  static constexpr std::array<Designation, 8> by_bits = {
    Designation::BY,       Designation::BY_NC,    Designation::BY_ND,
    Designation::BY_NC_ND, Designation::BY_SA,    Designation::BY_NC_SA,
    Designation::BY_ND_SA, Designation::BY_NC_ND_SA,
  };
  return by_bits[v.bits];
}

// --- engines --------------------------------------------------------------

Outcome combine_or(Designation a, Designation b) noexcept
{
  const auto va = encode_attributes(a);
  const auto vb = encode_attributes(b);

  if (va.license_class == LicenseClass::PublicDomain)
    return Outcome::compatible(b);
  if (vb.license_class == LicenseClass::PublicDomain)
    return Outcome::compatible(a);
  if (va.license_class == LicenseClass::Waiver)
    return Outcome::compatible(b);
  if (vb.license_class == LicenseClass::Waiver)
    return Outcome::compatible(a);
  if (va.license_class == LicenseClass::CcLicense && vb.license_class == LicenseClass::CcLicense)
    return Outcome::compatible(
      decode_attributes({LicenseClass::CcLicense, static_cast<std::uint8_t>(va.bits | vb.bits)}));
  if (a == b)
    return Outcome::compatible(a);
  return Outcome::incompatible();
}

namespace {

// Restrictive-wins resolution of a cell whose two orders disagree. A
// designation "contains" another when it is their join in the OR lattice,
// which for two BY-family licenses means a flag superset.
Outcome more_restrictive(Outcome forward, Outcome reverse)
{
  if (forward == reverse)
    return forward;
  if (!forward.is_compatible() || !reverse.is_compatible())
    return Outcome::incompatible();
  const auto joined = combine_or(forward.designation(), reverse.designation());
  if (joined == forward || joined == reverse)
    return joined;
  return Outcome::incompatible();
}

}  // namespace

Outcome combine_matrix(Designation a, Designation b, Mode mode)
{
  const auto& m = LicenseMatrix::builtin();
  if (mode == Mode::Raw)
    return m.cell(a, b);
  return more_restrictive(m.cell(a, b), m.cell(b, a));
}

Outcome combine(Outcome a, Outcome b, Engine engine, Mode mode)
{
  if (!a.is_compatible() || !b.is_compatible())
    return Outcome::incompatible();
  if (engine == Engine::Or)
    return combine_or(a.designation(), b.designation());
  return combine_matrix(a.designation(), b.designation(), mode);
}

Outcome combine_all(std::span<const Designation> licenses, Engine engine, Mode mode)
{
  if (licenses.empty())
    throw std::invalid_argument("combine_all requires at least one license");

  // Iterative form of the right-recursive lookup; stops at the first X.
  auto acc = Outcome::compatible(licenses.back());
  for (auto it = licenses.rbegin() + 1; it != licenses.rend(); ++it) {
    acc = combine(Outcome::compatible(*it), acc, engine, mode);
    if (!acc.is_compatible())
      break;
  }
  return acc;
}

// --- audit ----------------------------------------------------------------

AlgebraReport validate_algebra(Engine engine, Mode mode)
{
  AlgebraReport report;
  report.engine_id = std::string(to_string(engine));
  report.mode = std::string(to_string(mode));

  auto op = [&](Outcome x, Outcome y) { return combine(x, y, engine, mode); };

  for (auto a : kAllDesignations) {
    for (auto b : kAllDesignations) {
      const auto forward = op(Outcome::compatible(a), Outcome::compatible(b));
      const auto reverse = op(Outcome::compatible(b), Outcome::compatible(a));
      if (forward != reverse)
        report.symmetry_violations.push_back({a, b, forward, reverse});
    }
  }

  for (auto a : kAllDesignations) {
    const auto oa = Outcome::compatible(a);
    for (auto b : kAllDesignations) {
      const auto ob = Outcome::compatible(b);
      const auto ab = op(oa, ob);
      for (auto c : kAllDesignations) {
        const auto oc = Outcome::compatible(c);
        const auto left = op(ab, oc);
        const auto right = op(oa, op(ob, oc));
        if (left != right)
          report.associativity_violations.push_back({a, b, c, left, right});
      }
    }
  }
  return report;
}

std::string render(const AlgebraReport& report)
{
  std::ostringstream out;
  for (const auto& v : report.symmetry_violations)
    out << "SYM " << v.a << ' ' << v.b << ' ' << v.forward << ' ' << v.reverse << '\n';
  for (const auto& v : report.associativity_violations)
    out << "ASSOC " << v.a << ' ' << v.b << ' ' << v.c << ' ' << v.left_result << ' '
        << v.right_result << '\n';
  return out.str();
}

std::vector<EngineDisagreement> engines_diff()
{
  std::vector<EngineDisagreement> out;
  for (auto a : kAllDesignations) {
    for (auto b : kAllDesignations) {
      const auto m = combine_matrix(a, b, Mode::Raw);
      const auto o = combine_or(a, b);
      if (m != o)
        out.push_back({a, b, m, o});
    }
  }
  return out;
}

}  // namespace wls
