#include "wls/designation.hpp"

#include <stdexcept>

namespace wls {

namespace {

constexpr std::array<std::string_view, kDesignationCount> kCodes = {
  "PD",    "CC0",      "BY",    "BY-NC", "BY-NC-ND", "BY-NC-ND-SA",
  "BY-NC-SA", "BY-ND", "BY-ND-SA", "BY-SA", "ARR",   "NL",
};

}  // namespace

std::string_view code(Designation d) noexcept { return kCodes[index_of(d)]; }

std::optional<Designation> designation_from_code(std::string_view text) noexcept
{
  for (auto d : kAllDesignations) {
    if (kCodes[index_of(d)] == text)
      return d;
  }
  return std::nullopt;
}

std::string_view code_list() noexcept
{
  return "PD, CC0, BY, BY-NC, BY-NC-ND, BY-NC-ND-SA, BY-NC-SA, BY-ND, BY-ND-SA, BY-SA, ARR, NL";
}

std::ostream& operator<<(std::ostream& os, Designation d) { return os << code(d); }

Designation Outcome::designation() const
{
  if (!value_)
    throw std::logic_error("incompatible outcome carries no designation");
  return *value_;
}

std::string_view Outcome::code() const noexcept
{
  return value_ ? wls::code(*value_) : kIncompatibleCode;
}

std::optional<Outcome> outcome_from_code(std::string_view text) noexcept
{
  if (text == kIncompatibleCode)
    return Outcome::incompatible();
  if (auto d = designation_from_code(text))
    return Outcome::compatible(*d);
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Outcome& o) { return os << o.code(); }

}  // namespace wls
