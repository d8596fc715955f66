#pragma once

// Reference models used only by tests. None of these call into the
// combination engines they are compared against.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wls/algebra.hpp"

namespace wls::test {

/// The license matrix re-typed cell by cell from the source figure, using
/// its space-separated spelling ("BY NC ND"). Rows and columns follow the
/// figure's order.
inline constexpr std::array<std::string_view, 12> kFigureOrder = {
  "PD", "CC0", "BY", "BY NC", "BY NC ND", "BY NC ND SA", "BY NC SA", "BY ND", "BY ND SA", "BY SA",
  "ARR", "NL",
};

// clang-format off
inline constexpr std::array<std::array<std::string_view, 12>, 12> kFigureCells = {{
  /* PD          */ {"PD", "CC0", "BY", "BY NC", "BY NC ND", "BY NC ND SA", "BY NC SA", "BY ND", "BY ND SA", "BY SA", "ARR", "NL"},
  /* CC0         */ {"CC0", "CC0", "BY", "BY NC", "BY NC ND", "BY NC ND SA", "BY NC SA", "BY ND", "BY ND SA", "BY SA", "ARR", "NL"},
  /* BY          */ {"BY", "BY", "BY", "BY NC", "BY NC ND", "BY NC ND SA", "BY NC SA", "BY ND", "BY ND SA", "BY SA", "X", "X"},
  /* BY NC       */ {"BY NC", "BY NC", "BY NC", "BY NC", "BY NC ND", "BY NC ND SA", "BY NC SA", "X", "X", "X", "X", "X"},
  /* BY NC ND    */ {"BY NC ND", "BY NC ND", "BY NC ND", "BY NC ND", "BY NC ND", "BY NC ND SA", "BY NC ND SA", "X", "BY NC ND", "X", "X", "X"},
  /* BY NC ND SA */ {"BY NC ND SA", "BY NC ND SA", "BY NC ND SA", "BY NC ND SA", "BY NC ND SA", "BY NC ND SA", "BY NC ND SA", "BY NC ND SA", "BY NC ND SA", "BY NC ND SA", "X", "X"},
  /* BY NC SA    */ {"BY NC SA", "BY NC SA", "BY NC SA", "BY NC SA", "X", "BY NC ND SA", "BY NC SA", "X", "X", "X", "X", "X"},
  /* BY ND       */ {"BY ND", "BY ND", "BY ND", "X", "BY NC ND", "BY NC ND SA", "X", "BY ND", "BY ND SA", "X", "X", "X"},
  /* BY ND SA    */ {"BY ND SA", "BY ND SA", "BY ND SA", "X", "X", "BY NC ND SA", "X", "BY ND SA", "BY ND SA", "BY ND SA", "X", "X"},
  /* BY SA       */ {"BY SA", "BY SA", "BY SA", "X", "X", "BY NC ND SA", "X", "X", "BY ND SA", "BY SA", "X", "X"},
  /* ARR         */ {"ARR", "ARR", "X", "X", "X", "X", "X", "X", "X", "X", "X", "X"},
  /* NL          */ {"NL", "NL", "X", "X", "X", "X", "X", "X", "X", "X", "X", "X"},
}};
// clang-format on

/// Figure spelling -> canonical code ("BY NC ND" -> "BY-NC-ND").
inline std::string figure_to_code(std::string_view cell)
{
  std::string out(cell);
  std::replace(out.begin(), out.end(), ' ', '-');
  return out;
}

inline std::string figure_cell_code(std::size_t row, std::size_t column)
{
  return figure_to_code(kFigureCells[row][column]);
}

/// Element of the 13-element carrier: a designation or X (nullopt).
using Element = std::optional<Designation>;

inline std::vector<Element> all_elements()
{
  std::vector<Element> out(kAllDesignations.begin(), kAllDesignations.end());
  out.push_back(std::nullopt);
  return out;
}

inline Outcome to_outcome(Element e)
{
  return e ? Outcome::compatible(*e) : Outcome::incompatible();
}

/// Restriction tokens read off the code text ("BY-NC-SA" -> {NC, SA}).
inline std::set<std::string> restriction_tokens(Designation d)
{
  std::set<std::string> tokens;
  std::string_view s = code(d);
  if (s.substr(0, 2) != "BY")
    return tokens;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto dash = s.find('-', pos);
    auto token = s.substr(pos, dash == std::string_view::npos ? dash : dash - pos);
    if (token != "BY")
      tokens.emplace(token);
    if (dash == std::string_view::npos)
      break;
    pos = dash + 1;
  }
  return tokens;
}

inline bool is_by_family(Designation d) { return code(d).substr(0, 2) == "BY"; }

/// Hand-stated order of the OR lattice: PD bottom, CC0 next, BY family by
/// restriction-set inclusion, ARR and NL above CC0 only, X on top.
inline bool lattice_leq(Element x, Element y)
{
  if (!y)
    return true;
  if (!x)
    return false;
  if (*x == *y || *x == Designation::PD)
    return true;
  if (*x == Designation::CC0)
    return *y != Designation::PD;
  if (is_by_family(*x) && is_by_family(*y)) {
    auto tx = restriction_tokens(*x);
    auto ty = restriction_tokens(*y);
    return std::includes(ty.begin(), ty.end(), tx.begin(), tx.end());
  }
  return false;
}

/// Least upper bound by brute-force search over the carrier.
inline Element brute_force_join(Element a, Element b)
{
  const auto elements = all_elements();
  std::vector<Element> upper;
  for (auto e : elements) {
    if (lattice_leq(a, e) && lattice_leq(b, e))
      upper.push_back(e);
  }
  for (auto candidate : upper) {
    if (std::all_of(upper.begin(), upper.end(),
                    [&](Element u) { return lattice_leq(candidate, u); }))
      return candidate;
  }
  return std::nullopt;  // unreachable for a lattice
}

/// Figure-table lookup lifted to X, straight from kFigureCells.
inline Element figure_lookup(Element a, Element b)
{
  if (!a || !b)
    return std::nullopt;
  auto cell = figure_cell_code(index_of(*a), index_of(*b));
  if (cell == "X")
    return std::nullopt;
  return designation_from_code(cell);
}

/// Left fold ((l0 + l1) + l2) + ... over the raw figure table. Exists to
/// show that the raw table is order-sensitive.
inline Element left_fold_figure(std::span<const Designation> list)
{
  Element acc = list.front();
  for (std::size_t i = 1; i < list.size(); ++i)
    acc = figure_lookup(acc, list[i]);
  return acc;
}

/// Right fold exactly as the recursive lookup pseudocode reads:
/// lookup(head, recurse(tail)).
inline Element right_fold_recursive(std::span<const Designation> list, auto&& lookup)
{
  if (list.size() == 1)
    return list.front();
  return lookup(Element{list.front()}, right_fold_recursive(list.subspan(1), lookup));
}

}  // namespace wls::test
