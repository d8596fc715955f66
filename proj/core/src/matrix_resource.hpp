#pragma once

#include <string_view>

namespace wls::detail {

// Text of core/data/license_matrix.csv, embedded at build time.
std::string_view license_matrix_csv() noexcept;

}  // namespace wls::detail
