#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqhe/sweep.hpp"

namespace fqhe {

inline constexpr std::string_view kCsvHeader =
    "alpha,a_nm,work_J,efficiency,q_ab_J,q_bc_J,q_cd_J,q_da_J,status";

/// %.17g, which round-trips every finite double. Non-finite values and an
/// undefined efficiency become empty fields.
[[nodiscard]] std::string format_csv(std::span<const SweepRecord> records);

/// Throws std::runtime_error naming the path if the file cannot be written.
void write_csv(std::span<const SweepRecord> records, const std::filesystem::path& path);

/// Inverse of format_csv for the columns it emits. Columns not in the CSV
/// (log Z, term counts) are left at their defaults; empty numeric fields
/// read back as NaN.
[[nodiscard]] std::vector<SweepRecord> parse_csv(std::string_view text);

} // namespace fqhe
