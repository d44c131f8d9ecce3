#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpq/grid.hpp"
#include "hpq/groups.hpp"
#include "hpq/quantize.hpp"

namespace hpq::io {

using json = nlohmann::json;

/// 17 significant digits, scientific, '.' decimal separator.
std::string format_number(double x);

/// Parses a JSON file; syntax errors become InputError with a line number.
json load_json_file(const std::string& path);

/// Rejects keys of `j` that are not in `allowed` (strict config parsing).
void reject_unknown_keys(const json& j, const std::vector<std::string>& allowed,
                         const std::string& context);

std::uint64_t fnv1a64(const std::string& s);
std::string config_hash_hex(const json& config, long seed);

/// Writes `<path>.meta.json` carrying config hash, tool version and extras.
void write_sidecar(const std::string& path, const std::string& config_hash,
                   const json& extra);

void write_grid_function_csv(const std::string& path, const GridFunction& f,
                             const std::string& config_hash);
GridFunction read_grid_function_csv(const std::string& path);

void write_kernel_csv(const std::string& path, const HalfLineOperator& op,
                      const std::string& config_hash);
HalfLineOperator read_kernel_csv(const std::string& path);

/// Finite semidirect product from the interchange JSON
/// {order_S, order_N, product_S, product_N, action}; 0-based indices,
/// identity at index 0.
SemidirectProduct semidirect_from_json(const json& j);

/// Named catalog groups: Z1..Z16 (cyclic), S3, Z4xZ2.
SemidirectProduct catalog_group(const std::string& name);

} // namespace hpq::io
