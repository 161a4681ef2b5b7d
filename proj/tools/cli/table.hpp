#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace mertens_ap::cli {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

// Header row, 12 significant digits, RFC 4180 quoting.
void write_csv(std::ostream& out, const Table& table);
// {"meta": {"version", "config"}, "rows": [{column: value}]}
void write_json(std::ostream& out, const Table& table, const nlohmann::ordered_json& config);

}  // namespace mertens_ap::cli
