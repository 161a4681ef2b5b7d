#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mertens_ap/characters.hpp"
#include "mertens_ap/zeros.hpp"

namespace oracle {

using Row = std::map<std::string, std::string>;

// Plain comma-separated reader; the oracle files never quote fields with commas except labels.
inline std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"')
            quoted = !quoted;
        else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

inline std::vector<Row> read(const std::string& name)
{
    std::ifstream in(std::string(MERTENS_AP_ORACLE_DIR) + "/" + name);
    if (!in)
        throw std::runtime_error("missing oracle file " + name);
    std::string line;
    std::getline(in, line);
    const auto header = split(line);
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto cells = split(line);
        Row r;
        for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i)
            r[header[i]] = cells[i];
        rows.push_back(std::move(r));
    }
    return rows;
}

inline double num(const Row& r, const std::string& key)
{
    return std::stod(r.at(key));
}

inline mertens_ap::ZeroDataset bundled(const std::string& label)
{
    return mertens_ap::find_dataset(MERTENS_AP_TEST_DATA_DIR, label);
}

}  // namespace oracle
