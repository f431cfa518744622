#include "output.hpp"

#include <cassert>
#include <cstdio>

#include <json.hpp>

namespace pdm::cli {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

TableWriter::TableWriter(std::ostream& os, bool json, std::vector<std::string> columns)
    : os_(os), json_(json), columns_(std::move(columns)) {
    if (!json_) {
        for (std::size_t i = 0; i < columns_.size(); ++i)
            os_ << (i ? "," : "") << columns_[i];
        os_ << '\n';
    }
}

void TableWriter::row(const std::vector<Cell>& cells) {
    assert(cells.size() == columns_.size());
    if (json_) {
        nlohmann::json j;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            switch (cells[i].kind) {
                case Cell::Kind::number: j[columns_[i]] = cells[i].number; break;
                case Cell::Kind::text: j[columns_[i]] = cells[i].text; break;
                case Cell::Kind::blank: j[columns_[i]] = nullptr; break;
            }
        }
        os_ << j.dump() << '\n';
        return;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os_ << ',';
        switch (cells[i].kind) {
            case Cell::Kind::number: os_ << format_number(cells[i].number); break;
            case Cell::Kind::text: os_ << cells[i].text; break;
            case Cell::Kind::blank: break;
        }
    }
    os_ << '\n';
}

void TableWriter::note(const std::string& key, const std::string& value) {
    if (json_) {
        nlohmann::json j;
        j["note"] = key;
        j["value"] = value;
        os_ << j.dump() << '\n';
        return;
    }
    os_ << "# " << key << " = " << value << '\n';
}

}  // namespace pdm::cli
