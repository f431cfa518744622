#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdm::cli {

/// %.12g with the C locale's '.' decimal point; byte-stable for fixed input.
std::string format_number(double v);

struct Cell {
    enum class Kind { number, text, blank } kind = Kind::blank;
    double number = 0.0;
    std::string text;

    static Cell num(double v) { return {Kind::number, v, {}}; }
    static Cell str(std::string s) { return {Kind::text, 0.0, std::move(s)}; }
    static Cell none() { return {}; }
};

/// Emits rows as CSV (one header line, 12 significant digits) or as
/// JSON-lines records keyed by column name. Footer notes become '#' comment
/// lines in CSV and {"note", "value"} records in JSON mode.
class TableWriter {
  public:
    TableWriter(std::ostream& os, bool json, std::vector<std::string> columns);

    void row(const std::vector<Cell>& cells);
    void note(const std::string& key, const std::string& value);

  private:
    std::ostream& os_;
    bool json_;
    std::vector<std::string> columns_;
};

}  // namespace pdm::cli
