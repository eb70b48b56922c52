#include "render.hpp"

#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace pivot_buffon::cli {

namespace {

void write_json(const Document& node, int depth, std::string& out) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    switch (node.type()) {
        case Document::value_t::object: {
            if (node.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : node.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += Document(key).dump();
                out += ": ";
                write_json(value, depth + 1, out);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Document::value_t::array: {
            if (node.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& value : node) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                write_json(value, depth + 1, out);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Document::value_t::number_float:
            out += format_number(node.get<double>(), true);
            return;
        default:
            out += node.dump();
            return;
    }
}

std::string csv_cell(const Document& value) {
    switch (value.type()) {
        case Document::value_t::number_float:
            return format_number(value.get<double>(), false);
        case Document::value_t::string:
            return value.get<std::string>();
        case Document::value_t::null:
            return "";
        default:
            return value.dump();
    }
}

void flatten(const Document& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, cells);
        }
        return;
    }
    cells.emplace_back(prefix, csv_cell(node));
}

}  // namespace

std::string format_number(double value, bool json) {
    if (std::isfinite(value)) {
        return fmt::format("{:.17g}", value);
    }
    if (json) {
        return "null";
    }
    if (std::isnan(value)) {
        return "nan";
    }
    return value > 0 ? "inf" : "-inf";
}

std::string render_json(const Document& doc) {
    std::string out;
    write_json(doc, 0, out);
    out += "\n";
    return out;
}

std::string render_csv(const std::vector<Document>& rows) {
    std::string out;
    bool header_done = false;
    for (const auto& row : rows) {
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(row, "", cells);
        if (!header_done) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out += (i ? "," : "") + cells[i].first;
            }
            out += "\n";
            header_done = true;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += (i ? "," : "") + cells[i].second;
        }
        out += "\n";
    }
    return out;
}

}  // namespace pivot_buffon::cli
