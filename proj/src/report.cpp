#include "rootcontract/report.hpp"

#include "rootcontract/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rootcontract {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cell_json(const Cell& cell) {
    if (const auto* i = std::get_if<long long>(&cell)) return *i;
    return cell_text(cell);
}

Cell cell_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) {
        Row tmp;
        tmp.add("x", j.get<std::string>());
        return tmp.cells.front().second;
    }
    throw std::invalid_argument("report cell must be an integer or a string");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, Rat>) return v.str();
            else return v;
        },
        cell);
}

Row& Row::add(std::string column, Cell value) {
    if (auto* s = std::get_if<std::string>(&value)) {
        try {
            value = Rat::parse(*s);
        } catch (const std::invalid_argument&) {
        }
    }
    cells.emplace_back(std::move(column), std::move(value));
    return *this;
}

const Cell* Row::find(std::string_view column) const {
    for (const auto& [name, value] : cells)
        if (name == column) return &value;
    return nullptr;
}

std::string Row::key() const {
    const Cell* k = find("key");
    return k ? cell_text(*k) : std::string();
}

void Report::set_provenance(const std::string& key, const std::string& source) {
    for (auto& [k, v] : provenance)
        if (k == key) {
            v = source;
            return;
        }
    provenance.emplace_back(key, source);
}

std::string Report::provenance_of(std::string_view key) const {
    for (const auto& [k, v] : provenance)
        if (k == key) return v;
    return {};
}

std::vector<std::string> Report::columns() const {
    std::vector<std::string> out;
    for (const Row& row : rows)
        for (const auto& [name, value] : row.cells)
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    return out;
}

const Cell& Report::at(std::string_view key, std::string_view column) const {
    for (const Row& row : rows)
        if (row.key() == key)
            if (const Cell* c = row.find(column)) return *c;
    throw std::out_of_range("report has no cell " + std::string(key) + "/" + std::string(column));
}

Format parse_format(std::string_view text) {
    if (text == "md") return Format::Markdown;
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    throw ValidationError("format must be md, csv or json", std::string(text));
}

std::string render_json(const Report& report) {
    ordered_json j;
    j["schema_version"] = report.schema_version;
    j["command"] = report.command;
    j["inputs"] = ordered_json::object();
    for (const auto& [k, v] : report.inputs) j["inputs"][k] = v;
    j["rows"] = ordered_json::array();
    for (const Row& row : report.rows) {
        ordered_json r = ordered_json::object();
        for (const auto& [name, value] : row.cells) r[name] = cell_json(value);
        j["rows"].push_back(std::move(r));
    }
    j["provenance"] = ordered_json::object();
    for (const auto& [k, v] : report.provenance) j["provenance"][k] = v;
    return j.dump(2) + "\n";
}

Report parse_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid report JSON: ") + e.what());
    }
    Report report;
    try {
        report.schema_version = j.at("schema_version").get<std::string>();
        report.command = j.at("command").get<std::string>();
        for (const auto& [k, v] : j.at("inputs").items()) report.inputs.emplace_back(k, v.get<std::string>());
        for (const auto& r : j.at("rows")) {
            Row& row = report.add_row();
            for (const auto& [k, v] : r.items()) row.cells.emplace_back(k, cell_from_json(v));
        }
        for (const auto& [k, v] : j.at("provenance").items())
            report.provenance.emplace_back(k, v.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    return report;
}

std::string render_markdown(const Report& report) {
    std::ostringstream os;
    os << "# " << report.command << "\n\n";
    if (!report.inputs.empty()) {
        os << "| input | value |\n|---|---|\n";
        for (const auto& [k, v] : report.inputs) os << "| " << md_escape(k) << " | " << md_escape(v) << " |\n";
        os << "\n";
    }
    auto cols = report.columns();
    const bool with_prov = !report.provenance.empty();
    if (cols.empty()) return os.str();
    os << "|";
    for (const auto& c : cols) os << " " << md_escape(c) << " |";
    if (with_prov) os << " provenance |";
    os << "\n|";
    for (std::size_t i = 0; i < cols.size() + (with_prov ? 1 : 0); ++i) os << "---|";
    os << "\n";
    for (const Row& row : report.rows) {
        os << "|";
        for (const auto& c : cols) {
            const Cell* cell = row.find(c);
            os << " " << (cell ? md_escape(cell_text(*cell)) : std::string()) << " |";
        }
        if (with_prov) os << " " << report.provenance_of(row.key()) << " |";
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const Report& report) {
    std::ostringstream os;
    auto cols = report.columns();
    const bool with_prov = !report.provenance.empty();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
    if (with_prov) os << (cols.empty() ? "" : ",") << "provenance";
    os << "\n";
    for (const Row& row : report.rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const Cell* cell = row.find(cols[i]);
            os << (i ? "," : "") << (cell ? csv_escape(cell_text(*cell)) : std::string());
        }
        if (with_prov) os << (cols.empty() ? "" : ",") << csv_escape(report.provenance_of(row.key()));
        os << "\n";
    }
    return os.str();
}

std::string render(const Report& report, Format format) {
    switch (format) {
        case Format::Markdown: return render_markdown(report);
        case Format::Csv: return render_csv(report);
        case Format::Json: return render_json(report);
    }
    return {};
}

}  // namespace rootcontract
