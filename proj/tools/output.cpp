#include "output.hpp"

#include "flagcoh/numeric.hpp"

#include <json.hpp>

#include <sstream>

namespace flagcoh::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "markdown" || text == "md") return Format::Markdown;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InvalidInput("unknown format '" + text + "'");
}

Table& Document::table(std::string title, std::vector<std::string> columns) {
  tables_.push_back(Table{std::move(title), std::move(columns), {}});
  return tables_.back();
}

std::string Document::render(Format f) const {
  std::ostringstream out;
  if (f == Format::Json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command_;
    nlohmann::ordered_json job = nlohmann::ordered_json::object();
    for (const auto& [k, v] : job_) job[k] = v;
    j["job"] = job;
    j["status"] = status_;
    for (const auto& [k, v] : notes_) j["notes"][k] = v;
    nlohmann::ordered_json tables = nlohmann::ordered_json::object();
    for (const auto& t : tables_) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : t.rows) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < t.columns.size(); ++c) row[t.columns[c]] = c < r.size() ? r[c] : "";
        rows.push_back(row);
      }
      tables[t.title] = rows;
    }
    j["tables"] = tables;
    out << j.dump(1) << "\n";
    return out.str();
  }
  std::string job;
  for (const auto& [k, v] : job_) job += (job.empty() ? "" : " ") + k + "=" + v;
  if (f == Format::Markdown) {
    out << "# flagcoh " << command_ << "\n\n";
    out << "job: `" << job << "`\n\n";
    for (const auto& [k, v] : notes_) out << "- " << k << ": " << v << "\n";
    if (!notes_.empty()) out << "\n";
    for (const auto& t : tables_) {
      out << "## " << t.title << "\n\n|";
      for (const auto& c : t.columns) out << " " << md_cell(c) << " |";
      out << "\n|";
      for (std::size_t c = 0; c < t.columns.size(); ++c) out << "---|";
      out << "\n";
      for (const auto& r : t.rows) {
        out << "|";
        for (const auto& c : r) out << " " << md_cell(c) << " |";
        out << "\n";
      }
      out << "\n";
    }
    out << "status: " << status_ << "\n";
  } else {
    out << "# flagcoh " << command_ << " " << job << "\n";
    for (const auto& [k, v] : notes_) out << "# " << k << ": " << v << "\n";
    for (const auto& t : tables_) {
      out << "# " << t.title << "\n";
      for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_field(t.columns[c]);
      out << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_field(r[c]);
        out << "\n";
      }
    }
    out << "# status: " << status_ << "\n";
  }
  return out.str();
}

}  // namespace flagcoh::cli
