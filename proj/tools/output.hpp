#pragma once

// Tabular output in markdown, csv or json, headed by the job description.

#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace flagcoh::cli {

enum class Format { Markdown, Csv, Json };

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

class Document {
 public:
  Document(std::string command, std::vector<std::pair<std::string, std::string>> job)
      : command_(std::move(command)), job_(std::move(job)) {}

  Table& table(std::string title, std::vector<std::string> columns);
  void note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }
  void status(std::string s) { status_ = std::move(s); }

  std::string render(Format f) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> job_;
  std::vector<std::pair<std::string, std::string>> notes_;
  std::deque<Table> tables_;
  std::string status_ = "ok";
};

Format parse_format(const std::string& text);

}  // namespace flagcoh::cli
