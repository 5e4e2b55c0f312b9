#include "tautcalc/report.hpp"

#include <algorithm>

namespace tautcalc::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::kOk: return "ok";
    case Status::kFail: return "FAIL";
    case Status::kInfo: return "info";
  }
  return "?";
}

void Report::describe(const std::string& section, const std::string& text) {
  descriptions_.emplace_back(section, text);
}

void Report::info(const std::string& section, const std::string& name, const std::string& value) {
  rows_.push_back({section, name, value, "", Status::kInfo});
}

void Report::info(const std::string& section, const std::string& name, const Rational& value) {
  info(section, name, to_string(value));
}

bool Report::check(const std::string& section, const std::string& name, const std::string& value,
                   const std::string& expected) {
  const bool ok = value == expected;
  rows_.push_back({section, name, value, expected, ok ? Status::kOk : Status::kFail});
  return ok;
}

bool Report::check(const std::string& section, const std::string& name, const Rational& value,
                   const Rational& expected) {
  return check(section, name, to_string(value), to_string(expected));
}

bool Report::check_true(const std::string& section, const std::string& name, bool ok,
                        const std::string& detail) {
  rows_.push_back({section, name, ok ? detail : "false", detail, ok ? Status::kOk : Status::kFail});
  return ok;
}

void Report::fail(const std::string& section, const std::string& name, const std::string& message) {
  rows_.push_back({section, name, "error: " + message, "", Status::kFail});
}

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
  return static_cast<int>(
      std::count_if(rows_.begin(), rows_.end(), [](const Row& r) { return r.status == Status::kFail; }));
}

int Report::checks() const {
  return static_cast<int>(
      std::count_if(rows_.begin(), rows_.end(), [](const Row& r) { return r.status != Status::kInfo; }));
}

void Report::render(std::ostream& out, Emit emit) const {
  switch (emit) {
    case Emit::kTable: render_table(out); break;
    case Emit::kJson: render_json(out); break;
    case Emit::kCsv: render_csv(out); break;
  }
}

void Report::write_diff(std::ostream& out) const {
  for (const auto& row : rows_) {
    if (row.status != Status::kFail) continue;
    out << "FAIL " << row.section << " / " << row.name << "\n";
    out << "  - expected: " << row.expected << "\n";
    out << "  + computed: " << row.value << "\n";
  }
}

void Report::render_table(std::ostream& out) const {
  std::size_t name_width = 4;
  std::size_t value_width = 5;
  for (const auto& row : rows_) {
    name_width = std::max(name_width, row.name.size());
    value_width = std::max(value_width, row.value.size());
  }
  name_width = std::min<std::size_t>(name_width, 48);
  value_width = std::min<std::size_t>(value_width, 40);

  auto pad = [](const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
  };

  out << "# " << command_ << "\n";
  std::string current;
  bool first = true;
  for (const auto& row : rows_) {
    if (first || row.section != current) {
      current = row.section;
      first = false;
      out << "\n[" << current << "]\n";
      for (const auto& [section, text] : descriptions_) {
        if (section == current) out << "  " << text << "\n";
      }
    }
    out << "  " << pad(row.name, name_width) << "  " << pad(row.value, value_width) << "  "
        << to_string(row.status);
    if (row.status == Status::kFail) out << " (expected " << row.expected << ")";
    out << "\n";
  }
  out << "\n" << checks() - failures() << "/" << checks() << " checks passed\n";
}

void Report::render_json(std::ostream& out) const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["command"] = command_;
  for (const auto& [key, value] : payload_.items()) doc[key] = value;
  nlohmann::ordered_json sections = nlohmann::ordered_json::object();
  for (const auto& [section, text] : descriptions_) sections[section] = text;
  doc["sections"] = sections;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["section"] = row.section;
    j["name"] = row.name;
    j["value"] = row.value;
    if (row.status != Status::kInfo) j["expected"] = row.expected;
    j["status"] = to_string(row.status);
    rows.push_back(std::move(j));
  }
  doc["checks"] = rows;
  doc["status"] = ok() ? "ok" : "fail";
  out << doc.dump(2) << "\n";
}

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

}  // namespace

void Report::render_csv(std::ostream& out) const {
  out << "section,name,value,expected,status\n";
  for (const auto& row : rows_) {
    out << csv_field(row.section) << ',' << csv_field(row.name) << ',' << csv_field(row.value) << ','
        << csv_field(row.expected) << ',' << to_string(row.status) << "\n";
  }
}

}  // namespace tautcalc::cli
