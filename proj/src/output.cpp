#include "tricover/output.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "tricover/errors.hpp"

namespace tricover {

std::vector<std::string> OutputRecord::keys() const {
  std::vector<std::string> out;
  out.reserve(fields_.size());
  for (const auto& [k, v] : fields_) {
    out.push_back(k);
  }
  return out;
}

std::string render_field(const FieldValue& v) {
  if (std::holds_alternative<std::monostate>(v)) {
    return "";
  }
  if (const auto* i = std::get_if<long>(&v)) {
    return std::to_string(*i);
  }
  if (const auto* b = std::get_if<bool>(&v)) {
    return *b ? "true" : "false";
  }
  return std::get<std::string>(v);
}

namespace {

void check_columns(const Emission& e) {
  for (const auto& r : e.records) {
    if (r.keys() != e.columns) {
      throw ConsistencyError("output record keys differ from declared columns");
    }
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_json(const Emission& e, std::ostream& os) {
  check_columns(e);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : e.records) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields()) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[k] = nullptr;
            } else {
              obj[k] = x;
            }
          },
          v);
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << "\n";
}

void write_csv(const Emission& e, std::ostream& os) {
  check_columns(e);
  for (std::size_t i = 0; i < e.columns.size(); ++i) {
    os << (i ? "," : "") << csv_quote(e.columns[i]);
  }
  os << "\r\n";
  for (const auto& r : e.records) {
    const auto& f = r.fields();
    for (std::size_t i = 0; i < f.size(); ++i) {
      os << (i ? "," : "") << csv_quote(render_field(f[i].second));
    }
    os << "\r\n";
  }
}

void write_table(const Emission& e, std::ostream& os) {
  check_columns(e);
  if (!e.scalar_key.empty() && e.records.size() == 1) {
    for (const auto& [k, v] : e.records.front().fields()) {
      if (k == e.scalar_key) {
        os << render_field(v) << "\n";
        return;
      }
    }
  }
  std::vector<std::size_t> width(e.columns.size());
  for (std::size_t i = 0; i < e.columns.size(); ++i) {
    width[i] = e.columns[i].size();
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : e.records) {
    auto& row = cells.emplace_back();
    for (std::size_t i = 0; i < r.fields().size(); ++i) {
      row.push_back(render_field(r.fields()[i].second));
      if (row.back().empty()) {
        row.back() = "-";
      }
      width[i] = std::max(width[i], row.back().size());
    }
  }
  auto line = [&](const std::vector<std::string>& row) {
    std::ostringstream text;
    for (std::size_t i = 0; i < row.size(); ++i) {
      text << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << row[i];
    }
    std::string s = text.str();
    s.erase(s.find_last_not_of(' ') + 1);
    os << s << "\n";
  };
  line(e.columns);
  for (const auto& row : cells) {
    line(row);
  }
}

void write(const Emission& e, OutputFormat format, std::ostream& os) {
  switch (format) {
    case OutputFormat::kJson:
      write_json(e, os);
      return;
    case OutputFormat::kCsv:
      write_csv(e, os);
      return;
    case OutputFormat::kTable:
      write_table(e, os);
      return;
  }
}

}  // namespace tricover
