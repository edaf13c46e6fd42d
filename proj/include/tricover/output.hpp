#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tricover/arith.hpp"

namespace tricover {

// Null, integer, boolean, or text. Big integers and rationals are carried as
// text ("p/q") so that no serializer ever sees a floating-point value.
using FieldValue = std::variant<std::monostate, long, bool, std::string>;

// One row of subcommand output: ordered snake_case keys.
class OutputRecord {
 public:
  OutputRecord& add(std::string key, long v) { return put(std::move(key), v); }
  OutputRecord& add(std::string key, int v) { return put(std::move(key), static_cast<long>(v)); }
  OutputRecord& add(std::string key, bool v) { return put(std::move(key), v); }
  OutputRecord& add(std::string key, const BigInt& v) { return put(std::move(key), v.get_str()); }
  OutputRecord& add(std::string key, const Rat& v) { return put(std::move(key), v.to_string()); }
  OutputRecord& add(std::string key, std::string v) { return put(std::move(key), std::move(v)); }
  OutputRecord& add(std::string key, const char* v) { return put(std::move(key), std::string(v)); }
  OutputRecord& add_null(std::string key) { return put(std::move(key), std::monostate{}); }

  const std::vector<std::pair<std::string, FieldValue>>& fields() const { return fields_; }
  std::vector<std::string> keys() const;

 private:
  OutputRecord& put(std::string key, FieldValue v) {
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
  }

  std::vector<std::pair<std::string, FieldValue>> fields_;
};

enum class OutputFormat { kTable, kCsv, kJson };

struct Emission {
  std::vector<std::string> columns;
  std::vector<OutputRecord> records;
  // When set and there is exactly one record, table output is just this
  // field's value.
  std::string scalar_key;
};

std::string render_field(const FieldValue& v);

// JSON: one top-level array of flat objects. CSV: header row, then RFC 4180
// quoting. Table: aligned columns for people, not for parsing.
void write_json(const Emission& e, std::ostream& os);
void write_csv(const Emission& e, std::ostream& os);
void write_table(const Emission& e, std::ostream& os);
void write(const Emission& e, OutputFormat format, std::ostream& os);

}  // namespace tricover
