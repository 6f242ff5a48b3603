#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvkit/types.hpp"

namespace curvkit {

/// Ordered hierarchical report tree. Emission preserves insertion order and
/// prints every floating-point value with 17 significant digits, so a report
/// for a fixed config and seed is byte-stable.
class ReportNode {
 public:
  ReportNode& put(const std::string& key, const std::string& value);
  ReportNode& put(const std::string& key, const char* value);
  ReportNode& put(const std::string& key, double value);
  ReportNode& put(const std::string& key, bool value);
  ReportNode& put(const std::string& key, long long value);
  ReportNode& put(const std::string& key, int value) {
    return put(key, static_cast<long long>(value));
  }
  ReportNode& put(const std::string& key, std::uint64_t value);
  /// Complex value as "re+imi" with 17 significant digits per part.
  ReportNode& put(const std::string& key, cdouble value);
  /// Vector as an interleaved re/im list.
  ReportNode& put(const std::string& key, const Vector& value);

  /// Nested section (created on first use, insertion-ordered).
  ReportNode& child(const std::string& key);
  /// Appends an item to this node's list section.
  ReportNode& list_item();

  std::string to_text() const;
  void write_file(const std::string& path) const;

  static std::string format_double(double value);

 private:
  struct Entry {
    std::string key;  // empty for list items
    std::string scalar;
    std::unique_ptr<ReportNode> node;
    bool is_list_item = false;
  };
  std::vector<Entry> entries_;

  void emit(std::string& out, int indent) const;
};

/// CSV writer with the same 17-significant-digit float format.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& cells);
  static std::string cell(double value);
  static std::string cell(const std::string& value) { return value; }
  std::string to_text() const;
  void write_file(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace curvkit
