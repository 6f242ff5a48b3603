#include "curvkit/report.hpp"

#include <cstdio>
#include <fstream>

namespace curvkit {

std::string ReportNode::format_double(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

ReportNode& ReportNode::put(const std::string& key, const std::string& value) {
  entries_.push_back({key, value, nullptr, false});
  return *this;
}

ReportNode& ReportNode::put(const std::string& key, const char* value) {
  return put(key, std::string(value));
}

ReportNode& ReportNode::put(const std::string& key, double value) {
  return put(key, format_double(value));
}

ReportNode& ReportNode::put(const std::string& key, bool value) {
  return put(key, std::string(value ? "true" : "false"));
}

ReportNode& ReportNode::put(const std::string& key, long long value) {
  return put(key, std::to_string(value));
}

ReportNode& ReportNode::put(const std::string& key, std::uint64_t value) {
  return put(key, std::to_string(value));
}

ReportNode& ReportNode::put(const std::string& key, cdouble value) {
  return put(key, format_double(value.real()) + (value.imag() < 0 ? "" : "+") +
                      format_double(value.imag()) + "i");
}

ReportNode& ReportNode::put(const std::string& key, const Vector& value) {
  std::string joined = "[";
  for (int i = 0; i < value.size(); ++i) {
    if (i) joined += ", ";
    joined += format_double(value(i).real()) + ", " + format_double(value(i).imag());
  }
  joined += "]";
  return put(key, joined);
}

ReportNode& ReportNode::child(const std::string& key) {
  for (Entry& e : entries_) {
    if (e.node && !e.is_list_item && e.key == key) return *e.node;
  }
  entries_.push_back({key, "", std::make_unique<ReportNode>(), false});
  return *entries_.back().node;
}

ReportNode& ReportNode::list_item() {
  entries_.push_back({"", "", std::make_unique<ReportNode>(), true});
  return *entries_.back().node;
}

void ReportNode::emit(std::string& out, int indent) const {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  for (const Entry& e : entries_) {
    if (!e.node) {
      out += pad + e.key + ": " + e.scalar + "\n";
    } else if (e.is_list_item) {
      out += pad + "-\n";
      e.node->emit(out, indent + 1);
    } else {
      out += pad + e.key + ":\n";
      e.node->emit(out, indent + 1);
    }
  }
}

std::string ReportNode::to_text() const {
  std::string out;
  emit(out, 0);
  return out;
}

void ReportNode::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CurvkitError("cannot write report file: " + path);
  out << to_text();
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) { rows_.push_back(cells); }

std::string CsvWriter::cell(double value) { return ReportNode::format_double(value); }

std::string CsvWriter::to_text() const {
  std::string out;
  for (size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ",";
    out += header_[i];
  }
  out += "\n";
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CurvkitError("cannot write csv file: " + path);
  out << to_text();
}

}  // namespace curvkit
