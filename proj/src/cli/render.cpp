#include "qugame/cli/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qugame::cli {

namespace {

using nlohmann::json;

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string scalar(const json& v) {
  if (v.is_number()) return format_number(v);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

bool all_scalar(const json& arr) { return std::all_of(arr.begin(), arr.end(), [](const json& e) { return is_scalar(e); }); }

std::string inline_value(const json& v) {
  if (is_scalar(v)) return scalar(v);
  if (v.is_object()) return "{}";
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += inline_value(v[i]);
  }
  return s + "]";
}

/// Flat enough to print on one line.
bool is_inline(const json& v) {
  if (is_scalar(v) || (v.is_object() && v.empty())) return true;
  if (!v.is_array()) return false;
  if (all_scalar(v)) return true;
  // Short rows, such as [re, im] amplitude pairs, stay on one line.
  return std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_array() && all_scalar(e) && e.size() <= 4; });
}

void render_bimatrix(std::ostringstream& out, const json& g, const std::string& pad) {
  const auto& rows = g["row_labels"];
  const auto& cols = g["col_labels"];
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 0;
  for (const auto& c : cols) width = std::max(width, c.get<std::string>().size());
  std::size_t label_width = 0;
  for (const auto& r : rows) label_width = std::max(label_width, r.get<std::string>().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> line;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::string cell = "(" + format_number(g["a"][i][k]) + ", " + format_number(g["b"][i][k]) + ")";
      width = std::max(width, cell.size());
      line.push_back(std::move(cell));
    }
    cells.push_back(std::move(line));
  }
  auto padded = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  out << pad << padded("", label_width);
  for (const auto& c : cols) out << "  " << padded(c.get<std::string>(), width);
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << pad << padded(rows[i].get<std::string>(), label_width);
    for (const auto& cell : cells[i]) out << "  " << padded(cell, width);
    out << "\n";
  }
}

void render(std::ostringstream& out, const json& v, const std::string& pad);

void render_entry(std::ostringstream& out, const std::string& key, const json& v, const std::string& pad) {
  if (is_inline(v)) {
    out << pad << key << ": " << inline_value(v) << "\n";
    return;
  }
  out << pad << key << ":\n";
  render(out, v, pad + "  ");
}

void render(std::ostringstream& out, const json& v, const std::string& pad) {
  if (v.is_object()) {
    if (v.contains("kind") && v["kind"] == "bimatrix") {
      render_bimatrix(out, v, pad);
      return;
    }
    for (const auto& [key, value] : v.items()) render_entry(out, key, value, pad);
  } else if (v.is_array()) {
    if (is_inline(v)) {
      out << pad << inline_value(v) << "\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) render_entry(out, "[" + std::to_string(i) + "]", v[i], pad);
  } else {
    out << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string format_number(const nlohmann::json& v) {
  if (v.is_number_integer()) return v.dump();
  return fixed4(v.get<double>());
}

std::string render_table(const nlohmann::json& result) {
  std::ostringstream out;
  render(out, result, "");
  return out.str();
}

}  // namespace qugame::cli
