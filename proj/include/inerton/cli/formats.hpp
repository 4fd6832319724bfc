#pragma once

// Byte-stable text formats: shortest round-trip numbers, trajectory CSV,
// key=value documents, SHA-256 digests and a minimal SVG line plot.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inerton/core.hpp"

namespace inerton::cli {

/// Shortest decimal that parses back to exactly `value`.
std::string format_number(double value);
/// Strict full-string parse; throws std::invalid_argument.
double parse_number(std::string_view text);

inline constexpr std::string_view kTrajectoryHeader =
    "t,X,Xdot,x_perp,xdot_perp,x_par,provenance";

/// One row per sample, LF line endings, header first.
std::string write_series_csv(const TimeSeries& series);

/// Inverse of write_series_csv for the samples and provenance. Event and
/// config metadata are not stored in the CSV and are left defaulted.
/// Throws std::invalid_argument on malformed input.
TimeSeries read_series_csv(std::string_view text);

/// Ordered key=value document.
class KeyValueDoc {
 public:
  void comment(std::string_view text);
  void add(std::string_view key, std::string_view value);
  void add(std::string_view key, double value);
  void add(std::string_view key, long long value);
  void add(std::string_view key, int value) { add(key, static_cast<long long>(value)); }
  void add(std::string_view key, bool value);
  std::string str() const { return text_; }

 private:
  std::string text_;
};

std::string sha256_hex(std::string_view bytes);

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Self-contained 800x500 SVG with axes, tick labels and one polyline.
std::string render_svg_line_plot(const std::vector<std::pair<double, double>>& points,
                                 const PlotOptions& options);

}  // namespace inerton::cli
