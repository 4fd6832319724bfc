#include "inerton/cli/formats.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

#include <openssl/evp.h>

namespace inerton::cli {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_number: to_chars failed");
  return std::string(buf.data(), ptr);
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::string write_series_csv(const TimeSeries& series) {
  std::string out(kTrajectoryHeader);
  out += '\n';
  const std::string tag = to_string(series.provenance);
  for (const SystemState& s : series.samples) {
    for (double v : {s.t_l, s.X, s.Xdot, s.x_perp, s.xdot_perp, s.x_par}) {
      out += format_number(v);
      out += ',';
    }
    out += tag;
    out += '\n';
  }
  return out;
}

TimeSeries read_series_csv(std::string_view text) {
  TimeSeries series;
  bool header = true;
  bool have_tag = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (header) {
      if (line != kTrajectoryHeader) {
        throw std::invalid_argument("trajectory CSV: unexpected header");
      }
      header = false;
      continue;
    }
    std::array<std::string_view, 7> fields;
    std::size_t n = 0;
    std::string_view rest = line;
    while (n < fields.size()) {
      const auto comma = rest.find(',');
      fields[n++] = rest.substr(0, comma);
      if (comma == std::string_view::npos) {
        rest = {};
        break;
      }
      rest = rest.substr(comma + 1);
    }
    if (n != fields.size() || !rest.empty()) {
      throw std::invalid_argument("trajectory CSV line " + std::to_string(line_no) +
                                  ": expected 7 fields");
    }
    SystemState s;
    s.t_l = parse_number(fields[0]);
    s.X = parse_number(fields[1]);
    s.Xdot = parse_number(fields[2]);
    s.x_perp = parse_number(fields[3]);
    s.xdot_perp = parse_number(fields[4]);
    s.x_par = parse_number(fields[5]);
    const Provenance p = provenance_from_string(std::string(fields[6]));
    if (have_tag && p != series.provenance) {
      throw std::invalid_argument("trajectory CSV: mixed provenance");
    }
    series.provenance = p;
    have_tag = true;
    series.samples.push_back(s);
  }
  if (header) throw std::invalid_argument("trajectory CSV: empty input");
  return series;
}

void KeyValueDoc::comment(std::string_view text) {
  text_ += "# ";
  text_ += text;
  text_ += '\n';
}

void KeyValueDoc::add(std::string_view key, std::string_view value) {
  text_ += key;
  text_ += '=';
  text_ += value;
  text_ += '\n';
}

void KeyValueDoc::add(std::string_view key, double value) { add(key, format_number(value)); }

void KeyValueDoc::add(std::string_view key, long long value) {
  add(key, std::string_view(std::to_string(value)));
}

void KeyValueDoc::add(std::string_view key, bool value) {
  add(key, std::string_view(value ? "true" : "false"));
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xF];
  }
  return out;
}

namespace {

std::string fixed2(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2f", v);
  return buf.data();
}

std::string tick_label(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3g", v);
  return buf.data();
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg_line_plot(const std::vector<std::pair<double, double>>& points,
                                 const PlotOptions& options) {
  constexpr double width = 800, height = 500;
  constexpr double left = 80, right = 30, top = 40, bottom = 60;
  constexpr int ticks = 5;

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!points.empty()) {
    const auto [xmin, xmax] = std::minmax_element(
        points.begin(), points.end(), [](auto& a, auto& b) { return a.first < b.first; });
    const auto [ymin, ymax] = std::minmax_element(
        points.begin(), points.end(), [](auto& a, auto& b) { return a.second < b.second; });
    x0 = xmin->first;
    x1 = xmax->first;
    y0 = ymin->second;
    y1 = ymax->second;
  }
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;

  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * plot_w; };
  auto sy = [&](double y) { return top + plot_h - (y - y0) / (y1 - y0) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + xml_escape(options.title) + "</text>\n";

  const std::string axis_x = fixed2(top + plot_h);
  svg += "<line x1=\"" + fixed2(left) + "\" y1=\"" + axis_x + "\" x2=\"" +
         fixed2(left + plot_w) + "\" y2=\"" + axis_x + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fixed2(left) + "\" y1=\"" + fixed2(top) + "\" x2=\"" +
         fixed2(left) + "\" y2=\"" + axis_x + "\" stroke=\"black\"/>\n";

  for (int i = 0; i <= ticks; ++i) {
    const double fx = x0 + (x1 - x0) * i / ticks;
    const double fy = y0 + (y1 - y0) * i / ticks;
    const std::string px = fixed2(sx(fx));
    const std::string py = fixed2(sy(fy));
    svg += "<line x1=\"" + px + "\" y1=\"" + axis_x + "\" x2=\"" + px + "\" y2=\"" +
           fixed2(top + plot_h + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + px + "\" y=\"" + fixed2(top + plot_h + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           tick_label(fx) + "</text>\n";
    svg += "<line x1=\"" + fixed2(left - 5) + "\" y1=\"" + py + "\" x2=\"" + fixed2(left) +
           "\" y2=\"" + py + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fixed2(left - 8) + "\" y=\"" + fixed2(sy(fy) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           tick_label(fy) + "</text>\n";
  }

  svg += "<text x=\"" + fixed2(left + plot_w / 2) + "\" y=\"" + fixed2(height - 15) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         xml_escape(options.x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + fixed2(top + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 20 " + fixed2(top + plot_h / 2) + ")\">" +
         xml_escape(options.y_label) + "</text>\n";

  svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) svg += ' ';
    svg += fixed2(sx(points[i].first)) + "," + fixed2(sy(points[i].second));
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

}  // namespace inerton::cli
