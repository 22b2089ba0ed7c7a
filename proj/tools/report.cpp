#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "linezero/error.hpp"

namespace linezero::cli {

void RunReport::add(json item, bool ok) {
  item["pass"] = ok;
  items.push_back(std::move(item));
  ok ? ++pass : ++fail;
}

void RunReport::add_error(json item, const std::string& message, bool nonconvergence) {
  item["pass"] = false;
  item["error"] = message;
  items.push_back(std::move(item));
  ++fail;
  ++errors;
  nonconverged = nonconverged || nonconvergence;
}

json RunReport::to_json() const {
  json j;
  j["tool_version"] = kToolVersion;
  j["command"] = to_string(command);
  j["config"] = config;
  j["summary"] = summary;
  j["items"] = items;
  j["pass"] = pass;
  j["fail"] = fail;
  j["wall_time_s"] = wall_time_s;
  return j;
}

int RunReport::exit_code() const {
  if (fail == 0) return 0;
  if (fail > errors) return 1;  // at least one item ran and failed its check
  return nonconverged ? 3 : 1;
}

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string rat(const series::Rational& q) {
  series::Rational c = q;
  c.canonicalize();
  return series::to_string(c);
}

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string csv_text(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t k = 0; k < cells.size(); ++k) {
      if (k) os << ',';
      const std::string& c = cells[k];
      if (c.find_first_of(",\"\n") == std::string::npos) {
        os << c;
      } else {
        os << '"';
        for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
        os << '"';
      }
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << content;
    if (!f.flush()) throw Error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

namespace {
constexpr double kW = 640, kH = 420, kL = 70, kR = 20, kT = 40, kB = 50;

struct Frame {
  double x0, x1, y0, y1;
  double X(double x) const { return kL + (x - x0) / (x1 - x0) * (kW - kL - kR); }
  double Y(double y) const { return kH - kB - (y - y0) / (y1 - y0) * (kH - kT - kB); }
};

Frame frame_for(const std::vector<std::pair<double, double>>& pts) {
  Frame f{0, 1, 0, 1};
  if (pts.empty()) return f;
  f.x0 = f.x1 = pts[0].first;
  f.y0 = f.y1 = pts[0].second;
  for (auto [x, y] : pts) {
    f.x0 = std::min(f.x0, x), f.x1 = std::max(f.x1, x);
    f.y0 = std::min(f.y0, y), f.y1 = std::max(f.y1, y);
  }
  auto pad = [](double& a, double& b) {
    double w = b - a;
    if (w <= 0) w = std::max(1.0, std::abs(a));
    a -= 0.05 * w;
    b += 0.05 * w;
  };
  pad(f.x0, f.x1);
  pad(f.y0, f.y1);
  return f;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void axes(std::ostringstream& os, const Frame& f, const std::string& title, const std::string& xl,
          const std::string& yl) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
  os << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR << "\" height=\"" << kH - kT - kB
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double x = f.x0 + (f.x1 - f.x0) * k / 4, y = f.y0 + (f.y1 - f.y0) * k / 4;
    os << "<text x=\"" << fmt(f.X(x)) << "\" y=\"" << kH - kB + 16 << "\" text-anchor=\"middle\">" << tick(x)
       << "</text>\n";
    os << "<text x=\"" << kL - 6 << "\" y=\"" << fmt(f.Y(y) + 4) << "\" text-anchor=\"end\">" << tick(y)
       << "</text>\n";
  }
  os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 10 << "\" text-anchor=\"middle\">" << xl << "</text>\n";
  os << "<text x=\"16\" y=\"" << kH / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << kH / 2
     << ")\">" << yl << "</text>\n";
}
}  // namespace

std::string svg_plot(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                     const std::vector<SvgSeries>& series) {
  std::vector<std::pair<double, double>> all;
  for (const auto& s : series) all.insert(all.end(), s.points.begin(), s.points.end());
  const Frame f = frame_for(all);
  std::ostringstream os;
  axes(os, f, title, xlabel, ylabel);
  for (const auto& s : series) {
    if (s.line) {
      os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
      for (auto [x, y] : s.points) os << fmt(f.X(x)) << ',' << fmt(f.Y(y)) << ' ';
      os << "\"/>\n";
    } else {
      for (auto [x, y] : s.points)
        os << "<circle cx=\"" << fmt(f.X(x)) << "\" cy=\"" << fmt(f.Y(y)) << "\" r=\"2.5\" fill=\"" << s.color
           << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_histogram(const std::string& title, const std::vector<double>& edges, const std::vector<double>& hist,
                          const std::vector<std::pair<double, double>>& curve) {
  std::vector<std::pair<double, double>> all = curve;
  for (size_t k = 0; k < hist.size(); ++k) all.emplace_back(edges[k], hist[k]);
  all.emplace_back(edges.front(), 0.0);
  all.emplace_back(edges.back(), 0.0);
  Frame f = frame_for(all);
  f.y0 = 0;
  std::ostringstream os;
  axes(os, f, title, "t = |Im s| / n", "density");
  for (size_t k = 0; k < hist.size(); ++k) {
    const double x0 = f.X(edges[k]), x1 = f.X(edges[k + 1]), y = f.Y(hist[k]);
    os << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(x1 - x0) << "\" height=\""
       << fmt(f.Y(0) - y) << "\" fill=\"#9ecae1\" stroke=\"#3182bd\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
  for (auto [x, y] : curve) os << fmt(f.X(x)) << ',' << fmt(f.Y(y)) << ' ';
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace linezero::cli
