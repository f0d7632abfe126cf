#include "circlepack/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>

namespace circlepack {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s, std::size_t line) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<double> read_radii(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<double> out;
  if (trim(text).starts_with("[")) {
    json arr;
    try {
      arr = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(0, std::string("malformed JSON array: ") + e.what());
    }
    for (std::size_t k = 0; k < arr.size(); ++k) {
      if (!arr[k].is_number()) throw ParseError(0, "array element " + std::to_string(k) + " is not a number");
      out.push_back(arr[k].get<double>());
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  for (std::size_t n = 1; std::getline(lines, line); ++n) {
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    out.push_back(parse_number(s, n));
  }
  return out;
}

namespace {

json rect_json(const Rect& r) { return json::array({r.x0, r.y0, r.x1, r.y1}); }

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(0, std::string("field '") + key + "' has the wrong type");
  }
}

template <class E, std::size_t N>
E enum_field(const json& j, const char* key, const std::array<E, N>& values) {
  const std::string s = field<std::string>(j, key);
  for (E v : values) {
    if (s == to_string(v)) return v;
  }
  throw ParseError(0, std::string("unknown value '") + s + "' for '" + key + "'");
}

}  // namespace

json to_json(const PackResult& r, double eps) {
  json j;
  j["status"] = to_string(r.status);
  j["container"] = to_string(r.container);
  j["b"] = r.b;
  j["mode"] = to_string(r.mode);
  j["w"] = r.w;
  j["q2"] = r.q2;
  j["min_radius"] = r.min_radius ? json(*r.min_radius) : json(nullptr);
  j["eps"] = eps;
  json ps = json::array();
  for (const Placement& p : r.placements) {
    ps.push_back({{"i", p.circle.seq},
                  {"x", p.circle.center.x},
                  {"y", p.circle.center.y},
                  {"r", p.circle.r},
                  {"class", p.class_index},
                  {"lane", p.circle.lane_id}});
  }
  j["placements"] = std::move(ps);
  json lanes = json::array();
  for (const LaneRecord& l : r.lanes) {
    lanes.push_back({{"id", l.id},
                     {"kind", to_string(l.kind)},
                     {"strategy", to_string(l.strategy)},
                     {"class", l.class_index},
                     {"rect", rect_json(l.frame.rect())},
                     {"orientation", to_string(l.frame.orientation())},
                     {"mirrored", l.frame.mirrored()},
                     {"closed", l.closed},
                     {"count", l.count},
                     {"packing_length", l.packing_length},
                     {"occupied", l.occupied_area}});
  }
  j["lanes"] = std::move(lanes);
  j["total_packed_area"] = r.total_packed_area;
  j["guarantee"] = r.guarantee;
  if (r.rejected_index) {
    j["rejected_index"] = *r.rejected_index;
    j["rejected_radius"] = *r.rejected_radius;
    j["rejected_reason"] = to_string(r.reason);
  }
  return j;
}

PackResult result_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "pack result must be a JSON object");
  PackResult r;
  r.status = enum_field(j, "status", std::array{PackStatus::all_packed, PackStatus::rejected});
  r.container = enum_field(j, "container", std::array{ContainerKind::square, ContainerKind::rect});
  r.b = field<double>(j, "b");
  r.mode = enum_field(j, "mode", std::array{SquareMode::general, SquareMode::no_tiny});
  r.w = field<double>(j, "w");
  r.q2 = field<double>(j, "q2");
  if (j.contains("min_radius") && !j["min_radius"].is_null()) r.min_radius = field<double>(j, "min_radius");
  for (const json& p : field<json>(j, "placements")) {
    Placement pl;
    pl.circle.seq = field<std::size_t>(p, "i");
    pl.circle.center = {field<double>(p, "x"), field<double>(p, "y")};
    pl.circle.r = field<double>(p, "r");
    pl.circle.lane_id = field<std::string>(p, "lane");
    pl.class_index = field<int>(p, "class");
    r.placements.push_back(std::move(pl));
  }
  for (const json& l : field<json>(j, "lanes")) {
    LaneRecord rec;
    rec.id = field<std::string>(l, "id");
    rec.kind = enum_field(l, "kind", std::array{LaneKind::large, LaneKind::medium, LaneKind::small, LaneKind::vertical});
    rec.strategy = enum_field(l, "strategy", std::array{Strategy::slp, Strategy::tlp});
    rec.class_index = field<int>(l, "class");
    const auto box = field<std::vector<double>>(l, "rect");
    if (box.size() != 4) throw ParseError(0, "lane rect needs four numbers");
    const auto o = orientation_from_string(field<std::string>(l, "orientation"));
    if (!o) throw ParseError(0, "unknown lane orientation");
    try {
      rec.frame = Frame::make({box[0], box[1], box[2], box[3]}, *o, field<bool>(l, "mirrored"));
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, std::string("lane ") + rec.id + ": " + e.what());
    }
    rec.closed = field<bool>(l, "closed");
    rec.count = l.value("count", std::size_t{0});
    rec.packing_length = field<double>(l, "packing_length");
    rec.occupied_area = field<double>(l, "occupied");
    r.lanes.push_back(std::move(rec));
  }
  r.total_packed_area = field<double>(j, "total_packed_area");
  r.guarantee = field<double>(j, "guarantee");
  if (j.contains("rejected_index")) {
    r.rejected_index = field<std::size_t>(j, "rejected_index");
    r.rejected_radius = field<double>(j, "rejected_radius");
    r.reason = enum_field(j, "rejected_reason",
                          std::array{RejectReason::none, RejectReason::too_large, RejectReason::too_small,
                                     RejectReason::no_space});
  }
  return r;
}

json to_json(const AuditReport& report) {
  json j;
  j["valid"] = report.valid;
  j["density"] = report.density;
  json vs = json::array();
  for (const Violation& v : report.violations) {
    vs.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}, {"indices", v.indices}});
  }
  j["violations"] = std::move(vs);
  j["per_lane_occ"] = report.per_lane_occ;
  return j;
}

namespace {

constexpr std::array<const char*, 8> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PackResult& result, double scale) {
  const Rect box = result.container_rect();
  const double W = box.width() * scale, H = box.height() * scale;
  auto X = [&](double x) { return num((x - box.x0) * scale); };
  auto Y = [&](double y) { return num((box.y1 - y) * scale); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(W) << "\" height=\"" << num(H)
     << "\" viewBox=\"0 0 " << num(W) << ' ' << num(H) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(W) << "\" height=\"" << num(H)
     << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";

  os << "<g id=\"lanes\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\">\n";
  for (const LaneRecord& l : result.lanes) {
    if (l.kind == LaneKind::vertical || l.kind == LaneKind::small) continue;
    const Rect r = l.frame.rect();
    os << "<rect x=\"" << X(r.x0) << "\" y=\"" << Y(r.y1) << "\" width=\"" << num(r.width() * scale)
       << "\" height=\"" << num(r.height() * scale) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"circles\" stroke=\"black\" stroke-width=\"0.5\" fill-opacity=\"0.6\">\n";
  for (const Placement& p : result.placements) {
    const char* fill = kPalette[static_cast<std::size_t>(std::max(0, p.class_index)) % kPalette.size()];
    os << "<circle cx=\"" << X(p.circle.center.x) << "\" cy=\"" << Y(p.circle.center.y) << "\" r=\""
       << num(p.circle.r * scale) << "\" fill=\"" << fill << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << num(std::max(8.0, 0.03 * scale))
     << "\" fill=\"#444444\">\n";
  for (const LaneRecord& l : result.lanes) {
    if (l.kind == LaneKind::vertical || l.kind == LaneKind::small) continue;
    const Rect r = l.frame.rect();
    os << "<text x=\"" << X(r.x0 + 0.01) << "\" y=\"" << Y(r.y1 - 0.04) << "\">" << escape(l.id) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace circlepack
