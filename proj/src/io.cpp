#include "shortcycle/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "shortcycle/error.hpp"

namespace shortcycle {
namespace {

using nlohmann::ordered_json;

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    std::string_view t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back({number, t});
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return parts;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view s, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(line, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  if (value > std::numeric_limits<Vertex>::max() / 2) {
    fail(line, "integer too large: " + std::string(s));
  }
  return value;
}

std::pair<std::uint64_t, std::uint64_t> parse_header(
    const std::vector<Line>& lines, std::string_view keyword) {
  if (lines.empty()) {
    throw InvalidInput("empty input: expected '" + std::string(keyword) +
                       " <n> <m>' header");
  }
  auto w = words(lines[0].text);
  if (w.size() != 3 || w[0] != keyword) {
    fail(lines[0].number,
         "malformed header, expected '" + std::string(keyword) + " <n> <m>'");
  }
  auto n = parse_count(w[1], lines[0].number);
  auto m = parse_count(w[2], lines[0].number);
  if (lines.size() - 1 != m) {
    throw InvalidInput("header declares " + std::to_string(m) +
                       " lines but " + std::to_string(lines.size() - 1) +
                       " follow");
  }
  return {n, m};
}

ordered_json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt bigint_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidInput("expected an integer");
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  auto lines = content_lines(text);
  auto [n, m] = parse_header(lines, "digraph");
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto w = words(lines[i].text);
    if (w.size() != 2) fail(lines[i].number, "expected '<u> <v>'");
    auto u = parse_count(w[0], lines[i].number);
    auto v = parse_count(w[1], lines[i].number);
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Digraph(n, arcs);
}

RainbowInstance parse_rainbow(std::string_view text) {
  auto lines = content_lines(text);
  auto [n, m] = parse_header(lines, "rainbow");
  std::vector<Family> families;
  families.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Family f;
    for (std::string_view item : split(lines[i].text, ',')) {
      auto ends = split(item, '-');
      if (ends.size() != 2) {
        fail(lines[i].number, "expected an edge 'u-v', got '" +
                                  std::string(item) + "'");
      }
      auto u = parse_count(ends[0], lines[i].number);
      auto v = parse_count(ends[1], lines[i].number);
      f.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    families.push_back(std::move(f));
  }
  return RainbowInstance(n, std::move(families));
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream os;
  os << "digraph " << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) os << a.from << ' ' << a.to << '\n';
  return os.str();
}

std::string format_rainbow(const RainbowInstance& inst) {
  std::ostringstream os;
  os << "rainbow " << inst.vertex_count() << ' ' << inst.family_count()
     << '\n';
  for (const Family& f : inst.families()) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k) os << ',';
      os << f[k].u << '-' << f[k].v;
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ordered_json to_json(const Rational& r) {
  return {{"num", bigint_json(r.numerator())},
          {"den", bigint_json(r.denominator())}};
}

Rational rational_from_json(const ordered_json& j) {
  return Rational(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
}

ordered_json to_json(const CycleCertificate& c) {
  return {{"kind", std::string(to_string(c.kind))},
          {"length", c.length()},
          {"vertices", c.vertices},
          {"bound", to_json(c.bound)}};
}

CycleCertificate cycle_certificate_from_json(const ordered_json& j) {
  CycleCertificate c;
  auto kind = bound_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw InvalidInput("unknown certificate kind");
  c.kind = *kind;
  c.vertices = j.at("vertices").get<std::vector<Vertex>>();
  c.bound = rational_from_json(j.at("bound"));
  return c;
}

ordered_json to_json(const RainbowCycleCertificate& c) {
  ordered_json steps = ordered_json::array();
  for (const RainbowStep& s : c.steps) {
    steps.push_back({{"edge", {s.edge.u, s.edge.v}}, {"color", s.color}});
  }
  ordered_json j = {{"kind", "rainbow"},
                    {"length", c.length()},
                    {"steps", std::move(steps)}};
  if (c.bound) j["bound"] = to_json(*c.bound);
  return j;
}

RainbowCycleCertificate rainbow_certificate_from_json(const ordered_json& j) {
  RainbowCycleCertificate c;
  for (const auto& s : j.at("steps")) {
    const auto& e = s.at("edge");
    c.steps.push_back({Edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>()),
                       s.at("color").get<Color>()});
  }
  if (j.contains("bound")) c.bound = rational_from_json(j.at("bound"));
  return c;
}

}  // namespace shortcycle
