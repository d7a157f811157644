#include "perclab/spec_config.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace perclab {

int margin_for(const SweepSpec& spec, int n) {
  double lg = std::log(static_cast<double>(n) + 2.0);
  return std::max(64, static_cast<int>(std::ceil(spec.c_margin * lg * lg)));
}

ParseError::ParseError(int line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
      line(line_no) {}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& v, int line) {
  std::size_t pos = 0;
  long long x;
  try {
    x = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + v + "'");
  }
  if (pos != v.size())
    throw ParseError(line, "trailing characters in integer '" + v + "'");
  return x;
}

double parse_double(const std::string& v, int line) {
  std::size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected number, got '" + v + "'");
  }
  if (pos != v.size())
    throw ParseError(line, "trailing characters in number '" + v + "'");
  return x;
}

std::vector<int> parse_int_list(const std::string& v, int line) {
  std::vector<int> out;
  for (const auto& part : split(v, ',')) {
    std::string t = trim(part);
    if (t.empty()) throw ParseError(line, "empty entry in list '" + v + "'");
    out.push_back(static_cast<int>(parse_int(t, line)));
  }
  return out;
}

Coords parse_coords(const std::string& v, int line, int d) {
  auto ints = parse_int_list(v, line);
  if (static_cast<int>(ints.size()) > kMaxDim)
    throw ParseError(line, "too many coordinates in '" + v + "'");
  Coords c{};
  for (std::size_t i = 0; i < ints.size(); ++i)
    c[i] = static_cast<std::int32_t>(ints[i]);
  (void)d;
  return c;
}

std::string coords_str(const Coords& c, int d) {
  std::string s;
  for (int a = 0; a < d; ++a) s += (a ? "," : "") + std::to_string(c[a]);
  return s;
}

std::string list_str(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

SweepSpec parse_spec(const std::string& text) {
  SweepSpec spec;
  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "d") {
      long long d = parse_int(val, line_no);
      if (d < 2 || d > kMaxDim)
        throw ParseError(line_no, "d must be in [2," + std::to_string(kMaxDim) +
                                      "]");
      spec.d = static_cast<int>(d);
    } else if (key == "p") {
      double p = parse_double(val, line_no);
      if (!(p > 0.0 && p <= 1.0))
        throw ParseError(line_no, "p out of range (0,1]: key 'p'");
      spec.p = p;
    } else if (key == "x") {
      spec.x = parse_coords(val, line_no, spec.d);
    } else if (key == "n_grid") {
      spec.n_grid = parse_int_list(val, line_no);
      for (int n : spec.n_grid)
        if (n < 1) throw ParseError(line_no, "n_grid entries must be >= 1");
    } else if (key == "replicas") {
      long long r = parse_int(val, line_no);
      if (r < 2) throw ParseError(line_no, "replicas must be >= 2");
      spec.replicas = static_cast<int>(r);
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(parse_int(val, line_no));
    } else if (key == "c_margin") {
      double c = parse_double(val, line_no);
      if (c <= 0) throw ParseError(line_no, "c_margin must be > 0");
      spec.c_margin = c;
    } else if (key == "bootstrap") {
      long long b = parse_int(val, line_no);
      if (b < 2) throw ParseError(line_no, "bootstrap must be >= 2");
      spec.bootstrap = static_cast<int>(b);
    } else if (key == "threads") {
      long long t = parse_int(val, line_no);
      if (t < 1) throw ParseError(line_no, "threads must be >= 1");
      spec.threads = static_cast<int>(t);
    } else if (key == "boundary") {
      if (val == "free")
        spec.boundary = Boundary::Free;
      else if (val == "periodic")
        spec.boundary = Boundary::Periodic;
      else
        throw ParseError(line_no, "boundary must be free or periodic");
    } else if (key == "tail_sep") {
      spec.tail_sep = parse_coords(val, line_no, spec.d);
    } else if (key == "tail_replicas") {
      long long r = parse_int(val, line_no);
      if (r < 2) throw ParseError(line_no, "tail_replicas must be >= 2");
      spec.tail_replicas = static_cast<int>(r);
    } else if (key == "tail_reach_n") {
      spec.tail_reach_n = parse_int_list(val, line_no);
    } else if (key == "tail_hole_n") {
      spec.tail_hole_n = parse_int_list(val, line_no);
    } else if (key == "tail_min_count") {
      spec.tail_min_count = static_cast<int>(parse_int(val, line_no));
    } else if (key == "lemma_m_grid") {
      spec.lemma_m_grid = parse_int_list(val, line_no);
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  return spec;
}

std::string serialize_spec(const SweepSpec& spec) {
  std::ostringstream os;
  char buf[64];
  os << "d=" << spec.d << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", spec.p);
  os << "p=" << buf << "\n";
  os << "x=" << coords_str(spec.x, spec.d) << "\n";
  os << "n_grid=" << list_str(spec.n_grid) << "\n";
  os << "replicas=" << spec.replicas << "\n";
  os << "seed=" << spec.seed << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", spec.c_margin);
  os << "c_margin=" << buf << "\n";
  os << "bootstrap=" << spec.bootstrap << "\n";
  os << "threads=" << spec.threads << "\n";
  os << "boundary=" << (spec.boundary == Boundary::Free ? "free" : "periodic")
     << "\n";
  os << "tail_sep=" << coords_str(spec.tail_sep, spec.d) << "\n";
  os << "tail_replicas=" << spec.tail_replicas << "\n";
  os << "tail_reach_n=" << list_str(spec.tail_reach_n) << "\n";
  os << "tail_hole_n=" << list_str(spec.tail_hole_n) << "\n";
  os << "tail_min_count=" << spec.tail_min_count << "\n";
  os << "lemma_m_grid=" << list_str(spec.lemma_m_grid) << "\n";
  return os.str();
}

void warn_if_subcritical(const SweepSpec& spec) {
  if (spec.d == 2 && spec.p <= 0.5)
    std::cerr << "warning: p=" << spec.p
              << " is at or below the d=2 critical point 1/2; estimands "
                 "assume a supercritical phase\n";
}

}  // namespace perclab
