#include "kspm/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace kspm {

FormatError::FormatError(int line_, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line_) + ": " + reason), line(line_) {}

namespace {

struct Lines {
  std::vector<std::string> v;
  std::size_t at = 0;

  explicit Lines(const std::string& text) {
    std::istringstream is(text);
    for (std::string s; std::getline(is, s);) {
      if (!s.empty() && s.back() == '\r') s.pop_back();
      v.push_back(s);
    }
  }
  int lineno() const { return int(at); }
  // next line that is not blank
  std::string next(const char* what) {
    while (at < v.size()) {
      const std::string& s = v[at++];
      if (s.find_first_not_of(" \t") != std::string::npos) return s;
    }
    throw FormatError(int(at), std::string("missing ") + what);
  }
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> w;
  for (std::string x; is >> x;) w.push_back(x);
  return w;
}

long to_long(const std::string& s, int line) {
  try {
    std::size_t k = 0;
    long v = std::stol(s, &k);
    if (k != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError(line, "not an integer: '" + s + "'");
  }
}

std::vector<int> ints(const std::string& s, int line) {
  std::vector<int> out;
  for (const auto& w : words(s)) out.push_back(int(to_long(w, line)));
  return out;
}

// "<key> <int>"
long keyed(Lines& L, const std::string& key) {
  auto w = words(L.next(key.c_str()));
  if (w.size() != 2 || w[0] != key) throw FormatError(L.lineno(), "expected '" + key + " <int>'");
  return to_long(w[1], L.lineno());
}

}  // namespace

ConfigFile parse_config(const std::string& text) {
  Lines L(text);
  auto head = words(L.next("header"));
  if (head.size() != 2 || head[1] != "v1" || (head[0] != "KSPM1" && head[0] != "KSPM2"))
    throw FormatError(L.lineno(), "expected 'KSPM1 v1' or 'KSPM2 v1'");
  long p = keyed(L, "p");
  if (p < 2) throw FormatError(L.lineno(), "p must be at least 2");
  if (head[0] == "KSPM1") {
    auto w = words(L.next("mode"));
    if (w.size() != 2 || w[0] != "mode" || (w[1] != "heights" && w[1] != "diffs"))
      throw FormatError(L.lineno(), "expected 'mode heights|diffs'");
    long n = keyed(L, "n");
    if (n < 1) throw FormatError(L.lineno(), "n must be at least 1");
    auto vals = ints(L.next("values"), L.lineno());
    if (long(vals.size()) != n) throw FormatError(L.lineno(), "expected " + std::to_string(n) + " values");
    File1D f;
    f.diffs = w[1] == "diffs";
    if (f.diffs) {
      typename HeightDiff1D<int>::Vector h(n + 1);
      h(0) = 0;
      for (long i = 0; i < n; ++i) h(i + 1) = vals[std::size_t(i)];
      try {
        f.config = from_height_diffs(HeightDiff1D<int>(int(p), h));
      } catch (const NegativeHeight& e) {
        throw FormatError(L.lineno(), e.what());
      }
      f.config.x.conservativeResize(n);
    } else {
      f.config = Config1D<int>(int(p), vals);
    }
    return f;
  }
  auto w = words(L.next("extents"));
  if (w.size() != 4 || w[0] != "rows" || w[2] != "cols") throw FormatError(L.lineno(), "expected 'rows <r> cols <c>'");
  long r = to_long(w[1], L.lineno()), c = to_long(w[3], L.lineno());
  if (r < 1 || c < 1) throw FormatError(L.lineno(), "extents must be at least 1");
  std::vector<std::vector<int>> rows;
  for (long k = 0; k < r; ++k) {
    auto row = ints(L.next("grid row"), L.lineno());
    if (long(row.size()) != c) throw FormatError(L.lineno(), "row has " + std::to_string(row.size()) + " values");
    rows.push_back(std::move(row));
  }
  return Grid::from_rows(int(p), rows);
}

std::string print_config(const File1D& f) {
  std::ostringstream os;
  os << "KSPM1 v1\np " << f.config.p << "\nmode " << (f.diffs ? "diffs" : "heights") << "\nn " << f.config.n() << "\n";
  for (Index i = 1; i <= f.config.n(); ++i) {
    int v = f.diffs ? f.config[i] - f.config[i + 1] : f.config[i];
    os << (i > 1 ? " " : "") << v;
  }
  os << "\n";
  return os.str();
}

std::string print_config(const Grid& g) {
  std::ostringstream os;
  os << "KSPM2 v1\np " << g.p() << "\nrows " << g.rows() << " cols " << g.cols() << "\n";
  for (const auto& r : g.rows_north_first()) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << r[k];
    os << "\n";
  }
  return os.str();
}

std::vector<TraceLine> parse_trace(const std::string& text) {
  Lines L(text);
  if (words(L.next("header")) != std::vector<std::string>{"TRACE", "v1"}) throw FormatError(L.lineno(), "expected 'TRACE v1'");
  std::vector<TraceLine> out;
  while (L.at < L.v.size()) {
    const std::string s = L.v[L.at++];
    auto w = words(s);
    if (w.empty()) continue;
    const int ln = L.lineno();
    if (w.size() != 3 || w[0].rfind("step=", 0) || w[1].rfind("site=", 0) || w[2].rfind("dir=", 0))
      throw FormatError(ln, "expected 'step=<t> site=<i>[,<j>] dir=R|H|V'");
    TraceLine t;
    t.step = to_long(w[0].substr(5), ln);
    std::string site = w[1].substr(5), dir = w[2].substr(4);
    auto comma = site.find(',');
    t.i = to_long(site.substr(0, comma), ln);
    if (comma != std::string::npos) t.j = to_long(site.substr(comma + 1), ln);
    if (dir == "R") t.d = Dir::R;
    else if (dir == "H") t.d = Dir::H;
    else if (dir == "V") t.d = Dir::V;
    else throw FormatError(ln, "dir must be R, H or V");
    if ((t.d == Dir::R) != (comma == std::string::npos)) throw FormatError(ln, "1D sites use R, 2D sites use H or V");
    out.push_back(t);
  }
  return out;
}

std::string print_trace(const std::vector<TraceLine>& t) {
  std::ostringstream os;
  os << "TRACE v1\n";
  for (const auto& e : t) {
    os << "step=" << e.step << " site=" << e.i;
    if (e.d != Dir::R) os << "," << e.j;
    os << " dir=" << dir_char(e.d) << "\n";
  }
  return os.str();
}

std::string print_trace(const Trace1D<int>& t) {
  std::vector<TraceLine> v;
  for (const auto& e : t.events) v.push_back({e.step, e.move.site, 0, Dir::R});
  return print_trace(v);
}

std::string print_trace(const Trace2D<int>& t) {
  std::vector<TraceLine> v;
  for (const auto& e : t.events) v.push_back({e.step, e.move.i, e.move.j, e.move.d});
  return print_trace(v);
}

std::vector<Move2D> moves_2d(const std::vector<TraceLine>& t) {
  std::vector<Move2D> out;
  for (const auto& e : t) {
    if (e.d == Dir::R) throw FormatError(int(e.step), "1D event in a 2D trace");
    out.push_back({e.i, e.j, e.d});
  }
  return out;
}

Sidecar parse_sidecar(const std::string& text) {
  Lines L(text);
  Sidecar s;
  while (L.at < L.v.size()) {
    std::string line = L.v[L.at++];
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) throw FormatError(L.lineno(), "expected key=value");
    std::string k = line.substr(0, eq);
    if (s.count(k)) throw FormatError(L.lineno(), "duplicate key " + k);
    s[k] = line.substr(eq + 1);
  }
  return s;
}

std::string print_sidecar(const Sidecar& s) {
  std::ostringstream os;
  for (const auto& [k, v] : s) os << k << "=" << v << "\n";
  return os.str();
}

std::string render_ascii(const Grid& g) {
  int w = 1;
  for (Index j = 0; j < g.rows(); ++j)
    for (Index i = 0; i < g.cols(); ++i) w = std::max(w, int(std::to_string(g.at(i, j)).size()));
  std::ostringstream os;
  for (const auto& r : g.rows_north_first()) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << std::setw(w) << r[k];
    os << "\n";
  }
  return os.str();
}

std::string render_ascii(const Config1D<int>& c) {
  int top = 0;
  for (Index i = 1; i <= c.n(); ++i) top = std::max(top, c[i]);
  std::ostringstream os;
  for (int level = top; level >= 1; --level) {
    for (Index i = 1; i <= c.n(); ++i) os << (c[i] >= level ? '#' : '.');
    os << "\n";
  }
  for (Index i = 1; i <= c.n(); ++i) os << (i % 10);
  os << "\n";
  return os.str();
}

std::string render_pgm(const Grid& g) {
  std::ostringstream os;
  os << "P5\n" << g.cols() << " " << g.rows() << "\n255\n";
  for (const auto& r : g.rows_north_first())
    for (int v : r) os.put(char(std::clamp(v, 0, 255)));
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace kspm
