#pragma once

#include "kspm/dynamics.hpp"

#include <map>
#include <variant>

namespace kspm {

struct FormatError : std::runtime_error {
  int line;
  FormatError(int line_, const std::string& reason);
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// KSPM1: heights x_1..x_n, or differences h_1..h_n when written in diffs mode
struct File1D {
  Config1D<int> config;
  bool diffs = false;
  bool operator==(const File1D&) const = default;
};

using ConfigFile = std::variant<File1D, Grid>;

ConfigFile parse_config(const std::string& text);
std::string print_config(const File1D& f);
std::string print_config(const Grid& g);

struct TraceLine {
  long step = 0;
  Index i = 0, j = 0;
  Dir d = Dir::H;
  bool operator==(const TraceLine&) const = default;
};

std::vector<TraceLine> parse_trace(const std::string& text);
std::string print_trace(const std::vector<TraceLine>& t);
std::string print_trace(const Trace1D<int>& t);
std::string print_trace(const Trace2D<int>& t);
std::vector<Move2D> moves_2d(const std::vector<TraceLine>& t);

using Sidecar = std::map<std::string, std::string>;
Sidecar parse_sidecar(const std::string& text);
std::string print_sidecar(const Sidecar& s);

std::string render_ascii(const Grid& g);
std::string render_ascii(const Config1D<int>& c);
// binary 8-bit PGM, grain counts clamped to 255
std::string render_pgm(const Grid& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace kspm
