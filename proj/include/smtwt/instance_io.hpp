#ifndef SMTWT_INSTANCE_IO_HPP
#define SMTWT_INSTANCE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "smtwt/instance.hpp"

namespace smtwt {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& message, int line_, int col_)
      : std::runtime_error(message + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

enum class Dialect { canonical, cicirello, unweighted };

Dialect dialect_from_name(const std::string& name);
std::string dialect_name(Dialect dialect);

// Canonical whitespace-separated format:
//   n
//   p_1 .. p_n
//   w_1 .. w_n
//   d_1 .. d_n
//   (n+1) rows of n+1 setup values, row index = from-job 0..n
Instance parse_canonical(std::string_view text);
std::string write_canonical(const Instance& inst);

// Adapters for the public benchmark layouts. The cicirello dialect reads the
// labeled-section files ("Problem Size:", "Process Times:", "Weights:",
// "Duedates:", "Setup Times:" as from/to/value triples, from = -1 for the
// initial state). The unweighted dialect reads n, n processing times, n due
// dates and a setup matrix given either as (n+1)x(n+1), as an initial-setup
// row followed by n x n, or as a bare n x n (initial setups 0); every weight
// is set to 1.
Instance parse_benchmark(std::string_view text, Dialect dialect);

Instance parse_instance(std::string_view text, Dialect dialect);

// Reads, parses and validates; throws on any failure.
Instance load_instance(const std::filesystem::path& path, Dialect dialect);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view text);

}  // namespace smtwt

#endif
