#include "smtwt/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace smtwt {

namespace {

constexpr int kMaxJobs = 100000;

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::int64_t next_int(const char* what) {
    skip_ws();
    const int start_line = line_;
    const int start_col = col_;
    if (pos_ >= text_.size()) {
      throw ParseError(std::string("unexpected end of input, expected ") +
                           what,
                       start_line, start_col);
    }
    std::size_t end = pos_;
    if (text_[end] == '-' || text_[end] == '+') ++end;
    std::size_t digits = end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(
                                     text_[end]))) {
      ++end;
    }
    if (end == digits ||
        (end < text_.size() &&
         !std::isspace(static_cast<unsigned char>(text_[end])))) {
      while (end < text_.size() &&
             !std::isspace(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
      throw ParseError(std::string("expected integer ") + what + ", got '" +
                           std::string(text_.substr(pos_, end - pos_)) + "'",
                       start_line, start_col);
    }
    std::int64_t value = 0;
    try {
      value = std::stoll(std::string(text_.substr(pos_, end - pos_)));
    } catch (const std::exception&) {
      throw ParseError(std::string("integer out of range for ") + what,
                       start_line, start_col);
    }
    while (pos_ < end) advance();
    return value;
  }

  void expect_end(const char* what) {
    if (!at_end()) {
      throw ParseError(std::string("trailing data after ") + what, line_,
                       col_);
    }
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

int checked_job_count(std::int64_t n, int line, int col) {
  if (n < 1) throw ParseError("job count must be positive", line, col);
  if (n > kMaxJobs) throw ParseError("job count unreasonably large", line, col);
  return static_cast<int>(n);
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

Dialect dialect_from_name(const std::string& name) {
  if (name == "canonical") return Dialect::canonical;
  if (name == "cicirello") return Dialect::cicirello;
  if (name == "unweighted") return Dialect::unweighted;
  throw std::invalid_argument("unknown dialect: " + name);
}

std::string dialect_name(Dialect dialect) {
  switch (dialect) {
    case Dialect::canonical: return "canonical";
    case Dialect::cicirello: return "cicirello";
    case Dialect::unweighted: return "unweighted";
  }
  return "?";
}

Instance parse_canonical(std::string_view text) {
  Tokenizer tok(text);
  const int line = tok.line();
  const int col = tok.col();
  const int n = checked_job_count(tok.next_int("job count"), line, col);
  Instance inst(n);
  for (int j = 1; j <= n; ++j) inst.p[j] = tok.next_int("processing time");
  for (int j = 1; j <= n; ++j) inst.w[j] = tok.next_int("weight");
  for (int j = 1; j <= n; ++j) inst.d[j] = tok.next_int("due date");
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      inst.set_setup(i, j, tok.next_int("setup value"));
    }
  }
  tok.expect_end("the setup matrix");
  return inst;
}

std::string write_canonical(const Instance& inst) {
  std::ostringstream out;
  out << inst.n << '\n';
  auto row = [&](const std::vector<std::int64_t>& values) {
    for (int j = 1; j <= inst.n; ++j) {
      if (j > 1) out << ' ';
      out << values[j];
    }
    out << '\n';
  };
  row(inst.p);
  row(inst.w);
  row(inst.d);
  for (int i = 0; i <= inst.n; ++i) {
    for (int j = 0; j <= inst.n; ++j) {
      if (j > 0) out << ' ';
      out << inst.setup(i, j);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Labeled-section reader for the Cicirello benchmark files. Section headers
// are matched case-insensitively; values may follow the colon or appear on
// later lines. Setup times are from/to/value triples with from = -1 for the
// initial state.
Instance parse_cicirello(std::string_view text) {
  enum class Section { none, size, p, w, d, setup, skip };
  Section section = Section::none;
  bool in_generator_block = false;

  std::int64_t n_raw = -1;
  int n_line = 0;
  std::vector<std::int64_t> p, w, d, triples;
  int line_no = 0;

  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string low = lowercase(line);
    std::string rest = line;

    if (low.find("begin generator parameters") != std::string::npos) {
      in_generator_block = true;
      continue;
    }
    if (low.find("end generator parameters") != std::string::npos) {
      in_generator_block = false;
      continue;
    }
    if (in_generator_block) continue;

    auto labelled = [&](const char* label) {
      const auto at = low.find(label);
      if (at == std::string::npos) return false;
      const auto colon = line.find(':', at);
      rest = colon == std::string::npos ? std::string() : line.substr(colon + 1);
      return true;
    };

    if (low.find("problem instance") != std::string::npos) continue;
    if (low.find("begin problem specification") != std::string::npos) continue;
    if (low.find("end problem specification") != std::string::npos) break;

    if (labelled("problem size")) {
      section = Section::size;
      n_line = line_no;
    } else if (labelled("process times")) {
      section = Section::p;
    } else if (labelled("weights")) {
      section = Section::w;
    } else if (labelled("duedates") || labelled("due dates")) {
      section = Section::d;
    } else if (labelled("setup times")) {
      section = Section::setup;
    }

    Tokenizer tok(rest);
    while (!tok.at_end()) {
      const std::int64_t value = tok.next_int("value");
      switch (section) {
        case Section::size:
          if (n_raw < 0) n_raw = value;
          break;
        case Section::p: p.push_back(value); break;
        case Section::w: w.push_back(value); break;
        case Section::d: d.push_back(value); break;
        case Section::setup: triples.push_back(value); break;
        case Section::none:
        case Section::skip:
          throw ParseError("numeric data outside any labeled section",
                           line_no, 1);
      }
    }
  }

  if (n_raw < 0) throw ParseError("missing 'Problem Size' section", line_no, 1);
  const int n = checked_job_count(n_raw, n_line, 1);
  auto check_count = [&](const std::vector<std::int64_t>& values,
                         const char* what) {
    if (static_cast<int>(values.size()) != n) {
      throw ParseError(std::string(what) + " section has " +
                           std::to_string(values.size()) + " values, expected " +
                           std::to_string(n),
                       line_no, 1);
    }
  };
  check_count(p, "process times");
  check_count(w, "weights");
  check_count(d, "duedates");
  if (triples.empty() || triples.size() % 3 != 0) {
    throw ParseError("setup times section must hold from/to/value triples",
                     line_no, 1);
  }

  Instance inst(n);
  for (int j = 1; j <= n; ++j) {
    inst.p[j] = p[j - 1];
    inst.w[j] = w[j - 1];
    inst.d[j] = d[j - 1];
  }
  for (std::size_t t = 0; t < triples.size(); t += 3) {
    const std::int64_t from = triples[t];
    const std::int64_t to = triples[t + 1];
    const std::int64_t value = triples[t + 2];
    if (from < -1 || from >= n || to < 0 || to >= n) {
      throw ParseError("setup triple references job outside 0.." +
                           std::to_string(n - 1),
                       line_no, 1);
    }
    inst.set_setup(from < 0 ? 0 : static_cast<int>(from) + 1,
                   static_cast<int>(to) + 1, value);
  }
  return inst;
}

// Plain numeric layout used by the total-tardiness suites: n, processing
// times, due dates, then the setup matrix in one of three shapes.
Instance parse_unweighted(std::string_view text) {
  Tokenizer tok(text);
  const int line = tok.line();
  const int col = tok.col();
  const int n = checked_job_count(tok.next_int("job count"), line, col);
  Instance inst(n);
  for (int j = 1; j <= n; ++j) inst.p[j] = tok.next_int("processing time");
  for (int j = 1; j <= n; ++j) inst.d[j] = tok.next_int("due date");
  for (int j = 1; j <= n; ++j) inst.w[j] = 1;

  std::vector<std::int64_t> values;
  while (!tok.at_end()) values.push_back(tok.next_int("setup value"));

  const std::size_t full = static_cast<std::size_t>(n + 1) * (n + 1);
  const std::size_t square = static_cast<std::size_t>(n) * n;
  if (values.size() == full) {
    std::size_t at = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) inst.set_setup(i, j, values[at++]);
  } else if (values.size() == square + n) {
    std::size_t at = 0;
    for (int j = 1; j <= n; ++j) inst.set_setup(0, j, values[at++]);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) inst.set_setup(i, j, values[at++]);
  } else if (values.size() == square) {
    std::size_t at = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) inst.set_setup(i, j, values[at++]);
  } else {
    throw ParseError(
        "setup matrix has " + std::to_string(values.size()) +
            " values; expected " + std::to_string(full) + ", " +
            std::to_string(square + n) + " or " + std::to_string(square),
        tok.line(), tok.col());
  }
  return inst;
}

}  // namespace

Instance parse_benchmark(std::string_view text, Dialect dialect) {
  switch (dialect) {
    case Dialect::cicirello: return parse_cicirello(text);
    case Dialect::unweighted: return parse_unweighted(text);
    case Dialect::canonical: break;
  }
  throw std::invalid_argument("parse_benchmark: use a benchmark dialect");
}

Instance parse_instance(std::string_view text, Dialect dialect) {
  return dialect == Dialect::canonical ? parse_canonical(text)
                                       : parse_benchmark(text, dialect);
}

Instance load_instance(const std::filesystem::path& path, Dialect dialect) {
  Instance inst = parse_instance(read_text_file(path), dialect);
  const ValidationReport report = validate_instance(inst);
  if (!report.ok) {
    throw std::runtime_error("invalid instance " + path.string() + ":\n" +
                             report.to_string());
  }
  return inst;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace smtwt
