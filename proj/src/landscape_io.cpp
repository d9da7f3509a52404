#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rhomnk/common.hpp"
#include "rhomnk/landscape.hpp"

namespace rhomnk {

namespace {

void split_fields(const std::string& line, std::vector<std::string>& out) {
  out.clear();
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no_;
    return true;
  }

  std::string require(const std::string& context) {
    std::string line;
    if (!next(line)) {
      throw ParseError(line_no_ + 1, "unexpected end of file in " + context);
    }
    return line;
  }

  size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  size_t line_no_ = 0;
};

}  // namespace

void write_instance(const Instance& inst, std::ostream& out) {
  const auto& p = inst.params;
  out << "RHOMNK 1\n";
  out << "M " << p.m << " N " << p.n << " K " << p.k << "\n";
  out << "model " << to_string(p.link_model) << "\n";
  out << "seed " << p.seed << "\n";
  out << "C\n";
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.m; ++j) {
      if (j) out << ' ';
      out << format_real(p.correlation.at(i, j));
    }
    out << '\n';
  }
  out << "links\n";
  for (int i = 0; i < p.n; ++i) {
    auto row = inst.links.of_bit(i);
    for (int j = 0; j < p.k; ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  out << "tables\n";
  const uint32_t rows = inst.tables.rows_per_bit();
  for (int bit = 0; bit < p.n; ++bit) {
    for (uint32_t r = 0; r < rows; ++r) {
      const double* y = inst.tables.row(bit, r);
      for (int j = 0; j < p.m; ++j) {
        if (j) out << ' ';
        out << format_real(y[j]);
      }
      out << '\n';
    }
  }
}

void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_instance(inst, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Instance read_instance(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> fields;

  std::string line = reader.require("header");
  if (line != "RHOMNK 1") {
    throw ParseError(reader.line_no(), "bad header, expected 'RHOMNK 1'");
  }

  line = reader.require("dimensions");
  split_fields(line, fields);
  if (fields.size() != 6 || fields[0] != "M" || fields[2] != "N" || fields[4] != "K") {
    throw ParseError(reader.line_no(), "expected 'M <m> N <n> K <k>'");
  }
  InstanceParams params;
  try {
    params.m = static_cast<int>(parse_i64(fields[1]));
    params.n = static_cast<int>(parse_i64(fields[3]));
    params.k = static_cast<int>(parse_i64(fields[5]));
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.line_no(), e.what());
  }
  if (params.m < 1) throw ParseError(reader.line_no(), "M must be >= 1");
  if (params.n < 1 || params.n > 63) throw ParseError(reader.line_no(), "N must lie in [1, 63]");
  if (params.k < 0 || params.k > params.n - 1) {
    throw ParseError(reader.line_no(), "K must lie in [0, N-1]");
  }

  line = reader.require("model");
  split_fields(line, fields);
  if (fields.size() != 2 || fields[0] != "model") {
    throw ParseError(reader.line_no(), "expected 'model <adjacent|random>'");
  }
  try {
    params.link_model = link_model_from_string(fields[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.line_no(), e.what());
  }

  line = reader.require("seed");
  split_fields(line, fields);
  if (fields.size() != 2 || fields[0] != "seed") {
    throw ParseError(reader.line_no(), "expected 'seed <u64>'");
  }
  try {
    params.seed = parse_u64(fields[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.line_no(), e.what());
  }

  line = reader.require("C marker");
  if (line != "C") throw ParseError(reader.line_no(), "expected 'C'");
  params.correlation.m = params.m;
  params.correlation.entries.resize(static_cast<size_t>(params.m) * params.m);
  const size_t c_block_line = reader.line_no();
  for (int i = 0; i < params.m; ++i) {
    line = reader.require("correlation matrix");
    split_fields(line, fields);
    if (fields.size() != static_cast<size_t>(params.m)) {
      throw ParseError(reader.line_no(), "expected " + std::to_string(params.m) +
                                             " correlation entries");
    }
    for (int j = 0; j < params.m; ++j) {
      try {
        params.correlation.at(i, j) = parse_real(fields[j]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line_no(), e.what());
      }
    }
  }
  try {
    validate_correlation_matrix(params.correlation);
  } catch (const std::exception& e) {
    throw ParseError(c_block_line, std::string("invalid correlation matrix: ") + e.what());
  }

  line = reader.require("links marker");
  if (line != "links") throw ParseError(reader.line_no(), "expected 'links'");
  std::vector<uint32_t> flat(static_cast<size_t>(params.n) * params.k);
  for (int i = 0; i < params.n; ++i) {
    line = reader.require("links block");
    split_fields(line, fields);
    if (fields.size() != static_cast<size_t>(params.k)) {
      throw ParseError(reader.line_no(), "expected " + std::to_string(params.k) +
                                             " link indices for bit " + std::to_string(i));
    }
    std::vector<bool> seen(params.n, false);
    for (int j = 0; j < params.k; ++j) {
      long long v;
      try {
        v = parse_i64(fields[j]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line_no(), e.what());
      }
      if (v < 0 || v >= params.n) {
        throw ParseError(reader.line_no(), "link index out of range for bit " +
                                               std::to_string(i));
      }
      if (v == i) {
        throw ParseError(reader.line_no(), "bit " + std::to_string(i) +
                                               " linked to itself");
      }
      if (seen[static_cast<size_t>(v)]) {
        throw ParseError(reader.line_no(), "duplicate link index for bit " +
                                               std::to_string(i));
      }
      seen[static_cast<size_t>(v)] = true;
      flat[static_cast<size_t>(i) * params.k + j] = static_cast<uint32_t>(v);
    }
  }
  EpistaticLinks links(params.n, params.k, std::move(flat));

  line = reader.require("tables marker");
  if (line != "tables") throw ParseError(reader.line_no(), "expected 'tables'");
  ComponentTable tables(params.n, params.k, params.m);
  const uint32_t rows = tables.rows_per_bit();
  for (int bit = 0; bit < params.n; ++bit) {
    for (uint32_t r = 0; r < rows; ++r) {
      std::string row_line;
      if (!reader.next(row_line)) {
        throw ParseError(reader.line_no() + 1,
                         "unexpected end of file in tables block for bit " +
                             std::to_string(bit));
      }
      split_fields(row_line, fields);
      if (fields.size() != static_cast<size_t>(params.m)) {
        throw ParseError(reader.line_no(), "expected " + std::to_string(params.m) +
                                               " values in tables block for bit " +
                                               std::to_string(bit));
      }
      double* y = tables.row(bit, r);
      for (int j = 0; j < params.m; ++j) {
        double v;
        try {
          v = parse_real(fields[j]);
        } catch (const std::invalid_argument& e) {
          throw ParseError(reader.line_no(), e.what());
        }
        if (!(v >= 0.0 && v < 1.0)) {
          throw ParseError(reader.line_no(), "table value " + format_real(v) +
                                                 " outside [0, 1) for bit " +
                                                 std::to_string(bit));
        }
        y[j] = v;
      }
    }
  }

  while (reader.next(line)) {
    if (!line.empty()) {
      throw ParseError(reader.line_no(), "trailing content after tables");
    }
  }
  return Instance{std::move(params), std::move(links), std::move(tables)};
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return read_instance(in);
}

}  // namespace rhomnk
