#include "rhomnk/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>

#include "rhomnk/common.hpp"
#include "rhomnk/parallel.hpp"

namespace rhomnk {

ObjectiveTable enumerate(const Instance& inst, int workers) {
  const int n = inst.params.n;
  const int m = inst.params.m;
  if (n > kMaxEnumerationBits) {
    const double gib = static_cast<double>(uint64_t{1} << n) * m * sizeof(double) /
                       (1024.0 * 1024.0 * 1024.0);
    throw CapacityError("enumerate: n=" + std::to_string(n) + " needs " +
                        std::to_string(gib) + " GiB of objective storage; the guard is n <= " +
                        std::to_string(kMaxEnumerationBits));
  }
  ObjectiveTable table;
  table.n = n;
  table.m = m;
  table.values.resize((uint64_t{1} << n) * static_cast<uint64_t>(m));

  parallel_chunks(table.rows(), workers, [&](uint64_t lo, uint64_t hi) {
    for (uint64_t x = lo; x < hi; ++x) {
      evaluate(inst, x, {table.values.data() + x * static_cast<uint64_t>(m),
                         static_cast<size_t>(m)});
    }
  });
  return table;
}

std::vector<Solution> random_solution_sample(uint64_t count, int n, RandomStream& stream) {
  if (n < 1 || n > 63) throw std::invalid_argument("random_solution_sample: n must lie in [1, 63]");
  const uint64_t total = uint64_t{1} << n;
  if (count > total) {
    throw std::invalid_argument("random_solution_sample: count " + std::to_string(count) +
                                " exceeds 2^" + std::to_string(n));
  }
  // Floyd's algorithm: exactly one draw per kept element, no rejection
  std::unordered_set<uint64_t> chosen;
  chosen.reserve(static_cast<size_t>(count) * 2);
  for (uint64_t j = total - count; j < total; ++j) {
    const uint64_t t = stream.next_below(j + 1);
    chosen.insert(chosen.count(t) ? j : t);
  }
  std::vector<Solution> result(chosen.begin(), chosen.end());
  std::sort(result.begin(), result.end());
  return result;
}

void write_objective_table(const ObjectiveTable& table, std::ostream& out) {
  out << "OBJTAB 1 " << table.n << ' ' << table.m << '\n';
  std::string buf;
  buf.reserve(1 << 16);
  for (double v : table.values) {
    uint64_t bits = std::bit_cast<uint64_t>(v);
    char le[8];
    for (int i = 0; i < 8; ++i) le[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    buf.append(le, 8);
    if (buf.size() >= (1 << 16)) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

ObjectiveTable read_objective_table(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError(1, "missing OBJTAB header");
  ObjectiveTable table;
  {
    std::string tag;
    int version = 0;
    size_t pos = 0;
    auto next_token = [&]() {
      while (pos < header.size() && header[pos] == ' ') ++pos;
      size_t start = pos;
      while (pos < header.size() && header[pos] != ' ') ++pos;
      return header.substr(start, pos - start);
    };
    tag = next_token();
    try {
      version = static_cast<int>(parse_i64(next_token()));
      table.n = static_cast<int>(parse_i64(next_token()));
      table.m = static_cast<int>(parse_i64(next_token()));
    } catch (const std::invalid_argument&) {
      throw ParseError(1, "bad OBJTAB header");
    }
    if (tag != "OBJTAB" || version != 1) throw ParseError(1, "bad OBJTAB header");
    if (table.n < 1 || table.n > kMaxEnumerationBits || table.m < 1) {
      throw ParseError(1, "OBJTAB dimensions out of range");
    }
  }
  const uint64_t count = table.rows() * static_cast<uint64_t>(table.m);
  std::vector<char> payload(count * 8);
  if (!in.read(payload.data(), static_cast<std::streamsize>(payload.size()))) {
    throw ParseError(2, "truncated OBJTAB payload");
  }
  table.values.resize(count);
  for (uint64_t i = 0; i < count; ++i) {
    uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) {
      bits |= static_cast<uint64_t>(static_cast<unsigned char>(payload[i * 8 + b])) << (8 * b);
    }
    table.values[i] = std::bit_cast<double>(bits);
  }
  return table;
}

}  // namespace rhomnk
