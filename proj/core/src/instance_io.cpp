#include "preorder/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <tuple>

namespace preorder {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw DataError("line " + std::to_string(line) + ": " + what);
}

std::size_t parse_index(std::string_view s, std::size_t line) {
  s = trim(s);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, "malformed index '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s, std::size_t line) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, "malformed value '" + std::string(s) + "'");
  }
  if (!std::isfinite(v)) fail(line, "non-finite value");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

struct Row {
  std::size_t line;
  std::size_t p;
  std::size_t q;
  std::string_view value;
};

/// Reads the "n=" line and the header; calls `on_row` for every data row
/// after checking index range, diagonal and duplicates.
template <typename OnRow>
std::size_t read_pair_table(std::istream& in, const std::string& header, OnRow on_row) {
  std::string text;
  std::size_t line = 0;
  std::size_t n = 0;
  bool have_n = false;
  bool have_header = false;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view s = trim(text);
    if (s.empty()) continue;
    if (!have_n) {
      if (s.substr(0, 2) != "n=") fail(line, "expected 'n=<count>'");
      n = parse_index(s.substr(2), line);
      if (n == 0) fail(line, "element count must be positive");
      have_n = true;
      continue;
    }
    if (!have_header) {
      std::string h(s);
      h.erase(std::remove(h.begin(), h.end(), ' '), h.end());
      if (h != header) fail(line, "expected header '" + header + "'");
      have_header = true;
      continue;
    }
    const auto parts = split(s, ',');
    if (parts.size() != 3) fail(line, "expected 3 fields");
    const std::size_t p = parse_index(parts[0], line);
    const std::size_t q = parse_index(parts[1], line);
    if (p >= n || q >= n) fail(line, "index out of range");
    if (p == q) fail(line, "diagonal pair");
    if (!seen.emplace(p, q).second) fail(line, "duplicate pair");
    on_row(Row{line, p, q, trim(parts[2])});
  }
  if (!have_n) throw DataError("missing 'n=<count>' line");
  if (!have_header) throw DataError("missing header '" + header + "'");
  return n;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

Instance read_instance(std::istream& in) {
  std::vector<std::tuple<std::size_t, std::size_t, double>> rows;
  const std::size_t n = read_pair_table(in, "p,q,c", [&](const Row& r) {
    rows.emplace_back(r.p, r.q, parse_double(r.value, r.line));
  });
  std::vector<double> values(n * n, 0.0);
  for (const auto& [p, q, v] : rows) values[p * n + q] = v;
  return Instance(n, std::move(values));
}

void write_instance(std::ostream& out, const Instance& instance) {
  const std::size_t n = instance.size();
  out << "n=" << n << "\np,q,c\n";
  char buf[64];
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const auto res = std::to_chars(buf, buf + sizeof buf, instance.value(p, q));
      out << p << ',' << q << ',' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
    }
  }
}

Instance load_instance(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_instance(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_instance(out, instance);
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

PartialAssignment read_partial(std::istream& in) {
  std::vector<std::tuple<std::size_t, std::size_t, bool>> rows;
  const std::size_t n = read_pair_table(in, "p,q,x", [&](const Row& r) {
    if (r.value != "0" && r.value != "1") fail(r.line, "value must be 0 or 1");
    rows.emplace_back(r.p, r.q, r.value == "1");
  });
  PartialAssignment x(n);
  for (const auto& [p, q, v] : rows) x.fix(p, q, v);
  return x;
}

void write_partial(std::ostream& out, const PartialAssignment& x) {
  const std::size_t n = x.size();
  out << "n=" << n << "\np,q,x\n";
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const PairState s = x.state(p, q);
      if (s == PairState::Undecided) continue;
      out << p << ',' << q << ',' << (s == PairState::One ? 1 : 0) << '\n';
    }
  }
}

PartialAssignment load_partial(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_partial(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void save_partial(const PartialAssignment& x, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_partial(out, x);
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

std::vector<std::pair<std::string, std::string>> read_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view s = trim(text);
    if (s.empty() || s.front() == '#') continue;
    std::istringstream tokens{std::string(s)};
    std::string a, b, extra;
    if (!(tokens >> a >> b) || (tokens >> extra)) fail(line, "expected 'src dst'");
    edges.emplace_back(std::move(a), std::move(b));
  }
  return edges;
}

std::vector<std::pair<std::string, std::string>> load_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_edge_list(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> edge_list_nodes(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::set<std::string> ids;
  for (const auto& [a, b] : edges) {
    ids.insert(a);
    ids.insert(b);
  }
  return {ids.begin(), ids.end()};
}

}  // namespace preorder
