#include "dopt/sds_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <istream>
#include <sstream>

namespace dopt {

namespace {

// Minimal cursor over one record line.
struct Scanner {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(0, std::string("expected '") + c + "' at column " +
                              std::to_string(pos + 1));
    ++pos;
  }
  int number() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && s[start] == '-'))
      throw ParseError(0, "expected a number at column " +
                              std::to_string(start + 1));
    return std::stoi(s.substr(start, pos - start));
  }
};

Block parse_block(Scanner& sc) {
  Block blk;
  sc.expect('[');
  if (sc.peek() == ']') {
    sc.expect(']');
    return blk;
  }
  blk.push_back(sc.number());
  while (sc.peek() == ',') {
    sc.expect(',');
    blk.push_back(sc.number());
  }
  sc.expect(']');
  return blk;
}

}  // namespace

std::string print_record(const SdsRecord& r) {
  std::ostringstream os;
  os << r.sds.params.to_string();
  for (const Block& blk : r.sds.blocks) {
    os << " [";
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i) os << ',';
      os << blk[i];
    }
    os << ']';
  }
  if (!r.tag.empty()) os << "  # " << r.tag;
  return os.str();
}

SdsRecord parse_record(const std::string& line) {
  Scanner sc{line};
  sc.expect('(');
  int v = sc.number();
  sc.expect(';');
  std::vector<int> sizes;
  sizes.push_back(sc.number());
  while (sc.peek() == ',') {
    sc.expect(',');
    sizes.push_back(sc.number());
  }
  sc.expect(';');
  int lambda = sc.number();
  sc.expect(')');

  std::optional<ParameterSet> params;
  try {
    params.emplace(v, std::move(sizes), lambda);
  } catch (const std::domain_error& e) {
    throw ParseError(0, e.what());
  }
  std::vector<Block> blocks;
  for (int i = 0; i < params->t(); ++i) blocks.push_back(parse_block(sc));

  std::string tag;
  if (!sc.at_end()) {
    if (sc.peek() != '#')
      throw ParseError(0, "trailing junk at column " +
                              std::to_string(sc.pos + 1));
    sc.expect('#');
    sc.skip_ws();
    tag = line.substr(sc.pos);
    while (!tag.empty() &&
           std::isspace(static_cast<unsigned char>(tag.back())))
      tag.pop_back();
  }
  return SdsRecord{Sds{std::move(*params), std::move(blocks)}, std::move(tag)};
}

std::vector<SdsRecord> parse_records(std::istream& in) {
  std::vector<SdsRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_record(line));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

std::vector<SdsRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_records(in);
}

std::string print_matrix(const SignMatrix& m) {
  std::ostringstream os;
  os << "DO " << m.order() << '\n';
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) os << (m.at(i, j) > 0 ? '+' : '-');
    os << '\n';
  }
  return os.str();
}

std::vector<SignMatrix> parse_matrices(std::istream& in) {
  std::vector<SignMatrix> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream hdr(line);
    std::string word;
    int order = 0;
    if (!(hdr >> word >> order) || word != "DO" || order < 1)
      throw ParseError(line_no, "expected a 'DO <order>' header");
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(order) * order);
    for (int i = 0; i < order; ++i) {
      if (!std::getline(in, line))
        throw ParseError(line_no, "matrix truncated after row " +
                                      std::to_string(i));
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (static_cast<int>(line.size()) != order)
        throw ParseError(line_no, "row has " + std::to_string(line.size()) +
                                      " entries, want " +
                                      std::to_string(order));
      for (char c : line) {
        if (c == '+')
          entries.push_back(1);
        else if (c == '-')
          entries.push_back(-1);
        else
          throw ParseError(line_no, std::string("bad entry '") + c +
                                        "', want '+' or '-'");
      }
    }
    out.emplace_back(order, std::move(entries));
  }
  return out;
}

std::vector<SignMatrix> load_matrices(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_matrices(in);
}

}  // namespace dopt
