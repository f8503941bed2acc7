#include "netlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netlab::io {

using finite_top::FiniteSpace;
using finite_top::Mask;
using finite_top::PointSet;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

unsigned parse_unsigned(const std::string& t) {
  if (t.empty()) throw std::invalid_argument("expected a number");
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("expected a number, got '" + t + "'");
  return static_cast<unsigned>(std::stoul(t));
}

Mask parse_point_set(const std::string& line, unsigned carrier) {
  const std::string t = trim(line);
  if (t == "-") return 0;
  Mask m = 0;
  for (const std::string& part : split(t, ',')) {
    const unsigned p = parse_unsigned(trim(part));
    if (p >= carrier) throw std::invalid_argument("point outside carrier");
    m |= Mask{1} << p;
  }
  return m;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& line : split(text, '\n')) {
    const std::string t = trim(line);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

std::vector<unsigned> parse_value_row(const std::string& row) {
  std::vector<unsigned> out;
  std::istringstream in(row);
  std::string tok;
  while (in >> tok) out.push_back(parse_unsigned(tok));
  return out;
}

}  // namespace

std::string print_space(const FiniteSpace& s) {
  std::string out = "space " + std::to_string(s.carrier()) + "\n";
  for (Mask u : s.opens())
    out += finite_top::to_string(PointSet::from_mask(s.carrier(), u)) + "\n";
  return out;
}

FiniteSpace parse_space(const std::string& text) {
  const std::vector<std::string> lines = nonempty_lines(text);
  if (lines.empty() || !lines[0].starts_with("space "))
    throw std::invalid_argument("space file must start with 'space <n>'");
  const unsigned carrier = parse_unsigned(trim(lines[0].substr(6)));
  std::vector<Mask> opens;
  for (std::size_t i = 1; i < lines.size(); ++i)
    opens.push_back(parse_point_set(lines[i], carrier));
  return FiniteSpace(carrier, std::move(opens));
}

std::string print_net(const nets::Net& n) {
  std::string out;
  if (n.is_omega()) {
    out = "net omega omega\n";
    const sequences::EpSequence& s = n.as_omega();
    out += "prefix:";
    for (unsigned v : s.prefix) out += " " + std::to_string(v);
    out += "\ncycle:";
    for (unsigned v : s.cycle) out += " " + std::to_string(v);
    out += "\n";
    return out;
  }
  const nets::FiniteNet& fn = n.as_finite();
  out = "net finite " + std::to_string(fn.index.size()) + "\n";
  for (unsigned i = 0; i < fn.index.size(); ++i) {
    std::string row;
    for (unsigned j = 0; j < fn.index.size(); ++j) {
      if (!row.empty()) row += ' ';
      row += fn.index.leq(i, j) ? '1' : '0';
    }
    out += row + "\n";
  }
  out += "values:";
  for (unsigned v : fn.values) out += " " + std::to_string(v);
  out += "\n";
  return out;
}

nets::Net parse_net(const std::string& text, unsigned carrier) {
  const std::vector<std::string> lines = nonempty_lines(text);
  if (lines.empty() || !lines[0].starts_with("net "))
    throw std::invalid_argument("net file must start with 'net <kind> <size-or-omega>'");
  const std::vector<std::string> head = split(lines[0], ' ');
  if (head.size() != 3) throw std::invalid_argument("malformed net header");

  if (head[1] == "omega") {
    sequences::EpSequence s;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].starts_with("prefix:"))
        s.prefix = parse_value_row(lines[i].substr(7));
      else if (lines[i].starts_with("cycle:"))
        s.cycle = parse_value_row(lines[i].substr(6));
      else
        throw std::invalid_argument("unexpected line in omega net file");
    }
    return nets::Net::omega(carrier, std::move(s));
  }
  if (head[1] != "finite") throw std::invalid_argument("unknown net index kind");
  const unsigned size = parse_unsigned(head[2]);
  if (lines.size() != static_cast<std::size_t>(size) + 2)
    throw std::invalid_argument("net file has the wrong number of lines");
  std::vector<bool> leq(static_cast<std::size_t>(size) * size, false);
  for (unsigned i = 0; i < size; ++i) {
    const std::vector<unsigned> row = parse_value_row(lines[1 + i]);
    if (row.size() != size) throw std::invalid_argument("relation row has the wrong length");
    for (unsigned j = 0; j < size; ++j) leq[i * size + j] = row[j] != 0;
  }
  if (!lines[1 + size].starts_with("values:"))
    throw std::invalid_argument("net file missing the values row");
  std::vector<unsigned> values = parse_value_row(lines[1 + size].substr(7));
  return nets::Net::finite(carrier, nets::DirectedSet(size, std::move(leq)),
                           std::move(values));
}

std::string print_filter(const filters::Filter& f) {
  std::string out = "filter " + std::to_string(f.carrier()) + "\n";
  for (Mask m : f.sets())
    out += finite_top::to_string(PointSet::from_mask(f.carrier(), m)) + "\n";
  return out;
}

filters::Filter parse_filter(const std::string& text) {
  const std::vector<std::string> lines = nonempty_lines(text);
  if (lines.empty() || !lines[0].starts_with("filter "))
    throw std::invalid_argument("filter file must start with 'filter <n>'");
  const unsigned carrier = parse_unsigned(trim(lines[0].substr(7)));
  std::vector<Mask> sets;
  for (std::size_t i = 1; i < lines.size(); ++i)
    sets.push_back(parse_point_set(lines[i], carrier));
  return filters::Filter(carrier, std::move(sets));
}

namespace {

template <typename T, typename Parse>
sequences::BasicEpSequence<T> parse_literal(const std::string& text, Parse parse) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("sequence literal must look like [p0,p1|c0,c1]");
  const std::string body = t.substr(1, t.size() - 2);
  const std::size_t bar = body.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("sequence literal must separate prefix and cycle with '|'");
  sequences::BasicEpSequence<T> s;
  const std::string prefix = trim(body.substr(0, bar));
  const std::string cycle = trim(body.substr(bar + 1));
  if (!prefix.empty())
    for (const std::string& part : split(prefix, ',')) s.prefix.push_back(parse(trim(part)));
  if (cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  for (const std::string& part : split(cycle, ',')) s.cycle.push_back(parse(trim(part)));
  return s;
}

}  // namespace

std::string print_ep_literal(const sequences::EpSequence& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.prefix.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.prefix[i]);
  }
  out += '|';
  for (std::size_t i = 0; i < s.cycle.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.cycle[i]);
  }
  return out + "]";
}

sequences::EpSequence parse_ep_literal(const std::string& text) {
  return parse_literal<unsigned>(text, [](const std::string& t) { return parse_unsigned(t); });
}

sequences::BasicEpSequence<std::string> parse_atom_ep_literal(const std::string& text) {
  return parse_literal<std::string>(text, [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty atom in sequence literal");
    return t;
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace netlab::io
