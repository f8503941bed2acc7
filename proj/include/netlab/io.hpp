#pragma once

#include <string>
#include <vector>

#include "netlab/filters.hpp"
#include "netlab/finite_top.hpp"
#include "netlab/nets.hpp"
#include "netlab/sequences.hpp"

namespace netlab::io {

// Text formats:
//   space file:  "space <n>" then one open set per line, comma-separated
//                point indices, "-" for the empty set
//   net file:    "net finite <size>" then <size> rows of 0/1 and a
//                "values: ..." row, or "net omega omega" with "prefix: ..."
//                and "cycle: ..." lines
//   filter file: "filter <n>" then one member set per line
//   sequences:   "[p0,p1,...|c0,c1,...]" (prefix | cycle)

std::string print_space(const finite_top::FiniteSpace& s);
finite_top::FiniteSpace parse_space(const std::string& text);

std::string print_net(const nets::Net& n);
nets::Net parse_net(const std::string& text, unsigned carrier);

std::string print_filter(const filters::Filter& f);
filters::Filter parse_filter(const std::string& text);

std::string print_ep_literal(const sequences::EpSequence& s);
sequences::EpSequence parse_ep_literal(const std::string& text);

/// Same literal syntax with arbitrary atom names instead of point indices.
sequences::BasicEpSequence<std::string> parse_atom_ep_literal(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace netlab::io
