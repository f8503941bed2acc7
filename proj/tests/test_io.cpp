#include "netlab/io.hpp"

#include "doctest.h"

using namespace netlab::io;
using netlab::finite_top::FiniteSpace;
using netlab::finite_top::full_mask;
using netlab::nets::DirectedSet;
using netlab::nets::Net;
using netlab::sequences::EpSequence;

TEST_CASE("space files round-trip") {
  const FiniteSpace sierp = FiniteSpace::sierpinski();
  CHECK(print_space(sierp) == "space 2\n-\n0\n0,1\n");
  CHECK(parse_space(print_space(sierp)) == sierp);
  for (unsigned n = 0; n <= 3; ++n)
    for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(n))
      CHECK(parse_space(print_space(s)) == s);
  CHECK_THROWS_AS(parse_space("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("space 2\n-\n0\n0,5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("space 2\n0\n0,1\n"), std::invalid_argument);
}

TEST_CASE("net files round-trip") {
  const Net fin = Net::finite(2, DirectedSet::chain(2), {1, 0});
  const std::string text = print_net(fin);
  CHECK(text == "net finite 2\n1 1\n0 1\nvalues: 1 0\n");
  const Net back = parse_net(text, 2);
  CHECK_FALSE(back.is_omega());
  CHECK(back.as_finite().values == fin.as_finite().values);
  CHECK(back.as_finite().index == fin.as_finite().index);

  const Net om = Net::omega(3, EpSequence{{0, 1}, {2}});
  const std::string om_text = print_net(om);
  CHECK(om_text == "net omega omega\nprefix: 0 1\ncycle: 2\n");
  const Net om_back = parse_net(om_text, 3);
  CHECK(om_back.is_omega());
  CHECK(om_back.as_omega() == om.as_omega());

  // empty prefix survives the round trip
  const Net bare = Net::omega(2, EpSequence{{}, {1}});
  CHECK(parse_net(print_net(bare), 2).as_omega() == bare.as_omega());

  CHECK_THROWS_AS(parse_net("net finite 2\n1 1\nvalues: 0 0\n", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_net("net omega omega\nprefix: 0\n", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_net(print_net(om), 2), std::invalid_argument);  // carrier too small
}

TEST_CASE("filter files round-trip") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const netlab::filters::Filter& f : netlab::filters::enumerate_filters(n))
      CHECK(parse_filter(print_filter(f)) == f);
  CHECK_THROWS_AS(parse_filter("filter 2\n-\n0,1\n"), std::invalid_argument);
}

TEST_CASE("sequence literals") {
  CHECK(print_ep_literal(EpSequence{{0, 1}, {2}}) == "[0,1|2]");
  CHECK(print_ep_literal(EpSequence{{}, {0}}) == "[|0]");
  CHECK(parse_ep_literal("[0,1|2]") == EpSequence{{0, 1}, {2}});
  CHECK(parse_ep_literal("[|0,1]") == EpSequence{{}, {0, 1}});
  CHECK(parse_ep_literal(" [ 1 | 0 ] ") == EpSequence{{1}, {0}});
  CHECK_THROWS_AS(parse_ep_literal("[0,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ep_literal("[0|]"), std::invalid_argument);

  const auto atoms = parse_atom_ep_literal("[x,y|z]");
  CHECK(atoms.prefix == std::vector<std::string>{"x", "y"});
  CHECK(atoms.cycle == std::vector<std::string>{"z"});
}

TEST_CASE("missing files raise input errors") {
  CHECK_THROWS_AS(read_file("/nonexistent/netlab-test-file"), std::invalid_argument);
}
