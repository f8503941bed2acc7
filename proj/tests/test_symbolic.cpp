#include "netlab/symbolic.hpp"

#include "doctest.h"

using namespace netlab::symbolic;
using netlab::finite_top::FiniteSpace;
using netlab::finite_top::Mask;
using netlab::finite_top::PointSet;
using netlab::sequences::EpSequence;

namespace {
const CcRegistry kReg{{"a", "b", "c"}, {"t"}};
}

TEST_CASE("countable-complement openness") {
  CHECK(cc_is_open(kReg, SetDescriptor::cofinite({"a", "b"})));
  CHECK_FALSE(cc_is_open(kReg, SetDescriptor::finite({"a"})));
  CHECK(cc_is_open(kReg, SetDescriptor::empty()));
  CHECK(cc_is_open(kReg, SetDescriptor::full()));
  CHECK(cc_is_open(kReg, SetDescriptor::co_countable_tag("t")));
  CHECK_FALSE(cc_is_open(kReg, SetDescriptor::countable_tag("t")));
  CHECK(cc_is_open(kReg, SetDescriptor::finite({})));  // the empty set again
  CHECK_THROWS_AS(cc_is_open(kReg, SetDescriptor::finite({"z"})), std::invalid_argument);
  CHECK_THROWS_AS(cc_is_open(kReg, SetDescriptor::countable_tag("u")),
                  std::invalid_argument);
}

TEST_CASE("countable-complement sequence limits") {
  using Seq = netlab::sequences::BasicEpSequence<std::string>;
  CHECK(cc_seq_limits(kReg, Seq{{"a", "b"}, {"c"}}) == SetDescriptor::finite({"c"}));
  CHECK(cc_seq_limits(kReg, Seq{{}, {"a", "b"}}) == SetDescriptor::empty());
  CHECK(cc_seq_limits(kReg, Seq{{}, {"a"}}) == SetDescriptor::finite({"a"}));
  CHECK_THROWS_AS(cc_seq_limits(kReg, Seq{{}, {"z"}}), std::invalid_argument);
}

TEST_CASE("every descriptor is sequentially open in the countable-complement space") {
  CHECK(cc_sequentially_open(kReg, SetDescriptor::finite({"a"})));
  CHECK(cc_sequentially_open(kReg, SetDescriptor::full()));
  CHECK(cc_sequentially_open(kReg, SetDescriptor::countable_tag("t")));
  // the non-sequential certificate: sequentially open yet not open
  const SetDescriptor d = SetDescriptor::finite({"a"});
  CHECK(cc_sequentially_open(kReg, d));
  CHECK_FALSE(cc_is_open(kReg, d));
}

TEST_CASE("descriptor complement") {
  CHECK(cc_complement(SetDescriptor::finite({"a"})) == SetDescriptor::cofinite({"a"}));
  CHECK(cc_complement(SetDescriptor::empty()) == SetDescriptor::full());
  CHECK(cc_complement(SetDescriptor::countable_tag("t")) ==
        SetDescriptor::co_countable_tag("t"));
}

TEST_CASE("finite-or-cofinite sets of naturals") {
  const NatSet f = NatSet::finite({3, 1, 3});
  CHECK(f.atoms == std::vector<std::uint64_t>{1, 3});
  CHECK(f.contains(1));
  CHECK_FALSE(f.contains(2));
  const NatSet c = NatSet::cofinite_excluding({0, 1});
  CHECK_FALSE(c.contains(0));
  CHECK(c.contains(2));
  CHECK(*c.smallest_member() == 2);
  CHECK(*NatSet::all().smallest_member() == 0);
  CHECK_FALSE(NatSet::none().smallest_member().has_value());

  CHECK(f.subset_of(NatSet::all()));
  CHECK(f.subset_of(NatSet::finite({1, 2, 3})));
  CHECK_FALSE(f.subset_of(NatSet::finite({1})));
  CHECK_FALSE(c.subset_of(f));                                  // infinite vs finite
  CHECK(c.subset_of(NatSet::cofinite_excluding({0})));
  CHECK_FALSE(NatSet::cofinite_excluding({0}).subset_of(c));
  CHECK_FALSE(f.subset_of(NatSet::cofinite_excluding({1})));
}

TEST_CASE("omega-plus-one openness") {
  CHECK(omega_plus_one_is_open({NatSet::finite({3, 5}), false}));
  CHECK(omega_plus_one_is_open({NatSet::cofinite_excluding({0, 1}), true}));
  CHECK_FALSE(omega_plus_one_is_open({NatSet::none(), true}));  // the singleton at ∞
  CHECK_FALSE(omega_plus_one_is_open({NatSet::finite({0, 2, 4}), true}));
  CHECK(omega_plus_one_is_open({NatSet::all(), true}));
}

TEST_CASE("fan openness") {
  FanSetDescriptor isolated;
  isolated.apex = false;
  isolated.default_rule = NatSet::finite({0});
  CHECK(fan_is_open(isolated));

  FanSetDescriptor whole;
  whole.apex = true;
  whole.default_rule = NatSet::all();
  CHECK(fan_is_open(whole));

  FanSetDescriptor pinched = whole;
  pinched.exceptional[0] = NatSet::finite({1, 2});
  CHECK_FALSE(fan_is_open(pinched));

  FanSetDescriptor trimmed = whole;
  trimmed.exceptional[0] = NatSet::cofinite_excluding({7});
  CHECK(fan_is_open(trimmed));
}

TEST_CASE("fan subset tests") {
  FanSetDescriptor whole;
  whole.apex = true;
  whole.default_rule = NatSet::all();
  FanSetDescriptor trimmed = whole;
  trimmed.exceptional[2] = NatSet::cofinite_excluding({0});
  CHECK(fan_subset(trimmed, whole));
  CHECK_FALSE(fan_subset(whole, trimmed));
  const auto witness = fan_not_subset_witness(whole, trimmed);
  REQUIRE(witness.has_value());
  CHECK(witness->first == 2);
  CHECK(witness->second == 0);
  CHECK_FALSE(fan_not_subset_witness(trimmed, whole).has_value());
}

TEST_CASE("defeating a finite basis candidate list at the apex") {
  FanSetDescriptor whole;
  whole.apex = true;
  whole.default_rule = NatSet::all();

  const FanSetDescriptor w1 = fan_defeat_basis({whole});
  CHECK(fan_is_open(w1));
  CHECK(w1.apex);
  CHECK_FALSE(fan_subset(whole, w1));
  CHECK_FALSE(w1.spoke_trace(0).contains(0));  // the least retained point is gone

  FanSetDescriptor other = whole;
  other.exceptional[1] = NatSet::cofinite_excluding({0, 1, 2});
  const FanSetDescriptor w2 = fan_defeat_basis({whole, other});
  CHECK(fan_is_open(w2));
  CHECK_FALSE(fan_subset(whole, w2));
  CHECK_FALSE(fan_subset(other, w2));
  CHECK_FALSE(w2.spoke_trace(0).contains(0));
  CHECK_FALSE(w2.spoke_trace(1).contains(3));  // least natural retained by `other` there

  const FanSetDescriptor empty_list = fan_defeat_basis({});
  CHECK(fan_is_open(empty_list));
  CHECK(empty_list.exceptional.empty());
  CHECK(empty_list.default_rule == NatSet::all());

  FanSetDescriptor not_open = whole;
  not_open.exceptional[0] = NatSet::finite({0});
  CHECK_THROWS_AS(fan_defeat_basis({not_open}), std::invalid_argument);
  FanSetDescriptor no_apex;
  no_apex.default_rule = NatSet::all();
  CHECK_THROWS_AS(fan_defeat_basis({no_apex}), std::invalid_argument);
}

TEST_CASE("pointwise limits of finite-set sequences") {
  using Seq = netlab::sequences::BasicEpSequence<std::vector<std::string>>;
  const PointwiseLimit constant = product_pointwise_limit(Seq{{}, {{"a", "b"}}});
  CHECK(std::get<std::vector<std::string>>(constant) ==
        std::vector<std::string>{"a", "b"});

  const PointwiseLimit unstable = product_pointwise_limit(Seq{{}, {{"a"}, {"a", "b"}}});
  CHECK(std::get<Diverges>(unstable).unstable_atom == "b");

  const Seq with_prefix{{{"z"}}, {{"a"}}};
  const auto limit = std::get<std::vector<std::string>>(product_pointwise_limit(with_prefix));
  CHECK(limit == std::vector<std::string>{"a"});
  // the limit sits in the union of all terms
  for (const std::string& atom : limit)
    CHECK((atom == "z" || atom == "a"));
}

TEST_CASE("symbolic space family tags") {
  const SymbolicSpace cc{SymbolicSpace::CountableComplement{kReg}};
  CHECK(to_string(cc) == "countable-complement space (3 named atoms)");
  const SymbolicSpace ord{SymbolicSpace::OrdinalIntervalSpace{
      {OrdinalPoint::omega1(), true}}};
  CHECK(to_string(ord) == "ordinal interval [0,w1]");
  CHECK(to_string(SymbolicSpace{SymbolicSpace::OmegaPlusOne{}}) ==
        "convergent-sequence space w+1");
  CHECK(to_string(SymbolicSpace{SymbolicSpace::SequentialFan{}}) == "sequential fan");
  const SymbolicSpace prod{SymbolicSpace::BinaryProduct{
      {make_rational(0, 1), make_rational(1, 1)}}};
  CHECK(to_string(prod) == "binary product over [0,1)");
}

TEST_CASE("franklin presentations") {
  const FiniteSpace sierp = FiniteSpace::sierpinski();
  const FranklinPresentation p = franklin_witness_presentation(sierp);
  const FranklinSpace z = franklin_build(p);
  CHECK(z.copies == 3);  // two constants plus the witness for {b}

  // the map sends ∞ to the first term and naturals along the sample
  CHECK(franklin_map(p, 0, {true, 0}) == 0);
  CHECK(franklin_map(p, 2, {true, 0}) == franklin_map(p, 2, {false, 0}));

  CHECK(franklin_check_open_reflection(p, PointSet::of(2, {0})));
  CHECK(franklin_check_open_reflection(p, PointSet::of(2, {1})));
  CHECK(franklin_check_open_reflection(p, PointSet::full(2)));
  CHECK(franklin_check_open_reflection(p, PointSet::empty(2)));

  // constants-only presentations cannot refute the non-open subset
  FranklinPresentation constants{sierp, {{{}, {0}}, {{}, {1}}}};
  franklin_build(constants);
  CHECK_FALSE(franklin_check_open_reflection(constants, PointSet::of(2, {1})));

  // validation catches bad samples
  FranklinPresentation divergent{FiniteSpace::discrete(2), {{{}, {0}}, {{}, {1}},
                                                            {{0}, {1}}}};
  CHECK_THROWS_AS(franklin_build(divergent), std::invalid_argument);
  FranklinPresentation missing{sierp, {{{}, {0}}}};
  CHECK_THROWS_AS(franklin_build(missing), std::invalid_argument);
}

TEST_CASE("franklin degenerate bases") {
  // one-point base: a single copy, constant map
  const FiniteSpace point = FiniteSpace::discrete(1);
  const FranklinPresentation p1 = franklin_witness_presentation(point);
  CHECK(franklin_build(p1).copies == 1);
  for (std::uint64_t n = 0; n < 5; ++n) CHECK(franklin_map(p1, 0, {false, n}) == 0);
  CHECK(franklin_map(p1, 0, {true, 0}) == 0);

  // discrete bases need constants only, and the ∞ points biject onto the base
  const FiniteSpace d3 = FiniteSpace::discrete(3);
  const FranklinPresentation p3 = franklin_witness_presentation(d3);
  CHECK(franklin_build(p3).copies == 3);
  std::vector<bool> hit(3, false);
  for (std::size_t k = 0; k < 3; ++k) hit[franklin_map(p3, k, {true, 0})] = true;
  CHECK(hit == std::vector<bool>{true, true, true});
}

TEST_CASE("franklin reflection over every small base") {
  for (unsigned n = 0; n <= 3; ++n)
    for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(n)) {
      const FranklinPresentation p = franklin_witness_presentation(s);
      franklin_build(p);
      const Mask full = netlab::finite_top::full_mask(n);
      for (std::uint64_t a = 0; a <= full; ++a) {
        CHECK(franklin_check_open_reflection(p, PointSet::from_mask(n, static_cast<Mask>(a))));
        if (a == full) break;
      }
    }
}
