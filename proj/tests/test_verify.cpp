#include "netlab/verify.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace netlab::verify;

TEST_CASE("every claim tag passes at small bounds") {
  for (const std::string& tag : known_tags()) {
    CAPTURE(tag);
    const Report report = run_tag(tag, 2);
    CHECK(report.all_pass());
    CHECK_FALSE(report.blocks.empty());
    for (const VerdictBlock& b : report.blocks) {
      CAPTURE(b.claim_id);
      CHECK(b.pass);
    }
  }
}

TEST_CASE("unknown tags and oversized bounds are rejected") {
  CHECK_THROWS_AS(run_tag("no-such-tag", 1), std::invalid_argument);
  CHECK_THROWS_AS(run_tag("netscontinuous", 4), std::invalid_argument);
  CHECK(max_bound("openseqopen") == 4);
  CHECK(max_bound("netscontinuous") == 3);
}

TEST_CASE("trivial bounds still produce blocks") {
  const Report r = run_tag("lemmaseq", 1);
  CHECK(r.all_pass());
  CHECK(r.blocks.size() == 2);  // n=0 and n=1
  CHECK(r.blocks[0].claim_id == "lemmaseq/n=0");
}
