// netlab: exhaustively checkable point-set convergence toolkit.
//
// Exit codes: 0 success, 1 a check verified false, 2 usage or input error.

#include <algorithm>
#include <bit>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netlab/certificates.hpp"
#include "netlab/filters.hpp"
#include "netlab/io.hpp"
#include "netlab/nets.hpp"
#include "netlab/ordinal.hpp"
#include "netlab/sequences.hpp"
#include "netlab/verify.hpp"

namespace {

using netlab::finite_top::FiniteSpace;
using netlab::finite_top::PointSet;

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

int run_enumerate(unsigned n) {
  const std::vector<FiniteSpace> tops = netlab::finite_top::enumerate_topologies(n);
  for (const FiniteSpace& s : tops) std::cout << netlab::io::print_space(s) << "\n";
  std::cout << "count=" << tops.size() << "\n";
  return 0;
}

int run_verify(const std::string& tag, unsigned bound, bool timings) {
  const netlab::verify::Report report = netlab::verify::run_tag(tag, bound);
  for (const netlab::verify::VerdictBlock& b : report.blocks) {
    std::cout << "claim=" << b.claim_id << "\n";
    std::cout << "status=" << (b.pass ? "pass" : "fail") << "\n";
    std::cout << "witness=" << b.witness << "\n";
    if (timings) std::cout << "elapsed_ms=" << b.elapsed_ms << "\n";
    std::cout << "\n";
  }
  std::cout << "result=" << (report.all_pass() ? "pass" : "fail") << "\n";
  return report.all_pass() ? 0 : 1;
}

int emit(const netlab::cli::Certificate& c) {
  std::cout << netlab::cli::render(c);
  return c.checked ? 0 : 1;
}

int run_counterexample(const std::string& name, const std::string& set_atom,
                       const std::string& alphas, const std::string& indices,
                       const std::string& prefix_sets, const std::string& cycle_sets,
                       unsigned candidates, const std::string& space_path) {
  if (name == "cc") return emit(netlab::cli::counterexample_cc(set_atom));
  if (name == "ordinal") {
    std::vector<netlab::symbolic::CnfOrdinal> parsed;
    for (const std::string& tok : split(alphas, ','))
      parsed.push_back(netlab::symbolic::parse_cnf(tok));
    return emit(netlab::cli::counterexample_ordinal(parsed));
  }
  if (name == "product") {
    netlab::sequences::BasicEpSequence<std::vector<std::string>> s;
    if (!prefix_sets.empty())
      for (const std::string& set : split(prefix_sets, ';'))
        s.prefix.push_back(split(set, ','));
    for (const std::string& set : split(cycle_sets, ';')) s.cycle.push_back(split(set, ','));
    return emit(netlab::cli::counterexample_product(s));
  }
  if (name == "binary-digits") {
    std::vector<unsigned> parsed;
    for (const std::string& tok : split(indices, ','))
      parsed.push_back(static_cast<unsigned>(std::stoul(tok)));
    return emit(netlab::cli::counterexample_binary_digits(parsed));
  }
  if (name == "fan") return emit(netlab::cli::counterexample_fan(candidates));
  if (name == "franklin") {
    const FiniteSpace base = space_path.empty()
                                 ? FiniteSpace::sierpinski()
                                 : netlab::io::parse_space(netlab::io::read_file(space_path));
    return emit(netlab::cli::counterexample_franklin(base));
  }
  std::cerr << "unknown counterexample name: " << name << "\n";
  return 2;
}

void print_limits(const std::string& claim, const PointSet& limits, bool verdict) {
  if (verdict) {
    std::cout << "claim=" << claim << "\n";
    std::cout << "status=pass\n";
    std::cout << "witness=limits=" << netlab::finite_top::to_string(limits) << "\n";
  } else {
    std::cout << "limits=" << netlab::finite_top::to_string(limits) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustively checkable point-set convergence toolkit"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "verdict"}));

  unsigned enum_n = 0;
  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list all topologies on n points");
  cmd_enum->add_option("n", enum_n, "carrier size (<= 4)")->required();

  std::string tag;
  unsigned bound = 3;
  bool timings = false;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the checks behind one claim tag");
  cmd_verify->add_option("tag", tag, "claim tag")->required();
  cmd_verify->add_option("--n", bound, "carrier size bound");
  cmd_verify->add_flag("--timings", timings, "include elapsed_ms in the blocks");

  std::string name, set_atom = "a", alphas = "w,5", indices = "0,1,2,3";
  std::string prefix_sets = "z", cycle_sets = "a", ce_space;
  unsigned candidates = 2;
  CLI::App* cmd_ce = app.add_subcommand("counterexample", "emit a self-checking certificate");
  cmd_ce->add_option("name", name, "cc|ordinal|product|binary-digits|fan|franklin")
      ->required();
  cmd_ce->add_option("--set", set_atom, "atom for the cc certificate");
  cmd_ce->add_option("--alphas", alphas, "comma-separated ordinals, e.g. w,5");
  cmd_ce->add_option("--indices", indices, "strictly increasing digit positions");
  cmd_ce->add_option("--prefix", prefix_sets, "prefix sets, ';'-separated atom lists");
  cmd_ce->add_option("--cycle", cycle_sets, "cycle sets, ';'-separated atom lists");
  cmd_ce->add_option("--candidates", candidates, "number of fan basis candidates");
  cmd_ce->add_option("--space", ce_space, "base space file for the franklin certificate");

  std::string space_path, net_path, filter_path, seq_literal;
  CLI::App* cmd_net = app.add_subcommand("net-limits", "limit set of a net in a space");
  cmd_net->add_option("--space", space_path, "space file")->required();
  cmd_net->add_option("--net", net_path, "net file")->required();

  CLI::App* cmd_seq = app.add_subcommand("seq-limits", "limit set of a sequence in a space");
  cmd_seq->add_option("--space", space_path, "space file")->required();
  cmd_seq->add_option("--seq", seq_literal, "sequence literal [p0,p1|c0,c1]")->required();

  CLI::App* cmd_flt = app.add_subcommand("filter-limits", "limit set of a filter in a space");
  cmd_flt->add_option("--space", space_path, "space file")->required();
  cmd_flt->add_option("--filter", filter_path, "filter file")->required();

  CLI::App* cmd_ref = app.add_subcommand("refine", "principal ultrafilter refinement");
  cmd_ref->add_option("--filter", filter_path, "filter file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_enum) {
      if (enum_n > 4) {
        std::cerr << "enumerate: n must be <= 4\n";
        return 2;
      }
      return run_enumerate(enum_n);
    }
    if (*cmd_verify) {
      const auto& tags = netlab::verify::known_tags();
      if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
        std::cerr << "unknown claim tag: " << tag << "\n";
        return 2;
      }
      if (bound > netlab::verify::max_bound(tag)) {
        std::cerr << "verify: --n too large for tag " << tag << " (max "
                  << netlab::verify::max_bound(tag) << ")\n";
        return 2;
      }
      return run_verify(tag, bound, timings);
    }
    if (*cmd_ce)
      return run_counterexample(name, set_atom, alphas, indices, prefix_sets, cycle_sets,
                                candidates, ce_space);
    if (*cmd_net) {
      const FiniteSpace s = netlab::io::parse_space(netlab::io::read_file(space_path));
      const netlab::nets::Net net =
          netlab::io::parse_net(netlab::io::read_file(net_path), s.carrier());
      print_limits("net-limits", netlab::nets::net_limits(net, s), format == "verdict");
      return 0;
    }
    if (*cmd_seq) {
      const FiniteSpace s = netlab::io::parse_space(netlab::io::read_file(space_path));
      const netlab::sequences::EpSequence seq = netlab::io::parse_ep_literal(seq_literal);
      print_limits("seq-limits", netlab::sequences::seq_limits(seq, s), format == "verdict");
      return 0;
    }
    if (*cmd_flt) {
      const FiniteSpace s = netlab::io::parse_space(netlab::io::read_file(space_path));
      const netlab::filters::Filter f =
          netlab::io::parse_filter(netlab::io::read_file(filter_path));
      print_limits("filter-limits", netlab::filters::filter_limits(f, s),
                   format == "verdict");
      return 0;
    }
    if (*cmd_ref) {
      const netlab::filters::Filter f =
          netlab::io::parse_filter(netlab::io::read_file(filter_path));
      const netlab::filters::Filter u = netlab::filters::ultrafilter_refine(f);
      std::cout << "principal_at=" << std::countr_zero(u.kernel()) << "\n";
      std::cout << netlab::io::print_filter(u);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
