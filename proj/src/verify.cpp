#include "netlab/verify.hpp"

#include <bit>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "netlab/filters.hpp"
#include "netlab/nets.hpp"
#include "netlab/sequences.hpp"
#include "netlab/symbolic.hpp"

namespace netlab::verify {

using finite_top::FiniteSpace;
using finite_top::Mask;
using finite_top::PointMap;
using finite_top::PointSet;

namespace {

VerdictBlock timed(const std::string& claim_id, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  auto [pass, witness] = body();
  const auto stop = std::chrono::steady_clock::now();
  VerdictBlock block;
  block.claim_id = claim_id;
  block.pass = pass;
  block.witness = std::move(witness);
  block.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return block;
}

std::vector<PointMap> all_point_maps(unsigned domain, unsigned codomain) {
  std::vector<PointMap> out;
  if (domain == 0) {
    out.push_back({0, codomain, {}});
    return out;
  }
  if (codomain == 0) return out;  // no maps from a nonempty domain
  std::vector<unsigned> values(domain, 0);
  while (true) {
    out.push_back({domain, codomain, values});
    unsigned i = domain;
    bool done = true;
    while (i > 0) {
      --i;
      if (++values[i] < codomain) {
        done = false;
        break;
      }
      values[i] = 0;
    }
    if (done) break;
  }
  return out;
}

std::string counts(std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

}  // namespace

Report check_openseqopen(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("openseqopen/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t spaces = 0, open_sets = 0;
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        ++spaces;
        for (Mask u : s.opens()) {
          ++open_sets;
          const auto r = sequences::is_sequentially_open(s, PointSet::from_mask(n, u));
          if (!r.sequentially_open) pass = false;
        }
      }
      return std::make_pair(pass, counts({{"topologies", spaces}, {"open_sets", open_sets}}));
    }));
  }
  return report;
}

Report check_firstcountableseq(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("firstcountableseq/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t spaces = 0;
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        ++spaces;
        for (unsigned x = 0; x < n; ++x) {
          const auto basis = sequences::first_countable_witness(s, x);
          if (basis.sets.size() != 1) pass = false;
          for (const PointSet& b : basis.sets)
            if (!finite_top::is_open(s, b) || !b.contains(x)) pass = false;
        }
        if (!sequences::is_sequential(s)) pass = false;
      }
      return std::make_pair(pass, counts({{"topologies", spaces}}));
    }));
  }
  return report;
}

Report check_lemmaseq(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("lemmaseq/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t checks = 0;
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        const Mask full = finite_top::full_mask(n);
        for (std::uint64_t a = 0; a <= full; ++a) {
          ++checks;
          if (!sequences::check_lemma_seq(s, PointSet::from_mask(n, static_cast<Mask>(a))))
            pass = false;
          if (a == full) break;
        }
      }
      return std::make_pair(pass, counts({{"subsets_checked", checks}}));
    }));
  }
  return report;
}

Report check_seq_continuity(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("seq-continuity/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t maps = 0;
      const std::vector<FiniteSpace> tops = finite_top::enumerate_topologies(n);
      const Mask full = finite_top::full_mask(n);
      for (const FiniteSpace& s : tops)
        if (!(sequences::seq_coreflection(s) == s)) pass = false;
      const std::vector<PointMap> fs = all_point_maps(n, n);
      for (const FiniteSpace& s1 : tops)
        for (const FiniteSpace& s2 : tops)
          for (const PointMap& f : fs) {
            ++maps;
            bool preimage = true;
            for (Mask u : s2.opens()) {
              Mask pre = 0;
              for (unsigned x = 0; x < n; ++x)
                if ((u >> f(x)) & 1u) pre |= Mask{1} << x;
              if (!s1.is_open_mask(pre)) preimage = false;
            }
            bool preserved = true;
            for (const sequences::EpSequence& s : sequences::ep_catalog(n, full)) {
              const PointSet limits = sequences::seq_limits(s, s1);
              if (limits.is_empty()) continue;
              sequences::EpSequence image = s;
              for (unsigned& v : image.prefix) v = f(v);
              for (unsigned& v : image.cycle) v = f(v);
              const PointSet image_limits = sequences::seq_limits(image, s2);
              for (unsigned y : limits.points())
                if (!image_limits.contains(f(y))) preserved = false;
            }
            if (preimage != preserved) pass = false;
          }
      return std::make_pair(pass, counts({{"maps_checked", maps}}));
    }));
  }
  return report;
}

Report check_quotientseq(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("quotientseq/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t quotients = 0;
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n))
        for (const finite_top::Partition& p : finite_top::all_partitions(n)) {
          ++quotients;
          const auto [q, proj] = finite_top::quotient(s, p);
          // openness reflects along the projection, over every block subset
          const Mask qfull = finite_top::full_mask(q.carrier());
          for (std::uint64_t a = 0; a <= qfull; ++a) {
            Mask pre = 0;
            for (unsigned b = 0; b < q.carrier(); ++b)
              if ((a >> b) & 1u) pre |= p.blocks[b].bits;
            if (q.is_open_mask(static_cast<Mask>(a)) != s.is_open_mask(pre)) pass = false;
            if (a == qfull) break;
          }
          if (!sequences::is_sequential(q)) pass = false;
        }
      return std::make_pair(pass, counts({{"quotients", quotients}}));
    }));
  }
  return report;
}

Report check_franklin(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("franklin/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t subsets = 0;
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        const symbolic::FranklinPresentation p = symbolic::franklin_witness_presentation(s);
        symbolic::franklin_build(p);  // validates the presentation
        const Mask full = finite_top::full_mask(n);
        for (std::uint64_t a = 0; a <= full; ++a) {
          ++subsets;
          if (!symbolic::franklin_check_open_reflection(
                  p, PointSet::from_mask(n, static_cast<Mask>(a))))
            pass = false;
          if (a == full) break;
        }
      }
      return std::make_pair(pass, counts({{"subsets_checked", subsets}}));
    }));
  }
  return report;
}

Report check_netsopen(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("netsopen/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t spaces = 0, nets = 0;
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        ++spaces;
        const nets::OpennessReport r = nets::verify_net_openness(s);
        nets += r.nets_checked;
        if (!r.ok) pass = false;
        // a witness exists exactly for the non-open subsets
        std::size_t non_open = 0;
        const Mask full = finite_top::full_mask(n);
        for (std::uint64_t a = 0; a <= full; ++a) {
          if (!s.is_open_mask(static_cast<Mask>(a))) ++non_open;
          if (a == full) break;
        }
        if (r.witnesses.size() != non_open) pass = false;
      }
      return std::make_pair(pass, counts({{"topologies", spaces}, {"nets_checked", nets}}));
    }));
  }
  return report;
}

Report check_netscontinuous(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("netscontinuous/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t maps = 0;
      const std::vector<FiniteSpace> tops = finite_top::enumerate_topologies(n);
      const std::vector<PointMap> fs = all_point_maps(n, n);
      for (const FiniteSpace& s1 : tops)
        for (const FiniteSpace& s2 : tops)
          for (const PointMap& f : fs) {
            ++maps;
            if (!nets::verify_net_continuity(f, s1, s2).agree()) pass = false;
          }
      return std::make_pair(pass, counts({{"maps_checked", maps}}));
    }));
  }
  return report;
}

Report check_hausdorff_nets(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("hausdorff-nets/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t spaces = 0;
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        ++spaces;
        const nets::HausdorffReport r = nets::verify_hausdorff_net(s);
        if (!r.ok || r.hausdorff != finite_top::is_hausdorff(s)) pass = false;
        // at finite scale Hausdorff collapses to discrete
        if (r.hausdorff != (s == FiniteSpace::discrete(n))) pass = false;
      }
      return std::make_pair(pass, counts({{"topologies", spaces}}));
    }));
  }
  return report;
}

Report check_compact_subnets(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("compact-subnets/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t nets = 0;
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        const nets::CompactReport r = nets::verify_compact_subnets(s);
        nets += r.nets_checked;
        if (!r.ok) pass = false;
        if (!finite_top::is_compact_by_covers(s).compact) pass = false;
        if (!finite_top::check_fip_equivalence(s)) pass = false;
      }
      return std::make_pair(pass, counts({{"nets_checked", nets}}));
    }));
  }
  return report;
}

Report check_filter_net_limits(unsigned bound) {
  Report report;
  for (unsigned n = 0; n <= bound; ++n) {
    report.blocks.push_back(timed("filter-net-limits/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t nets_checked = 0;
      const Mask full = finite_top::full_mask(n);
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        for (const nets::Net& net : nets::net_catalog(n, full)) {
          ++nets_checked;
          const filters::Filter f = filters::eventuality_filter(net);
          if (!(filters::filter_limits(f, s) == nets::net_limits(net, s))) pass = false;
          // back through choice nets: the intersection over all choices
          // recovers the filter limits, hence the original net limits
          if (!(filters::filter_limits_via_nets(f, s) == nets::net_limits(net, s)))
            pass = false;
        }
      }
      return std::make_pair(pass, counts({{"nets_checked", nets_checked}}));
    }));
  }
  return report;
}

Report check_ultrafilter_refine(unsigned bound) {
  Report report;
  for (unsigned n = 1; n <= bound; ++n) {
    report.blocks.push_back(timed("ultrafilter-refine/n=" + std::to_string(n), [&] {
      bool pass = true;
      std::uint64_t count = 0;
      const std::vector<filters::Filter> all = filters::enumerate_filters(n);
      for (const filters::Filter& f : all) {
        ++count;
        const filters::Filter u = ultrafilter_refine(f);
        if (!u.is_ultrafilter()) pass = false;
        for (Mask m : f.sets())
          if (!u.contains(m)) pass = false;
      }
      // compact <=> every ultrafilter converges, on every topology
      for (const FiniteSpace& s : finite_top::enumerate_topologies(n)) {
        bool all_converge = true;
        for (const filters::Filter& f : all)
          if (f.is_ultrafilter() && filters::filter_limits(f, s).is_empty())
            all_converge = false;
        if (finite_top::is_compact_by_covers(s).compact != all_converge) pass = false;
      }
      return std::make_pair(pass, counts({{"filters", count}}));
    }));
  }
  return report;
}

Report check_tychonoff_finite(unsigned bound) {
  Report report;
  const unsigned cap = std::min(bound, 2u);
  for (unsigned n1 = 1; n1 <= cap; ++n1)
    for (unsigned n2 = 1; n2 <= cap; ++n2) {
      report.blocks.push_back(timed(
          "tychonoff-finite/n=" + std::to_string(n1) + "x" + std::to_string(n2), [&] {
            bool pass = true;
            std::uint64_t checks = 0;
            const std::vector<filters::Filter> ultra = [&] {
              std::vector<filters::Filter> out;
              for (const filters::Filter& f : filters::enumerate_filters(n1 * n2))
                if (f.is_ultrafilter()) out.push_back(f);
              return out;
            }();
            for (const FiniteSpace& s1 : finite_top::enumerate_topologies(n1))
              for (const FiniteSpace& s2 : finite_top::enumerate_topologies(n2)) {
                const FiniteSpace prod = finite_top::product(s1, s2);
                for (const filters::Filter& u : ultra) {
                  ++checks;
                  // tychonoff_limit re-checks against the direct computation
                  const PointSet combined = filters::tychonoff_limit(u, s1, s2);
                  if (!(combined == filters::filter_limits(u, prod))) pass = false;
                  if (combined.is_empty()) pass = false;  // finite spaces are compact
                }
              }
            return std::make_pair(pass, counts({{"ultrafilters_checked", checks}}));
          }));
    }
  return report;
}

const std::vector<std::string>& known_tags() {
  static const std::vector<std::string> tags = {
      "openseqopen",     "firstcountableseq", "lemmaseq",
      "seq-continuity",  "quotientseq",       "franklin",
      "netsopen",        "netscontinuous",    "hausdorff-nets",
      "compact-subnets", "filter-net-limits", "ultrafilter-refine",
      "tychonoff-finite"};
  return tags;
}

unsigned max_bound(const std::string& tag) {
  if (tag == "netscontinuous" || tag == "seq-continuity") return 3;
  if (tag == "netsopen" || tag == "compact-subnets" || tag == "filter-net-limits") return 3;
  if (tag == "ultrafilter-refine" || tag == "tychonoff-finite") return 3;
  if (tag == "quotientseq" || tag == "franklin") return 3;
  return 4;
}

Report run_tag(const std::string& tag, unsigned size_bound) {
  if (size_bound > max_bound(tag))
    throw std::invalid_argument("size bound too large for tag " + tag);
  if (tag == "openseqopen") return check_openseqopen(size_bound);
  if (tag == "firstcountableseq") return check_firstcountableseq(size_bound);
  if (tag == "lemmaseq") return check_lemmaseq(size_bound);
  if (tag == "seq-continuity") return check_seq_continuity(size_bound);
  if (tag == "quotientseq") return check_quotientseq(size_bound);
  if (tag == "franklin") return check_franklin(size_bound);
  if (tag == "netsopen") return check_netsopen(size_bound);
  if (tag == "netscontinuous") return check_netscontinuous(size_bound);
  if (tag == "hausdorff-nets") return check_hausdorff_nets(size_bound);
  if (tag == "compact-subnets") return check_compact_subnets(size_bound);
  if (tag == "filter-net-limits") return check_filter_net_limits(size_bound);
  if (tag == "ultrafilter-refine") return check_ultrafilter_refine(size_bound);
  if (tag == "tychonoff-finite") return check_tychonoff_finite(size_bound);
  throw std::invalid_argument("unknown claim tag: " + tag);
}

}  // namespace netlab::verify
