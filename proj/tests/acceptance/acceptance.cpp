// One line per acceptance criterion: [PASS] or [FAIL], then a short detail.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ukd/counting.hpp"
#include "ukd/determinacy.hpp"
#include "ukd/overlap_graph.hpp"
#include "ukd/path_scheme.hpp"
#include "ukd/posets.hpp"
#include "ukd/prohibitions.hpp"
#include "ukd/rational_gf.hpp"

namespace {

using ukd::BigInt;
using ukd::Permutation;

Permutation P(std::string_view text) { return ukd::parse_permutation(text).permutation; }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << "first failure: " << what;
    }
  }
};

bool run(int number, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail.str("");
    out.detail << "exception: " << e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %2d %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", number, title, seconds,
              out.detail.str().empty() ? "" : ": ", out.detail.str().c_str());
  std::fflush(stdout);
  return out.pass;
}

const std::vector<std::vector<long>> kTable{
    {1, 2, 2, 2, 2, 2, 2, 2, 2},
    {1, 2, 6, 12, 20, 34, 56, 88, 136},
    {1, 2, 6, 24, 72, 180, 428, 1042, 2512},
    {1, 2, 6, 24, 120, 480, 1632, 5124, 15860},
    {1, 2, 6, 24, 120, 720, 3600, 15600, 61872},
    {1, 2, 6, 24, 120, 720, 5040, 30240, 159840},
    {1, 2, 6, 24, 120, 720, 5040, 40320, 282240},
};

void table(Outcome& out) {
  for (int k = 2; k <= 8; ++k) {
    for (int n = 1; n <= 9; ++n) {
      const long expected = kTable[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(n - 1)];
      const BigInt got = ukd::count_bruteforce(k, n);
      out.expect(got == expected, "A_{" + std::to_string(k) + "," + std::to_string(n) + "} = " +
                                      got.get_str() + ", expected " + std::to_string(expected));
    }
  }
  out.detail << "63 entries, k = 2..8, n = 1..9";
}

void engines(Outcome& out) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 14; ++n) {
      const BigInt dp = ukd::count_bruteforce(k, n);
      const BigInt node = ukd::count_via_transfer(k, n, ukd::TransferVariant::kNodeBased);
      const BigInt arc = ukd::count_via_transfer(k, n, ukd::TransferVariant::kArcLabeled);
      out.expect(dp == node && node == arc,
                 "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + dp.get_str() + " / " +
                     node.get_str() + " / " + arc.get_str());
    }
  }
  if (out.pass) out.detail << "A_{4,14} = " << ukd::count_bruteforce(4, 14).get_str();
}

void closed_form(Outcome& out) {
  const auto reference = ukd::gf_reference_k3();
  const auto expanded = reference.expand(10);
  out.expect(expanded[0] == 1, "constant term");
  for (int n = 1; n <= 9; ++n) {
    out.expect(expanded[static_cast<std::size_t>(n)] == kTable[1][static_cast<std::size_t>(n - 1)],
               "coefficient of x^" + std::to_string(n));
  }
  const auto terms = ukd::series(3, 24).counts;
  const auto fitted = ukd::fit_rational_gf(terms, 12);
  const ukd::Polynomial expected_num{1, -2, 2, 1, 0, -1, 1};
  const ukd::Polynomial expected_den =
      ukd::multiply(ukd::Polynomial{1, -1, 0, -1}, ukd::multiply({1, -1}, {1, -1}));
  out.expect(fitted == reference, "fitted form differs from the reference");
  out.expect(fitted.numerator == expected_num, "numerator " + ukd::to_string(fitted.numerator));
  out.expect(fitted.denominator == expected_den, "denominator " + ukd::to_string(fitted.denominator));
  if (out.pass) {
    out.detail << "(" << ukd::to_string(fitted.numerator) << ") / (" << ukd::to_string(fitted.denominator)
               << ")";
  }
}

void graph_facts(Outcome& out) {
  const auto g = ukd::build_transfer_graph(3, ukd::TransferVariant::kArcLabeled);
  std::set<Permutation> nodes;
  for (std::size_t i = 0; i < g.node_count(); ++i) nodes.insert(g.node(i));
  std::set<Permutation> listed;
  for (const char* s : {"1234", "4321", "1324", "4231", "1243", "4312", "3421", "2134", "1423", "4132",
                        "3241", "2314"}) {
    listed.insert(P(s));
  }
  out.expect(nodes == listed, "node set");
  out.expect(g.arc_count() == 20, "arc count " + std::to_string(g.arc_count()));
  out.expect(!ukd::reachable(g, P("1243"), P("3241")), "3241 reachable from 1243");
  if (out.pass) out.detail << g.node_count() << " nodes, " << g.arc_count() << " arcs";
}

void prohibition_lengths(Outcome& out) {
  for (int k = 2; k <= 4; ++k) {
    const auto l = ukd::generate_prohibitions(k);
    const auto strata = l.by_length();
    out.expect(l.longest() <= 2 * k - 1, "k=" + std::to_string(k) + " has a pattern longer than 2k-1");
    out.detail << "k=" << k << ": " << l.size() << " patterns, length " << 2 * k - 1
               << (strata.count(2 * k - 1) ? " attained" : " not attained") << "; ";
  }
  const auto l3 = ukd::generate_prohibitions(3);
  const auto strata = l3.by_length();
  const std::size_t length4 = strata.count(4) ? strata.at(4) : 0;
  std::size_t ukd4 = 0;
  ukd::for_each_permutation(4, [&](const Permutation& p) { ukd4 += ukd::is_uniquely_determined(p, 3); });
  out.expect(length4 == 12, "k=3 has " + std::to_string(length4) + " patterns of length 4");
  out.expect(24 - ukd4 == 12, "24 - " + std::to_string(ukd4) + " != 12");
  if (out.pass) out.detail << "k=3 length 4: " << length4;
}

void no_crucial(Outcome& out) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= 9; ++n) {
      const auto crucial = ukd::find_crucial(k, n);
      out.expect(!crucial, "k=" + std::to_string(k) + " n=" + std::to_string(n) + " crucial " +
                               (crucial ? ukd::to_string(*crucial) : std::string()));
    }
  }
  std::uint64_t validated = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= 8; ++n) {
      ukd::for_each_permutation(n, [&](const Permutation& p) {
        if (!ukd::is_uniquely_determined(p, k)) return;
        const int v = ukd::extension_witness(p, k);
        const auto q = ukd::extend_right(p, v);
        out.expect(ukd::is_uniquely_determined(q, k),
                   "k=" + std::to_string(k) + " witness for " + ukd::to_string(p));
        ++validated;
      });
    }
  }
  out.detail << validated << " extensions validated";
}

void path_bijection(Outcome& out) {
  std::uint64_t checked = 0;
  for (int k = 3; k <= 4; ++k) {
    for (int n = 1; n <= 8; ++n) {
      std::set<Permutation> from_paths;
      auto cursor = ukd::enumerate_hamiltonian_paths(ukd::window_scheme(k, n));
      while (auto path = cursor.next()) {
        const Permutation p = ukd::phi_inverse(*path, k);
        out.expect(ukd::phi(p, k) == *path, "round trip for " + ukd::to_string(p));
        from_paths.insert(p);
        ++checked;
      }
      std::set<Permutation> filtered;
      ukd::for_each_permutation(n, [&](const Permutation& p) {
        if (ukd::is_uniquely_determined(p, k)) filtered.insert(p);
      });
      for (const auto& p : filtered) {
        out.expect(ukd::phi_inverse(ukd::phi(p, k), k) == p, "round trip for " + ukd::to_string(p));
      }
      out.expect(from_paths == filtered, "k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  out.detail << checked << " paths";
}

void poset_example(Outcome& out) {
  const auto w = ukd::poset_from_permutation(P("134265"), 3);
  const std::vector<std::pair<int, int>> expected{{1, 2}, {1, 5}, {3, 5}, {4, 5}};
  out.expect(ukd::incomparable_pairs(w) == expected, "incomparable pairs");
  out.expect(ukd::count_linear_extensions(w) == 7, "linear extensions");
  out.expect(ukd::m_index(P("13542"), 3) == 3, "m_index(13542, 3)");
  const auto realized = ukd::realize_path(ukd::window_path(P("13542"), 3));
  out.expect(realized == std::vector<Permutation>{P("12543"), P("13542"), P("23541")}, "realize_path");
}

void partition(Outcome& out) {
  for (int n = 3; n <= 7; ++n) {
    std::set<std::vector<Permutation>> seen;
    BigInt total = 0;
    ukd::for_each_permutation(n, [&](const Permutation& p) {
      const auto path = ukd::window_path(p, 3);
      if (seen.insert(path.nodes).second) total += ukd::realization_count(path);
    });
    out.expect(total == ukd::factorial(n), "n=" + std::to_string(n) + " sum " + total.get_str());
    for (const auto& [m, count] : ukd::m_distribution(n, 3)) {
      out.expect(count % m == 0, "n=" + std::to_string(n) + " class m=" + std::to_string(m));
    }
  }
}

void growth_bounds(Outcome& out) {
  for (int k = 3; k <= 5; ++k) {
    for (int n = 2 * k - 1; n <= 9; ++n) {
      const BigInt a = ukd::count_bruteforce(k, n);
      const auto b = ukd::bounds(k, n);
      out.expect(b.lower < a && a < b.upper, "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                                 ": " + b.lower.get_str() + " < " + a.get_str() +
                                                 " < " + b.upper.get_str());
    }
  }
}

void near_diagonal(Outcome& out) {
  const std::vector<long> expected{0, 2, 12, 72, 480, 3600, 30240};
  for (int n = 1; n <= 7; ++n) {
    const BigInt got = ukd::count_bruteforce(n, n + 1);
    out.expect(got == expected[static_cast<std::size_t>(n - 1)],
               "A_{" + std::to_string(n) + "," + std::to_string(n + 1) + "} = " + got.get_str());
    out.expect(got == ukd::big_factorial(n) * (n - 1), "n!(n-1) at n=" + std::to_string(n));
  }
  const Permutation image = ukd::key_bijection(P("134526"), 2, 4);
  out.expect(image == P("514263"), "image " + ukd::to_string(image));
  out.expect(ukd::key_bijection_inverse(image, 2, 4) == P("134526"), "round trip");
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "table of counts k=2..8, n=1..9", table);
  all &= run(2, "three counting engines agree, k=2..4, n<=14", engines);
  all &= run(3, "closed-form generating function for k=3", closed_form);
  all &= run(4, "pruned transfer graph for k=3", graph_facts);
  all &= run(5, "prohibition lengths bounded by 2k-1", prohibition_lengths);
  all &= run(6, "no crucial permutations; extension witnesses valid", no_crucial);
  all &= run(7, "Hamiltonian path bijection, k=3,4, n<=8", path_bijection);
  all &= run(8, "value poset and realization example", poset_example);
  all &= run(9, "window paths partition S_n, k=3, n<=7", partition);
  all &= run(10, "growth bounds, k=3..5", growth_bounds);
  all &= run(11, "A_{n,n+1} = n!(n-1) and the key bijection", near_diagonal);
  return all ? 0 : 1;
}
