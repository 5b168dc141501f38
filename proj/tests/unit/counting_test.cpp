#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ukd/counting.hpp"
#include "ukd/prohibitions.hpp"
#include "ukd/rational_gf.hpp"

using ukd::BigInt;
using ukd::Permutation;
using ukd::TransferVariant;

namespace {

Permutation P(std::string_view text) { return ukd::parse_permutation(text).permutation; }

// A_{k,n} for n = 1..9, checked against an independent brute-force script.
const std::map<int, std::vector<long>> kTable{
    {2, {1, 2, 2, 2, 2, 2, 2, 2, 2}},
    {3, {1, 2, 6, 12, 20, 34, 56, 88, 136}},
    {4, {1, 2, 6, 24, 72, 180, 428, 1042, 2512}},
    {5, {1, 2, 6, 24, 120, 480, 1632, 5124, 15860}},
    {6, {1, 2, 6, 24, 120, 720, 3600, 15600, 61872}},
    {7, {1, 2, 6, 24, 120, 720, 5040, 30240, 159840}},
    {8, {1, 2, 6, 24, 120, 720, 5040, 40320, 282240}},
};

// A_{3,n}, n = 0..25, expanded from the closed form by an independent script.
const std::vector<long> kSeriesK3{1,    1,    2,    6,    12,    20,    34,    56,    88,
                                  136,  208,  314,  470,  700,   1038,  1534,  2262,  3330,
                                  4896, 7192, 10558, 15492, 22724, 33324, 48860, 71630};

}  // namespace

TEST_CASE("table of counts by exhaustive filtering and Hamiltonian DP") {
  for (const auto& [k, row] : kTable) {
    for (int n = 1; n <= 9; ++n) {
      INFO("k=" << k << " n=" << n);
      CHECK(ukd::count_bruteforce(k, n) == row[static_cast<std::size_t>(n - 1)]);
      if (n <= 8) CHECK(ukd::count_exhaustive(k, n) == row[static_cast<std::size_t>(n - 1)]);
    }
  }
  CHECK(ukd::count_bruteforce(3, 0) == 1);
  CHECK(ukd::count_exhaustive(3, 0) == 1);
  CHECK_THROWS_AS(ukd::count_exhaustive(3, 11), ukd::ResourceLimit);
}

TEST_CASE("exhaustive counts match the definitional oracle") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 2; k <= n; ++k) {
      CHECK(ukd::count_exhaustive(k, n) == oracle::uniquely_determined(n, k).size());
    }
  }
}

TEST_CASE("arc-labelled transfer graph for k = 3") {
  const auto g = ukd::build_transfer_graph(3, TransferVariant::kArcLabeled);
  CHECK(g.pattern_length() == 4);
  CHECK(g.labelled());
  CHECK(g.node_count() == 12);
  CHECK(g.arc_count() == 20);
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < g.node_count(); ++i) nodes.push_back(ukd::to_string(g.node(i)));
  CHECK(nodes == std::vector<std::string>{"1234", "1243", "1324", "1423", "2134", "2314", "3241",
                                          "3421", "4132", "4231", "4312", "4321"});

  // No two labels share a node pair, and every label is a uniquely
  // 3-determined 5-permutation avoiding L_3.
  const auto l3 = ukd::generate_prohibitions(3);
  std::set<std::pair<std::size_t, std::uint32_t>> pairs;
  std::set<Permutation> labels;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    for (const auto& a : g.out_arcs(u)) {
      pairs.emplace(u, a.target);
      const auto label = g.label(a);
      labels.insert(label);
      CHECK_FALSE(l3.occurs_in(label));
      CHECK(ukd::factor_pattern(label, 1, 4) == g.node(u));
      CHECK(ukd::factor_pattern(label, 2, 5) == g.node(a.target));
    }
  }
  CHECK(pairs.size() == 20);
  CHECK(labels.size() == 20);
  CHECK(labels.count(P("13542")) == 0);

  // Pruning by label matters: the induced graph on the same nodes has more arcs.
  const auto induced = ukd::build_overlap_graph_if(4, [&](const Permutation& p) { return !l3.occurs_in(p); });
  CHECK(induced.node_count() == 12);
  CHECK(induced.arc_count() == 24);
}

TEST_CASE("transfer variants reproduce the table") {
  for (int k = 2; k <= 4; ++k) {
    for (const auto variant : {TransferVariant::kNodeBased, TransferVariant::kArcLabeled}) {
      for (int n = 0; n <= 9; ++n) {
        INFO("k=" << k << " n=" << n << " " << ukd::to_string(variant));
        const BigInt expected = n == 0 ? BigInt(1) : BigInt(kTable.at(k)[static_cast<std::size_t>(n - 1)]);
        CHECK(ukd::count_via_transfer(k, n, variant) == expected);
      }
    }
  }
  CHECK(ukd::to_string(TransferVariant::kNodeBased) == "node-based");
  CHECK(ukd::to_string(TransferVariant::kArcLabeled) == "arc-labeled");
  CHECK_THROWS_AS(ukd::build_transfer_graph(5, TransferVariant::kNodeBased), ukd::ResourceLimit);
  CHECK_THROWS_AS(ukd::build_transfer_graph(3, TransferVariant::kArcLabeled, 100), ukd::ResourceLimit);
}

TEST_CASE("series for k = 3 agrees with the closed form") {
  const auto table = ukd::series(3, 25);
  REQUIRE(table.counts.size() == kSeriesK3.size());
  for (std::size_t n = 0; n < kSeriesK3.size(); ++n) CHECK(table.counts[n] == kSeriesK3[n]);

  const auto reference = ukd::gf_reference_k3();
  const auto expanded = reference.expand(kSeriesK3.size());
  for (std::size_t n = 0; n < kSeriesK3.size(); ++n) CHECK(expanded[n] == kSeriesK3[n]);
  CHECK(reference.denominator == ukd::Polynomial{1, -3, 3, -2, 2, -1});
}

TEST_CASE("series cross-checks reach past the transfer threshold") {
  ukd::SeriesOptions options;
  options.cross_check_max_n = 12;
  const auto t4 = ukd::series(4, 12, options);
  CHECK(t4.counts[9] == 2512);
  CHECK(t4.counts.size() == 13);
  const auto t5 = ukd::series(5, 10);
  CHECK(t5.counts[9] == 15860);
}

TEST_CASE("fitting recovers rational generating functions") {
  const std::vector<BigInt> terms(kSeriesK3.begin(), kSeriesK3.begin() + 25);
  const auto fitted = ukd::fit_rational_gf(terms, 12);
  CHECK(fitted == ukd::gf_reference_k3());
  CHECK(ukd::fit_rational_gf(terms, 7) == fitted);
  CHECK_THROWS_AS(ukd::fit_rational_gf(terms, 6), ukd::FitFailure);

  // Fibonacci: 1 / (1 - x - x^2).
  std::vector<BigInt> fib{1, 1};
  while (fib.size() < 12) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  const auto f = ukd::fit_rational_gf(fib, 5);
  CHECK(f.numerator == ukd::Polynomial{1});
  CHECK(f.denominator == ukd::Polynomial{1, -1, -1});

  // Powers of two start with 1: 1 / (1 - 2x).
  std::vector<BigInt> powers{1};
  while (powers.size() < 8) powers.push_back(powers.back() * 2);
  CHECK(ukd::fit_rational_gf(powers, 3).denominator == ukd::Polynomial{1, -2});

  CHECK_THROWS_AS(ukd::fit_rational_gf(terms, 13), ukd::InvalidInput);

  // A_{2,n} is 2 from n = 2 on: (1 + x^2) / (1 - x).
  const auto k2 = ukd::fit_rational_gf(ukd::series(2, 12).counts, 5);
  CHECK(k2.numerator == ukd::Polynomial{1, 0, 1});
  CHECK(k2.denominator == ukd::Polynomial{1, -1});
  std::vector<BigInt> factorials{1};
  for (int i = 1; i < 12; ++i) factorials.push_back(factorials.back() * i);
  CHECK_THROWS_AS(ukd::fit_rational_gf(factorials, 5), ukd::FitFailure);
}

TEST_CASE("polynomial helpers") {
  CHECK(ukd::to_string(ukd::Polynomial{1, -3, 0, 2}) == "1 - 3x + 2x^3");
  CHECK(ukd::to_string(ukd::Polynomial{}) == "0");
  CHECK(ukd::multiply({1, -1}, {1, 1}) == ukd::Polynomial{1, 0, -1});
  const auto r = ukd::reduce({1, -1}, {1, 0, -1});
  CHECK(r.numerator == ukd::Polynomial{1});
  CHECK(r.denominator == ukd::Polynomial{1, 1});
  CHECK_THROWS_AS(ukd::reduce({1}, {0, 1}), ukd::InvalidInput);
}
