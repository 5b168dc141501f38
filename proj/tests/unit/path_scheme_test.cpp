#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ukd/determinacy.hpp"
#include "ukd/path_scheme.hpp"

using ukd::Permutation;

namespace {

Permutation P(std::string_view text) { return ukd::parse_permutation(text).permutation; }

// Orderings of 1..n in which every step has an allowed difference.
std::uint64_t brute_paths(int n, const std::set<int>& differences) {
  std::uint64_t count = 0;
  for (const auto& order : oracle::all_permutations(n)) {
    bool ok = true;
    for (std::size_t t = 0; t + 1 < order.size() && ok; ++t) {
      ok = differences.count(std::abs(order[t] - order[t + 1])) > 0;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("path scheme structure") {
  const auto g = ukd::window_scheme(3, 5);
  CHECK(g.size() == 5);
  CHECK(g.adjacent(1, 3));
  CHECK_FALSE(g.adjacent(1, 4));
  CHECK_FALSE(g.adjacent(2, 2));
  CHECK(g.neighbours(3) == std::vector<int>{1, 2, 4, 5});
  CHECK(g.neighbours(1) == std::vector<int>{2, 3});
  CHECK(g.edges().size() == 7);
  CHECK(g.max_degree() == 4);

  CHECK(ukd::window_scheme(4, 2).differences().size() == 1);
  CHECK_THROWS_AS(ukd::build_path_scheme(4, std::vector<int>{4}), ukd::InvalidInput);
  CHECK_THROWS_AS(ukd::build_path_scheme(4, std::vector<int>{0}), ukd::InvalidInput);
  CHECK_THROWS_AS(ukd::build_path_scheme(0, std::vector<int>{}), ukd::InvalidInput);
}

TEST_CASE("Hamiltonian DP agrees with brute force on arbitrary difference sets") {
  const std::vector<std::set<int>> sets{{1}, {2}, {1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 3, 5}};
  for (int n = 1; n <= 8; ++n) {
    for (const auto& m : sets) {
      std::vector<int> usable;
      for (int d : m) {
        if (d <= n - 1) usable.push_back(d);
      }
      const auto g = ukd::build_path_scheme(n, usable);
      const std::set<int> allowed(usable.begin(), usable.end());
      INFO("n=" << n);
      CHECK(ukd::count_hamiltonian_paths(g) == brute_paths(n, allowed));

      std::uint64_t listed = 0;
      auto cursor = ukd::enumerate_hamiltonian_paths(g);
      std::vector<int> previous;
      while (auto path = cursor.next()) {
        ++listed;
        CHECK(previous < *path);
        previous = *path;
      }
      CHECK(listed == brute_paths(n, allowed));
    }
  }
}

TEST_CASE("Hamiltonian paths of G_{k,n} count the definitional set") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 2; k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(ukd::count_hamiltonian_paths(ukd::window_scheme(k, n)) ==
            oracle::uniquely_determined(n, k).size());
    }
  }
}

TEST_CASE("Hamiltonian DP respects its budgets") {
  CHECK_THROWS_AS(ukd::count_hamiltonian_paths(ukd::window_scheme(3, 25)), ukd::ResourceLimit);
  ukd::HamiltonianLimits tight;
  tight.max_states = 4;
  CHECK_THROWS_AS(ukd::count_hamiltonian_paths(ukd::window_scheme(3, 12), tight), ukd::ResourceLimit);
}

TEST_CASE("phi is a bijection onto Hamiltonian paths") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 2; k <= n; ++k) {
      std::set<std::vector<int>> paths;
      auto cursor = ukd::enumerate_hamiltonian_paths(ukd::window_scheme(k, n));
      while (auto path = cursor.next()) paths.insert(*path);

      std::set<std::vector<int>> images;
      ukd::for_each_permutation(n, [&](const Permutation& p) {
        if (!ukd::is_uniquely_determined(p, k)) {
          CHECK_THROWS_AS(ukd::phi(p, k), ukd::InvalidInput);
          return;
        }
        const auto path = ukd::phi(p, k);
        CHECK(paths.count(path) == 1);
        CHECK(ukd::phi_inverse(path, k) == p);
        images.insert(path);
      });
      CHECK(images == paths);
    }
  }
  CHECK(ukd::phi(P("2134"), 3) == std::vector<int>{2, 1, 3, 4});
  CHECK(ukd::phi(P("1342"), 4) == std::vector<int>{1, 4, 2, 3});
  CHECK_THROWS_AS(ukd::phi_inverse(std::vector<int>{1, 4, 2, 3}, 3), ukd::InvalidInput);
  CHECK_THROWS_AS(ukd::phi_inverse(std::vector<int>{1, 2, 2}, 3), ukd::InvalidInput);
}

TEST_CASE("bounds") {
  const auto b = ukd::bounds(3, 9);
  CHECK(b.lower == 16);
  CHECK(b.upper == 524288);
  CHECK_THROWS_AS(ukd::bounds(3, 4), ukd::InvalidInput);
  CHECK_THROWS_AS(ukd::bounds(1, 4), ukd::InvalidInput);
  for (int k = 3; k <= 5; ++k) {
    for (int n = 2 * k - 1; n <= 14; ++n) {
      const auto count = ukd::count_hamiltonian_paths(ukd::window_scheme(k, n));
      const auto range = ukd::bounds(k, n);
      INFO("k=" << k << " n=" << n);
      CHECK(range.lower <= count);
      CHECK(count <= range.upper);
    }
  }
}

TEST_CASE("small schemes") {
  const auto g = ukd::build_path_scheme(6, std::vector<int>{2, 4});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {4, 6}});
  CHECK(ukd::count_hamiltonian_paths(g) == 0);

  std::vector<Permutation> paths;
  auto cursor = ukd::enumerate_hamiltonian_paths(ukd::window_scheme(2, 3));
  while (auto path = cursor.next()) paths.push_back(ukd::phi_inverse(*path, 2));
  CHECK(paths == std::vector<Permutation>{P("123"), P("321")});
  CHECK(ukd::phi_inverse(std::vector<int>{1, 2, 3}, 3) == P("123"));

  const auto b = ukd::bounds(2, 5);
  CHECK(b.lower == 2);
  CHECK(b.upper == 64);
}
