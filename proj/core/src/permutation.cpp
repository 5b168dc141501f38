#include "ukd/permutation.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace ukd {

namespace {

void validate(const std::vector<int>& values) {
  if (values.size() > kMaxPermutationLength) {
    throw InvalidInput("permutation length " + std::to_string(values.size()) +
                       " exceeds the supported maximum of " +
                       std::to_string(kMaxPermutationLength));
  }
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw InvalidInput("value " + std::to_string(v) +
                         " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("value " + std::to_string(v) + " appears twice");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate(values_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values), Trusted{});
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw InvalidInput("position " + std::to_string(position) +
                       " is outside 1.." + std::to_string(size()));
  }
  return values_[static_cast<std::size_t>(position - 1)];
}

int Permutation::position_of(int value) const {
  if (value < 1 || value > size()) {
    throw InvalidInput("value " + std::to_string(value) + " is outside 1.." +
                       std::to_string(size()));
  }
  auto it = std::find(values_.begin(), values_.end(), value);
  return static_cast<int>(it - values_.begin()) + 1;
}

Permutation unchecked_permutation(std::vector<int> values) {
  return Permutation(std::move(values), Permutation::Trusted{});
}

Permutation reduce_pattern(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) {
      throw InvalidInput("pattern word has repeated entry " +
                         std::to_string(word[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks), Permutation::Trusted{});
}

Permutation inverse(const Permutation& p) {
  std::vector<int> q(p.values_.size());
  for (std::size_t i = 0; i < p.values_.size(); ++i) {
    q[static_cast<std::size_t>(p.values_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(q), Permutation::Trusted{});
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> c(p.values_.size());
  std::transform(p.values_.begin(), p.values_.end(), c.begin(),
                 [n](int v) { return n - v + 1; });
  return Permutation(std::move(c), Permutation::Trusted{});
}

int distance(const Permutation& p, int x, int y) {
  return std::abs(p.position_of(x) - p.position_of(y));
}

Permutation factor_pattern(const Permutation& p, int i, int j) {
  if (i < 1 || j > p.size() || i > j) {
    throw InvalidInput("factor [" + std::to_string(i) + ", " +
                       std::to_string(j) + "] is not inside 1.." +
                       std::to_string(p.size()));
  }
  return reduce_pattern(p.values().subspan(static_cast<std::size_t>(i - 1),
                                           static_cast<std::size_t>(j - i + 1)));
}

Permutation extend_right(const Permutation& p, int value) {
  if (value < 1 || value > p.size() + 1) {
    throw InvalidInput("extension value " + std::to_string(value) +
                       " is outside 1.." + std::to_string(p.size() + 1));
  }
  std::vector<int> out;
  out.reserve(p.values_.size() + 1);
  for (int v : p.values_) out.push_back(v >= value ? v + 1 : v);
  out.push_back(value);
  return Permutation(std::move(out), Permutation::Trusted{});
}

bool is_monotone(const Permutation& p) {
  auto v = p.values();
  return std::is_sorted(v.begin(), v.end()) ||
         std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

std::uint64_t factorial(int n) {
  if (n > 20) throw ResourceLimit(std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ParsedPermutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  Notation notation = Notation::kCompact;
  if (text.find(',') != std::string_view::npos) {
    notation = Notation::kComma;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = text.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidInput("cannot parse '" + std::string(token) +
                           "' as a permutation entry");
      }
      values.push_back(v);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw InvalidInput("cannot parse '" + std::string(text) +
                           "' as a permutation: use digits 1-9 or comma-separated values");
      }
      values.push_back(c - '0');
    }
  }
  return {Permutation(std::move(values)), notation};
}

std::string to_string(const Permutation& p) {
  return to_string(p, p.size() <= 9 ? Notation::kCompact : Notation::kComma);
}

std::string to_string(const Permutation& p, Notation notation) {
  std::string out;
  if (notation == Notation::kCompact && p.size() <= 9) {
    for (int v : p) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < p.values().size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace ukd
