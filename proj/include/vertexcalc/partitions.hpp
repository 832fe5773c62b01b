#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "vertexcalc/rational.hpp"

namespace vertexcalc {

/// Weakly decreasing list of positive integers; the empty list is the empty partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }

  /// Comma-separated parts; the empty string is the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (tok.empty()) throw DomainError("malformed partition: '" + std::string(text) + "'");
      int v = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw DomainError("malformed partition: '" + std::string(text) + "'");
        v = v * 10 + (ch - '0');
        if (v > 1000000) throw DomainError("partition part too large");
      }
      parts.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); 0 beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline int kappa(const Partition& mu) {
  int k = 0;
  for (int i = 0; i < mu.length(); ++i) {
    const int m = mu[static_cast<std::size_t>(i)];
    k += m * (m - 2 * (i + 1) + 1);
  }
  return k;
}

/// prod_i i^{m_i} m_i!
inline BigInt z_factor(const Partition& sigma) {
  BigInt z = 1;
  const auto& p = sigma.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const auto m = static_cast<unsigned>(j - i);
    z *= int_pow(BigInt(p[i]), m) * factorial(m);
    i = j;
  }
  return z;
}

inline Partition transpose(const Partition& mu) {
  std::vector<int> t;
  if (mu.empty()) return Partition();
  t.resize(static_cast<std::size_t>(mu[0]), 0);
  for (int part : mu.parts())
    for (int c = 0; c < part; ++c) ++t[static_cast<std::size_t>(c)];
  return Partition(std::move(t));
}

/// Each part doubled: 2 sigma.
inline Partition doubled(const Partition& sigma) {
  std::vector<int> p = sigma.parts();
  for (auto& v : p) v *= 2;
  return Partition(std::move(p));
}

/// nu is contained in mu as Young diagrams.
inline bool contains(const Partition& mu, const Partition& nu) {
  if (nu.length() > mu.length()) return false;
  for (std::size_t i = 0; i < nu.parts().size(); ++i)
    if (nu[i] > mu[i]) return false;
  return true;
}

/// Multiset union, sorted (the product of power-sum monomials).
inline Partition merged(const Partition& a, const Partition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

inline std::vector<int> hooks(const Partition& mu) {
  std::vector<int> h;
  const Partition t = transpose(mu);
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu[static_cast<std::size_t>(i)]; ++j)
      h.push_back(mu[static_cast<std::size_t>(i)] - j - 1 + t[static_cast<std::size_t>(j)] - i - 1 + 1);
  std::sort(h.begin(), h.end(), std::greater<>());
  return h;
}

namespace detail {

inline std::vector<Partition> generate_partitions(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // reverse lexicographic: start from (n), repeatedly step to the next smaller partition
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int rem = 0;
    while (!a.empty() && a.back() == 1) {
      rem += 1;
      a.pop_back();
    }
    if (a.empty()) break;
    const int v = a.back() - 1;
    a.back() = v;
    rem += 1;
    while (rem > v) {
      a.push_back(v);
      rem -= v;
    }
    if (rem > 0) a.push_back(rem);
  }
  return out;
}

}  // namespace detail

/// All partitions of n in reverse lexicographic order.
inline const std::vector<Partition>& enumerate(int n) {
  if (n < 0) throw DomainError("enumerate: negative weight");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::generate_partitions(n)).first;
  return it->second;
}

/// All partitions of weight <= n, by weight, each weight in reverse lexicographic order.
inline std::vector<Partition> enumerate_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    const auto& ps = enumerate(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

/// Ordered triple of partitions (the three legs of a vertex).
struct PartitionTriple {
  std::array<Partition, 3> legs;

  PartitionTriple() = default;
  PartitionTriple(Partition a, Partition b, Partition c) : legs{std::move(a), std::move(b), std::move(c)} {}

  const Partition& operator[](std::size_t i) const { return legs[i]; }
  int weight() const { return legs[0].weight() + legs[1].weight() + legs[2].weight(); }
  int length() const { return legs[0].length() + legs[1].length() + legs[2].length(); }
  bool empty() const { return weight() == 0; }

  /// Cyclic shift (mu1, mu2, mu3) -> (mu2, mu3, mu1).
  PartitionTriple rotated() const { return {legs[1], legs[2], legs[0]}; }

  /// "2,1|1|" style encoding.
  std::string str() const { return legs[0].str() + "|" + legs[1].str() + "|" + legs[2].str(); }

  static PartitionTriple parse(std::string_view text) {
    const auto a = text.find('|');
    const auto b = a == std::string_view::npos ? a : text.find('|', a + 1);
    if (a == std::string_view::npos || b == std::string_view::npos || text.find('|', b + 1) != std::string_view::npos)
      throw DomainError("malformed partition triple: '" + std::string(text) + "'");
    return {Partition::parse(text.substr(0, a)), Partition::parse(text.substr(a + 1, b - a - 1)),
            Partition::parse(text.substr(b + 1))};
  }

  friend auto operator<=>(const PartitionTriple&, const PartitionTriple&) = default;
  friend bool operator==(const PartitionTriple&, const PartitionTriple&) = default;
};

/// Triples with every |mu^i| <= k.
inline std::vector<PartitionTriple> triples_with_leg_bound(int k) {
  const auto ps = enumerate_up_to(k);
  std::vector<PartitionTriple> out;
  for (const auto& a : ps)
    for (const auto& b : ps)
      for (const auto& c : ps) out.emplace_back(a, b, c);
  return out;
}

/// Triples with total weight <= n.
inline std::vector<PartitionTriple> triples_up_to_weight(int n) {
  std::vector<PartitionTriple> out;
  for (int w1 = 0; w1 <= n; ++w1)
    for (int w2 = 0; w1 + w2 <= n; ++w2)
      for (int w3 = 0; w1 + w2 + w3 <= n; ++w3)
        for (const auto& a : enumerate(w1))
          for (const auto& b : enumerate(w2))
            for (const auto& c : enumerate(w3)) out.emplace_back(a, b, c);
  return out;
}

}  // namespace vertexcalc
