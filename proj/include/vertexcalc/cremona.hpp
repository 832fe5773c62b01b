#pragma once

/**
 * @file cremona.hpp
 * @brief Curve classes on blowups of P^3 at points, the Cremona class map, and a
 * search that reduces a Calabi-Yau class to a vanishing or super-rigid base case.
 *
 * A class (d; a_1..a_M) stands for d h - sum a_i e_i. Indices are 0-based here;
 * the command line shows them 1-based.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "vertexcalc/ftcy.hpp"
#include "vertexcalc/genus.hpp"

namespace vertexcalc {

struct CurveClass {
  long long d = 0;
  std::vector<long long> mults;

  long long mult_sum() const { return std::accumulate(mults.begin(), mults.end(), 0LL); }
  bool is_calabi_yau() const { return 2 * d == mult_sum(); }

  bool operator==(const CurveClass&) const = default;
  auto operator<=>(const CurveClass&) const = default;

  std::string str() const {
    std::string s = std::to_string(d) + ";";
    for (std::size_t i = 0; i < mults.size(); ++i) s += (i ? "," : "") + std::to_string(mults[i]);
    return s;
  }

  /// Parses "d;a1,a2,...".
  static CurveClass parse(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw DomainError("curve class needs 'd;a1,a2,...'");
    auto number = [](std::string_view t) {
      std::string s;
      for (char c : t)
        if (c != ' ') s += c;
      try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
      } catch (const std::exception&) {
        throw DomainError("bad integer '" + std::string(t) + "' in curve class");
      }
    };
    CurveClass c;
    c.d = number(text.substr(0, semi));
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      c.mults.push_back(number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return c;
  }
};

/// h_coeff H + sum e_coeffs[i] E_i.
struct DivisorClass {
  long long h_coeff = 0;
  std::vector<long long> e_coeffs;
};

/// Intersection number; H.h = 1, E_i.e_i = -1, mixed products vanish.
inline long long pair(const DivisorClass& D, const CurveClass& C) {
  if (D.e_coeffs.size() != C.mults.size()) throw DomainError("pair: divisor and curve have different numbers of points");
  long long s = D.h_coeff * C.d;
  for (std::size_t i = 0; i < C.mults.size(); ++i) s += D.e_coeffs[i] * C.mults[i];
  return s;
}

/// K = -4H + 2 sum E_i on the blowup at M points.
inline DivisorClass canonical_divisor(std::size_t M) { return DivisorClass{-4, std::vector<long long>(M, 2)}; }

/// Class of the configuration curve with degrees d. Leg i uses its own points
/// e_1..e_{N_i+1} with [A_1] = h - e_1 - e_2 and [A_j] = e_j - e_{j+1}.
inline CurveClass class_of_degrees(const ConfigSpec& cfg, const DegreeVector& deg) {
  deg.to_exponent(cfg.edges());  // rejects degrees outside the configuration
  CurveClass c;
  for (int i = 1; i <= 3; ++i) {
    const int N = cfg.length(i);
    if (N == 0) continue;
    c.d += deg.at(i, 1);
    c.mults.push_back(deg.at(i, 1));
    for (int j = 2; j <= N; ++j) c.mults.push_back(deg.at(i, j - 1) - deg.at(i, j));
    c.mults.push_back(deg.at(i, N));
  }
  return c;
}

/// d' = 3d - 2S, a'_k = d - (S - a_k) on the chosen four, S their sum. Refused
/// unless some multiplicity outside the four is nonzero.
inline CurveClass cremona_transform(const CurveClass& c, const std::array<int, 4>& idx) {
  const auto M = static_cast<int>(c.mults.size());
  for (int a = 0; a < 4; ++a) {
    if (idx[a] < 0 || idx[a] >= M) throw DomainError("cremona: index out of range");
    for (int b = 0; b < a; ++b)
      if (idx[a] == idx[b]) throw DomainError("cremona: indices must be distinct");
  }
  bool outside = false;
  for (int i = 0; i < M && !outside; ++i)
    outside = c.mults[static_cast<std::size_t>(i)] != 0 && std::find(idx.begin(), idx.end(), i) == idx.end();
  if (!outside)
    throw DomainError("cremona: invariance not guaranteed (no nonzero multiplicity outside the chosen four)");
  long long S = 0;
  for (int k : idx) S += c.mults[static_cast<std::size_t>(k)];
  CurveClass r = c;
  r.d = 3 * c.d - 2 * S;
  for (int k : idx) r.mults[static_cast<std::size_t>(k)] = c.d - (S - c.mults[static_cast<std::size_t>(k)]);
  return r;
}

enum class ReductionTag { zero, super_rigid, irreducible };

inline std::string to_string(ReductionTag t) {
  switch (t) {
    case ReductionTag::zero:
      return "Zero";
    case ReductionTag::super_rigid:
      return "SuperRigid";
    case ReductionTag::irreducible:
      return "Irreducible";
  }
  return "?";
}

struct ReductionStep {
  std::string tag;           // permute, drop-zeros, pad, cremona, vanish, base
  std::vector<int> indices;  // permute: source index per slot; pad: count; cremona: the four
  CurveClass result;
  std::string note;
};

struct ReductionOutcome {
  ReductionTag tag = ReductionTag::irreducible;
  long long degree = 0;       // d of the super-rigid base case
  bool engine_level = false;  // relies on the non-effective-image rule
  std::vector<ReductionStep> trace;

  std::string label() const {
    return tag == ReductionTag::super_rigid ? "SuperRigid(" + std::to_string(degree) + ")" : to_string(tag);
  }
};

struct ReduceOptions {
  std::size_t max_points = 16;
  int max_pad = 2;
  std::size_t node_budget = 200000;
};

namespace detail {

struct Verdict {
  ReductionTag tag;
  long long degree = 0;
  bool engine_level = false;
  std::string note;
};

/// Terminal states of the search; nullopt when the class needs more work.
inline std::optional<Verdict> classify(const CurveClass& c) {
  const bool negative = std::any_of(c.mults.begin(), c.mults.end(), [](long long a) { return a < 0; });
  const bool nonzero = std::any_of(c.mults.begin(), c.mults.end(), [](long long a) { return a != 0; });
  if (c.d < 0) return Verdict{ReductionTag::zero, 0, true, "non-effective image"};
  if (c.d > 0 && negative) return Verdict{ReductionTag::zero, 0, false, "negative multiplicity"};
  if (c.d == 0) return Verdict{ReductionTag::zero, 0, false, nonzero ? "degree zero with nonzero multiplicities" : "zero class"};
  std::vector<long long> support;
  for (long long a : c.mults)
    if (a != 0) support.push_back(a);
  if (support.size() == 2 && support[0] == c.d && support[1] == c.d)
    return Verdict{ReductionTag::super_rigid, c.d, false, "super-rigid line class"};
  return std::nullopt;
}

/// Sorts multiplicities decreasingly, then drops zeros when d > 0.
inline std::vector<ReductionStep> canonicalize(const CurveClass& c) {
  std::vector<ReductionStep> steps;
  std::vector<int> perm(c.mults.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return c.mults[static_cast<std::size_t>(a)] > c.mults[static_cast<std::size_t>(b)];
  });
  CurveClass cur = c;
  if (!std::is_sorted(perm.begin(), perm.end())) {
    for (std::size_t i = 0; i < perm.size(); ++i) cur.mults[i] = c.mults[static_cast<std::size_t>(perm[i])];
    steps.push_back({"permute", perm, cur, ""});
  }
  if (cur.d > 0 && std::find(cur.mults.begin(), cur.mults.end(), 0) != cur.mults.end()) {
    std::erase(cur.mults, 0);
    steps.push_back({"drop-zeros", {}, cur, ""});
  }
  return steps;
}

inline void apply_step(CurveClass& cur, const ReductionStep& s) {
  if (s.tag == "permute") {
    if (s.indices.size() != cur.mults.size()) throw DomainError("replay: permutation of the wrong size");
    CurveClass next = cur;
    for (std::size_t i = 0; i < s.indices.size(); ++i) next.mults[i] = cur.mults.at(static_cast<std::size_t>(s.indices[i]));
    cur = next;
  } else if (s.tag == "drop-zeros") {
    if (cur.d <= 0) throw DomainError("replay: dropping points needs d > 0");
    std::erase(cur.mults, 0);
  } else if (s.tag == "pad") {
    if (s.indices.size() != 1) throw DomainError("replay: pad takes a count");
    cur.mults.insert(cur.mults.end(), static_cast<std::size_t>(s.indices[0]), 0);
  } else if (s.tag == "cremona") {
    if (s.indices.size() != 4) throw DomainError("replay: cremona takes four indices");
    cur = cremona_transform(cur, {s.indices[0], s.indices[1], s.indices[2], s.indices[3]});
  } else if (s.tag != "vanish" && s.tag != "base") {
    throw DomainError("replay: unknown step '" + s.tag + "'");
  }
}

}  // namespace detail

/// Best-first search over sorting, dropping zeros, padding and admissible Cremona
/// moves. Smaller d is explored first and d never exceeds its starting value;
/// conclusions from the non-effective-image rule are tried last.
inline ReductionOutcome reduce(const CurveClass& start, const ReduceOptions& opt = {}) {
  if (!start.is_calabi_yau()) throw DomainError("reduce: class " + start.str() + " is not Calabi-Yau (2d != sum a_i)");

  struct Node {
    CurveClass cls;
    int parent;
    std::vector<ReductionStep> steps;  // from the parent's class to cls
  };
  std::vector<Node> nodes;
  std::map<CurveClass, int> seen;
  using Key = std::tuple<bool, long long, std::size_t, CurveClass>;
  std::priority_queue<std::pair<Key, int>, std::vector<std::pair<Key, int>>, std::greater<>> open;

  auto push = [&](const CurveClass& raw, int parent, std::vector<ReductionStep> steps) {
    auto tail = detail::canonicalize(raw);
    const CurveClass cls = tail.empty() ? raw : tail.back().result;
    if (seen.count(cls)) return;
    steps.insert(steps.end(), tail.begin(), tail.end());
    const auto verdict = detail::classify(cls);
    const bool engine = verdict && verdict->engine_level;
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({cls, parent, std::move(steps)});
    seen.emplace(cls, id);
    open.push({Key{engine, cls.d, cls.mults.size(), cls}, id});
  };

  auto trace_to = [&](int id) {
    std::vector<int> path;
    for (int k = id; k >= 0; k = nodes[static_cast<std::size_t>(k)].parent) path.push_back(k);
    std::vector<ReductionStep> trace;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const auto& s = nodes[static_cast<std::size_t>(*it)].steps;
      trace.insert(trace.end(), s.begin(), s.end());
    }
    return trace;
  };

  push(start, -1, {});
  std::size_t expanded = 0;
  while (!open.empty()) {
    const int id = open.top().second;
    open.pop();
    const CurveClass cur = nodes[static_cast<std::size_t>(id)].cls;
    if (const auto v = detail::classify(cur)) {
      ReductionOutcome out;
      out.tag = v->tag;
      out.degree = v->degree;
      out.engine_level = v->engine_level;
      out.trace = trace_to(id);
      out.trace.push_back({v->tag == ReductionTag::zero ? "vanish" : "base", {}, cur, v->note});
      return out;
    }
    if (++expanded > opt.node_budget) break;
    for (int p = 0; p <= opt.max_pad; ++p) {
      CurveClass padded = cur;
      padded.mults.insert(padded.mults.end(), static_cast<std::size_t>(p), 0);
      const auto M = static_cast<int>(padded.mults.size());
      if (static_cast<std::size_t>(M) > opt.max_points || M < 5) continue;
      for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j)
          for (int k = j + 1; k < M; ++k)
            for (int l = k + 1; l < M; ++l) {
              const std::array<int, 4> idx{i, j, k, l};
              bool outside = false;
              for (int m = 0; m < M && !outside; ++m)
                outside = padded.mults[static_cast<std::size_t>(m)] != 0 && m != i && m != j && m != k && m != l;
              if (!outside) continue;
              const CurveClass next = cremona_transform(padded, idx);
              if (next.d > start.d) continue;
              std::vector<ReductionStep> steps;
              if (p > 0) steps.push_back({"pad", {p}, padded, ""});
              steps.push_back({"cremona", {i, j, k, l}, next, ""});
              push(next, id, std::move(steps));
            }
    }
  }
  ReductionOutcome out;
  out.trace = trace_to(0);
  out.trace.push_back({"base", {}, nodes.front().cls, "search exhausted"});
  return out;
}

/// Re-applies a trace from the start class and returns the outcome it records.
/// Throws when a step does not reproduce its recorded class.
inline ReductionOutcome replay(const CurveClass& start, const std::vector<ReductionStep>& trace) {
  CurveClass cur = start;
  for (const auto& s : trace) {
    detail::apply_step(cur, s);
    if (cur != s.result) throw DomainError("replay: step '" + s.tag + "' gives " + cur.str() + ", trace says " + s.result.str());
  }
  ReductionOutcome out;
  out.trace = trace;
  if (trace.empty() || (trace.back().tag != "vanish" && trace.back().tag != "base")) return out;
  const auto v = detail::classify(cur);
  if (!v) return out;
  if ((trace.back().tag == "vanish") != (v->tag == ReductionTag::zero)) throw DomainError("replay: terminal step disagrees");
  out.tag = v->tag;
  out.degree = v->degree;
  out.engine_level = v->engine_level;
  return out;
}

/// N^0..N^G of the reduced class: zeros, or C_g d^{2g-3} for SuperRigid(d).
inline std::vector<BigRational> local_invariants(const ReductionOutcome& o, int max_genus) {
  if (o.tag == ReductionTag::irreducible) throw DomainError("local_invariants: cannot certify an irreducible class");
  std::vector<BigRational> out;
  for (int g = 0; g <= max_genus; ++g)
    out.push_back(o.tag == ReductionTag::zero ? BigRational(0)
                                              : c_g(g) * rational_pow(BigRational(static_cast<long>(o.degree)), 2 * g - 3));
  return out;
}

}  // namespace vertexcalc
