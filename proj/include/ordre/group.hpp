#pragma once

// Permutation groups by explicit closure. Every group here is small enough
// to list; the closure cap turns runaway inputs into OrderCapExceeded.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ordre/error.hpp"
#include "ordre/perm.hpp"

namespace ordre {

inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;

class PermGroup {
 public:
  PermGroup() = default;

  /// Closure of the generators by breadth-first multiplication. Generators
  /// are stored sorted and deduplicated, without the identity.
  static PermGroup generate(std::uint32_t degree, std::vector<Permutation> gens,
                            std::uint64_t cap = kDefaultOrderCap) {
    if (cap < 1) fail(ErrorKind::InvalidArgument, "order cap must be at least 1");
    for (const auto& g : gens)
      if (g.degree() != degree) fail(ErrorKind::DegreeMismatch, "generators of different degrees");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });

    PermGroup out;
    out.degree_ = degree;
    out.cap_ = cap;
    out.gens_ = std::move(gens);
    out.elements_ = closure(degree, out.gens_, cap);
    return out;
  }

  static PermGroup generate(std::vector<Permutation> gens, std::uint64_t cap = kDefaultOrderCap) {
    if (gens.empty()) fail(ErrorKind::InvalidArgument, "degree needed for an empty generator list");
    const auto degree = gens.front().degree();
    return generate(degree, std::move(gens), cap);
  }

  /// Wraps a list already known to be a group; picks a small generating set
  /// greedily in canonical order.
  static PermGroup from_elements(std::uint32_t degree, std::vector<Permutation> elements,
                                 std::uint64_t cap = kDefaultOrderCap) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PermGroup out = generate(degree, {}, cap);
    for (const auto& e : elements) {
      if (out.contains(e)) continue;
      auto gens = out.gens_;
      gens.push_back(e);
      out = generate(degree, std::move(gens), cap);
    }
    if (out.order() != elements.size()) fail(ErrorKind::InvalidArgument, "element list is not closed");
    return out;
  }

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  /// Sorted lexicographically by image sequence.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  std::uint64_t cap() const { return cap_; }

  bool contains(const Permutation& p) const {
    return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool is_subgroup_of(const PermGroup& parent) const {
    return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& g) { return parent.contains(g); });
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  static std::vector<Permutation> closure(std::uint32_t degree, const std::vector<Permutation>& gens,
                                          std::uint64_t cap) {
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> order;
    const auto id = Permutation::identity(degree);
    seen.insert(id);
    order.push_back(id);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (const auto& g : gens) {
        auto next = order[head] * g;
        if (seen.insert(next).second) {
          if (seen.size() > cap)
            fail(ErrorKind::OrderCapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
          order.push_back(std::move(next));
        }
      }
    }
    std::sort(order.begin(), order.end());
    return order;
  }

  std::uint32_t degree_ = 0;
  std::uint64_t cap_ = kDefaultOrderCap;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;
};

inline PermGroup generate(std::vector<Permutation> gens, std::uint64_t cap = kDefaultOrderCap) {
  return PermGroup::generate(std::move(gens), cap);
}

/// Full symmetric group on n points, generated by (0 1) and (0 1 ... n-1).
inline PermGroup symmetric_group(std::uint32_t n, std::uint64_t cap = kDefaultOrderCap) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> t(n), c(n);
    std::iota(t.begin(), t.end(), 0u);
    std::swap(t[0], t[1]);
    for (std::uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {Permutation(t), Permutation(c)};
  }
  return PermGroup::generate(n, std::move(gens), cap);
}

/// Elements of G satisfying pred, as a group (pred must carve out a subgroup).
template <class Pred>
PermGroup subgroup_where(const PermGroup& g, Pred pred) {
  std::vector<Permutation> kept;
  for (const auto& e : g.elements())
    if (pred(e)) kept.push_back(e);
  return PermGroup::from_elements(g.degree(), std::move(kept), g.cap());
}

inline PermGroup stabilizer(const PermGroup& g, std::uint32_t point) {
  return subgroup_where(g, [point](const Permutation& e) { return e(point) == point; });
}

// ---------------------------------------------------------------------------
// Orbits and blocks

/// Orbit partition; each orbit sorted, orbits ordered by smallest point.
inline std::vector<std::vector<std::uint32_t>> orbits(const PermGroup& g) {
  const auto n = g.degree();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    std::vector<std::uint32_t> orbit{start};
    label[start] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& gen : g.generators()) {
        auto y = gen(orbit[head]);
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

struct BlockSystem {
  std::vector<std::vector<std::uint32_t>> blocks;  // sorted; ordered by smallest point

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  std::size_t count() const { return blocks.size(); }

  bool is_stable_under(const Permutation& s) const {
    std::vector<std::size_t> which(s.degree());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (auto x : blocks[b]) which[x] = b;
    for (const auto& block : blocks) {
      const auto target = which[s(block.front())];
      for (auto x : block)
        if (which[s(x)] != target) return false;
    }
    return true;
  }

  bool is_stable_under(const PermGroup& g) const {
    return std::all_of(g.generators().begin(), g.generators().end(),
                       [&](const Permutation& s) { return is_stable_under(s); });
  }

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
  friend auto operator<=>(const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size() != b.block_size()) return a.block_size() <=> b.block_size();
    return a.blocks <=> b.blocks;
  }
};

namespace detail {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

/// Finest G-invariant partition in which 0 and beta share a class.
inline BlockSystem minimal_block(const PermGroup& g, std::uint32_t beta) {
  const auto n = g.degree();
  UnionFind uf(n);
  std::queue<std::pair<std::uint32_t, std::uint32_t>> pending;
  uf.unite(0, beta);
  pending.emplace(0, beta);
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop();
    for (const auto& s : g.generators()) {
      if (uf.unite(s(a), s(b))) pending.emplace(s(a), s(b));
    }
  }
  std::vector<std::vector<std::uint32_t>> classes(n);
  for (std::uint32_t x = 0; x < n; ++x) classes[uf.find(x)].push_back(x);
  BlockSystem out;
  for (auto& c : classes)
    if (!c.empty()) out.blocks.push_back(std::move(c));
  return out;
}

}  // namespace detail

/// For each point pair (0, beta) the finest block system joining them,
/// keeping the nontrivial ones, deduplicated and sorted by (block size,
/// blocks). Empty exactly when G is primitive.
inline std::vector<BlockSystem> block_systems(const PermGroup& g) {
  if (!is_transitive(g)) fail(ErrorKind::NotTransitive, "block systems need a transitive group");
  std::vector<BlockSystem> out;
  for (std::uint32_t beta = 1; beta < g.degree(); ++beta) {
    auto sys = detail::minimal_block(g, beta);
    if (sys.count() <= 1) continue;
    if (!sys.is_stable_under(g)) fail(ErrorKind::InvalidArgument, "block refinement produced an unstable partition");
    out.push_back(std::move(sys));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_primitive(const PermGroup& g) { return block_systems(g).empty(); }

// ---------------------------------------------------------------------------
// Derived series and solvability

/// Subgroup generated by all commutators [a, b] of elements of G.
inline PermGroup derived_subgroup(const PermGroup& g) {
  PermGroup h = PermGroup::generate(g.degree(), {}, g.cap());
  const auto& el = g.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      auto c = commutator(el[i], el[j]);
      if (h.contains(c)) continue;
      auto gens = h.generators();
      gens.push_back(std::move(c));
      h = PermGroup::generate(g.degree(), std::move(gens), g.cap());
      if (h.order() == g.order()) return h;
    }
  }
  return h;
}

/// G, G', G'', ... ending at the first term equal to its own derived subgroup.
inline std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> out{g};
  for (;;) {
    auto next = derived_subgroup(out.back());
    if (out.back().order() % next.order() != 0)
      fail(ErrorKind::InvalidArgument, "derived subgroup order does not divide the group order");
    if (next.order() == out.back().order()) break;
    out.push_back(std::move(next));
  }
  return out;
}

inline bool is_solvable(const PermGroup& g) { return derived_series(g).back().order() == 1; }

/// Ascending chain 1 = H_0 < H_1 < ... < H_m = L, each H_i normal in L with
/// abelian quotients H_{i+1}/H_i.
struct SolvabilityWitness {
  std::vector<PermGroup> chain;

  std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& h : chain) out.push_back(h.order());
    return out;
  }
};

/// The reversed derived series, or nullopt when G is not solvable.
inline std::optional<SolvabilityWitness> solvability_witness(const PermGroup& g) {
  auto series = derived_series(g);
  if (series.back().order() != 1) return std::nullopt;
  std::reverse(series.begin(), series.end());
  return SolvabilityWitness{std::move(series)};
}

inline bool is_normal_in(const PermGroup& h, const PermGroup& top) {
  for (const auto& g : top.generators())
    for (const auto& x : h.generators())
      if (!h.contains(conjugate(g, x))) return false;
  return true;
}

struct WitnessCheck {
  bool starts_trivial = false;
  bool ends_at_top = false;
  bool ascending = false;
  bool all_normal = false;
  bool quotients_abelian = false;
  bool ok() const { return starts_trivial && ends_at_top && ascending && all_normal && quotients_abelian; }
};

/// Checks both clauses elementwise: normality of each term in L and
/// [x, y] in H_i for all x, y in H_{i+1}.
inline WitnessCheck verify_witness(const PermGroup& top, const SolvabilityWitness& w) {
  WitnessCheck r;
  if (w.chain.empty()) return r;
  r.starts_trivial = w.chain.front().order() == 1;
  r.ends_at_top = w.chain.back() == top;
  r.ascending = true;
  r.all_normal = true;
  r.quotients_abelian = true;
  for (std::size_t i = 0; i < w.chain.size(); ++i) {
    const auto& h = w.chain[i];
    for (const auto& g : top.elements()) {
      for (const auto& x : h.generators()) {
        if (!h.contains(conjugate(g, x))) r.all_normal = false;
      }
    }
    if (i + 1 < w.chain.size()) {
      const auto& up = w.chain[i + 1];
      if (!h.is_subgroup_of(up) || h.order() >= up.order()) r.ascending = false;
      for (const auto& x : up.elements())
        for (const auto& y : up.elements())
          if (!h.contains(commutator(x, y))) r.quotients_abelian = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive searches

inline constexpr std::uint32_t kNormalizerMaxDegree = 9;

/// All s in Sym(n) with s H s^-1 == H, found by running through Sym(n).
inline PermGroup normalizer_in_sym(const PermGroup& h) {
  const auto n = h.degree();
  if (n > kNormalizerMaxDegree) fail(ErrorKind::CapExceeded, "normalizer search limited to degree 9");
  std::vector<std::uint32_t> s(n), conj(n);
  std::iota(s.begin(), s.end(), 0u);
  std::vector<Permutation> found;
  do {
    bool normalizes = true;
    for (const auto& x : h.generators()) {
      // (s x s^-1)(s(i)) = s(x(i))
      for (std::uint32_t i = 0; i < n; ++i) conj[s[i]] = s[x(i)];
      if (!h.contains(Permutation(conj))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) found.emplace_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return PermGroup::from_elements(n, std::move(found), std::max<std::uint64_t>(h.cap(), found.size()));
}

/// Distinct subgroups <a, b> over all pairs of elements of G, ordered by
/// (order, elements).
inline std::vector<PermGroup> pair_generated_subgroups(const PermGroup& g) {
  const auto& el = g.elements();
  std::vector<PermGroup> out;
  std::vector<std::vector<bool>> keys;
  auto key_of = [&](const PermGroup& h) {
    std::vector<bool> key(el.size(), false);
    for (const auto& e : h.elements())
      key[static_cast<std::size_t>(std::lower_bound(el.begin(), el.end(), e) - el.begin())] = true;
    return key;
  };
  std::vector<std::pair<std::vector<bool>, PermGroup>> found;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i; j < el.size(); ++j) {
      auto h = PermGroup::generate(g.degree(), {el[i], el[j]}, g.cap());
      found.emplace_back(key_of(h), std::move(h));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second.order() != b.second.order()) return a.second.order() < b.second.order();
    return a.second.elements() < b.second.elements();
  });
  for (auto& [key, h] : found) {
    if (!keys.empty() && keys.back() == key) continue;
    keys.push_back(key);
    out.push_back(std::move(h));
  }
  return out;
}

/// Outcome of Galois's prime-degree test.
struct GaloisVerdict {
  bool embeddable = false;
  Permutation cycle;                 // the tested element of order p
  Permutation relabeling;            // old point -> new label (embeddable only)
  std::vector<std::pair<std::uint64_t, std::uint64_t>> affine;  // (a, b) per generator
  Permutation conjugate_cycle;       // generator of a different Sylow p-subgroup (otherwise)
};

/// A transitive group of prime degree p embeds in {i -> a*i + b} exactly when
/// the subgroup generated by one p-cycle is normal; in degree p a normal
/// Sylow p-subgroup is the only one, so testing a single p-cycle suffices.
inline GaloisVerdict galois_criterion(const PermGroup& g) {
  const auto p = g.degree();
  if (!is_prime(p)) fail(ErrorKind::DegreeNotPrime, "degree " + std::to_string(p) + " is not prime");
  if (!is_transitive(g)) fail(ErrorKind::NotTransitive, "group is not transitive");

  GaloisVerdict v;
  for (const auto& e : g.elements()) {
    if (e.order() == p) {
      v.cycle = e;
      break;
    }
  }
  const auto sylow = PermGroup::generate(p, {v.cycle}, g.cap());
  for (const auto& s : g.generators()) {
    auto c = conjugate(s, v.cycle);
    if (!sylow.contains(c)) {
      v.conjugate_cycle = std::move(c);
      return v;
    }
  }

  std::vector<std::uint32_t> label(p);
  std::uint32_t x = 0;
  for (std::uint32_t k = 0; k < p; ++k, x = v.cycle(x)) label[x] = k;
  v.relabeling = Permutation(label);
  const auto relabel_inv = inverse(v.relabeling);
  for (const auto& s : g.generators()) {
    const auto t = v.relabeling * s * relabel_inv;
    const std::uint64_t b = t(0);
    const std::uint64_t a = (t(1) + p - b) % p;
    for (std::uint32_t i = 0; i < p; ++i)
      if (t(i) != (a * i + b) % p) fail(ErrorKind::InvalidArgument, "relabeled generator is not affine");
    v.affine.emplace_back(a, b);
  }
  v.embeddable = true;
  return v;
}

}  // namespace ordre
