#include <algorithm>
#include <map>
#include <stdexcept>

#include "latsep/dlat.hpp"

namespace latsep {

namespace {

// Canonical relabeling key of a poset: the lexicographically smallest row-mask
// vector over all permutations that respect the (|down|, |up|) vertex
// invariant. Any isomorphism respects the invariant, so equal keys iff
// isomorphic; the blocks keep the permutation search tiny for near-chains.
std::vector<Mask> canonical_poset_key(const FinPoset& p) {
  const int n = p.size();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto inv = [&](int v) {
    return std::pair<int, int>(mask_count(p.down_of(v)), mask_count(p.up_of(v)));
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inv(a) < inv(b); });

  std::vector<Mask> best;
  std::vector<int> perm = order;  // perm[new index] = old vertex
  auto consider = [&]() {
    std::vector<int> pos(n);  // old vertex -> new index
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    std::vector<Mask> rows(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq(perm[i], perm[j])) rows[i] |= mask_bit(j);
    if (best.empty() || rows < best) best = rows;
  };

  // iterate permutations block-by-block
  std::vector<std::pair<int, int>> blocks;  // [start, end)
  int s = 0;
  while (s < n) {
    int e = s + 1;
    while (e < n && inv(order[e]) == inv(order[s])) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  auto rec = [&](auto&& self, size_t bi) -> void {
    if (bi == blocks.size()) {
      consider();
      return;
    }
    auto [lo, hi] = blocks[bi];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      self(self, bi + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  if (n == 0) return {};
  rec(rec, 0);
  return best;
}

// Number of downsets, capped: returns cap+1 as soon as the count exceeds cap.
int downset_count_capped(const std::vector<Mask>& down, int cap) {
  const int n = static_cast<int>(down.size());
  int count = 0;
  Mask limit = (n == 64) ? ~Mask{0} : (mask_bit(n) - 1);
  for (Mask m = 0;; ++m) {
    bool ok = true;
    for (Mask rest = m; rest && ok;) {
      int i = mask_lowest(rest);
      rest &= rest - 1;
      if ((down[i] & ~m) != 0) ok = false;
    }
    if (ok && ++count > cap) return cap + 1;
    if (m == limit) break;
  }
  return count;
}

struct RawPoset {
  std::vector<Mask> up, down;
  int downsets = 1;
};

FinPoset to_poset(const RawPoset& r) {
  std::vector<std::string> ids(r.up.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = "p" + std::to_string(i);
  return FinPoset(std::move(ids), r.up);
}

}  // namespace

std::vector<Mask> canonical_key(const FinDLat& L) {
  // join-irreducibles: not bottom, exactly one lower cover
  Mask ji = 0;
  for (int j = 0; j < L.size(); ++j) {
    if (j == L.bottom()) continue;
    Mask strictly_below = L.order().down_of(j) & ~mask_bit(j);
    FinPoset below = L.order().induced(strictly_below);
    if (mask_count(maximals(below)) == 1) ji |= mask_bit(j);
  }
  std::vector<Mask> key = canonical_poset_key(L.order().induced(ji));
  key.insert(key.begin(), static_cast<Mask>(L.size()));
  return key;
}

bool is_isomorphic(const FinDLat& a, const FinDLat& b) {
  if (a.size() != b.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::vector<FinDLat> enumerate_dlats(int max_size) {
  if (max_size < 1 || max_size > 10)
    throw std::invalid_argument("enumerate_dlats supports 1..10 elements");

  // Grow posets one maximal element at a time (its strict down-set is any
  // downset of the smaller poset); prune by downset count, dedupe levels by
  // canonical key. A poset with k elements has >= k+1 downsets, so levels
  // stop at max_size - 1 elements.
  std::vector<std::vector<RawPoset>> levels;
  levels.push_back({RawPoset{}});
  for (int n = 1; n + 1 <= max_size; ++n) {
    std::map<std::vector<Mask>, RawPoset> fresh;
    for (const RawPoset& base : levels.back()) {
      FinPoset bp = to_poset(base);
      for (Mask d : enumerate_downsets(bp)) {
        RawPoset q;
        q.up = base.up;
        q.down = base.down;
        int x = n - 1;
        q.up.push_back(mask_bit(x));
        q.down.push_back(down_closure(bp, d) | mask_bit(x));
        for (int i : mask_indices(q.down.back() & ~mask_bit(x))) q.up[i] |= mask_bit(x);
        q.downsets = downset_count_capped(q.down, max_size);
        if (q.downsets > max_size) continue;
        fresh.emplace(canonical_poset_key(to_poset(q)), q);
      }
    }
    std::vector<RawPoset> level;
    level.reserve(fresh.size());
    for (auto& [key, rp] : fresh) level.push_back(std::move(rp));
    if (level.empty()) break;
    levels.push_back(std::move(level));
  }

  std::vector<std::pair<std::vector<Mask>, FinDLat>> keyed;
  for (const auto& level : levels)
    for (const RawPoset& rp : level) {
      FinDLat L = lattice_of_downsets(to_poset(rp));
      if (L.size() < 2) continue;  // enumeration starts at the 2-chain (0 != 1)
      keyed.emplace_back(canonical_key(L), std::move(L));
    }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FinDLat> out;
  out.reserve(keyed.size());
  for (auto& [key, L] : keyed) out.push_back(std::move(L));
  return out;
}

}  // namespace latsep
