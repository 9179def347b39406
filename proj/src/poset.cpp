#include "latsep/poset.hpp"

#include <bit>
#include <stdexcept>

namespace latsep {

bool mask_has(Mask m, int i) { return (m >> i) & Mask{1}; }
Mask mask_bit(int i) { return Mask{1} << i; }
int mask_count(Mask m) { return std::popcount(m); }

int mask_lowest(Mask m) {
  if (m == 0) return -1;
  return std::countr_zero(m);
}

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

FinPoset::FinPoset(std::vector<std::string> ids, std::vector<Mask> up_rows)
    : ids_(std::move(ids)), up_(std::move(up_rows)) {
  if (ids_.size() > kMaxElements)
    throw std::invalid_argument("poset exceeds " + std::to_string(kMaxElements) + " elements");
  if (up_.size() != ids_.size()) throw std::invalid_argument("leq row count != element count");
  down_.assign(ids_.size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (mask_has(up_[i], j)) down_[j] |= mask_bit(i);
}

FinPoset FinPoset::from_pairs(std::vector<std::string> ids,
                              const std::vector<std::pair<std::string, std::string>>& leq) {
  if (ids.size() > kMaxElements)
    throw std::invalid_argument("poset exceeds " + std::to_string(kMaxElements) + " elements");
  std::vector<Mask> rows(ids.size(), 0);
  auto find = [&](const std::string& id) {
    for (size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return static_cast<int>(i);
    throw std::invalid_argument("unknown element id: " + id);
  };
  for (size_t i = 0; i < ids.size(); ++i) rows[i] |= mask_bit(static_cast<int>(i));
  for (const auto& [a, b] : leq) rows[find(a)] |= mask_bit(find(b));
  return FinPoset(std::move(ids), std::move(rows));
}

std::optional<int> FinPoset::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (ids_[i] == id) return i;
  return std::nullopt;
}

Mask FinPoset::all() const {
  return size() == kMaxElements ? ~Mask{0} : (mask_bit(size()) - 1);
}

FinPoset FinPoset::reversed() const {
  return FinPoset(ids_, down_);
}

FinPoset FinPoset::induced(Mask subset) const {
  std::vector<int> keep = mask_indices(subset);
  std::vector<std::string> ids;
  ids.reserve(keep.size());
  for (int i : keep) ids.push_back(ids_[i]);
  std::vector<Mask> rows(keep.size(), 0);
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      if (leq(keep[a], keep[b])) rows[a] |= mask_bit(static_cast<int>(b));
  return FinPoset(std::move(ids), std::move(rows));
}

std::optional<OrderViolation> validate(const FinPoset& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    if (!p.leq(i, i)) return OrderViolation{"reflexivity", p.id(i)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq(i, j) && p.leq(j, i))
        return OrderViolation{"antisymmetry", p.id(i) + "," + p.id(j)};
  for (int i = 0; i < n; ++i)
    for (int j : mask_indices(p.up_of(i)))
      if ((p.up_of(j) & ~p.up_of(i)) != 0) {
        int k = mask_lowest(p.up_of(j) & ~p.up_of(i));
        return OrderViolation{"transitivity", p.id(i) + "," + p.id(j) + "," + p.id(k)};
      }
  return std::nullopt;
}

Mask up_closure(const FinPoset& p, Mask s) {
  Mask out = 0;
  for (int i : mask_indices(s)) out |= p.up_of(i);
  return out;
}

Mask down_closure(const FinPoset& p, Mask s) {
  Mask out = 0;
  for (int i : mask_indices(s)) out |= p.down_of(i);
  return out;
}

Mask minimals(const FinPoset& p) {
  Mask out = 0;
  for (int i = 0; i < p.size(); ++i)
    if (p.down_of(i) == mask_bit(i)) out |= mask_bit(i);
  return out;
}

Mask maximals(const FinPoset& p) {
  Mask out = 0;
  for (int i = 0; i < p.size(); ++i)
    if (p.up_of(i) == mask_bit(i)) out |= mask_bit(i);
  return out;
}

std::vector<Mask> enumerate_downsets(const FinPoset& p, int max_elements) {
  if (p.size() > max_elements)
    throw std::invalid_argument("downset enumeration bound exceeded: " +
                                std::to_string(p.size()) + " > " + std::to_string(max_elements));
  std::vector<Mask> out;
  const Mask limit = p.all();
  for (Mask m = 0;; ++m) {
    bool ok = true;
    for (Mask rest = m; rest && ok;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      if ((p.down_of(i) & ~m) != 0) ok = false;
    }
    if (ok) out.push_back(m);
    if (m == limit) break;
  }
  return out;
}

std::vector<std::pair<int, int>> cover_pairs(const FinPoset& p) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (a == b || !p.leq(a, b)) continue;
      Mask between = p.up_of(a) & p.down_of(b) & ~mask_bit(a) & ~mask_bit(b);
      if (between == 0) out.emplace_back(a, b);
    }
  return out;
}

std::string format_set(const FinPoset& p, Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_indices(s)) {
    if (!first) out += ",";
    out += p.id(i);
    first = false;
  }
  return out + "}";
}

}  // namespace latsep
