#include "flagcoh/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace flagcoh {

std::size_t WeylGroup::VecHash::operator()(const std::vector<std::int32_t>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t WeylGroup::order(const RootSystem& roots) {
  // #roots of height k = #{exponents >= k}; |W| = prod (m_i + 1).
  std::map<std::int64_t, std::uint64_t> by_height;
  for (const auto& beta : roots.positive_roots())
    ++by_height[std::accumulate(beta.begin(), beta.end(), std::int64_t{0})];
  std::uint64_t order = 1;
  for (const auto& [k, n] : by_height) {
    auto next = by_height.find(k + 1);
    std::uint64_t n_next = next == by_height.end() ? 0 : next->second;
    for (std::uint64_t c = n_next; c < n; ++c) order *= static_cast<std::uint64_t>(k + 1);
  }
  return order;
}

std::vector<std::int32_t> WeylGroup::key_of(const IntMatrix& action) const {
  const int r = rank();
  std::vector<std::int32_t> key(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) key[i] += static_cast<std::int32_t>(action[i][j] * two_rho_[j]);
  return key;
}

WeylGroup::WeylGroup(RootSystem roots, std::size_t cap) : roots_(std::move(roots)) {
  const std::uint64_t n = order(roots_);
  if (n > cap) {
    throw BudgetExceeded("Weyl group of " + roots_.label() + " has |W| = " + std::to_string(n) +
                         ", above the enumeration cap " + std::to_string(cap));
  }
  const int r = rank();
  two_rho_.assign(r, 0);
  for (const auto& beta : roots_.positive_roots())
    for (int i = 0; i < r; ++i) two_rho_[i] += static_cast<std::int32_t>(beta[i]);

  // Permutation of the positive roots under each s_i (alpha_i itself maps to -alpha_i).
  const int np = roots_.num_positive_roots();
  std::vector<std::vector<int>> perm(r, std::vector<int>(np, -1));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < np; ++k)
      if (k != roots_.simple_root_index(i)) perm[i][k] = roots_.positive_root_index(roots_.reflect(i, roots_.positive_roots()[k]));

  struct Pending {
    IntMatrix action;
    RootSet inv;
    ElementId parent;
    int letter;
  };

  right_.assign(r, {});
  left_.assign(r, {});
  std::vector<IntMatrix> level_actions;
  IntMatrix id(r, IntVector(r, 0));
  for (int i = 0; i < r; ++i) id[i][i] = 1;

  auto store = [&](const IntMatrix& a, const RootSet& inv, int len) {
    ElementId eid = static_cast<ElementId>(length_.size());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) actions_.push_back(static_cast<std::int8_t>(a[i][j]));
    length_.push_back(len);
    inversions_.push_back(inv);
    by_key_.emplace(key_of(a), eid);
    by_inversions_.emplace(inv, eid);
    for (int i = 0; i < r; ++i) right_[i].push_back(0);
    return eid;
  };

  store(id, RootSet{}, 0);
  std::vector<ElementId> current{0};
  int len = 0;
  while (!current.empty()) {
    std::map<std::vector<std::int32_t>, Pending> next;
    for (ElementId w : current) {
      const IntMatrix a = action(w);
      for (int i = 0; i < r; ++i) {
        if (is_right_descent(w, i)) continue;
        // (w s_i)(alpha_j) = w(alpha_j) - cartan[i][j] w(alpha_i)
        IntMatrix b = a;
        for (int j = 0; j < r; ++j)
          for (int k = 0; k < r; ++k) b[k][j] -= roots_.cartan()[i][j] * a[k][i];
        auto key = key_of(b);
        if (next.count(key)) continue;
        RootSet inv;
        inv.set(roots_.simple_root_index(i));
        for (int k = 0; k < np; ++k)
          if (inversions_[w].test(k)) inv.set(perm[i][k]);
        next.emplace(std::move(key), Pending{std::move(b), inv, w, i});
      }
    }
    ++len;
    // Canonical order inside a level: lexicographic on the action matrix.
    std::vector<Pending*> level;
    for (auto& [k, p] : next) level.push_back(&p);
    std::sort(level.begin(), level.end(), [](const Pending* x, const Pending* y) { return x->action < y->action; });
    std::vector<ElementId> fresh;
    for (Pending* p : level) fresh.push_back(store(p->action, p->inv, len));
    // Fill the right-multiplication table in both directions.
    for (ElementId v : fresh) {
      for (int i = 0; i < r; ++i) {
        if (!is_right_descent(v, i)) continue;
        IntMatrix a = action(v);
        IntMatrix b = a;
        for (int j = 0; j < r; ++j)
          for (int k = 0; k < r; ++k) b[k][j] -= roots_.cartan()[i][j] * a[k][i];
        ElementId u = by_key_.at(key_of(b));
        right_[i][v] = u;
        right_[i][u] = v;
      }
    }
    current = std::move(fresh);
  }
  FLAGCOH_CHECK(size() == n, "enumerated group size disagrees with the order formula");

  // s_i w: key(s_i w) = s_i key(w).
  for (int i = 0; i < r; ++i) {
    left_[i].resize(size());
    for (ElementId w = 0; w < size(); ++w) {
      IntMatrix a = action(w);
      std::vector<std::int32_t> key(r, 0);
      for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j) key[k] += static_cast<std::int32_t>(a[k][j] * two_rho_[j]);
      std::int32_t c = 0;
      for (int j = 0; j < r; ++j) c += static_cast<std::int32_t>(roots_.cartan()[i][j]) * key[j];
      key[i] -= c;
      left_[i][w] = by_key_.at(key);
    }
  }
  inverse_.assign(size(), 0);
  for (ElementId w = 1; w < size(); ++w) {
    // Elements are ordered by length, so the lower neighbour is already done.
    for (int i = 0; i < r; ++i) {
      if (is_right_descent(w, i)) {
        ElementId u = right_[i][w];
        inverse_[w] = left_[i][inverse_[u]];
        break;
      }
    }
  }
}

IntMatrix WeylGroup::action(ElementId w) const {
  const int r = rank();
  IntMatrix a(r, IntVector(r));
  const std::size_t base = static_cast<std::size_t>(w) * r * r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] = actions_[base + i * r + j];
  return a;
}

std::vector<int> WeylGroup::reduced_word(ElementId w) const {
  std::vector<int> word;
  while (w != identity()) {
    for (int i = 0; i < rank(); ++i) {
      if (is_right_descent(w, i)) {
        word.push_back(i);
        w = right_[i][w];
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement WeylGroup::element(ElementId w) const {
  return WeylElement{w, action(w), length_[w], reduced_word(w), inversions_[w]};
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const {
  ElementId out = a;
  for (int i : reduced_word(b)) out = right_[i][out];
  return out;
}

ElementId WeylGroup::from_word(const std::vector<int>& word) const {
  ElementId out = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) {
      throw InvalidInput("simple reflection index " + std::to_string(i + 1) + " out of range 1.." +
                         std::to_string(rank()));
    }
    out = right_[i][out];
  }
  return out;
}

std::optional<ElementId> WeylGroup::from_inversion_set(const RootSet& s) const {
  auto it = by_inversions_.find(s);
  if (it == by_inversions_.end()) return std::nullopt;
  return it->second;
}

IntVector WeylGroup::act(ElementId w, const IntVector& v) const {
  const int r = rank();
  IntVector out(r, 0);
  const std::size_t base = static_cast<std::size_t>(w) * r * r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i] += actions_[base + i * r + j] * v[j];
  return out;
}

Weight WeylGroup::act(ElementId w, const Weight& lambda) const {
  const Weight in = roots_.to_root_basis(lambda);
  const int r = rank();
  Weight out{RatVector(r, Rational(0)), WeightBasis::SimpleRoot};
  const std::size_t base = static_cast<std::size_t>(w) * r * r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.coords[i] += in.coords[j] * static_cast<int>(actions_[base + i * r + j]);
  return lambda.basis == WeightBasis::SimpleRoot ? out : roots_.to_weight_basis(out);
}

Coweight WeylGroup::act(ElementId w, const Coweight& h) const {
  // The form identification h ~ h^* is W-equivariant.
  return roots_.weight_to_coweight(act(w, roots_.coweight_to_weight(h)));
}

std::vector<IntVector> WeylGroup::inversion_roots(ElementId w) const {
  std::vector<IntVector> out;
  for (int k = 0; k < roots_.num_positive_roots(); ++k)
    if (inversions_[w].test(k)) out.push_back(roots_.positive_roots()[k]);
  return out;
}

ElementId WeylGroup::longest_in(const ParabolicIndex& p) const {
  ElementId w = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < rank(); ++i) {
      if (p.contains(i) && !is_right_descent(w, i)) {
        w = right_[i][w];
        grew = true;
      }
    }
  }
  return w;
}

ElementId WeylGroup::min_coset_rep(ElementId w, const ParabolicIndex& p) const {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int i = 0; i < rank(); ++i) {
      if (p.contains(i) && is_right_descent(w, i)) {
        w = right_[i][w];
        shrunk = true;
      }
    }
  }
  return w;
}

bool WeylGroup::in_min_reps(ElementId w, const ParabolicIndex& p) const {
  // w(R^+_l) in R^+  <=>  w(alpha_i) > 0 for every alpha_i in Delta(P).
  for (int i = 0; i < rank(); ++i)
    if (p.contains(i) && is_right_descent(w, i)) return false;
  return true;
}

bool in_levi(const RootSystem& rs, int root_index, const ParabolicIndex& p) {
  const auto& beta = rs.positive_roots()[root_index];
  for (int i = 0; i < rs.rank(); ++i)
    if (beta[i] != 0 && !p.contains(i)) return false;
  return true;
}

ParabolicQuotient::ParabolicQuotient(const WeylGroup& group, ParabolicIndex p)
    : group_(&group), parabolic_(p) {
  const RootSystem& rs = group.roots();
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (!in_levi(rs, k, p)) nilradical_.push_back(k);
  dimension_ = static_cast<int>(nilradical_.size());
  for (ElementId w = 0; w < group.size(); ++w) {
    if (group.in_min_reps(w, p)) {
      position_[w] = static_cast<int>(elements_.size());
      elements_.push_back(w);
    }
  }
  longest_levi_ = group.longest_in(p);
  FLAGCOH_CHECK(group.length(elements_.back()) == dimension_, "top element of W^P has wrong length");
  dual_.resize(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    ElementId d = group.multiply(group.multiply(group.longest(), elements_[k]), longest_levi_);
    int pos = index_of(d);
    FLAGCOH_CHECK(pos >= 0, "w_o w w_o^P is not a minimal representative");
    dual_[k] = pos;
  }
}

int ParabolicQuotient::index_of(ElementId w) const {
  auto it = position_.find(w);
  return it == position_.end() ? -1 : it->second;
}

std::vector<int> ParabolicQuotient::degree_profile() const {
  std::vector<int> profile(dimension_ + 1, 0);
  for (ElementId w : elements_) ++profile[group_->length(w)];
  return profile;
}

std::vector<CosetRep> minimal_reps(const WeylGroup& group, const ParabolicIndex& p) {
  ParabolicQuotient q(group, p);
  std::vector<CosetRep> out;
  for (ElementId w : q.elements()) out.push_back(CosetRep{w, p});
  return out;
}

CosetRep involution(const WeylGroup& group, const CosetRep& w) {
  if (!group.in_min_reps(w.element, w.parabolic)) throw InvalidInput("element is not a minimal coset representative");
  ElementId d = group.multiply(group.multiply(group.longest(), w.element), group.longest_in(w.parabolic));
  return CosetRep{d, w.parabolic};
}

}  // namespace flagcoh
