#include "flagcoh/deform.hpp"

#include "flagcoh/workspace.hpp"

#include <set>
#include <sstream>

namespace flagcoh {

Weight chi(const WeylGroup& group, const ParabolicIndex& p, ElementId w) {
  const RootSystem& rs = group.roots();
  if (!group.in_min_reps(w, p)) throw InvalidInput("chi: element not in W^P");
  RatVector sum(rs.rank(), Rational(0));
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (in_levi(rs, k, p) || !group.keeps_positive(w, k)) continue;
    for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.positive_roots()[k][i];
  }
  Weight direct{sum, WeightBasis::SimpleRoot};
  Weight closed = rs.rho() - Rational(2) * rs.rho(p) + group.act(group.inverse(w), rs.rho());
  FLAGCOH_CHECK(direct == rs.to_root_basis(closed), "chi: root-sum and rho formulas disagree");
  return direct;
}

CharacterTable::CharacterTable(const ParabolicQuotient& quotient)
    : outside_(quotient.parabolic().outside(quotient.group().rank())) {
  for (ElementId w : quotient.elements()) {
    Weight c = flagcoh::chi(quotient.group(), quotient.parabolic(), w);
    IntVector coords;
    for (const auto& x : c.coords) coords.push_back(static_cast<std::int64_t>(numerator(x)));
    chi_.push_back(std::move(coords));
  }
}

std::vector<std::int64_t> CharacterTable::at_outside(int k) const {
  std::vector<std::int64_t> out;
  for (int i : outside_) out.push_back(chi_[k][i]);
  return out;
}

DeformedTable::DeformedTable(const ParabolicQuotient& quotient, const ProductTable& table,
                             const CharacterTable& chars)
    : size_(quotient.size()), outside_(chars.outside()), entries_(size_ * size_) {
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      auto& out = entries_[a * size_ + b];
      for (const auto& t : table.product(quotient.dual(static_cast<int>(a)), quotient.dual(static_cast<int>(b)))) {
        const int c = quotient.dual(t.index);
        TauExponent e;
        for (int i : outside_) {
          const std::int64_t x = chars.chi(c)[i] - chars.chi(static_cast<int>(a))[i] - chars.chi(static_cast<int>(b))[i];
          FLAGCOH_CHECK(x >= 0, "negative deformation exponent");
          e.push_back(static_cast<int>(x));
        }
        out.push_back({c, t.coeff, std::move(e)});
      }
      std::sort(out.begin(), out.end(), [](const DeformedTerm& x, const DeformedTerm& y) { return x.index < y.index; });
    }
  }
}

namespace {

int position(const ParabolicQuotient& q, ElementId w) {
  const int k = q.index_of(w);
  if (k < 0) throw InvalidInput("element " + std::to_string(w) + " is not in W^P");
  return k;
}

}  // namespace

DeformedClass schubert_class(const Workspace& ws, const ParabolicIndex& p, ElementId w) {
  const auto& q = ws.quotient(p);
  position(q, w);
  const auto& out = ws.characters(p).outside();
  DeformedClass c{p, out, {}};
  c.coeffs[w][TauExponent(out.size(), 0)] = 1;
  return c;
}

DeformedClass deformed_multiply(const Workspace& ws, const DeformedClass& a, const DeformedClass& b) {
  if (a.parabolic != b.parabolic) throw InvalidInput("deformed product of classes on different G/P");
  const auto& q = ws.quotient(a.parabolic);
  const auto& table = ws.deformed(a.parabolic);
  DeformedClass out{a.parabolic, table.outside(), {}};
  for (const auto& [u, pu] : a.coeffs) {
    const int iu = position(q, u);
    for (const auto& [v, pv] : b.coeffs) {
      const int iv = position(q, v);
      for (const auto& t : table.product(iu, iv)) {
        auto& target = out.coeffs[q.element(t.index)];
        for (const auto& [eu, cu] : pu)
          for (const auto& [ev, cv] : pv) {
            TauExponent e = t.exponent;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eu[i] + ev[i];
            target[e] += cu * cv * t.coeff;
          }
      }
    }
  }
  for (auto& [w, poly] : out.coeffs) std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

DeformedClass deformed_product(const Workspace& ws, const ParabolicIndex& p, ElementId u, ElementId v) {
  return deformed_multiply(ws, schubert_class(ws, p, u), schubert_class(ws, p, v));
}

CohomClass specialize(const DeformedClass& c, int value) {
  if (value != 0 && value != 1) throw InvalidInput("tau may only be specialized to 0 or 1");
  CohomClass out{c.parabolic, ClassBasis::Schubert, {}};
  for (const auto& [w, poly] : c.coeffs)
    for (const auto& [e, x] : poly) {
      bool zero_exponent = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
      if (value == 1 || zero_exponent) out.coeffs[w] += x;
    }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

CohomClass product0(const Workspace& ws, const ParabolicIndex& p, ElementId u, ElementId v) {
  return specialize(deformed_product(ws, p, u, v), 0);
}

std::string to_string(const DeformedClass& c, const std::map<ElementId, std::string>& names) {
  if (c.coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, poly] : c.coeffs) {
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      BigInt x = it->second;
      if (!first) out << (x < 0 ? " - " : " + ");
      else if (x < 0) out << "-";
      if (x < 0) x = -x;
      first = false;
      if (x != 1) out << x << "*";
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        out << "tau" << (c.outside[i] + 1);
        if (it->first[i] > 1) out << "^" << it->first[i];
        out << "*";
      }
      auto name = names.find(w);
      out << (name == names.end() ? "[" + std::to_string(w) + "]" : name->second);
    }
  }
  return out.str();
}

std::map<int, BigInt> classical_product(const Workspace& ws, const ParabolicIndex& p,
                                        const std::vector<int>& indices) {
  const auto& q = ws.quotient(p);
  const auto& table = ws.table(p);
  std::map<int, BigInt> cur{{q.dual(0), 1}};  // unit: epsilon_e
  for (int idx : indices) {
    if (idx < 0 || idx >= static_cast<int>(q.size())) throw InvalidInput("W^P position out of range");
    std::map<int, BigInt> next;
    for (const auto& [x, cx] : cur)
      for (const auto& t : table.product(q.dual(x), q.dual(idx))) next[q.dual(t.index)] += cx * t.coeff;
    cur = std::move(next);
  }
  std::map<int, BigInt> out;
  for (const auto& [x, c] : cur)
    if (c != 0) out[x] = c;
  return out;
}

LMovability is_L_movable(const Workspace& ws, const ParabolicIndex& p, const std::vector<ElementId>& tuple) {
  const auto& q = ws.quotient(p);
  std::vector<int> idx;
  int codim = 0;
  for (ElementId w : tuple) {
    idx.push_back(position(q, w));
    codim += q.codimension(idx.back());
  }
  if (codim != q.dimension())
    throw DimensionMismatch("sum of codimensions " + std::to_string(codim) + " differs from dim G/P = " +
                            std::to_string(q.dimension()));
  const auto& chars = ws.characters(p);
  LMovability r;
  r.outside = chars.outside();
  const auto prod = classical_product(ws, p, idx);
  auto it = prod.find(0);
  r.d = it == prod.end() ? BigInt(0) : it->second;
  const auto one = chars.at_outside(0);
  r.defect.assign(one.size(), 0);
  for (std::size_t i = 0; i < one.size(); ++i) {
    r.defect[i] = -one[i];
    for (int k : idx) r.defect[i] += chars.at_outside(k)[i];
  }
  r.movable = r.d != 0 && std::all_of(r.defect.begin(), r.defect.end(), [](std::int64_t x) { return x == 0; });
  return r;
}

std::vector<IntVector> tangent_roots(const WeylGroup& group, const ParabolicIndex& p, ElementId w) {
  const RootSystem& rs = group.roots();
  std::vector<IntVector> out;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (in_levi(rs, k, p)) continue;
    // gamma = -beta lies in w^{-1} R^+ iff w beta is negative.
    if (group.keeps_positive(w, k)) continue;
    IntVector g = rs.positive_roots()[k];
    for (auto& x : g) x = -x;
    out.push_back(std::move(g));
  }
  return out;
}

bool complement_check(const ParabolicQuotient& quotient, ElementId w) {
  const WeylGroup& g = quotient.group();
  const RootSystem& rs = g.roots();
  const ParabolicIndex& p = quotient.parabolic();
  const int k = quotient.index_of(w);
  if (k < 0) throw InvalidInput("complement_check: element not in W^P");
  std::set<IntVector> all;
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    if (in_levi(rs, r, p)) continue;
    IntVector neg = rs.positive_roots()[r];
    for (auto& x : neg) x = -x;
    all.insert(neg);
  }
  std::set<IntVector> parts;
  std::size_t count = 0;
  for (const auto& gamma : tangent_roots(g, p, w)) {
    parts.insert(gamma);
    ++count;
  }
  const ElementId dual = quotient.element(quotient.dual(k));
  for (const auto& gamma : tangent_roots(g, p, dual)) {
    parts.insert(g.act(quotient.longest_levi(), gamma));
    ++count;
  }
  return parts == all && count == all.size();
}

}  // namespace flagcoh
