#include "flagcoh/horn.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace flagcoh {

namespace {

std::string word(const WeylGroup& g, ElementId w) {
  std::string s;
  for (int i : g.reduced_word(w)) s += std::to_string(i + 1);
  return s.empty() ? "e" : s;
}

std::string tuple_string(const WeylGroup& g, const std::vector<ElementId>& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.size(); ++j) s += (j ? "," : "") + word(g, t[j]);
  return s + ")";
}

std::string signature_string(const std::vector<std::int64_t>& sig) {
  std::string s = "(";
  for (std::size_t j = 0; j < sig.size(); ++j) s += (j ? "," : "") + std::to_string(sig[j]);
  return s + ")";
}

HornCheck make_check(CheckKind kind, Relation rel, Rational lhs, Rational rhs, std::string datum) {
  HornCheck c{kind, rel, std::move(lhs), std::move(rhs), false, std::move(datum)};
  c.passed = c.evaluate();
  return c;
}

int count_roots(const RootSystem& rs, const std::function<bool(int)>& pred) {
  int n = 0;
  for (int k = 0; k < rs.num_positive_roots(); ++k) n += pred(k);
  return n;
}

}  // namespace

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Center: return "center";
    case CheckKind::CenterPrime: return "center'";
    case CheckKind::T2PrimeEquality: return "T2'-equality";
    case CheckKind::T2PrimeRefined: return "T2'-refined";
    case CheckKind::Dimension: return "dimension";
  }
  return "?";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "==";
    case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

bool HornCheck::evaluate() const {
  switch (relation) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
  }
  return false;
}

std::size_t HornReport::violations() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const HornCheck& c) { return !c.passed; }));
}

std::vector<CentralChar> central_characters(const RootSystem& rs, const ParabolicIndex& p) {
  const auto outside = p.outside(rs.rank());
  std::map<std::vector<std::int64_t>, std::vector<int>> classes;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (in_levi(rs, k, p)) continue;
    std::vector<std::int64_t> sig;
    for (int i : outside) sig.push_back(rs.positive_roots()[k][i]);
    classes[sig].push_back(k);
  }
  std::vector<CentralChar> out;
  for (auto& [sig, roots] : classes) out.push_back({sig, roots});
  return out;
}

IntVector chi_central(const WeylGroup& group, const CentralChar& c, ElementId w) {
  const auto& rs = group.roots();
  IntVector sum(rs.rank(), 0);
  for (int k : c.roots)
    if (group.keeps_positive(w, k))
      for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.positive_roots()[k][i];
  return sum;
}

int central_count(const WeylGroup& group, const CentralChar& c, ElementId w) {
  return static_cast<int>(std::count_if(c.roots.begin(), c.roots.end(), [&](int k) { return group.keeps_positive(w, k); }));
}

struct HornEngine::Levi {
  LeviSubsystem sub;
  std::unique_ptr<Workspace> ws;  // null when L is a torus
  std::vector<ElementId> to_ambient;
  std::unordered_map<ElementId, ElementId> from_ambient;

  ParabolicIndex sub_parabolic(const ParabolicIndex& q) const {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < sub.simple_map.size(); ++k)
      if (q.contains(sub.simple_map[k])) mask |= 1u << k;
    return ParabolicIndex(mask);
  }
};

HornEngine::HornEngine(const Workspace& ws) : ws_(&ws) {}
HornEngine::~HornEngine() = default;

const HornEngine::Levi& HornEngine::levi(const ParabolicIndex& p) const {
  std::lock_guard lock(mutex_);
  auto& slot = levis_[p.mask()];
  if (slot) return *slot;
  auto l = std::make_unique<Levi>(Levi{ws_->roots().levi_subsystem(p), nullptr, {}, {}});
  const WeylGroup& g = ws_->group();
  if (l->sub.system.rank() > 0) {
    WorkspaceOptions opts;
    opts.threads = 1;
    l->ws = std::make_unique<Workspace>(l->sub.system, opts);
    const WeylGroup& lg = l->ws->group();
    for (ElementId v = 0; v < lg.size(); ++v) {
      std::vector<int> w;
      for (int i : lg.reduced_word(v)) w.push_back(l->sub.simple_map[i]);
      const ElementId a = g.from_word(w);
      l->to_ambient.push_back(a);
      l->from_ambient[a] = v;
    }
  } else {
    l->to_ambient.push_back(g.identity());
    l->from_ambient[g.identity()] = 0;
  }
  slot = std::move(l);
  return *slot;
}

bool HornEngine::product_nonzero(const ParabolicIndex& p, const std::vector<ElementId>& tuple) const {
  const auto& q = ws_->quotient(p);
  std::vector<int> idx;
  for (ElementId w : tuple) {
    const int k = q.index_of(w);
    if (k < 0) throw InvalidInput("element " + word(ws_->group(), w) + " is not in W^P");
    idx.push_back(k);
  }
  return !classical_product(*ws_, p, idx).empty();
}

bool HornEngine::levi_product_nonzero(const ParabolicIndex& p, const ParabolicIndex& q,
                                      const std::vector<ElementId>& utuple) const {
  if (!q.subset_of(p)) throw InvalidInput("Q must be contained in P");
  const Levi& l = levi(p);
  std::vector<ElementId> sub;
  for (ElementId u : utuple) {
    auto it = l.from_ambient.find(u);
    if (it == l.from_ambient.end()) throw InvalidInput("element " + word(ws_->group(), u) + " is not in W_L");
    sub.push_back(it->second);
  }
  if (!l.ws) return true;
  const ParabolicIndex qs = l.sub_parabolic(q);
  const auto& lq = l.ws->quotient(qs);
  std::vector<int> idx;
  for (ElementId v : sub) idx.push_back(lq.index_of(l.ws->group().min_coset_rep(v, qs)));
  return !classical_product(*l.ws, qs, idx).empty();
}

const std::vector<LeviTuples>& HornEngine::levi_tuples(const ParabolicIndex& p, int s, bool maximal_only) const {
  std::lock_guard lock(mutex_);
  const auto key = std::make_tuple(p.mask(), s, maximal_only);
  if (auto it = levi_tuples_.find(key); it != levi_tuples_.end()) return it->second;
  std::vector<LeviTuples> out;
  const Levi& l = levi(p);
  const int n = ws_->roots().rank();
  std::vector<ParabolicIndex> qs;
  const auto simples = p.levi_simples(n);
  if (maximal_only) {
    for (int k : simples) qs.push_back(ParabolicIndex(p.mask() & ~(1u << k)));
  } else {
    for (std::uint32_t m = 0; m < (1u << n); ++m)
      if ((m & ~p.mask()) == 0 && m != p.mask()) qs.push_back(ParabolicIndex(m));
  }
  for (const auto& q : qs) {
    LeviTuples lt{q, {}};
    const ParabolicIndex qsub = l.sub_parabolic(q);
    const auto& lq = l.ws->quotient(qsub);
    const int m = static_cast<int>(lq.size());
    std::vector<int> idx(s, 0);
    while (true) {
      if (!classical_product(*l.ws, qsub, idx).empty()) {
        std::vector<ElementId> amb;
        for (int k : idx) amb.push_back(l.to_ambient[lq.element(k)]);
        lt.tuples.push_back(std::move(amb));
      }
      int pos = s - 1;
      while (pos >= 0 && ++idx[pos] == m) idx[pos--] = 0;
      if (pos < 0) break;
    }
    out.push_back(std::move(lt));
  }
  return levi_tuples_[key] = std::move(out);
}

int HornEngine::codim_by_roots(const ParabolicIndex& p, ElementId w) const {
  const auto& g = ws_->group();
  const auto& rs = g.roots();
  return count_roots(rs, [&](int k) { return !in_levi(rs, k, p) && g.keeps_positive(w, k); });
}

std::vector<HornCheck> HornEngine::character_inequalities(const ParabolicIndex& p,
                                                          const std::vector<ElementId>& tuple) const {
  const auto& g = ws_->group();
  const auto& q = ws_->quotient(p);
  const auto& chars = ws_->characters(p);
  std::vector<int> idx;
  for (ElementId w : tuple) {
    const int k = q.index_of(w);
    if (k < 0) throw InvalidInput("element " + word(g, w) + " is not in W^P");
    idx.push_back(k);
  }
  std::vector<HornCheck> checks;
  for (int i : chars.outside()) {
    std::int64_t sum = 0;
    for (int k : idx) sum += chars.chi(k)[i];
    checks.push_back(make_check(CheckKind::Center, Relation::LessEqual, sum, chars.chi(0)[i],
                                "i=" + std::to_string(i + 1)));
  }
  const int s = static_cast<int>(tuple.size());
  for (const auto& lt : levi_tuples(p, s)) {
    int pp = -1;
    for (int k : p.levi_simples(g.rank()))
      if (!lt.q.contains(k)) pp = k;
    for (const auto& u : lt.tuples) {
      // chi_w(u x_p) is the alpha_p-coordinate of u^{-1} chi_w.
      std::int64_t sum = 0;
      for (int j = 0; j < s; ++j) sum += g.act(g.inverse(u[j]), chars.chi(idx[j]))[pp];
      checks.push_back(make_check(CheckKind::CenterPrime, Relation::LessEqual, sum, chars.chi(0)[pp],
                                  "Q_L=" + lt.q.label(g.rank()) + " u=" + tuple_string(g, u) +
                                      " p=" + std::to_string(pp + 1)));
    }
  }
  return checks;
}

HornReport HornEngine::check_T2(const ParabolicIndex& p, const std::vector<ElementId>& tuple) const {
  HornReport r;
  r.tuple = tuple;
  r.parabolic = p;
  const LMovability lm = is_L_movable(*ws_, p, tuple);  // validates membership and dimension
  r.d = lm.d;
  if (lm.d == 0) {
    r.applicable = false;
    r.note = "not applicable: classical product vanishes";
    return r;
  }
  r.checks = character_inequalities(p, tuple);
  return r;
}

HornReport HornEngine::check_T2prime(const ParabolicIndex& p, const std::vector<ElementId>& tuple) const {
  const auto& g = ws_->group();
  const LMovability lm = is_L_movable(*ws_, p, tuple);
  if (!lm.movable)
    throw InvalidInput(lm.d == 0 ? "tuple is not L-movable: classical product vanishes"
                                 : "tuple is not L-movable: nonzero character defect");
  HornReport r;
  r.tuple = tuple;
  r.parabolic = p;
  r.d = lm.d;
  const int s = static_cast<int>(tuple.size());
  const auto centrals = central_characters(g.roots(), p);
  for (const auto& c : centrals) {
    int sum = 0;
    for (ElementId w : tuple) sum += central_count(g, c, w);
    r.checks.push_back(make_check(CheckKind::T2PrimeEquality, Relation::Equal, sum,
                                  central_count(g, c, g.identity()), "c=" + signature_string(c.signature)));
  }
  for (const auto& lt : levi_tuples(p, s)) {
    int pp = -1;
    for (int k : p.levi_simples(g.rank()))
      if (!lt.q.contains(k)) pp = k;
    for (const auto& u : lt.tuples)
      for (const auto& c : centrals) {
        std::int64_t sum = 0;
        for (int j = 0; j < s; ++j) sum += g.act(g.inverse(u[j]), chi_central(g, c, tuple[j]))[pp];
        const std::int64_t rhs = chi_central(g, c, g.identity())[pp];
        r.checks.push_back(make_check(CheckKind::T2PrimeRefined, Relation::LessEqual, sum, rhs,
                                      "Q_L=" + lt.q.label(g.rank()) + " u=" + tuple_string(g, u) +
                                          " p=" + std::to_string(pp + 1) + " c=" + signature_string(c.signature)));
      }
  }
  return r;
}

HornReport HornEngine::check_dimension(const ParabolicIndex& p, const std::vector<ElementId>& tuple,
                                       const ParabolicIndex& q, const ParabolicIndex& qhat,
                                       const std::vector<ElementId>& utuple) const {
  const auto& g = ws_->group();
  const auto& rs = g.roots();
  const int n = rs.rank();
  ws_->validate(q);
  ws_->validate(qhat);
  if (!q.subset_of(p)) throw InvalidInput("Q must be contained in P");
  if (!q.subset_of(qhat)) throw InvalidInput("Q-hat must contain Q");
  if (tuple.size() != utuple.size()) throw InvalidInput("w- and u-tuples differ in length");
  if (!product_nonzero(p, tuple)) throw InvalidInput("precondition failed: product in H^*(G/P) vanishes");
  if (!levi_product_nonzero(p, q, utuple)) throw InvalidInput("precondition failed: product in H^*(L/Q_L) vanishes");

  HornReport r;
  r.tuple = tuple;
  r.parabolic = p;
  const std::string base = "Q=" + q.label(n) + " Q-hat=" + qhat.label(n) + " u=" + tuple_string(g, utuple);
  const auto& qq = ws_->quotient(qhat);
  std::vector<ElementId> reps;
  int codim_sum = 0;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    const ElementId what = g.multiply(tuple[j], utuple[j]);
    const ElementId rep = g.min_coset_rep(what, qhat);
    reps.push_back(rep);
    const int by_roots = codim_by_roots(qhat, what);
    const int by_length = qq.dimension() - g.length(rep);
    r.checks.push_back(make_check(CheckKind::Dimension, Relation::Equal, by_roots, by_length,
                                  base + " codim-formula j=" + std::to_string(j + 1)));
    codim_sum += by_length;
  }
  r.checks.push_back(make_check(CheckKind::Dimension, Relation::Equal, product_nonzero(qhat, reps) ? 1 : 0, 1,
                                base + " nonvanishing in G/Q-hat"));
  r.checks.push_back(make_check(CheckKind::Dimension, Relation::LessEqual, codim_sum, qq.dimension(),
                                base + " codim-sum"));

  if (qhat.intersect(p) == q) {
    auto in_lq = [&](int k) { return in_levi(rs, k, p) && !in_levi(rs, k, q); };
    const int dim_lq = count_roots(rs, in_lq);
    int u_codim_sum = 0;
    std::vector<int> u_codims;
    for (ElementId u : utuple) {
      u_codims.push_back(count_roots(rs, [&](int k) { return in_lq(k) && g.keeps_positive(u, k); }));
      u_codim_sum += u_codims.back();
    }
    r.checks.push_back(make_check(CheckKind::Dimension, Relation::GreaterEqual, qq.dimension() - codim_sum,
                                  dim_lq - u_codim_sum, base + " excess"));
    auto in_both = [&](int k) { return !in_levi(rs, k, qhat) && !in_levi(rs, k, p); };
    int rhs = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      const ElementId what = g.multiply(tuple[j], utuple[j]);
      const int cnt = count_roots(rs, [&](int k) { return in_both(k) && g.keeps_positive(what, k); });
      rhs += cnt;
      r.checks.push_back(make_check(CheckKind::Dimension, Relation::Equal,
                                    codim_by_roots(qhat, what) - u_codims[j], cnt,
                                    base + " codim-difference j=" + std::to_string(j + 1)));
    }
    r.checks.push_back(make_check(CheckKind::Dimension, Relation::GreaterEqual, count_roots(rs, in_both), rhs,
                                  base + " root-count"));
  }
  return r;
}

std::vector<std::vector<int>> codim_tuples(const ParabolicQuotient& q, int s, int codim_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int m = static_cast<int>(q.size());
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (static_cast<int>(cur.size()) == s) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int k = start; k < m; ++k) {
      if (q.codimension(k) > left) continue;
      cur.push_back(k);
      self(self, k, left - q.codimension(k));
      cur.pop_back();
    }
  };
  rec(rec, 0, codim_sum);
  return out;
}

ConverseReport horn_converse_experiment(const HornEngine& engine, const ParabolicIndex& p, int s,
                                        std::size_t max_examples) {
  const Workspace& ws = engine.workspace();
  const auto& q = ws.quotient(p);
  ConverseReport r;
  for (const auto& idx : codim_tuples(q, s, q.dimension())) {
    ++r.tuples_examined;
    auto prod = classical_product(ws, p, idx);
    if (prod.count(0)) continue;
    ++r.zero_products;
    std::vector<ElementId> tuple;
    for (int k : idx) tuple.push_back(q.element(k));
    const auto checks = engine.character_inequalities(p, tuple);
    if (std::all_of(checks.begin(), checks.end(), [](const HornCheck& c) { return c.passed; })) {
      ++r.zero_but_passing;
      if (r.examples.size() < max_examples) r.examples.push_back({tuple, p});
    }
  }
  return r;
}

}  // namespace flagcoh
