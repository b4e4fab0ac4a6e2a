#include "flagcoh/eigencone.hpp"

#include "flagcoh/lp.hpp"
#include "flagcoh/parallel.hpp"

#include <json.hpp>

namespace flagcoh {

namespace {

constexpr int kSchemaVersion = 1;

std::string word_string(const WeylGroup& g, ElementId w) {
  std::string s;
  for (int i : g.reduced_word(w)) s += std::to_string(i + 1);
  return s.empty() ? "e" : s;
}

ElementId parse_word(const WeylGroup& g, const std::string& s) {
  if (s == "e") return g.identity();
  std::vector<int> w;
  for (char c : s) {
    if (c < '1' || c > '9') throw InvalidInput("malformed reduced word '" + s + "'");
    w.push_back(c - '1');
  }
  return g.from_word(w);
}

}  // namespace

const char* to_string(SystemMode m) { return m == SystemMode::Classical ? "classical" : "deformed"; }

SystemMode parse_mode(const std::string& text) {
  if (text == "classical" || text == "B") return SystemMode::Classical;
  if (text == "deformed" || text == "B'") return SystemMode::Deformed;
  throw InvalidInput("unknown mode '" + text + "' (expected classical or deformed)");
}

std::size_t InequalitySystem::redundant_count() const {
  return static_cast<std::size_t>(
      std::count_if(inequalities.begin(), inequalities.end(), [](const Inequality& f) { return f.redundant; }));
}

std::map<int, std::size_t> InequalitySystem::counts_by_parabolic() const {
  std::map<int, std::size_t> out;
  for (const auto& f : inequalities) ++out[f.maximal];
  return out;
}

std::vector<std::vector<ElementId>> enumerate_tuples(const Workspace& ws, const ParabolicIndex& p, int s,
                                                     SystemMode mode, const EnumerationOptions& options) {
  const int n = ws.group().rank();
  ws.validate(p);
  if (!p.is_maximal(n)) throw InvalidInput("parabolic " + p.label(n) + " is not maximal");
  if (s < 2) throw InvalidInput("s must be at least 2");
  const auto& q = ws.quotient(p);
  const std::size_t m = q.size();
  double candidates = 1;
  for (int j = 0; j < s; ++j) candidates *= static_cast<double>(m);
  if (candidates > static_cast<double>(options.budget))
    throw BudgetExceeded("enumerating (W^P)^s needs " + std::to_string(static_cast<std::uint64_t>(candidates)) +
                         " tuples, budget " + std::to_string(options.budget));
  ws.deformed(p);  // builds every table before the workers start

  // Split on the first entry; each worker fills its own bucket.
  std::vector<std::vector<std::vector<ElementId>>> buckets(m);
  parallel_for(m, options.threads, [&](std::size_t first) {
    std::vector<int> idx(s, 0);
    idx[0] = static_cast<int>(first);
    auto codim_left = [&](int upto) {
      int c = q.dimension();
      for (int j = 0; j < upto; ++j) c -= q.codimension(idx[j]);
      return c;
    };
    auto rec = [&](auto&& self, int pos) -> void {
      const int left = codim_left(pos);
      if (left < 0) return;
      if (pos == s) {
        if (left != 0) return;
        std::vector<ElementId> t;
        for (int k : idx) t.push_back(q.element(k));
        BigInt coeff;
        if (mode == SystemMode::Classical) {
          const auto prod = classical_product(ws, p, idx);
          auto it = prod.find(0);
          coeff = it == prod.end() ? BigInt(0) : it->second;
        } else {
          const auto lm = is_L_movable(ws, p, t);
          coeff = lm.movable ? lm.d : BigInt(0);
        }
        if (options.relaxed ? coeff != 0 : coeff == 1) buckets[first].push_back(std::move(t));
        return;
      }
      for (std::size_t k = 0; k < m; ++k) {
        idx[pos] = static_cast<int>(k);
        self(self, pos + 1);
      }
    };
    rec(rec, 1);
  });
  std::vector<std::vector<ElementId>> out;
  for (auto& b : buckets)
    for (auto& t : b) out.push_back(std::move(t));
  return out;
}

std::vector<RatVector> inequality_functional(const WeylGroup& group, int maximal,
                                             const std::vector<ElementId>& tuple) {
  const Weight omega = group.roots().fundamental_weight(maximal);
  std::vector<RatVector> out;
  for (ElementId w : tuple) out.push_back(group.act(w, omega).coords);
  return out;
}

InequalitySystem generate_system(const Workspace& ws, int s, SystemMode mode, const EnumerationOptions& options) {
  const auto& rs = ws.roots();
  if (!rs.type()) throw InvalidInput("inequality systems need a simple Cartan type");
  InequalitySystem sys;
  sys.type = *rs.type();
  sys.s = s;
  sys.mode = mode;
  for (int i = 0; i < rs.rank(); ++i) {
    const auto p = ParabolicIndex::maximal(rs.rank(), i);
    for (auto& t : enumerate_tuples(ws, p, s, mode, options)) {
      Inequality f;
      f.maximal = i;
      f.functional = inequality_functional(ws.group(), i, t);
      f.tuple = std::move(t);
      sys.inequalities.push_back(std::move(f));
    }
  }
  return sys;
}

RatVector simple_root_values(const RootSystem& rs, const Coweight& h) {
  const int n = rs.rank();
  if (static_cast<int>(h.coords.size()) != n) throw InvalidInput("coweight has the wrong rank");
  RatVector out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += h.coords[j] * rs.cartan()[j][i];
  return out;
}

Verdict evaluate(const RootSystem& rs, const InequalitySystem& sys, const std::vector<Coweight>& h) {
  if (static_cast<int>(h.size()) != sys.s)
    throw InvalidInput("expected " + std::to_string(sys.s) + " coweights, got " + std::to_string(h.size()));
  std::vector<RatVector> values;
  for (std::size_t j = 0; j < h.size(); ++j) {
    values.push_back(simple_root_values(rs, h[j]));
    for (std::size_t i = 0; i < values.back().size(); ++i)
      if (values.back()[i] < 0)
        throw InvalidInput("h" + std::to_string(j + 1) + " is not dominant: alpha" + std::to_string(i + 1) +
                           "(h) = " + to_string(values.back()[i]));
  }
  Verdict v;
  for (std::size_t k = 0; k < sys.inequalities.size(); ++k) {
    Rational value = 0;
    const auto& f = sys.inequalities[k].functional;
    for (std::size_t j = 0; j < f.size(); ++j)
      for (std::size_t i = 0; i < f[j].size(); ++i) value += f[j][i] * values[j][i];
    if (value > 0) v.violated.emplace_back(k, value);
  }
  v.member = v.violated.empty();
  return v;
}

RatVector flatten(const Inequality& f) {
  RatVector out;
  for (const auto& v : f.functional) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::optional<RatVector> violation_witness(const std::vector<RatVector>& given, const RatVector& f) {
  RatMatrix a = given;
  RatVector b(given.size(), Rational(0));
  RatVector neg = f;
  for (auto& x : neg) x = -x;
  a.push_back(std::move(neg));
  b.push_back(-1);
  return find_feasible_point(a, b);
}

bool implied(const std::vector<RatVector>& given, const RatVector& f) { return !violation_witness(given, f); }

InequalitySystem prune_redundant(InequalitySystem sys, std::size_t max_dimension) {
  const std::size_t dim = sys.inequalities.empty() ? 0 : flatten(sys.inequalities[0]).size();
  if (dim > max_dimension)
    throw BudgetExceeded("redundancy check in dimension " + std::to_string(dim) + " exceeds the limit " +
                         std::to_string(max_dimension));
  std::vector<RatVector> flat;
  for (auto& f : sys.inequalities) {
    f.redundant = false;
    flat.push_back(flatten(f));
  }
  for (std::size_t k = 0; k < flat.size(); ++k) {
    std::vector<RatVector> given;
    for (std::size_t j = 0; j < flat.size(); ++j)
      if (j != k && !sys.inequalities[j].redundant) given.push_back(flat[j]);
    sys.inequalities[k].redundant = implied(given, flat[k]);
  }
  sys.pruned = true;
  return sys;
}

WallAudit audit_with_chamber_walls(const InequalitySystem& sys) {
  std::vector<RatVector> all;
  for (const auto& f : sys.inequalities) all.push_back(flatten(f));
  const std::size_t dim = static_cast<std::size_t>(sys.s) * sys.type.rank;
  WallAudit a;
  a.walls = dim;
  for (std::size_t k = 0; k < dim; ++k) {
    RatVector wall(dim, Rational(0));
    wall[k] = -1;
    all.push_back(std::move(wall));
  }
  a.total = all.size();
  // Free variables as differences of nonnegative ones.
  auto split = [](const RatVector& v) {
    RatVector out = v;
    for (const auto& x : v) out.push_back(-x);
    return out;
  };
  std::vector<bool> redundant(all.size(), false);
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::vector<RatVector> given;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != k && !redundant[j]) given.push_back(split(all[j]));
    redundant[k] = implied(given, split(all[k]));
    if (redundant[k]) ++(k < sys.inequalities.size() ? a.redundant_inequalities : a.redundant_walls);
  }
  return a;
}

EquivalenceReport compare_systems(const InequalitySystem& a, const InequalitySystem& b) {
  auto kept = [](const InequalitySystem& s) {
    std::vector<RatVector> out;
    for (const auto& f : s.inequalities) out.push_back(flatten(f));
    return out;
  };
  const auto fa = kept(a), fb = kept(b);
  EquivalenceReport r;
  for (const auto& f : fa) r.first_not_implied += !implied(fb, f);
  for (const auto& f : fb) r.second_not_implied += !implied(fa, f);
  return r;
}

std::string to_json(const WeylGroup& group, const InequalitySystem& sys) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["type"] = sys.type.label();
  j["s"] = sys.s;
  j["mode"] = to_string(sys.mode);
  j["pruned"] = sys.pruned;
  ordered_json list = ordered_json::array();
  for (const auto& f : sys.inequalities) {
    ordered_json e;
    e["parabolic"] = f.maximal + 1;
    ordered_json words = ordered_json::array();
    for (ElementId w : f.tuple) words.push_back(word_string(group, w));
    e["tuple"] = words;
    ordered_json fun = ordered_json::array();
    for (const auto& v : f.functional) {
      ordered_json row = ordered_json::array();
      for (const auto& x : v) row.push_back(to_string(x));
      fun.push_back(row);
    }
    e["functional"] = fun;
    if (sys.pruned) e["redundant"] = f.redundant;
    list.push_back(e);
  }
  j["inequalities"] = list;
  return j.dump(1);
}

InequalitySystem system_from_json(const WeylGroup& group, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed system file: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw InvalidInput("unsupported schema version");
    InequalitySystem sys;
    sys.type = CartanType::parse(j.at("type").get<std::string>());
    if (!group.roots().type() || *group.roots().type() != sys.type)
      throw InvalidInput("system file is for " + sys.type.label() + ", not " + group.roots().label());
    sys.s = j.at("s").get<int>();
    sys.mode = parse_mode(j.at("mode").get<std::string>());
    sys.pruned = j.value("pruned", false);
    for (const auto& e : j.at("inequalities")) {
      Inequality f;
      f.maximal = e.at("parabolic").get<int>() - 1;
      if (f.maximal < 0 || f.maximal >= group.rank()) throw InvalidInput("parabolic index out of range");
      for (const auto& w : e.at("tuple")) f.tuple.push_back(parse_word(group, w.get<std::string>()));
      if (static_cast<int>(f.tuple.size()) != sys.s) throw InvalidInput("tuple length differs from s");
      for (const auto& row : e.at("functional")) {
        RatVector v;
        for (const auto& x : row) v.push_back(parse_rational(x.get<std::string>()));
        f.functional.push_back(std::move(v));
      }
      if (f.functional != inequality_functional(group, f.maximal, f.tuple))
        throw InvalidInput("functional does not match its generating tuple");
      f.redundant = e.value("redundant", false);
      sys.inequalities.push_back(std::move(f));
    }
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed system file: ") + e.what());
  }
}

}  // namespace flagcoh
