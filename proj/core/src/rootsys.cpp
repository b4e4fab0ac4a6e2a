#include "flagcoh/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace flagcoh {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (rank > 16) ok = false;
  if (!ok) {
    throw InvalidInput("inadmissible Cartan type " + label() + ": rank " + std::to_string(rank) +
                       " is not allowed for family " + family_letter(family));
  }
}

std::string CartanType::label() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

CartanType CartanType::parse(const std::string& family, int rank) {
  if (family.size() != 1) throw InvalidInput("unknown Cartan family '" + family + "'");
  CartanType t;
  switch (std::toupper(static_cast<unsigned char>(family[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw InvalidInput("unknown Cartan family '" + family + "'");
  }
  t.rank = rank;
  t.validate();
  return t;
}

CartanType CartanType::parse(const std::string& label) {
  if (label.size() < 2) throw InvalidInput("malformed Cartan type '" + label + "'");
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) throw InvalidInput("malformed Cartan type '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
  }
  return parse(label.substr(0, 1), rank);
}

ParabolicIndex ParabolicIndex::maximal(int rank, int removed) {
  if (removed < 0 || removed >= rank) {
    throw InvalidInput("maximal parabolic index " + std::to_string(removed + 1) + " out of range 1.." +
                       std::to_string(rank));
  }
  return ParabolicIndex(((1u << rank) - 1) & ~(1u << removed));
}

ParabolicIndex ParabolicIndex::from_levi(int rank, const std::vector<int>& levi_simples) {
  std::uint32_t mask = 0;
  for (int i : levi_simples) {
    if (i < 0 || i >= rank) {
      throw InvalidInput("Levi simple root " + std::to_string(i + 1) + " out of range 1.." + std::to_string(rank));
    }
    mask |= 1u << i;
  }
  return ParabolicIndex(mask);
}

std::vector<int> ParabolicIndex::levi_simples(int rank) const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> ParabolicIndex::outside(int rank) const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

std::string ParabolicIndex::label(int rank) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : levi_simples(rank)) {
    if (!first) os << ',';
    os << i + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

void require_same_basis(const Weight& a, const Weight& b) {
  if (a.basis != b.basis || a.coords.size() != b.coords.size())
    throw InvalidInput("weight arithmetic across different bases or ranks");
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
  require_same_basis(a, b);
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  require_same_basis(a, b);
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Weight operator*(const Rational& c, const Weight& a) {
  Weight r = a;
  for (auto& x : r.coords) x *= c;
  return r;
}

Coweight operator+(const Coweight& a, const Coweight& b) {
  Coweight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Coweight operator-(const Coweight& a, const Coweight& b) {
  Coweight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Coweight operator*(const Rational& c, const Coweight& a) {
  Coweight r = a;
  for (auto& x : r.coords) x *= c;
  return r;
}

IntMatrix gram_matrix(const CartanType& type) {
  type.validate();
  const int n = type.rank;
  IntMatrix g(n, IntVector(n, 0));
  auto link = [&](int i, int j, std::int64_t v) { g[i][j] = g[j][i] = v; };
  switch (type.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 0; i < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:  // alpha_n long
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:  // alpha_1 short
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

RootSystem RootSystem::build(const CartanType& type) {
  RootSystem rs = from_gram(gram_matrix(type), type.label());
  rs.type_ = type;
  return rs;
}

RootSystem RootSystem::from_gram(const IntMatrix& gram, std::string label) {
  RootSystem rs;
  rs.label_ = std::move(label);
  rs.gram_ = gram;
  const int n = static_cast<int>(gram.size());
  rs.cartan_.assign(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(gram[i].size()) != n) throw InvalidInput("Gram matrix is not square");
    if (gram[i][i] <= 0) throw InvalidInput("Gram matrix has non-positive diagonal");
    for (int j = 0; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw InvalidInput("Gram matrix is not symmetric");
      if ((2 * gram[i][j]) % gram[i][i] != 0) throw InvalidInput("Gram matrix is not crystallographic");
      rs.cartan_[i][j] = 2 * gram[i][j] / gram[i][i];
    }
  }
  RatMatrix cm(n, RatVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cm[i][j] = rs.cartan_[i][j];
  rs.cartan_inverse_ = inverse(cm);

  // Reflection closure starting from the simple roots.
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  const std::size_t closure_cap = 100000;
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVector img = rs.reflect(i, beta);
      bool positive = std::all_of(img.begin(), img.end(), [](auto x) { return x >= 0; });
      if (positive && seen.insert(img).second) {
        queue.push_back(img);
        if (seen.size() > closure_cap) throw InvalidInput("reflection closure does not terminate; form not positive definite?");
      }
    }
  }
  rs.positive_.assign(seen.begin(), seen.end());
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const IntVector& a, const IntVector& b) {
    auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (int k = 0; k < static_cast<int>(rs.positive_.size()); ++k) rs.index_[rs.positive_[k]] = k;
  rs.simple_pos_.resize(n);
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    rs.simple_pos_[i] = rs.index_.at(e);
  }
  return rs;
}

int RootSystem::positive_root_index(const IntVector& root) const {
  auto it = index_.find(root);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const IntVector& v) const {
  if (positive_root_index(v) >= 0) return true;
  IntVector neg(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  return positive_root_index(neg) >= 0;
}

std::int64_t RootSystem::inner(const IntVector& a, const IntVector& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  const Weight ra = to_root_basis(a);
  const Weight rb = to_root_basis(b);
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += ra.coords[i] * gram_[i][j] * rb.coords[j];
  return s;
}

IntVector RootSystem::reflect(int i, const IntVector& v) const {
  std::int64_t c = 0;
  for (int j = 0; j < rank(); ++j) c += cartan_[i][j] * v[j];
  IntVector out = v;
  out[i] -= c;
  return out;
}

RatVector RootSystem::reflect(int i, const RatVector& v) const {
  Rational c = 0;
  for (int j = 0; j < rank(); ++j) c += cartan_[i][j] * v[j];
  RatVector out = v;
  out[i] -= c;
  return out;
}

Coweight RootSystem::reflect(int i, const Coweight& h) const {
  // s_i(h) = h - alpha_i(h) alpha_i^vee, alpha_i(alpha_k^vee) = cartan[k][i].
  Rational a = 0;
  for (int k = 0; k < rank(); ++k) a += h.coords[k] * cartan_[k][i];
  Coweight out = h;
  out.coords[i] -= a;
  return out;
}

Weight RootSystem::rho() const { return rho(ParabolicIndex::whole(rank())); }

Weight RootSystem::rho(const ParabolicIndex& levi) const {
  Weight r{RatVector(rank(), Rational(0)), WeightBasis::SimpleRoot};
  for (const auto& beta : positive_) {
    bool inside = true;
    for (int i = 0; i < rank(); ++i)
      if (beta[i] != 0 && !levi.contains(i)) inside = false;
    if (!inside) continue;
    for (int i = 0; i < rank(); ++i) r.coords[i] += beta[i];
  }
  for (auto& x : r.coords) x /= 2;
  return r;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w{RatVector(rank()), WeightBasis::SimpleRoot};
  for (int k = 0; k < rank(); ++k) w.coords[k] = cartan_inverse_[k][i];
  return w;
}

Coweight RootSystem::fundamental_coweight(int i) const {
  Coweight h{RatVector(rank())};
  for (int k = 0; k < rank(); ++k) h.coords[k] = cartan_inverse_[i][k];
  return h;
}

Coweight RootSystem::simple_coroot(int i) const {
  Coweight h{RatVector(rank(), Rational(0))};
  h.coords[i] = 1;
  return h;
}

Weight RootSystem::simple_root(int i) const {
  Weight w{RatVector(rank(), Rational(0)), WeightBasis::SimpleRoot};
  w.coords[i] = 1;
  return w;
}

Weight RootSystem::root(const IntVector& v) const { return Weight{to_rational(v), WeightBasis::SimpleRoot}; }

Weight RootSystem::to_root_basis(const Weight& w) const {
  if (w.basis == WeightBasis::SimpleRoot) return w;
  // m_j = sum_k c_k cartan[j][k]  =>  c = cartan^{-1} m.
  Weight r{RatVector(rank(), Rational(0)), WeightBasis::SimpleRoot};
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) r.coords[k] += cartan_inverse_[k][j] * w.coords[j];
  return r;
}

Weight RootSystem::to_weight_basis(const Weight& w) const {
  if (w.basis == WeightBasis::FundamentalWeight) return w;
  Weight r{RatVector(rank(), Rational(0)), WeightBasis::FundamentalWeight};
  for (int j = 0; j < rank(); ++j)
    for (int k = 0; k < rank(); ++k) r.coords[j] += cartan_[j][k] * w.coords[k];
  return r;
}

Rational RootSystem::pair(const Weight& w, const Coweight& h) const {
  const Weight m = to_weight_basis(w);
  Rational s = 0;
  for (int j = 0; j < rank(); ++j) s += m.coords[j] * h.coords[j];
  return s;
}

Weight RootSystem::coweight_to_weight(const Coweight& h) const {
  Weight w{RatVector(rank()), WeightBasis::SimpleRoot};
  for (int k = 0; k < rank(); ++k) w.coords[k] = h.coords[k] * 2 / Rational(gram_[k][k]);
  return w;
}

Coweight RootSystem::weight_to_coweight(const Weight& w) const {
  const Weight r = to_root_basis(w);
  Coweight h{RatVector(rank())};
  for (int k = 0; k < rank(); ++k) h.coords[k] = r.coords[k] * Rational(gram_[k][k]) / 2;
  return h;
}

LeviSubsystem RootSystem::levi_subsystem(const ParabolicIndex& p) const {
  const auto simples = p.levi_simples(rank());
  const int m = static_cast<int>(simples.size());
  IntMatrix g(m, IntVector(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g[a][b] = gram_[simples[a]][simples[b]];
  LeviSubsystem levi{from_gram(g, label_ + "|L" + p.label(rank())), simples, {}};
  for (const auto& sub : levi.system.positive_roots()) {
    int idx = positive_root_index(levi.lift(sub, rank()));
    FLAGCOH_CHECK(idx >= 0, "Levi root does not lift to an ambient root");
    levi.root_map.push_back(idx);
  }
  return levi;
}

std::int64_t RootSystem::highest_root_coefficient(int i) const {
  std::int64_t best = 0;
  for (const auto& beta : positive_) best = std::max(best, beta[i]);
  return best;
}

IntVector LeviSubsystem::lift(const IntVector& sub, int ambient_rank) const {
  IntVector out(ambient_rank, 0);
  for (std::size_t a = 0; a < sub.size(); ++a) out[simple_map[a]] = sub[a];
  return out;
}

}  // namespace flagcoh
