#include "flagcoh/golden.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace flagcoh {

namespace detail {
const std::vector<std::pair<std::string, std::string>>& golden_sources();
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, const std::string& where) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidInput(where + ": expected an integer, got '" + s + "'");
  return v;
}

GoldenTerm parse_term(const std::vector<std::string>& tokens, const std::string& where) {
  GoldenTerm t;
  std::size_t k = 0;
  if (k < tokens.size() && std::all_of(tokens[k].begin(), tokens[k].end(), ::isdigit)) t.coeff = parse_int(tokens[k++], where);
  if (k < tokens.size() && tokens[k].rfind("tau", 0) == 0) {
    t.tau = 1;
    if (tokens[k].size() > 3) {
      if (tokens[k][3] != '^') throw InvalidInput(where + ": malformed tau power");
      t.tau = parse_int(tokens[k].substr(4), where);
    }
    ++k;
  }
  if (k + 1 != tokens.size()) throw InvalidInput(where + ": malformed term");
  t.label = tokens[k];
  return t;
}

// Deformed product as label -> (tau exponent -> coefficient).
using Expansion = std::map<std::string, std::map<int, std::int64_t>>;

Expansion expand(const GoldenEntry& e) {
  Expansion out;
  for (const auto& t : e.terms) out[t.label][t.tau] += t.coeff;
  return out;
}

std::string render(const Expansion& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [label, poly] : x)
    for (const auto& [tau, c] : poly) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += std::to_string(c) + " ";
      if (tau == 1) s += "tau ";
      if (tau > 1) s += "tau^" + std::to_string(tau) + " ";
      s += label;
    }
  return s;
}

}  // namespace

GoldenTable parse_golden(const std::string& text, const std::string& name) {
  GoldenTable t;
  t.name = name;
  std::istringstream in(text);
  bool have_type = false, have_max = false;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const std::string where = name + ":" + std::to_string(lineno);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "type" && tok.size() == 2) {
      t.type = CartanType::parse(tok[1]);
      have_type = true;
    } else if (tok[0] == "maximal" && tok.size() == 2) {
      t.maximal = parse_int(tok[1], where);
      have_max = true;
    } else if (tok[0] == "class" && tok.size() == 3) {
      t.classes.emplace_back(tok[1], parse_int(tok[2], where));
    } else if (tok.size() >= 4 && tok[2] == "=") {
      GoldenEntry e{tok[0], tok[1], {}, lineno};
      std::vector<std::string> rhs(tok.begin() + 3, tok.end());
      if (!(rhs.size() == 1 && rhs[0] == "0")) {
        std::vector<std::string> cur;
        for (std::size_t k = 0; k <= rhs.size(); ++k) {
          if (k == rhs.size() || rhs[k] == "+") {
            e.terms.push_back(parse_term(cur, where));
            cur.clear();
          } else {
            cur.push_back(rhs[k]);
          }
        }
      }
      t.entries.push_back(std::move(e));
    } else {
      throw InvalidInput(where + ": unrecognized line");
    }
  }
  if (!have_type || !have_max) throw InvalidInput(name + ": missing type or maximal declaration");
  if (t.maximal < 1 || t.maximal > t.type.rank) throw InvalidInput(name + ": maximal index out of range");
  auto known = [&](const std::string& l) {
    return std::any_of(t.classes.begin(), t.classes.end(), [&](const auto& c) { return c.first == l; });
  };
  for (const auto& e : t.entries) {
    bool ok = known(e.row) && known(e.column);
    for (const auto& term : e.terms) ok = ok && known(term.label);
    if (!ok) throw InvalidInput(name + ":" + std::to_string(e.line) + ": unknown class label");
  }
  return t;
}

std::vector<GoldenTable> bundled_golden_tables() {
  std::vector<GoldenTable> out;
  for (const auto& [name, text] : detail::golden_sources()) out.push_back(parse_golden(text, name));
  return out;
}

GoldenReport verify_golden(const Workspace& ws, const GoldenTable& table) {
  if (ws.roots().type() != table.type) throw InvalidInput("workspace type differs from golden table type");
  const ParabolicIndex p = table.parabolic();
  const auto& q = ws.quotient(p);
  const auto& deformed = ws.deformed(p);

  // Group labels and W^P positions by codimension.
  std::map<int, std::vector<std::string>> labels;
  for (const auto& [l, c] : table.classes) labels[c].push_back(l);
  std::map<int, std::vector<int>> positions;
  for (int k = 0; k < static_cast<int>(q.size()); ++k)
    if (q.codimension(k) > 0) positions[q.codimension(k)].push_back(k);
  GoldenReport report;
  report.name = table.name;
  report.entries = table.entries.size();
  bool shapes_agree = labels.size() == positions.size();
  for (const auto& [c, ls] : labels) shapes_agree = shapes_agree && positions[c].size() == ls.size();
  if (!shapes_agree) {
    report.diffs.push_back("class counts per codimension differ from W^P");
    return report;
  }

  std::vector<Expansion> expected;
  for (const auto& e : table.entries) expected.push_back(expand(e));

  std::vector<std::vector<int>> perms;
  for (auto& [c, pos] : positions) perms.push_back(pos);
  std::size_t best_mismatch = table.entries.size() + 1;

  auto evaluate = [&] {
    std::map<std::string, int> assign;
    std::map<int, std::string> name_of;
    std::size_t level = 0;
    for (const auto& [c, ls] : labels) {
      for (std::size_t k = 0; k < ls.size(); ++k) {
        assign[ls[k]] = perms[level][k];
        name_of[perms[level][k]] = ls[k];
      }
      ++level;
    }
    std::vector<std::string> diffs;
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
      const auto& e = table.entries[k];
      Expansion got;
      for (const auto& t : deformed.product(assign[e.row], assign[e.column])) {
        const int tau = t.exponent.empty() ? 0 : t.exponent[0];
        got[name_of.at(t.index)][tau] += t.coeff;
      }
      if (got != expected[k])
        diffs.push_back(e.row + " * " + e.column + ": expected " + render(expected[k]) + ", computed " + render(got));
    }
    ++report.bijections_tried;
    if (diffs.empty()) ++report.bijections_matching;
    if (diffs.size() < best_mismatch) {
      best_mismatch = diffs.size();
      report.diffs = diffs;
      report.bijection.clear();
      for (const auto& [l, k] : assign) report.bijection[l] = q.element(k);
    }
  };

  for (auto& v : perms) std::sort(v.begin(), v.end());
  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (level == perms.size()) {
      evaluate();
      return;
    }
    do {
      self(self, level + 1);
    } while (std::next_permutation(perms[level].begin(), perms[level].end()));
  };
  rec(rec, 0);
  report.passed = report.bijections_matching > 0;
  return report;
}

}  // namespace flagcoh
