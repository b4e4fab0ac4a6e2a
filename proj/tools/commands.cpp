#include "commands.hpp"

#include "flagcoh/cache.hpp"
#include "flagcoh/eigencone.hpp"
#include "flagcoh/golden.hpp"
#include "flagcoh/horn.hpp"
#include "flagcoh/liecoh.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace flagcoh::cli {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string word(const WeylGroup& g, ElementId w) {
  std::string s;
  for (int i : g.reduced_word(w)) s += std::to_string(i + 1);
  return s.empty() ? "e" : s;
}

std::string vec(const IntVector& v) {
  std::vector<std::string> p;
  for (auto x : v) p.push_back(std::to_string(x));
  return "(" + join(p, ",") + ")";
}

std::string vec(const RatVector& v) {
  std::vector<std::string> p;
  for (const auto& x : v) p.push_back(to_string(x));
  return "(" + join(p, ",") + ")";
}

CartanType parse_type(const JobSpec& spec) {
  if (spec.type.empty()) throw InvalidInput("--type is required");
  if (spec.type.size() > 1) {
    const auto t = CartanType::parse(spec.type);
    if (spec.rank && spec.rank != t.rank) throw InvalidInput("--rank disagrees with --type " + spec.type);
    return t;
  }
  if (!spec.rank) throw InvalidInput("--rank is required with a one-letter --type");
  return CartanType::parse(spec.type, spec.rank);
}

ParabolicIndex parse_levi_list(const std::string& text, int rank) {
  std::vector<int> simples;
  std::string cleaned;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') cleaned += c;
  std::stringstream in(cleaned);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidInput("malformed simple-root index '" + tok + "'");
    }
    if (i < 1 || i > rank) throw InvalidInput("simple-root index " + tok + " out of range 1.." + std::to_string(rank));
    simples.push_back(i - 1);
  }
  return ParabolicIndex::from_levi(rank, simples);
}

ParabolicIndex parse_parabolic(const JobSpec& spec, int rank, std::optional<ParabolicIndex> fallback) {
  if (!spec.levi.empty() && !spec.parabolic.empty()) throw InvalidInput("give either --parabolic or --levi");
  if (!spec.levi.empty()) return parse_levi_list(spec.levi, rank);
  const std::string& p = spec.parabolic;
  if (p.empty()) {
    if (fallback) return *fallback;
    throw InvalidInput("--parabolic or --levi is required");
  }
  if (p == "borel" || p == "B") return ParabolicIndex::borel();
  if (p == "whole" || p == "G") return ParabolicIndex::whole(rank);
  int i = 0;
  try {
    std::size_t used = 0;
    i = std::stoi(p, &used);
    if (used != p.size()) throw std::invalid_argument(p);
  } catch (const std::exception&) {
    throw InvalidInput("malformed --parabolic '" + p + "' (expected a simple-root index, borel or whole)");
  }
  if (i < 1 || i > rank) throw InvalidInput("--parabolic " + p + " out of range 1.." + std::to_string(rank));
  return ParabolicIndex::maximal(rank, i - 1);
}

ElementId parse_element(const WeylGroup& g, const std::string& text) {
  if (text == "e" || text.empty()) return g.identity();
  std::vector<int> w;
  for (char c : text) {
    if (c == '.' || c == ' ') continue;
    if (c < '1' || c > '9') throw InvalidInput("malformed reduced word '" + text + "'");
    w.push_back(c - '1');
  }
  const ElementId id = g.from_word(w);
  if (g.length(id) != static_cast<int>(w.size())) throw InvalidInput("word '" + text + "' is not reduced");
  return id;
}

std::vector<ElementId> parse_tuple(const WeylGroup& g, const std::vector<std::string>& words,
                                   const std::optional<ParabolicIndex>& p) {
  std::vector<ElementId> out;
  for (const auto& w : words) {
    const ElementId id = parse_element(g, w);
    if (p && !g.in_min_reps(id, *p))
      throw InvalidInput("element " + w + " is not a minimal coset representative for " + p->label(g.rank()));
    out.push_back(id);
  }
  return out;
}

std::string parabolic_name(const ParabolicIndex& p, int rank) {
  const auto out = p.outside(rank);
  if (out.size() == 1) return "P" + std::to_string(out[0] + 1) + " levi=" + p.label(rank);
  if (out.empty()) return "G levi=" + p.label(rank);
  return "levi=" + p.label(rank);
}

// Class names for W^P: reference labels when a bundled table matches,
// otherwise the reduced word.
std::map<ElementId, std::string> class_names(const Workspace& ws, const ParabolicIndex& p) {
  const auto& q = ws.quotient(p);
  std::map<ElementId, std::string> names;
  for (ElementId w : q.elements()) names[w] = "[" + word(ws.group(), w) + "]";
  if (!ws.roots().type()) return names;
  for (const auto& t : bundled_golden_tables()) {
    if (t.type != *ws.roots().type() || t.parabolic() != p) continue;
    const auto r = verify_golden(ws, t);
    if (!r.passed) continue;
    for (const auto& [label, w] : r.bijection) names[w] = label;
    names[q.element(q.top())] = "1";
  }
  return names;
}

std::string render_class(const std::map<int, BigInt>& c, const ParabolicQuotient& q,
                         const std::map<ElementId, std::string>& names) {
  if (c.empty()) return "0";
  std::map<ElementId, BigInt> by_element;
  for (const auto& [k, coeff] : c) by_element[q.element(k)] = coeff;
  std::vector<std::string> parts;
  for (const auto& [w, coeff] : by_element) {
    const std::string name = names.at(w);
    parts.push_back(coeff == 1 ? name : to_string(coeff) + "*" + name);
  }
  return join(parts, " + ");
}

struct Context {
  const JobSpec& spec;
  std::unique_ptr<Workspace> ws;
  Document doc;

  explicit Context(const JobSpec& s) : spec(s), doc(s.command, s.echo()) {}

  Workspace& workspace() {
    if (!ws) {
      WorkspaceOptions opts;
      opts.threads = spec.threads;
      if (spec.weyl_cap) opts.weyl_cap = spec.weyl_cap;
      if (spec.cache_dir) opts.cache_dir = *spec.cache_dir;
      ws = std::make_unique<Workspace>(parse_type(spec), opts);
    }
    return *ws;
  }
};

int cmd_roots(Context& c) {
  auto& ws = c.workspace();
  const auto& rs = ws.roots();
  const auto p = parse_parabolic(c.spec, rs.rank(), ParabolicIndex::borel());
  c.doc.note("rank", std::to_string(rs.rank()));
  c.doc.note("positive roots", std::to_string(rs.num_positive_roots()));
  c.doc.note("rho", vec(rs.rho().coords));
  c.doc.note("rho (weight basis)", vec(rs.to_weight_basis(rs.rho()).coords));
  auto& cartan = c.doc.table("cartan", {"i", "row"});
  for (int i = 0; i < rs.rank(); ++i) cartan.add({std::to_string(i + 1), vec(rs.cartan()[i])});
  auto& t = c.doc.table("positive roots", {"index", "root", "height", "(beta,beta)", "in levi"});
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const auto& r = rs.positive_roots()[k];
    std::int64_t h = 0;
    for (auto x : r) h += x;
    t.add({std::to_string(k + 1), vec(r), std::to_string(h), std::to_string(rs.inner(r, r)),
           in_levi(rs, k, p) ? "yes" : "no"});
  }
  return kOk;
}

int cmd_weyl(Context& c) {
  auto& ws = c.workspace();
  const auto& g = ws.group();
  c.doc.note("order", std::to_string(g.size()));
  c.doc.note("longest element", word(g, g.longest()));
  if (c.spec.parabolic.empty() && c.spec.levi.empty()) return kOk;
  const auto p = parse_parabolic(c.spec, g.rank(), std::nullopt);
  const auto& q = ws.quotient(p);
  const auto& chars = ws.characters(p);
  c.doc.note("parabolic", parabolic_name(p, g.rank()));
  c.doc.note("dim G/P", std::to_string(q.dimension()));
  std::vector<std::string> profile;
  for (int d : q.degree_profile()) profile.push_back(std::to_string(d));
  c.doc.note("elements by length", join(profile, " "));
  auto& t = c.doc.table("minimal coset representatives",
                        {"position", "word", "length", "codim", "dual", "chi (root basis)"});
  for (int k = 0; k < static_cast<int>(q.size()); ++k)
    t.add({std::to_string(k), word(g, q.element(k)), std::to_string(q.length(k)), std::to_string(q.codimension(k)),
           word(g, q.element(q.dual(k))), vec(chars.chi(k))});
  return kOk;
}

int cmd_product(Context& c) {
  auto& ws = c.workspace();
  const auto& g = ws.group();
  const auto p = parse_parabolic(c.spec, g.rank(), ParabolicIndex::borel());
  const auto& q = ws.quotient(p);
  const auto t = parse_tuple(g, {c.spec.u, c.spec.v}, p);
  const auto names = class_names(ws, p);
  c.doc.note("parabolic", parabolic_name(p, g.rank()));
  c.doc.note("u", names.at(t[0]));
  c.doc.note("v", names.at(t[1]));
  auto& tab = c.doc.table("product", {"product", "result"});
  tab.add({"cup", render_class(classical_product(ws, p, {q.index_of(t[0]), q.index_of(t[1])}), q, names)});
  tab.add({"deformed", to_string(deformed_product(ws, p, t[0], t[1]), names)});
  const auto zero = product0(ws, p, t[0], t[1]);
  std::map<int, BigInt> z;
  for (const auto& [w, coeff] : zero.coeffs) z[q.index_of(w)] = coeff;
  tab.add({"deformed at tau=0", render_class(z, q, names)});
  return kOk;
}

int cmd_deform_table(Context& c) {
  auto& ws = c.workspace();
  const auto& g = ws.group();
  const auto p = parse_parabolic(c.spec, g.rank(), std::nullopt);
  const auto& q = ws.quotient(p);
  const auto names = class_names(ws, p);
  c.doc.note("parabolic", parabolic_name(p, g.rank()));
  c.doc.note("classes", std::to_string(q.size()));
  // Rows and columns by increasing codimension, the identity omitted.
  std::vector<int> order;
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k)
    if (k != q.top()) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (q.codimension(a) != q.codimension(b)) return q.codimension(a) < q.codimension(b);
    return names.at(q.element(a)) < names.at(q.element(b));
  });
  auto& cls = c.doc.table("classes", {"label", "word", "codim", "chi (root basis)"});
  for (int k : order) cls.add({names.at(q.element(k)), word(g, q.element(k)), std::to_string(q.codimension(k)),
                               vec(ws.characters(p).chi(k))});
  auto& t = c.doc.table("deformed product", {"row", "column", "product"});
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a; b < order.size(); ++b) {
      const ElementId u = q.element(order[a]), v = q.element(order[b]);
      t.add({names.at(u), names.at(v), to_string(deformed_product(ws, p, u, v), names)});
    }
  return kOk;
}

int cmd_lmovable(Context& c) {
  auto& ws = c.workspace();
  const auto& g = ws.group();
  const auto p = parse_parabolic(c.spec, g.rank(), std::nullopt);
  const auto tuple = parse_tuple(g, c.spec.tuple, p);
  const auto r = is_L_movable(ws, p, tuple);
  c.doc.note("parabolic", parabolic_name(p, g.rank()));
  c.doc.note("tuple", join(c.spec.tuple, ","));
  c.doc.note("d", to_string(r.d));
  c.doc.note("L-movable", r.movable ? "yes" : "no");
  auto& t = c.doc.table("character defects", {"i", "((sum chi_w) - chi_1)(x_i)"});
  for (std::size_t k = 0; k < r.outside.size(); ++k) t.add({std::to_string(r.outside[k] + 1), std::to_string(r.defect[k])});
  return kOk;
}

void add_report(Document& doc, const HornReport& r, const std::string& title) {
  auto& t = doc.table(title, {"kind", "lhs", "relation", "rhs", "pass", "data"});
  for (const auto& ch : r.checks)
    t.add({to_string(ch.kind), to_string(ch.lhs), to_string(ch.relation), to_string(ch.rhs), ch.passed ? "yes" : "NO",
           ch.datum});
}

int cmd_horn_check(Context& c) {
  auto& ws = c.workspace();
  const auto& g = ws.group();
  const int n = g.rank();
  const auto p = parse_parabolic(c.spec, n, std::nullopt);
  const auto tuple = parse_tuple(g, c.spec.tuple, p);
  HornEngine engine(ws);
  c.doc.note("parabolic", parabolic_name(p, n));
  c.doc.note("tuple", join(c.spec.tuple, ","));
  std::size_t violations = 0;
  auto t2 = [&] {
    const auto r = engine.check_T2(p, tuple);
    c.doc.note("d", to_string(r.d));
    if (!r.applicable) c.doc.note("T2", r.note);
    add_report(c.doc, r, "T2 inequalities");
    violations += r.violations();
  };
  auto t2prime = [&] {
    const auto r = engine.check_T2prime(p, tuple);
    add_report(c.doc, r, "T2' inequalities");
    violations += r.violations();
  };
  if (c.spec.check == "t2") {
    t2();
  } else if (c.spec.check == "t2prime") {
    t2prime();
  } else if (c.spec.check == "all") {
    t2();
    const auto lm = is_L_movable(ws, p, tuple);
    if (lm.movable) t2prime();
    else c.doc.note("T2'", "skipped: tuple is not L-movable");
  } else if (c.spec.check == "dimension") {
    if (c.spec.q.empty() || c.spec.qhat.empty()) throw InvalidInput("--q and --qhat are required for --check dimension");
    const auto q = parse_levi_list(c.spec.q, n);
    const auto qhat = parse_levi_list(c.spec.qhat, n);
    std::vector<ElementId> u;
    if (c.spec.utuple.empty()) u.assign(tuple.size(), g.identity());
    else u = parse_tuple(g, c.spec.utuple, std::nullopt);
    const auto r = engine.check_dimension(p, tuple, q, qhat, u);
    add_report(c.doc, r, "dimension inequalities");
    violations += r.violations();
  } else {
    throw InvalidInput("unknown --check '" + c.spec.check + "' (t2, t2prime, dimension, all)");
  }
  c.doc.note("violations", std::to_string(violations));
  if (violations) {
    c.doc.status("violated");
    return kMismatch;
  }
  return kOk;
}

void summarize(Document& doc, const InequalitySystem& sys, const std::string& title) {
  auto& t = doc.table(title, {"parabolic", "inequalities", "redundant"});
  std::map<int, std::size_t> red;
  for (const auto& f : sys.inequalities) red[f.maximal] += f.redundant;
  for (const auto& [k, n] : sys.counts_by_parabolic())
    t.add({"P" + std::to_string(k + 1), std::to_string(n), sys.pruned ? std::to_string(red[k]) : "-"});
  t.add({"total", std::to_string(sys.inequalities.size()), sys.pruned ? std::to_string(sys.redundant_count()) : "-"});
}

void list_inequalities(Document& doc, const WeylGroup& g, const InequalitySystem& sys) {
  auto& t = doc.table("inequalities", {"index", "parabolic", "tuple", "functional", "redundant"});
  for (std::size_t k = 0; k < sys.inequalities.size(); ++k) {
    const auto& f = sys.inequalities[k];
    std::vector<std::string> words, fun;
    for (ElementId w : f.tuple) words.push_back(word(g, w));
    for (const auto& v : f.functional) fun.push_back(vec(v));
    t.add({std::to_string(k + 1), "P" + std::to_string(f.maximal + 1), join(words, ","), join(fun, " "),
           sys.pruned ? (f.redundant ? "yes" : "no") : "-"});
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

int cmd_eigencone(Context& c) {
  auto& ws = c.workspace();
  const auto& g = ws.group();
  EnumerationOptions opts;
  opts.threads = c.spec.threads;
  opts.relaxed = c.spec.relaxed;
  auto sys = generate_system(ws, c.spec.s, parse_mode(c.spec.mode), opts);
  if (c.spec.prune) sys = prune_redundant(std::move(sys));
  summarize(c.doc, sys, "summary");
  if (c.spec.prune) {
    const auto audit = audit_with_chamber_walls(sys);
    c.doc.note("with chamber walls", std::to_string(audit.total) + " inequalities, " +
                                         std::to_string(audit.redundant_inequalities + audit.redundant_walls) +
                                         " redundant (" + std::to_string(audit.redundant_walls) + " walls)");
  }
  list_inequalities(c.doc, g, sys);
  if (!c.spec.output.empty()) write_file(c.spec.output, to_json(g, sys));
  return kOk;
}

int cmd_redundancy(Context& c) {
  if (c.spec.input.empty()) throw InvalidInput("--input is required");
  std::ifstream in(c.spec.input);
  if (!in) throw InvalidInput("cannot read '" + c.spec.input + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  JobSpec spec = c.spec;
  if (spec.type.empty()) {
    try {
      spec.type = nlohmann::json::parse(text).at("type").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed system file: ") + e.what());
    }
  }
  WorkspaceOptions opts;
  Workspace ws(parse_type(spec), opts);
  auto sys = prune_redundant(system_from_json(ws.group(), text));
  summarize(c.doc, sys, "summary");
  list_inequalities(c.doc, ws.group(), sys);
  if (!c.spec.output.empty()) write_file(c.spec.output, to_json(ws.group(), sys));
  return kOk;
}

int cmd_leviprod_check(Context& c) {
  auto& ws = c.workspace();
  const auto r = crosscheck_gb(ws);
  auto& t = c.doc.table("G/B crosscheck", {"system", "pairs", "agreeing", "detail"});
  t.add({r.label, std::to_string(r.pairs), std::to_string(r.agreeing), r.detail.empty() ? "-" : r.detail});
  if (!r.passed()) {
    c.doc.status("mismatch");
    return kMismatch;
  }
  return kOk;
}

int cmd_verify_golden(Context& c) {
  bool all = true, any = false;
  auto& t = c.doc.table("tables", {"table", "type", "parabolic", "entries", "bijections tried", "matching", "result"});
  std::vector<std::pair<std::string, GoldenReport>> reports;
  for (const auto& table : bundled_golden_tables()) {
    if (!c.spec.table.empty() && c.spec.table != table.name) continue;
    any = true;
    WorkspaceOptions opts;
    opts.threads = c.spec.threads;
    if (c.spec.cache_dir) opts.cache_dir = *c.spec.cache_dir;
    Workspace ws(table.type, opts);
    const auto r = verify_golden(ws, table);
    all = all && r.passed;
    t.add({table.name, table.type.label(), "P" + std::to_string(table.maximal), std::to_string(r.entries),
           std::to_string(r.bijections_tried), std::to_string(r.bijections_matching), r.passed ? "pass" : "FAIL"});
    auto& b = c.doc.table(table.name + " labels", {"label", "word"});
    for (const auto& [label, w] : r.bijection) b.add({label, word(ws.group(), w)});
    if (!r.diffs.empty()) {
      auto& d = c.doc.table(table.name + " differences", {"entry"});
      for (const auto& line : r.diffs) d.add({line});
    }
  }
  if (!any) throw InvalidInput("no bundled table named '" + c.spec.table + "'");
  if (!all) {
    c.doc.status("mismatch");
    return kMismatch;
  }
  return kOk;
}

int cmd_converse(Context& c) {
  auto& ws = c.workspace();
  const auto& g = ws.group();
  const auto p = parse_parabolic(c.spec, g.rank(), std::nullopt);
  HornEngine engine(ws);
  const auto r = horn_converse_experiment(engine, p, c.spec.s, static_cast<std::size_t>(c.spec.max_examples));
  c.doc.note("parabolic", parabolic_name(p, g.rank()));
  c.doc.note("tuples examined", std::to_string(r.tuples_examined));
  c.doc.note("zero products", std::to_string(r.zero_products));
  c.doc.note("zero products passing every T2 inequality", std::to_string(r.zero_but_passing));
  auto& t = c.doc.table("examples", {"tuple"});
  for (const auto& e : r.examples) {
    std::vector<std::string> words;
    for (ElementId w : e.tuple) words.push_back(word(g, w));
    t.add({join(words, ",")});
  }
  return kOk;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> JobSpec::echo() const {
  std::vector<std::pair<std::string, std::string>> out = {{"command", command}};
  if (!type.empty()) out.emplace_back("type", type);
  if (rank) out.emplace_back("rank", std::to_string(rank));
  if (!parabolic.empty()) out.emplace_back("parabolic", parabolic);
  if (!levi.empty()) out.emplace_back("levi", levi);
  if (command == "eigencone" || command == "horn-converse-experiment") out.emplace_back("s", std::to_string(s));
  if (command == "eigencone") out.emplace_back("mode", mode);
  if (!tuple.empty()) out.emplace_back("tuple", join(tuple, ","));
  if (!u.empty() || !v.empty()) out.emplace_back("u,v", u + "," + v);
  if (command == "horn-check") out.emplace_back("check", check);
  if (!q.empty()) out.emplace_back("q", q);
  if (!qhat.empty()) out.emplace_back("qhat", qhat);
  if (!utuple.empty()) out.emplace_back("utuple", join(utuple, ","));
  if (!input.empty()) out.emplace_back("input", input);
  if (!table.empty()) out.emplace_back("table", table);
  if (prune) out.emplace_back("prune", "yes");
  if (relaxed) out.emplace_back("relaxed", "yes");
  out.emplace_back("format", format);
  out.emplace_back("cache", cache_dir ? *cache_dir : "off");
  out.emplace_back("threads", std::to_string(threads));
  return out;
}

Result run(const JobSpec& spec) {
  const Format format = parse_format(spec.format);
  Context c(spec);
  int code = kOk;
  if (spec.command == "roots") code = cmd_roots(c);
  else if (spec.command == "weyl") code = cmd_weyl(c);
  else if (spec.command == "product") code = cmd_product(c);
  else if (spec.command == "deform-table") code = cmd_deform_table(c);
  else if (spec.command == "lmovable") code = cmd_lmovable(c);
  else if (spec.command == "horn-check") code = cmd_horn_check(c);
  else if (spec.command == "eigencone") code = cmd_eigencone(c);
  else if (spec.command == "redundancy") code = cmd_redundancy(c);
  else if (spec.command == "leviprod-check") code = cmd_leviprod_check(c);
  else if (spec.command == "verify-golden") code = cmd_verify_golden(c);
  else if (spec.command == "horn-converse-experiment") code = cmd_converse(c);
  else throw InvalidInput("unknown command '" + spec.command + "'");
  return {code, c.doc.render(format)};
}

}  // namespace flagcoh::cli
