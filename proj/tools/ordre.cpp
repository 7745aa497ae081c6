// Command-line front end: one subcommand per module, each with its own
// operations. Output is a JSON object (--json) or an indented key/value text
// rendering of the same object.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordre/ordre.hpp"

using json = nlohmann::ordered_json;
using namespace ordre;

namespace {

constexpr int kSchemaVersion = 1;

struct Config {
  bool json = false;
  std::uint64_t max_order = kDefaultOrderCap;
  std::uint64_t seed = 0;
  unsigned precision = 30;
};

std::string str(const Rational& q) { return q.str(); }
std::string str(const Integer& z) { return z.str(); }

json perm_json(const Permutation& s) { return format_cycles(s); }

json group_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& s : g.generators()) gens.push_back(format_cycles(s));
  return {{"degree", g.degree()}, {"generators", gens}, {"order", g.order()}};
}

json elt_json(const FieldElt& x) { return {{"index", x.index()}, {"coords", x.to_string()}}; }

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(detail::parse_rational(tok));
  if (out.empty()) fail(ErrorKind::ParseError, "empty list");
  return out;
}

std::string fmt_real(const Real50& x, unsigned digits) {
  if (boost::multiprecision::abs(x) < boost::multiprecision::pow(Real50(10), -static_cast<int>(digits))) return "0";
  return x.str(digits, std::ios_base::fmtflags(0));
}

// Text rendering: scalars inline, arrays of scalars comma-joined, nested
// objects indented.
void render(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto flat = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_primitive(); });
  };
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    if (x.is_object()) {
      os << pad << it.key() << ":\n";
      render(os, x, indent + 2);
    } else if (x.is_array() && flat(x)) {
      os << pad << it.key() << ": ";
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar(x[i]);
      os << "\n";
    } else if (x.is_array()) {
      os << pad << it.key() << ":\n";
      for (const auto& item : x) {
        if (item.is_object()) {
          os << pad << "  -\n";
          render(os, item, indent + 4);
        } else if (item.is_array() && flat(item)) {
          os << pad << "  - ";
          for (std::size_t i = 0; i < item.size(); ++i) os << (i ? ", " : "") << scalar(item[i]);
          os << "\n";
        } else {
          os << pad << "  - " << item.dump() << "\n";
        }
      }
    } else {
      os << pad << it.key() << ": " << scalar(x) << "\n";
    }
  }
}

// Each leaf subcommand registers a handler producing the result object.
struct Registry {
  std::vector<std::pair<CLI::App*, std::function<json()>>> handlers;
  void add(CLI::App* sub, std::function<json()> fn) { handlers.emplace_back(sub, std::move(fn)); }
};

void add_poly(CLI::App& app, Registry& reg, Config&) {
  auto* poly = app.add_subcommand("poly", "Polynomials: arithmetic, factoring, symmetric reduction");
  poly->require_subcommand(1);

  static std::string a, b, op = "add", f, perm;
  static std::uint64_t p = 0;
  static unsigned n = 0;

  auto* arith = poly->add_subcommand("arith", "Univariate add, mul, divrem or gcd");
  arith->add_option("--a", a, "First polynomial in x")->required();
  arith->add_option("--b", b, "Second polynomial in x")->required();
  arith->add_option("--op", op, "add | mul | divrem | gcd")->check(CLI::IsMember({"add", "mul", "divrem", "gcd"}));
  arith->add_option("-p,--prime", p, "Work modulo this prime (default: rationals)");
  reg.add(arith, [] {
    const Ring ring = p ? Ring::mod(p) : Ring::rationals();
    const auto x = parse_unipoly(a, ring), y = parse_unipoly(b, ring);
    const UniOp which = op == "add" ? UniOp::add : op == "mul" ? UniOp::mul : op == "divrem" ? UniOp::divrem : UniOp::gcd;
    const auto [r0, r1] = uni_arith(x, y, which);
    if (which == UniOp::divrem) return json{{"quotient", r0.to_string()}, {"remainder", r1.to_string()}};
    return json{{"result", r0.to_string()}};
  });

  auto* factor = poly->add_subcommand("factor", "Factor into monic irreducibles mod p");
  factor->add_option("-f,--poly", f, "Polynomial in x")->required();
  factor->add_option("-p,--prime", p, "Prime modulus")->required();
  reg.add(factor, [] {
    json out = json::array();
    for (const auto& fac : uni_factor_modp(parse_unipoly(f, Ring::mod(p))))
      out.push_back({{"factor", fac.factor.to_string()}, {"multiplicity", fac.multiplicity}});
    return json{{"factors", out}};
  });

  auto* sym = poly->add_subcommand("symreduce", "Rewrite a symmetric polynomial in e1..en");
  sym->add_option("-f,--poly", f, "Polynomial in x1..xn")->required();
  sym->add_option("-n,--vars", n, "Variable count (default: largest index)");
  reg.add(sym, [] {
    const auto g = symmetric_reduce(parse_multipoly(f, n));
    return json{{"reduced", g.to_string("e")}};
  });

  auto* act = poly->add_subcommand("act", "Apply a permutation of the variables");
  act->add_option("-f,--poly", f, "Polynomial in x1..xn")->required();
  act->add_option("--perm", perm, "Permutation in cycle notation, 0-based")->required();
  act->add_option("-n,--vars", n, "Variable count (default: largest index)");
  reg.add(act, [] {
    const auto g = parse_multipoly(f, n);
    return json{{"result", act_perm(g, parse_permutation(perm, g.nvars())).to_string()}};
  });
}

void add_gf(CLI::App& app, Registry& reg, Config&) {
  auto* gf = app.add_subcommand("gf", "Finite fields GF(p^n)");
  gf->require_subcommand(1);

  static std::uint64_t p = 0;
  static unsigned n = 1;
  static std::string modulus, a, b, op = "mul";
  static std::int64_t k = 0;
  auto field_opts = [](CLI::App* s) {
    s->add_option("-p,--prime", p, "Characteristic")->required();
    s->add_option("-n,--degree", n, "Extension degree")->capture_default_str();
  };
  auto make_field = [] {
    std::optional<UniPoly> m;
    if (!modulus.empty()) m = parse_unipoly(modulus, Ring::mod(p));
    return field_new(p, n, m);
  };

  auto* field = gf->add_subcommand("field", "Build the field and report its modulus and primitive element");
  field_opts(field);
  field->add_option("--modulus", modulus, "Monic irreducible modulus in x");
  reg.add(field, [make_field] {
    const auto f = make_field();
    return json{{"p", f.p()}, {"n", f.n()}, {"size", f.size()}, {"modulus", f.modulus().to_string()},
                {"primitive", elt_json(f.primitive())}};
  });

  auto* irr = gf->add_subcommand("irreducible", "Smallest monic irreducible of degree n mod p");
  field_opts(irr);
  reg.add(irr, [] { return json{{"polynomial", find_irreducible(p, n).to_string()}}; });

  auto* arith = gf->add_subcommand("arith", "Element arithmetic; elements as an index or comma coordinates");
  field_opts(arith);
  arith->add_option("--modulus", modulus, "Monic irreducible modulus in x");
  arith->add_option("--a", a, "First element")->required();
  arith->add_option("--b", b, "Second element");
  arith->add_option("--op", op, "add | sub | mul | div | pow | frobenius")
      ->check(CLI::IsMember({"add", "sub", "mul", "div", "pow", "frobenius"}));
  arith->add_option("-k,--exponent", k, "Exponent for pow");
  reg.add(arith, [make_field] {
    const auto f = make_field();
    const FieldElt x = f.parse(a), y = b.empty() ? f.zero() : f.parse(b);
    static const std::map<std::string, FieldOp> ops{{"add", FieldOp::add}, {"sub", FieldOp::sub},
                                                    {"mul", FieldOp::mul}, {"div", FieldOp::div},
                                                    {"pow", FieldOp::pow}, {"frobenius", FieldOp::frobenius}};
    return json{{"result", elt_json(elt_arith(x, y, ops.at(op), k))}};
  });

  auto* log = gf->add_subcommand("log", "Discrete logarithm to the primitive element");
  field_opts(log);
  log->add_option("--modulus", modulus, "Monic irreducible modulus in x");
  log->add_option("--a", a, "Nonzero element")->required();
  reg.add(log, [make_field] {
    const auto f = make_field();
    return json{{"log", discrete_log(f, f.parse(a))}, {"primitive", elt_json(f.primitive())}};
  });
}

void add_perm(CLI::App& app, Registry& reg, Config&) {
  auto* perm = app.add_subcommand("perm", "Permutations and their analytic forms");
  perm->require_subcommand(1);

  static std::string g, h, a, b;
  static std::uint32_t degree = 0;
  static std::uint64_t p = 0;
  static unsigned n = 1;

  auto* calc = perm->add_subcommand("calc", "Compose, invert, conjugate, commutator, order");
  calc->add_option("--first", g, "Permutation g (cycles or image list)")->required();
  calc->add_option("--second", h, "Permutation h");
  calc->add_option("-d,--degree", degree, "Degree (default: largest point + 1)");
  reg.add(calc, [] {
    std::uint32_t d = degree;
    if (!d) d = std::max(parse_permutation(g).degree(), h.empty() ? 0u : parse_permutation(h).degree());
    const auto x = parse_permutation(g, d);
    json out{{"g", perm_json(x)}, {"order", x.order()}, {"inverse", perm_json(inverse(x))}};
    if (!h.empty()) {
      const auto y = parse_permutation(h, d);
      out["compose"] = perm_json(compose(x, y));
      out["conjugate"] = perm_json(conjugate(x, y));
      out["commutator"] = perm_json(commutator(x, y));
    }
    return out;
  });

  auto* analytic = perm->add_subcommand("analytic", "Interpolating polynomial of a permutation of GF(p^n)");
  analytic->add_option("--perm", g, "Permutation of the p^n field indices")->required();
  analytic->add_option("-p,--prime", p, "Characteristic")->required();
  analytic->add_option("-n,--degree", n, "Extension degree")->capture_default_str();
  reg.add(analytic, [] {
    const auto f = field_new(p, n);
    const auto s = parse_permutation(g, f.size());
    const auto form = analytic_form(s, f);
    json out{{"form", form.to_string()}};
    const auto cls = classify_affine(s, f);
    out["class"] = affine_kind_name(cls.kind);
    if (cls.kind != AffineKind::none) out["map"] = {{"a", elt_json(cls.a)}, {"b", elt_json(cls.b)}};
    return out;
  });

  auto* affine = perm->add_subcommand("affine", "The map i -> a*i + b on GF(p^n)");
  affine->add_option("--a", a, "Multiplier")->required();
  affine->add_option("--b", b, "Translation")->required();
  affine->add_option("-p,--prime", p, "Characteristic")->required();
  affine->add_option("-n,--degree", n, "Extension degree")->capture_default_str();
  reg.add(affine, [] {
    const auto f = field_new(p, n);
    const FieldElt x = f.parse(a), y = f.parse(b);
    if (x.is_zero()) fail(ErrorKind::ZeroMultiplier, "zero multiplier");
    const auto s = affine_permutation(x, y);
    const auto d = affine_decompose(x, y, f);
    return json{{"permutation", perm_json(s)},
                {"class", affine_kind_name(classify_affine(s, f).kind)},
                {"primitive_power", d.k},
                {"translation", elt_json(d.b)}};
  });
}

void add_group(CLI::App& app, Registry& reg, Config& cfg) {
  auto* group = app.add_subcommand("group", "Permutation groups given by generators");
  group->require_subcommand(1);

  static std::string gens;
  static std::uint32_t degree = 0;
  auto opts = [](CLI::App* s) {
    s->add_option("--gens", gens, "Comma-separated generators in cycle notation")->required();
    s->add_option("-d,--degree", degree, "Degree (default: largest point + 1)");
  };
  auto make = [&cfg] { return PermGroup::generate(parse_permutation_list(gens, degree), cfg.max_order); };

  auto* order = group->add_subcommand("order", "Closure order and orbits");
  opts(order);
  reg.add(order, [make] {
    const auto g = make();
    return json{{"group", group_json(g)}, {"orbits", orbits(g)}, {"transitive", is_transitive(g)}};
  });

  auto* blocks = group->add_subcommand("blocks", "All nontrivial block systems");
  opts(blocks);
  reg.add(blocks, [make] {
    const auto g = make();
    json systems = json::array();
    for (const auto& b : block_systems(g)) systems.push_back(b.blocks);
    return json{{"group", group_json(g)}, {"primitive", systems.empty()}, {"block_systems", systems}};
  });

  auto* solvable = group->add_subcommand("solvable", "Derived series and solvability witness");
  opts(solvable);
  reg.add(solvable, [make] {
    const auto g = make();
    json derived = json::array();
    for (const auto& h : derived_series(g)) derived.push_back(h.order());
    json out{{"group", group_json(g)}, {"derived_series_orders", derived}};
    const auto w = solvability_witness(g);
    out["solvable"] = w.has_value();
    if (w) {
      const auto check = verify_witness(g, *w);
      out["witness_orders"] = w->orders();
      out["witness_verified"] = check.ok();
    }
    return out;
  });

  auto* normalizer = group->add_subcommand("normalizer", "Normalizer in the symmetric group");
  opts(normalizer);
  reg.add(normalizer, [make] {
    const auto g = make();
    return json{{"group", group_json(g)}, {"normalizer", group_json(normalizer_in_sym(g))}};
  });

  auto* galois = group->add_subcommand("galois", "Prime-degree affine embedding test");
  opts(galois);
  reg.add(galois, [make] {
    const auto g = make();
    const auto v = galois_criterion(g);
    json out{{"group", group_json(g)},
             {"embeddable", v.embeddable},
             {"solvable", is_solvable(g)},
             {"cycle", perm_json(v.cycle)}};
    if (v.embeddable) {
      out["relabeling"] = perm_json(v.relabeling);
      json maps = json::array();
      for (const auto& [a, b] : v.affine) maps.push_back({{"a", a}, {"b", b}});
      out["affine"] = maps;
    } else {
      out["conjugate_cycle"] = perm_json(v.conjugate_cycle);
    }
    return out;
  });

  auto* census = group->add_subcommand("census", "Subgroups generated by pairs of elements, counted by order");
  opts(census);
  reg.add(census, [make] {
    const auto g = make();
    std::map<std::uint64_t, std::uint64_t> by_order;
    const auto subs = pair_generated_subgroups(g);
    for (const auto& h : subs) ++by_order[h.order()];
    json counts = json::array();
    for (const auto& [o, c] : by_order) counts.push_back({{"order", o}, {"count", c}});
    return json{{"group", group_json(g)}, {"subgroups", subs.size()}, {"by_order", counts}};
  });
}

json canon_json(const CanonicalForm& c, const MatGf& a, unsigned checks, std::uint64_t seed, bool two) {
  json blocks = json::array();
  for (const auto& b : c.blocks) blocks.push_back({{"eigenvalue", elt_json(b.eigenvalue)}, {"size", b.size}});
  json out;
  if (c.kind) out["kind"] = canon2_kind_name(*c.kind);
  out["extension_degree"] = c.extension_degree;
  out["splitting_field_size"] = c.splitting_field.size();
  out["blocks"] = blocks;
  out["block_matrix"] = c.block_matrix().to_string();
  out["conjugator"] = c.conjugator.to_string();
  out["verified"] = c.verify(a);
  if (checks) {
    std::mt19937_64 rng(seed);
    bool invariant = true;
    for (unsigned i = 0; i < checks; ++i) {
      const auto p = random_invertible(a.ctx(), a.rows(), rng);
      const auto b = p * a * p.inverse();
      const auto cb = two ? canonical_form_2x2(b) : canonical_form(b);
      invariant = invariant && cb.signature() == c.signature() && cb.kind == c.kind && cb.verify(b);
    }
    out["similarity_checks"] = checks;
    out["similarity_invariant"] = invariant;
  }
  return out;
}

void add_linear(CLI::App& app, Registry& reg, Config& cfg) {
  auto* linear = app.add_subcommand("linear", "Matrices over GF(p^n), linear groups, canonical forms");
  linear->require_subcommand(1);

  static std::uint64_t p = 0, q = 0;
  static unsigned n = 1, dim = 1, checks = 0;
  static std::string m, m2, op = "mul";
  static bool affine_flag = false;

  auto* arith = linear->add_subcommand("arith", "Matrix add, mul, inv or det; entries are integers or element indices");
  arith->add_option("-p,--prime", p, "Characteristic")->required();
  arith->add_option("-n,--degree", n, "Extension degree")->capture_default_str();
  arith->add_option("--a", m, "Matrix, rows separated by ';'")->required();
  arith->add_option("--b", m2, "Second matrix");
  arith->add_option("--op", op, "add | mul | inv | det")->check(CLI::IsMember({"add", "mul", "inv", "det"}));
  reg.add(arith, [] {
    const auto f = field_new(p, n);
    const auto x = parse_matrix(f, m);
    const auto y = m2.empty() ? x : parse_matrix(f, m2);
    const MatOp which = op == "add" ? MatOp::add : op == "mul" ? MatOp::mul : op == "inv" ? MatOp::inv : MatOp::det;
    const auto r = mat_arith(x, y, which);
    if (const auto* e = std::get_if<FieldElt>(&r)) return json{{"result", elt_json(*e)}};
    return json{{"result", std::get<MatGf>(r).to_string()}};
  });

  auto* order = linear->add_subcommand("order", "Order of GL(n, q) or AGL(n, q)");
  order->add_option("--dim", dim, "Dimension")->required();
  order->add_option("-q", q, "Field size")->required();
  order->add_flag("--affine", affine_flag, "Affine group instead of linear");
  reg.add(order, [] {
    return json{{"group", affine_flag ? "AGL" : "GL"}, {"dim", dim}, {"q", q},
                {"order", str(affine_flag ? agl_order(dim, q) : gl_order(dim, q))}};
  });

  auto* affine = linear->add_subcommand("affine", "Affine group of F_p^n as permutations of the p^n points");
  affine->add_option("--dim", dim, "Dimension")->required();
  affine->add_option("-p,--prime", p, "Prime")->required();
  reg.add(affine, [&cfg] {
    const auto g = affine_perm_group(dim, p, cfg.max_order);
    const Integer formula = agl_order(dim, p);
    return json{{"group", group_json(g)}, {"formula", str(formula)}, {"matches", Integer(g.order()) == formula}};
  });

  auto* pgl2 = linear->add_subcommand("pgl2", "Homographies of the projective line over F_p (infinity = point p)");
  pgl2->add_option("-p,--prime", p, "Prime")->required();
  reg.add(pgl2, [&cfg] {
    const auto g = pgl2_perm(p, cfg.max_order);
    return json{{"group", group_json(g)}, {"formula", (p + 1) * p * (p - 1)}};
  });

  auto* canon2 = linear->add_subcommand("canon2", "Canonical form of an invertible 2x2 matrix over F_p");
  canon2->add_option("-p,--prime", p, "Prime")->required();
  canon2->add_option("-m,--matrix", m, "Matrix, rows separated by ';'")->required();
  canon2->add_option("--checks", checks, "Random similarity checks (uses --seed)");
  reg.add(canon2, [&cfg] {
    const auto a = parse_matrix(field_new(p, 1), m);
    return canon_json(canonical_form_2x2(a), a, checks, cfg.seed, true);
  });

  auto* canon = linear->add_subcommand("canon", "Canonical form of an invertible matrix over F_p, dim <= 4");
  canon->add_option("-p,--prime", p, "Prime")->required();
  canon->add_option("-m,--matrix", m, "Matrix, rows separated by ';'")->required();
  canon->add_option("--checks", checks, "Random similarity checks (uses --seed)");
  reg.add(canon, [&cfg] {
    const auto a = parse_matrix(field_new(p, 1), m);
    return canon_json(canonical_form(a), a, checks, cfg.seed, false);
  });

  auto* ode = linear->add_subcommand("ode", "Solution basis of x' = A x for rational A with rational eigenvalues");
  ode->add_option("-m,--matrix", m, "Rational matrix, rows separated by ';'")->required();
  reg.add(ode, [] {
    const auto basis = ode_solution_basis(parse_rational_matrix(m));
    json blocks = json::array(), terms = json::array();
    for (const auto& [sigma, size] : basis.blocks) blocks.push_back({{"sigma", str(sigma)}, {"size", size}});
    for (const auto& t : basis.terms) terms.push_back(t.to_string());
    return json{{"blocks", blocks}, {"basis", terms}};
  });
}

void add_cyclotomy(CLI::App& app, Registry& reg, Config&) {
  auto* cyc = app.add_subcommand("cyclotomy", "Gauss periods");
  cyc->require_subcommand(1);

  static std::uint64_t p = 0, e = 1;

  auto* root = cyc->add_subcommand("root", "Smallest primitive root mod p");
  root->add_option("-p,--prime", p, "Prime")->required();
  reg.add(root, [] { return json{{"p", p}, {"g", primitive_root(p)}}; });

  auto* per = cyc->add_subcommand("periods", "Period index sets and the period polynomial");
  per->add_option("-p,--prime", p, "Prime")->required();
  per->add_option("-e,--count", e, "Number of periods, a divisor of p - 1")->required();
  reg.add(per, [] {
    const auto ps = periods(p, e);
    json out{{"p", ps.p}, {"e", ps.e}, {"f", ps.f}, {"g", ps.g}, {"eta_sets", ps.eta_sets}};
    out["polynomial"] = period_polynomial(ps).to_string();
    return out;
  });

  auto* reindex = cyc->add_subcommand("reindex", "Discrete-log conjugacy of i -> g i to k -> k + 1");
  reindex->add_option("-p,--prime", p, "Prime")->required();
  reg.add(reindex, [] {
    const auto r = log_reindex_conjugacy(p);
    return json{{"p", p},
                {"g", r.g},
                {"multiplication", perm_json(r.multiplication)},
                {"translation", perm_json(r.translation)},
                {"witness", perm_json(r.witness)},
                {"verified", r.verified}};
  });
}

void add_resolvent(CLI::App& app, Registry& reg, Config& cfg) {
  auto* res = app.add_subcommand("resolvent", "Value counting, discriminants, Lagrange and Cardan, Galois resolvent");
  res->require_subcommand(1);

  static std::string f, c1 = "0", c2 = "0", c3 = "0", as, xs;
  static unsigned n = 0;

  auto* values = res->add_subcommand("values", "Distinct values of f under all permutations of its variables");
  values->add_option("-f,--poly", f, "Polynomial in x1..xn")->required();
  values->add_option("-n,--vars", n, "Variable count (default: largest index)");
  reg.add(values, [] {
    const auto g = parse_multipoly(f, n);
    const auto vo = value_orbit(g, g.nvars());
    json vals = json::array(), stab = json::array();
    for (const auto& v : vo.values) vals.push_back(v.to_string());
    for (const auto& s : vo.stabilizer.elements()) stab.push_back(perm_json(s));
    return json{{"count", vo.values.size()}, {"values", vals}, {"stabilizer_order", vo.stabilizer.order()},
                {"stabilizer_generators", group_json(vo.stabilizer)["generators"]}, {"stabilizer", stab}};
  });

  auto* census = res->add_subcommand("census", "Indices [S5 : H] over pair-generated subgroups H");
  reg.add(census, [] {
    const auto idx = ruffini_census();
    const bool has = [&] {
      for (std::uint64_t k : {1, 2, 5, 6})
        if (!std::binary_search(idx.begin(), idx.end(), k)) return false;
      return true;
    }();
    const bool lacks = !std::binary_search(idx.begin(), idx.end(), 3) && !std::binary_search(idx.begin(), idx.end(), 4);
    return json{{"indices", idx}, {"contains_1_2_5_6", has}, {"excludes_3_4", lacks}};
  });

  auto* disc = res->add_subcommand("discriminant", "(x1 - x2)^2 in terms of e1, e2");
  reg.add(disc, [] {
    const auto d = discriminant2();
    return json{{"delta", d.delta.to_string()}, {"reduced", d.reduced.to_string("e")}, {"holds", d.holds},
                {"cubic", cubic_discriminant_poly().to_string("e")}};
  });

  auto* quad = res->add_subcommand("quadratic", "Roots of x^2 - c1 x + c2");
  quad->add_option("--c1", c1, "Rational c1")->required();
  quad->add_option("--c2", c2, "Rational c2")->required();
  reg.add(quad, [] {
    const auto r = quadratic_roots(detail::parse_rational(c1), detail::parse_rational(c2));
    json out{{"radicand", str(r.radicand)}, {"expression", r.to_string()}};
    if (r.rational_roots) out["roots"] = {str(r.rational_roots->first), str(r.rational_roots->second)};
    return out;
  });

  auto* lag = res->add_subcommand("lagrange", "Radical-free identities for the Lagrange resolvents of the cubic");
  reg.add(lag, [] {
    const auto r = lagrange_cubic_identities();
    return json{{"phi", r.phi.to_string()},
                {"psi", r.psi.to_string()},
                {"sum_of_cubes", r.sum_of_cubes},
                {"product_of_cubes", r.product_of_cubes},
                {"product", r.product},
                {"variant_27e2", r.printed_variant}};
  });

  auto* cardan = res->add_subcommand("cardan", "Numeric roots of x^3 - c1 x^2 + c2 x - c3");
  cardan->add_option("--c1", c1, "Rational c1")->required();
  cardan->add_option("--c2", c2, "Rational c2")->required();
  cardan->add_option("--c3", c3, "Rational c3")->required();
  reg.add(cardan, [&cfg] {
    const Rational a = detail::parse_rational(c1), b = detail::parse_rational(c2), c = detail::parse_rational(c3);
    const auto r = cardan_solve(a, b, c);
    json roots = json::array();
    for (const auto& z : r.roots)
      roots.push_back({{"re", fmt_real(z.real(), cfg.precision)}, {"im", fmt_real(z.imag(), cfg.precision)}, {"real", is_real_root(z)}});
    return json{{"roots", roots},
                {"max_residual", r.max_residual.str(3, std::ios_base::scientific)},
                {"discriminant", str(cubic_discriminant(a, b, c))}};
  });

  auto* galois = res->add_subcommand("galois", "Are the n! values of a1 x_s(1) + ... + an x_s(n) distinct");
  galois->add_option("--a", as, "Comma-separated distinct rationals")->required();
  galois->add_option("--x", xs, "Comma-separated distinct rationals")->required();
  reg.add(galois, [] {
    const auto r = galois_resolvent_check(parse_rational_list(as), parse_rational_list(xs));
    json vals = json::array();
    for (const auto& v : r.values) vals.push_back(str(v));
    return json{{"values", vals}, {"distinct_count", r.distinct_count}, {"all_distinct", r.all_distinct}};
  });
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"ordre: substitutions, finite fields, linear groups and resolvents"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Emit a single JSON object");
  app.add_option("--max-order", cfg.max_order, "Cap on group closure size")
      ->envname("ORDRE_MAX_ORDER")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--precision", cfg.precision, "Printed digits for numeric roots")
      ->check(CLI::Range(20u, 50u))
      ->capture_default_str();

  Registry reg;
  add_poly(app, reg, cfg);
  add_gf(app, reg, cfg);
  add_perm(app, reg, cfg);
  add_group(app, reg, cfg);
  add_linear(app, reg, cfg);
  add_cyclotomy(app, reg, cfg);
  add_resolvent(app, reg, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // an unrecognised subcommand name is left over as a positional
    const bool unknown = dynamic_cast<const CLI::ExtrasError*>(&e) != nullptr || !app.remaining().empty();
    if (unknown) {
      const auto rest = app.remaining();
      std::cerr << "UnknownSubcommand: " << (rest.empty() ? std::string(e.what()) : rest.front()) << "\n";
    } else {
      std::cerr << "ParseError: " << e.what() << "\n";
    }
    return 2;
  }

  for (const auto& [sub, fn] : reg.handlers) {
    if (!sub->parsed()) continue;
    std::string command = sub->get_name();
    for (auto* parent = sub->get_parent(); parent && parent != &app; parent = parent->get_parent())
      command = parent->get_name() + " " + command;
    try {
      const json result = fn();
      if (cfg.json) {
        const json out{{"schema_version", kSchemaVersion}, {"command", command}, {"result", result}};
        std::cout << out.dump(2) << "\n";
      } else {
        render(std::cout, result, 0);
      }
      return 0;
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return e.is_cap() ? 3 : 2;
    }
  }
  std::cerr << "UnknownSubcommand: no operation selected\n";
  return 2;
}
