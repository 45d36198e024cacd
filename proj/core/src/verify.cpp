#include "maxrho/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "maxrho/canonical.hpp"
#include "maxrho/charpoly.hpp"
#include "maxrho/enumeration.hpp"
#include "maxrho/error.hpp"
#include "maxrho/graph6.hpp"
#include "maxrho/partition.hpp"
#include "maxrho/perron.hpp"
#include "maxrho/roots.hpp"
#include "maxrho/switching.hpp"

namespace maxrho {

// ---------------------------------------------------------------- run plumbing

void VerificationRun::add(std::string name, bool pass, Json detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void VerificationRun::absorb(const VerificationRun& other) {
  for (const auto& c : other.checks) checks.push_back({other.suite + "/" + c.name, c.pass, c.detail});
}

std::size_t VerificationRun::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

Json VerificationRun::to_json() const {
  Json out{{"suite", suite}, {"parameters", parameters}, {"checks", Json::array()}};
  if (!scope.empty()) out["scope"] = scope;
  for (const auto& c : checks) {
    Json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.is_null()) j["detail"] = c.detail;
    out["checks"].push_back(std::move(j));
  }
  out["total"] = checks.size();
  out["failures"] = failures();
  out["passed"] = passed();
  return out;
}

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max) {
  if (n_min < 1 || n_min > n_max) throw InputError("random_connected_graph: bad order range");
  std::uniform_int_distribution<std::size_t> order(n_min, n_max);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t n = order(rng);
  const double p = density(rng);
  while (true) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng) < p) b.add_edge(u, v);
    Graph g = std::move(b).build();
    if (is_connected(g)) return g;
  }
}

namespace {

constexpr double kRhoTol = 1e-9;

std::string str(long x) { return std::to_string(x); }

Json rat(const mpq_class& q) { return q.get_str(); }

int sign(const mpq_class& q) { return sgn(q); }

std::string name_at(const std::string& what, long n) { return what + "@n=" + str(n); }

// Strict comparisons of maximum real roots against one fixed polynomial.
class RootRival {
 public:
  explicit RootRival(const IntPolynomial& w) : w_(to_rational(w)), s_(w_) {
    bracket_ = refine(s_, isolate_max_root(w_), mpq_class(1, 1UL << 62));
  }

  /// -1, 0, +1 as max root of q compares with the fixed one.
  int compare(const IntPolynomial& q) const {
    const RatPolynomial rq = to_rational(q);
    if (!bracket_.exact()) {
      const SturmSequence sq(rq);
      if (sq.count_above(bracket_.lo) == 0) return -1;
    }
    return compare_max_roots(rq, w_);
  }

 private:
  RatPolynomial w_;
  SturmSequence s_;
  RootBracket bracket_;
};

mpq_class frac(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

mpq_class inv_pow(long n, int k) {
  mpz_class d = 1;
  for (int i = 0; i < k; ++i) d *= n;
  return mpq_class(mpz_class(1), d);
}

// sum_i c_i / n^i
mpq_class laurent(long n, std::initializer_list<long> c) {
  mpq_class s = 0;
  int i = 0;
  for (long ci : c) s += mpq_class(ci) * inv_pow(n, i++);
  return s;
}

mpq_class tail(long n, long coeff, int from, int to) {
  mpq_class s = 0;
  for (int i = from; i <= to; ++i) s += mpq_class(coeff) * inv_pow(n, i);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- sign table

VerificationRun verify_signs(long n_min, long n_max) {
  if (n_min < 59 || n_min > n_max) throw InputError("verify_signs: need 59 <= n_min <= n_max");
  VerificationRun run;
  run.suite = "signs";
  run.parameters = {{"n_min", n_min}, {"n_max", n_max}};
  for (long n = n_min; n <= n_max; ++n) {
    const IntPolynomial g = closed_form(QuotientKind::B_n5, n);
    const IntPolynomial f2 = closed_form(QuotientKind::B2, n);
    const mpq_class t1 = mpq_class(n - 3) - mpq_class(2) * inv_pow(n, 1) + mpq_class(4) * inv_pow(n, 2) +
                         mpq_class(5) * inv_pow(n, 3);
    const mpq_class t2 = frac(n, 2);
    const mpq_class t3(0);
    const mpq_class t4 = mpq_class(-1) - mpq_class(2) * inv_pow(n, 1) - mpq_class(4) * inv_pow(n, 2);
    const mpq_class top(n - 3);
    struct Row {
      const char* name;
      mpq_class value;
      int want;
    };
    const std::vector<Row> rows{{"g(t4)<0", g.eval(t4), -1},   {"g(t3)>0", g.eval(t3), 1},
                                {"g(t2)<0", g.eval(t2), -1},   {"g(t1)>0", g.eval(t1), 1},
                                {"f2(t1)<0", f2.eval(t1), -1}, {"f2(n-3)>0", f2.eval(top), 1},
                                {"g(n-3)>0", g.eval(top), 1}};
    for (const auto& r : rows) {
      const bool ok = sign(r.value) == r.want;
      run.add(name_at(r.name, n), ok, Json{{"value", rat(r.value)}});
    }
    if (n >= 100) {
      const mpq_class f2t1 = laurent(n, {-3, -35, 244, 52, -969, -194, 2076, 718, -2789, -1995, 1400, 2000, 625});
      const mpq_class gt1 = laurent(n, {1, -62, 190, 172, -817, -420, 1750, 808, -2489, -1870, 1400, 2000, 625});
      const mpq_class gt2 = frac(-n * n * n * n, 16) + frac(7 * n * n, 2) - 4 * n - 17;
      const mpq_class gt4 = laurent(n, {-8, 16, 72, -32, -48, 0, 256, 512, 256});
      const bool exact = f2t1 == f2.eval(t1) && gt1 == g.eval(t1) && gt2 == g.eval(t2) &&
                         mpq_class(5 * n - 17) == g.eval(t3) && gt4 == g.eval(t4);
      run.add(name_at("expansions-exact", n), exact);
      const mpq_class f2_bound = laurent(n, {-3, -35}) + tail(n, 3000, 2, 12);
      const mpq_class g1_bound = laurent(n, {1, -62}) - tail(n, 3000, 2, 12);
      const mpq_class g4_bound = laurent(n, {-8, 16}) + tail(n, 600, 2, 8);
      const bool bounds = f2t1 <= f2_bound && sgn(f2_bound) < 0 && gt1 >= g1_bound && sgn(g1_bound) > 0 &&
                          gt4 <= g4_bound && sgn(g4_bound) < 0;
      run.add(name_at("expansion-bounds", n), bounds);
    }
  }
  return run;
}

// ---------------------------------------------------------------- formulas

VerificationRun verify_formulas(long n_min, long n_max) {
  if (n_min < 8 || n_min > n_max) throw InputError("verify_formulas: need 8 <= n_min <= n_max");
  VerificationRun run;
  run.suite = "formulas";
  run.parameters = {{"n_min", n_min}, {"n_max", n_max}};
  const IntPolynomial lam = int_poly({0, 1});
  const auto kinds = {QuotientKind::A_delta, QuotientKind::B1,   QuotientKind::B2,  QuotientKind::B_delta,
                      QuotientKind::B_n5,    QuotientKind::B_dd, QuotientKind::B_d1};
  for (long n = n_min; n <= n_max; ++n) {
    for (QuotientKind k : kinds) {
      const bool takes_delta = k == QuotientKind::A_delta || k == QuotientKind::B_delta || k == QuotientKind::B_dd ||
                               k == QuotientKind::B_d1;
      long checked = 0;
      Json bad = Json::array();
      for (long d = 0; d <= (takes_delta ? n : 0); ++d) {
        if (!admissible(k, n, d)) continue;
        try {
          named_quotient(k, n, d);
          ++checked;
        } catch (const PropertyViolation&) {
          bad.push_back(d);
        }
      }
      if (checked == 0 && bad.empty()) continue;
      const bool ok = bad.empty();
      run.add(name_at("closed-form/" + to_string(k), n), ok, Json{{"matrices", checked}, {"mismatches", bad}});
    }

    auto cf = [&](QuotientKind k, long d = 0) { return closed_form(k, n, d); };
    bool a_ok = true;
    for (long d2 = 3; d2 <= n - 3; ++d2)
      for (long d1 : {2L, d2 - 1})
        a_ok = a_ok && cf(QuotientKind::A_delta, d2) - cf(QuotientKind::A_delta, d1) ==
                           int_poly({(d1 - d2) * (d1 + d2 - n + 2)});
    run.add(name_at("identity/A_delta-difference", n), a_ok);

    run.add(name_at("identity/f1-f2", n), cf(QuotientKind::B1) - cf(QuotientKind::B2) == int_poly({-n, 8 - n}));

    bool dd_ok = true;
    for (long d2 = 5; d2 <= n - 4; ++d2)
      for (long d1 : {4L, d2 - 1})
        dd_ok = dd_ok && cf(QuotientKind::B_dd, d1) - cf(QuotientKind::B_dd, d2) ==
                             int_poly({2 * (d2 - d1) * (d1 + d2 - n + 2)});
    run.add(name_at("identity/B_dd-difference", n), dd_ok);

    bool d1_ok = true;
    for (long d2 = 4; d2 <= n - 4; ++d2)
      for (long d1 : {3L, d2 - 1})
        d1_ok = d1_ok && cf(QuotientKind::B_d1, d1) - cf(QuotientKind::B_d1, d2) ==
                             int_poly({d2 - d1, (d2 - d1) * (d2 + d1 - n + 1)});
    run.add(name_at("identity/B_d1-difference", n), d1_ok);

    const IntPolynomial dd_top = lam * cf(QuotientKind::B_dd, n - 4);
    run.add(name_at("identity/lambda*P(B_dd[n-4])-f2", n),
            dd_top - cf(QuotientKind::B2) == int_poly({-2 * n + 2, 2 * n - 2, -2}));
    run.add(name_at("identity/lambda*P(B_dd[n-4])-f1", n),
            dd_top - cf(QuotientKind::B1) == int_poly({-n + 2, 3 * n - 10, -2}));
    run.add(name_at("identity/P(B_d1[n-4])-f2", n), cf(QuotientKind::B_d1, n - 4) - cf(QuotientKind::B2) ==
                                                           int_poly({-n + 1, 2}));
    run.add(name_at("identity/P(B_d1[3])-f1", n),
            cf(QuotientKind::B_d1, 3) - cf(QuotientKind::B1) == int_poly({n - 6, n - 6}));
  }
  return run;
}

// ---------------------------------------------------------------- family tables

namespace {

struct Entry {
  std::string family;
  std::optional<long> delta;
  IntPolynomial poly;
};

std::vector<Entry> n3_competitors(long n) {
  std::vector<Entry> out;
  out.push_back({"B_n5", std::nullopt, closed_form(QuotientKind::B_n5, n)});
  for (long d = 3; d <= n - 5; ++d)
    if ((d - (n - 1)) % 2 == 0) out.push_back({"B_delta", d, closed_form(QuotientKind::B_delta, n, d)});
  for (long d = 4; d <= n - 4; ++d) out.push_back({"B_dd", d, closed_form(QuotientKind::B_dd, n, d)});
  for (long d = 3; d <= n - 4; d += 2) out.push_back({"B_d1", d, closed_form(QuotientKind::B_d1, n, d)});
  return out;
}

void rank_rows(std::vector<FamilyRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const FamilyRow& a, const FamilyRow& b) { return a.rho > b.rho; });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
}

void n2_table(long n, bool with_rows, FamilyTable& t) {
  std::vector<long> ts;
  for (long d = 2; d <= n - 3; d += 2) ts.push_back(d);
  const std::set<long> predicted = n % 2 == 1 ? std::set<long>{n - 3} : std::set<long>{2, n - 4};
  const RootRival top(closed_form(QuotientKind::A_delta, n, *predicted.begin()));
  bool ok = true;
  Json detail = Json::array();
  for (long d : ts) {
    const IntPolynomial p = closed_form(QuotientKind::A_delta, n, d);
    const int c = top.compare(p);
    const bool good = predicted.count(d) ? c == 0 : c < 0;
    if (!good) detail.push_back(d);
    ok = ok && good;
    if (with_rows) t.rows_n2.push_back({n, "G", d, max_real_root(p), 0});
  }
  t.run.add(name_at("n-2/predicted-maximum", n), ok, Json{{"predicted", predicted}, {"violations", detail}});
  rank_rows(t.rows_n2);
}

void n3_table(long n, bool with_rows, FamilyTable& t) {
  const bool even = n % 2 == 0;
  const QuotientKind win_kind = even ? QuotientKind::B1 : QuotientKind::B2;
  const IntPolynomial win = closed_form(win_kind, n);
  const RootRival rival(win);
  std::map<std::string, std::pair<long, Json>> groups;
  for (const Entry& e : n3_competitors(n)) {
    auto& [count, bad] = groups[e.family];
    if (bad.is_null()) bad = Json::array();
    ++count;
    if (rival.compare(e.poly) >= 0) bad.push_back(e.delta ? Json(*e.delta) : Json(nullptr));
    if (with_rows) t.rows_n3.push_back({n, e.family, e.delta, max_real_root(e.poly), 0});
  }
  for (const auto& [family, entry] : groups)
    t.run.add(name_at("n-3/" + to_string(win_kind) + ">" + family, n), entry.second.empty(),
              Json{{"compared", entry.first}, {"violations", entry.second}});

  // The four closing comparisons.
  if (even) {
    t.run.add(name_at("n-3/B_dd[n-4]<B1", n), rival.compare(closed_form(QuotientKind::B_dd, n, n - 4)) < 0);
    t.run.add(name_at("n-3/B_d1[3]<B1", n), rival.compare(closed_form(QuotientKind::B_d1, n, 3)) < 0);
  } else {
    t.run.add(name_at("n-3/B_dd[n-4]<B2", n), rival.compare(closed_form(QuotientKind::B_dd, n, n - 4)) < 0);
    t.run.add(name_at("n-3/B_d1[n-4]<B2", n), rival.compare(closed_form(QuotientKind::B_d1, n, n - 4)) < 0);
  }

  // P(B_d1, x - 1/n^2) >= P(B_{n-5}, x) on [n-4, n-3+1/n^2]: rho(B_d1) + 1/n^2 <= rho(B_{n-5}).
  const mpq_class shift(mpz_class(1), mpz_class(n) * n);
  const IntPolynomial top = closed_form(QuotientKind::B_delta, n, n - 5);
  Json bad = Json::array();
  for (long d = 3; d < n - 5; d += 2)
    if (!shifted_root_bound(top, closed_form(QuotientKind::B_delta, n, d), shift, mpq_class(n - 4),
                            mpq_class(n - 3) + shift))
      bad.push_back(d);
  t.run.add(name_at("n-3/B_delta-shifted-by-1/n^2<=B_delta[n-5]", n), bad.empty(), Json{{"violations", bad}});

  if (with_rows) {
    t.rows_n3.push_back({n, to_string(win_kind), std::nullopt, max_real_root(win), 0});
    rank_rows(t.rows_n3);
    t.run.add(name_at("n-3/table-top", n), t.rows_n3.front().family == to_string(win_kind));
  }
}

}  // namespace

FamilyTable compare_families(long n, bool with_rows) {
  if (n < 5) throw InputError("compare_families: n must be at least 5");
  FamilyTable t;
  t.n = n;
  t.run.suite = "compare-families";
  t.run.parameters = {{"n", n}};
  n2_table(n, with_rows, t);
  if (n >= 59) n3_table(n, with_rows, t);
  return t;
}

std::string to_csv(const FamilyTable& t) {
  std::ostringstream os;
  os << "n,max_degree,family,delta,rho,rank\n";
  os.precision(15);
  auto emit = [&](const std::vector<FamilyRow>& rows, long delta_gap) {
    for (const auto& r : rows) {
      os << r.n << ',' << r.n - delta_gap << ',' << r.family << ',';
      if (r.delta) os << *r.delta;
      os << ',' << r.rho << ',' << r.rank << '\n';
    }
  };
  emit(t.rows_n2, 2);
  emit(t.rows_n3, 3);
  return os.str();
}

Json to_json(const FamilyTable& t) {
  auto rows = [](const std::vector<FamilyRow>& v) {
    Json a = Json::array();
    for (const auto& r : v)
      a.push_back(Json{{"n", r.n},
                       {"family", r.family},
                       {"delta", r.delta ? Json(*r.delta) : Json(nullptr)},
                       {"rho", r.rho},
                       {"rank", r.rank}});
    return a;
  };
  return Json{{"n", t.n}, {"max_degree_n_minus_2", rows(t.rows_n2)}, {"max_degree_n_minus_3", rows(t.rows_n3)},
              {"verification", t.run.to_json()}};
}

// ---------------------------------------------------------------- theorems

VerificationRun verify_theorem_n2(long n_min, long n_max) {
  if (n_min < 5 || n_min > n_max || n_max > static_cast<long>(kMaxEnumerationOrder))
    throw InputError("verify_theorem_n2: need 5 <= n_min <= n_max <= 9");
  VerificationRun run;
  run.suite = "theorem-n2";
  run.scope = "exhaustive search";
  run.parameters = {{"n_min", n_min}, {"n_max", n_max}};
  for (long n = n_min; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const ExtremalReport rep = extremal_search({un, un - 2, true, true});
    std::set<std::string> found, predicted;
    for (const Graph& g : rep.maximizers) found.insert(canonical_form(g));
    std::vector<std::size_t> ts = n % 2 == 1 ? std::vector<std::size_t>{un - 3} : std::vector<std::size_t>{2, un - 4};
    for (std::size_t t : ts) predicted.insert(canonical_form(build_G(un, t)));
    Json maxi = to_json(rep);
    run.add(name_at("maximizers", n), found == predicted,
            Json{{"classes", rep.total_classes}, {"found", found.size()}, {"predicted", predicted.size()},
                 {"report", maxi}});

    bool single_low = true;
    bool audits = true;
    for (std::size_t i = 0; i < rep.maximizers.size(); ++i) {
      const auto& ds = rep.degree_sequences[i];
      single_low = single_low && ds.front() == un - 2 && ds.size() >= 2 && ds[ds.size() - 2] == un - 2 &&
                   ds.back() < un - 2;
      audits = audits && structure_audit(rep.maximizers[i]).holds();
    }
    run.add(name_at("single-low-vertex", n), single_low);
    run.add(name_at("structure-audit", n), audits);

    if (n % 2 == 0 && n > 6) {
      const double r2 = perron(build_G(un, 2)).rho;
      const double r4 = perron(build_G(un, un - 4)).rho;
      run.add(name_at("tie-numeric", n), std::abs(r2 - r4) < kRhoTol, Json{{"rho_2", r2}, {"rho_n-4", r4}});
      run.add(name_at("tie-exact", n),
              closed_form(QuotientKind::A_delta, n, 2) == closed_form(QuotientKind::A_delta, n, n - 4));
    }
  }
  return run;
}

VerificationRun verify_theorem_n3(long n_min, long n_max) {
  if (n_min < 59 || n_min > n_max) throw InputError("verify_theorem_n3: need 59 <= n_min <= n_max");
  VerificationRun run;
  run.suite = "theorem-n3";
  run.scope = "proof-step verification";
  run.parameters = {{"n_min", n_min}, {"n_max", n_max}};
  for (long n = n_min; n <= n_max; ++n) {
    const FamilyTable t = compare_families(n, false);
    for (const auto& c : t.run.checks)
      if (c.name.rfind("n-3/", 0) == 0) run.checks.push_back(c);
  }
  return run;
}

// ---------------------------------------------------------------- lemmas

namespace {

struct LsSweep {
  std::size_t instances = 0;
  std::size_t attempts = 0;
  std::size_t failures = 0;
  Json witnesses = Json::array();
};

LsSweep local_switching_sweep(std::size_t trials, std::mt19937_64& rng) {
  LsSweep s;
  const std::size_t cap = 1000 * trials + 1000;
  while (s.instances < trials && s.attempts < cap) {
    ++s.attempts;
    const Graph g = random_connected_graph(rng, 4, 9);
    const auto edges = g.edges();
    if (edges.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    auto e1 = edges[pick(rng)];
    auto e2 = edges[pick(rng)];
    std::bernoulli_distribution flip(0.5);
    if (flip(rng)) std::swap(e1.first, e1.second);
    if (flip(rng)) std::swap(e2.first, e2.second);
    const Vertex u = e1.first, v = e1.second, s_ = e2.first, t = e2.second;
    if (std::set<Vertex>{u, v, s_, t}.size() != 4 || g.adjacent(s_, v) || g.adjacent(t, u)) continue;
    const SwitchCertificate c = ls_certificate(g, s_, t, v, u);
    if (!c.hypothesis_holds) continue;
    ++s.instances;
    if (!c.conclusion_holds) {
      ++s.failures;
      if (s.witnesses.size() < 10)
        s.witnesses.push_back(Json{{"graph6", graph6_encode(g)}, {"move", {s_, t, v, u}}, {"certificate", to_json(c)}});
    }
  }
  return s;
}

}  // namespace

VerificationRun verify_lemmas(std::size_t trials, std::uint64_t seed) {
  VerificationRun run;
  run.suite = "lemmas";
  run.parameters = {{"trials", trials}, {"seed", seed}};
  std::mt19937_64 rng(seed);

  {
    std::size_t fails = 0;
    double worst = 0.0;
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < trials; ++i) {
      const Graph g = random_connected_graph(rng, 2, 10);
      const ComponentBound b = perron_component_bound(g);
      worst = std::max(worst, b.lhs / b.rhs);
      if (!b.holds) {
        ++fails;
        if (witnesses.size() < 10) witnesses.push_back(graph6_encode(g));
      }
    }
    run.add("component-bound", fails == 0,
            Json{{"graphs", trials}, {"failures", fails}, {"max_ratio", worst}, {"witnesses", witnesses}});
  }

  {
    // rho(B) = rho(G) exactly when the Perron vector is constant on every cell;
    // an inequitable partition can still tie (C4 with {0},{1,2,3}).
    std::size_t fails = 0, inequitable = 0, equitable = 0, inequitable_ties = 0;
    Json witnesses = Json::array();
    Json ties = Json::array();
    for (std::size_t i = 0; i < trials; ++i) {
      const Graph g = random_connected_graph(rng, 3, 10);
      const std::size_t n = g.order();
      std::uniform_int_distribution<std::size_t> cells_d(1, n);
      const std::size_t k = cells_d(rng);
      std::vector<Vertex> order(n);
      for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<VertexSet> cells(k);
      std::uniform_int_distribution<std::size_t> which(0, k - 1);
      for (std::size_t j = 0; j < n; ++j) cells[j < k ? j : which(rng)].push_back(order[j]);
      for (auto& c : cells) std::sort(c.begin(), c.end());
      const Partition p(n, cells);
      const QuotientBoundReport r = quotient_bound_check(g, p);
      const PerronPair pp = perron(g);
      double spread = 0.0;
      for (const auto& c : p.cells()) {
        const auto [lo, hi] = std::minmax_element(c.begin(), c.end(),
                                                  [&](Vertex a, Vertex b) { return pp.vector[a] < pp.vector[b]; });
        spread = std::max(spread, pp.vector[*hi] - pp.vector[*lo]);
      }
      const double gap = r.rho_graph - r.rho_quotient;
      bool ok = r.holds;
      if (spread > 1e-4) ok = ok && gap > 1e-12;
      if (spread < 1e-10) ok = ok && std::abs(gap) < kRhoTol;
      if (r.equitable) {
        ++equitable;
      } else {
        ++inequitable;
        if (gap <= 1e-12) {
          ++inequitable_ties;
          if (ties.size() < 5) ties.push_back(Json{{"graph6", graph6_encode(g)}, {"partition", to_json(p)}});
        }
      }
      if (!ok) {
        ++fails;
        if (witnesses.size() < 10)
          witnesses.push_back(Json{{"graph6", graph6_encode(g)}, {"partition", to_json(p)},
                                   {"rho_graph", r.rho_graph}, {"rho_quotient", r.rho_quotient}, {"spread", spread}});
      }
    }
    run.add("quotient-bound", fails == 0,
            Json{{"trials", trials}, {"equitable", equitable}, {"inequitable", inequitable},
                 {"inequitable_ties", inequitable_ties}, {"tie_examples", ties}, {"failures", fails},
                 {"witnesses", witnesses}});
  }

  {
    const LsSweep s = local_switching_sweep(trials, rng);
    run.add("local-switching", s.failures == 0 && s.instances == trials,
            Json{{"instances", s.instances}, {"attempts", s.attempts}, {"failures", s.failures},
                 {"witnesses", s.witnesses}});
  }
  return run;
}

// ---------------------------------------------------------------- equitable partitions

VerificationRun verify_equitable(long n_min, long n_max) {
  if (n_min < 8 || n_min > n_max) throw InputError("verify_equitable: need 8 <= n_min <= n_max");
  VerificationRun run;
  run.suite = "equitable";
  run.parameters = {{"n_min", n_min}, {"n_max", n_max}};
  for (long ln = n_min; ln <= n_max; ++ln) {
    const auto n = static_cast<std::size_t>(ln);
    std::vector<FamilyId> ids;
    for (std::size_t t = 2; t + 3 <= n; t += 2) ids.push_back({FamilyTag::G_nt, n, t, std::nullopt});
    if (n % 2 == 0) {
      ids.push_back({FamilyTag::H1, n, std::nullopt, std::nullopt});
    } else {
      ids.push_back({FamilyTag::H2, n, std::nullopt, std::nullopt});
      ids.push_back({FamilyTag::G2_1, n, std::nullopt, std::nullopt});
    }
    for (std::size_t d = 3; d + 3 <= n; ++d)
      if ((n - d - 1) % 2 == 0) ids.push_back({FamilyTag::Gdelta_profile, n, d, std::nullopt});
    for (std::size_t d = 4; d + 4 <= n; ++d) ids.push_back({FamilyTag::Gdd, n, d, std::nullopt});
    for (std::size_t d = 3; d + 4 <= n; d += 2) ids.push_back({FamilyTag::Gd1, n, d, std::nullopt});

    std::map<std::string, std::pair<std::size_t, Json>> groups;
    double worst_gap = 0.0, worst_shift = 0.0;
    for (const FamilyId& id : ids) {
      auto& [count, bad] = groups[to_string(id.tag)];
      if (bad.is_null()) bad = Json::array();
      ++count;
      const FamilyInstance f = instance(id);
      const QuotientSpec q = quotient(f.graph, f.partition);
      const bool matrix_ok = q.equitable && f.quotient && q.matrix == to_rational(*f.quotient);
      const QuotientBoundReport r = quotient_bound_check(f.graph, f.partition);
      const LoopShiftReport l = loop_shift_check(f.graph, f.partition);
      const double gap = std::abs(r.rho_graph - r.rho_quotient);
      const double shift = std::abs(l.rho_loop_graph - l.rho_graph - 2.0);
      worst_gap = std::max(worst_gap, gap);
      worst_shift = std::max(worst_shift, shift);
      if (!(matrix_ok && r.holds && gap < kRhoTol && l.holds)) bad.push_back(to_json(id));
    }
    for (const auto& [tag, entry] : groups)
      run.add(name_at("family-" + tag, ln), entry.second.empty(),
              Json{{"graphs", entry.first}, {"violations", entry.second}});
    run.add(name_at("tolerances", ln), worst_gap < kRhoTol && worst_shift < kRhoTol,
            Json{{"max_quotient_gap", worst_gap}, {"max_loop_shift_error", worst_shift}});
  }
  return run;
}

// ---------------------------------------------------------------- switching

namespace {

bool degrees_preserved(const Graph& a, const Graph& b) {
  for (Vertex v = 0; v < a.order(); ++v)
    if (a.degree(v) != b.degree(v)) return false;
  return true;
}

Json sandwich_json(const SandwichCheck& c) {
  return Json{{"rho_source", c.rho_source}, {"rho_result", c.rho_result}, {"x1", c.x_first},
              {"x2", c.x_second},           {"lower", c.lower_holds},    {"upper", c.upper_holds},
              {"symmetric", c.symmetric}};
}

void switching_operations(VerificationRun& run) {
  for (std::size_t n : {13, 15, 17, 19, 60, 100}) {
    const std::size_t delta = n % 2 == 1 ? 8 : 7;
    for (std::size_t k = 1; k <= 4; ++k) {
      ComplementProfile p;
      p.type1 = (n - delta - 1) / 2 - 1;
      p.type2 = {k};
      p.type3 = {delta - k};
      const Graph gloop = add_loops(build_from_profile(n, delta, p));
      const VertexSet path = profile_paths(n, delta, p).front();
      const SwitchMove m{MoveKind::Op1, path};
      const SandwichCheck c = op1_sandwich_check(gloop, m);
      const bool kept = degrees_preserved(gloop, apply(gloop, m));
      run.add(name_at("op1-sandwich/t=" + std::to_string(k + 2), static_cast<long>(n)), c.holds() && kept,
              sandwich_json(c));
    }
  }

  struct Op2Case {
    std::size_t n, a, b;
  };
  for (const auto& oc : {Op2Case{13, 2, 3}, Op2Case{15, 2, 3}, Op2Case{17, 4, 5}, Op2Case{19, 3, 4},
                         Op2Case{60, 2, 6}, Op2Case{100, 5, 3}}) {
    const std::size_t n = oc.n, delta = n - 5;
    ComplementProfile p;
    p.type2 = {oc.a, oc.b};
    if (delta > oc.a + oc.b) p.type3 = {delta - oc.a - oc.b};
    const auto paths = profile_paths(n, delta, p);
    Graph g = add_loops(build_from_profile(n, delta, p));
    bool ok = true;
    Json steps = Json::array();
    for (const VertexSet& path : paths) {
      const SwitchMove m{MoveKind::Op2, path};
      const MonotoneCheck c = op2_monotone_check(g, m);
      const Graph next = apply(g, m);
      ok = ok && c.holds && degrees_preserved(g, next);
      steps.push_back(Json{{"t", path.size()}, {"rho_before", c.rho_before}, {"rho_after", c.rho_after}});
      g = next;
    }
    const Partition part = op2_result_partition(n, 0, paths[0], paths[1]);
    const QuotientSpec q = quotient(g, part);
    const auto b = named_quotient(QuotientKind::B_n5, static_cast<long>(n)).matrix;
    const RatMatrix shifted = to_rational(b + IntMatrix::identity(4) + IntMatrix::identity(4));
    run.add(name_at("op2-monotone", static_cast<long>(n)), ok, Json{{"steps", steps}});
    run.add(name_at("op2-result-quotient", static_cast<long>(n)), q.equitable && q.matrix == shifted);
  }
}

}  // namespace

VerificationRun verify_switching(std::size_t trials, std::uint64_t seed) {
  VerificationRun run;
  run.suite = "switching";
  run.parameters = {{"trials", trials}, {"seed", seed}};
  std::mt19937_64 rng(seed);

  const LsSweep s = local_switching_sweep(trials, rng);
  run.add("local-switching", s.failures == 0 && s.instances == trials,
          Json{{"instances", s.instances}, {"attempts", s.attempts}, {"failures", s.failures},
               {"witnesses", s.witnesses}});

  const Graph c4 = build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const SwitchCertificate cc = ls_certificate(c4, 0, 1, 2, 3);
  run.add("local-switching-equality-case",
          cc.equality_case && std::abs(cc.rho_after - cc.rho_before) < kRhoTol && std::abs(cc.rho_after - 2) < kRhoTol,
          to_json(cc));

  for (long n = 9; n <= 59; n += 2) {
    const auto un = static_cast<std::size_t>(n);
    const Graph g21 = build_G2_1(un);
    const Graph h2 = build_H2(un);
    std::vector<Vertex> perm(un);
    for (std::size_t v = 0; v < un; ++v) perm[v] = static_cast<Vertex>(v);
    std::swap(perm[4], perm[5]);
    const bool rewrite = relabel(apply(g21, SwitchMove{MoveKind::LS, {6, 2, 5, 1}}), perm) == h2;
    const double r21 = perron(g21).rho, rh2 = perron(h2).rho;
    const FamilyInstance f21 = instance({FamilyTag::G2_1, un, std::nullopt, std::nullopt});
    const int exact = compare_max_roots(char_poly(*instance({FamilyTag::H2, un, std::nullopt, std::nullopt}).quotient),
                                        char_poly(*f21.quotient));
    run.add(name_at("H2>G2_1", n), rewrite && rh2 > r21 && exact > 0,
            Json{{"rewrite_matches", rewrite}, {"rho_H2", rh2}, {"rho_G2_1", r21}, {"exact_order", exact}});
  }

  switching_operations(run);

  {
    ComplementProfile p;
    p.type2 = {2};
    const Graph g = build_case2(12, 5, 3, p);
    const Graph after = apply(g, SwitchMove{MoveKind::Op3, {0, 1, 6, 7}});
    const bool ok = after.degree(0) == 6 && after.degree(1) == 4 && after.degree(6) == 9 && after.degree(7) == 9;
    run.add("op3-degrees", ok);
  }

  for (long n = 12; n <= 40; ++n) {
    const auto un = static_cast<std::size_t>(n);
    bool asserted = true;
    std::size_t ratio_holds = 0, low_sum_holds = 0, graphs = 0;
    for (std::size_t d = 4; d + 4 <= un; ++d) {
      const Case2Audit a = case2_inequality_audit(build(FamilyId{FamilyTag::Gdd, un, d, std::nullopt}));
      asserted = asserted && a.asserted_hold();
      ratio_holds += a.ratio.holds;
      low_sum_holds += a.low_sum.holds;
      ++graphs;
    }
    for (std::size_t d = 3; d + 4 <= un; d += 2) {
      const Case2Audit a = case2_inequality_audit(build(FamilyId{FamilyTag::Gd1, un, d, std::nullopt}));
      asserted = asserted && a.asserted_hold();
      low_sum_holds += a.low_sum.holds;
      ++graphs;
    }
    run.add(name_at("case2-audit", n), asserted,
            Json{{"graphs", graphs}, {"ratio_bound_holds_dd", ratio_holds}, {"low_sum_holds", low_sum_holds}});
  }
  return run;
}

// ---------------------------------------------------------------- sandwich

VerificationRun verify_sandwich(std::size_t n, std::size_t delta, const ComplementProfile& profile) {
  if (n < 59) throw InputError("verify_sandwich: n must be at least 59");
  if (delta < 3 || delta + 5 > n) throw InputError("verify_sandwich: need 3 <= delta <= n-5");
  if (profile.type2.empty()) throw InputError("verify_sandwich: profile needs a path component");
  VerificationRun run;
  run.suite = "sandwich";
  run.parameters = {{"n", n}, {"delta", delta}, {"profile", to_json(profile)}};
  const Graph g = build_from_profile(n, delta, profile);
  const double rho_g = perron(g).rho;
  const double rho_b = max_real_root(closed_form(QuotientKind::B_delta, static_cast<long>(n), static_cast<long>(delta)),
                                     1e-15);
  const double nn = static_cast<double>(n), n4 = nn - 4;
  const double fine = 2 * (nn - 1) / (3 * n4 * n4 * n4) + 2 * (nn - 1) / (3 * n4 * n4 * n4 * n4);
  const double coarse = 1 / (nn * nn);
  const std::string tag = "n=" + std::to_string(n) + ",delta=" + std::to_string(delta);
  const Json detail{{"rho_graph", rho_g}, {"rho_quotient", rho_b}, {"gap", rho_g - rho_b}, {"fine_width", fine},
                    {"coarse_width", coarse}};
  run.add("lower@" + tag, rho_b <= rho_g + kRhoTol, detail);
  run.add("fine-width@" + tag, rho_g < rho_b + fine, detail);
  run.add("coarse-width@" + tag, fine <= coarse && rho_g < rho_b + coarse, detail);
  return run;
}

VerificationRun verify_sandwich_grid() {
  VerificationRun run;
  run.suite = "sandwich-grid";
  struct Case {
    std::size_t n, delta, paths;
  };
  const std::vector<Case> cases{{59, 4, 1},  {60, 5, 1},  {64, 7, 2},  {71, 4, 1},  {75, 8, 4},   {80, 9, 3},
                                {90, 5, 2},  {100, 7, 2}, {101, 6, 1}, {110, 11, 3}, {119, 10, 2}, {120, 5, 1}};
  std::vector<std::pair<Case, ComplementProfile>> all;
  for (const Case& c : cases) all.push_back({c, default_profile(c.n, c.delta, c.paths)});
  ComplementProfile mixed;
  mixed.type2 = {2, 1};
  mixed.type3 = {6};
  mixed.type1 = (100 - 9 - 1) / 2 - 2;
  all.push_back({{100, 9, 2}, mixed});
  Json list = Json::array();
  for (const auto& [c, p] : all) {
    run.absorb(verify_sandwich(c.n, c.delta, p));
    list.push_back(Json{{"n", c.n}, {"delta", c.delta}, {"profile", to_json(p)}});
  }
  run.parameters = {{"profiles", list}};
  return run;
}

}  // namespace maxrho
