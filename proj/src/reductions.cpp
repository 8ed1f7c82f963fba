#include "borda/reductions.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>

namespace borda {

namespace {

using Seq = std::vector<CandidateId>;

Seq cat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const Seq& s : parts) out.insert(out.end(), s.begin(), s.end());
  return out;
}

Seq rev(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

Seq without(const Seq& s, const Seq& drop) {
  Seq out;
  for (CandidateId c : s)
    if (std::find(drop.begin(), drop.end(), c) == drop.end()) out.push_back(c);
  return out;
}

Seq flatten(const std::vector<Seq>& groups) {
  Seq out;
  for (const Seq& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

struct Builder {
  Election e;

  CandidateId add(std::string label) {
    e.labels.push_back(std::move(label));
    return static_cast<CandidateId>(e.labels.size() - 1);
  }
  Seq add_block(const std::string& prefix, std::size_t count) {
    Seq out;
    for (std::size_t j = 0; j < count; ++j) out.push_back(add(prefix + std::to_string(j)));
    return out;
  }
  void vote(Seq ranking, std::int64_t mult = 1) { e.votes.push_back(Vote{std::move(ranking), mult}); }
  void activate(const Seq& ids) {
    e.active.insert(e.active.end(), ids.begin(), ids.end());
    std::sort(e.active.begin(), e.active.end());
  }
};

std::string vname(std::size_t i) { return std::to_string(i); }

Seq members(const Seq& c1, const std::vector<Vertex>& vertices) {
  Seq out;
  for (Vertex v : vertices) out.push_back(c1[v]);
  return out;
}

void expect(bool cond, const std::string& what) {
  if (!cond) throw ConstructionError("construction identity failed: " + what);
}

std::string params(const std::string& name, const Graph& g, std::size_t k) {
  return name + " n=" + std::to_string(g.n) + " m=" + std::to_string(g.edges.size()) + " k=" + std::to_string(k);
}

ReductionOutput finish(Builder&& b, ControlKind kind, std::size_t k, const Seq& gadget, std::string provenance,
                       std::size_t pool_size) {
  ReductionOutput out;
  out.instance.kind = kind;
  out.instance.base = std::move(b.e);
  out.instance.budget = std::min(k, pool_size);
  out.provenance = std::move(provenance);
  for (std::size_t i = 0; i < gadget.size(); ++i)
    out.witness.push_back(WitnessEntry{i, gadget[i], out.instance.base.labels[gadget[i]]});
  return out;
}

void add_sizes(ReductionOutput& out) {
  const Election& e = out.instance.base;
  out.sizes.insert(out.sizes.begin(),
                   {{"candidates", static_cast<std::int64_t>(e.m())},
                    {"pool_candidates", static_cast<std::int64_t>(out.instance.pool_candidates.size())},
                    {"votes", e.ballot_count()},
                    {"budget", static_cast<std::int64_t>(out.instance.budget)}});
}

}  // namespace

ReductionOutput reduce_ccdv(const Graph& g, std::size_t k, const ReduceOptions& opts) {
  const std::size_t n = g.n;
  if (k < 1 || n <= k)
    throw DomainError("ccdv reduction needs n > k >= 1 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  for (Vertex v = 0; v < n; ++v)
    if (degree(g, v) == 0) throw DomainError("ccdv reduction needs |N[v]| >= 2; vertex " + vname(v) + " is isolated");
  if (n * k > 6 && !opts.force)
    throw DomainError("ccdv instance for n*k=" + std::to_string(n * k) + " exceeds the size guard (use --force)");

  const std::size_t q = n * k;
  const std::size_t r = n * n * k * k;
  Builder b;
  Seq c1;
  std::vector<Seq> xs, ys;
  for (std::size_t i = 0; i < n; ++i) c1.push_back(b.add("c1_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i) xs.push_back(b.add_block("x_" + vname(i) + "_", q));
  for (std::size_t i = 0; i < n; ++i) ys.push_back(b.add_block("y_" + vname(i) + "_", r));
  const CandidateId ch = b.add("ch");
  const CandidateId cw = b.add("cw");
  const CandidateId p = b.add("p");
  const Seq x_all = flatten(xs);
  const Seq y_all = flatten(ys);

  std::vector<Seq> nbh(n);
  for (Vertex v = 0; v < n; ++v) nbh[v] = members(c1, closed_neighborhood(g, v));

  // auxiliary election
  Election aux;
  aux.labels = b.e.labels;
  aux.rule = Rule::BordaComplete;
  aux.special = p;
  aux.active = cat({c1, x_all, y_all, {ch, cw, p}});
  std::sort(aux.active.begin(), aux.active.end());
  for (std::size_t i = 0; i < n; ++i)
    aux.votes.push_back(Vote{cat({nbh[i], ys[i], {cw, ch, p}, xs[i], without(c1, nbh[i]), without(x_all, xs[i]),
                                  without(y_all, ys[i])}),
                             1});
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = diff(c1[i], p, aux).doubled() / 2 - 4;
    if (d < 0) throw ConstructionError("s_" + vname(i) + " is negative");
    s[i] = static_cast<std::size_t>(d);
  }

  std::vector<Seq> zs;
  for (std::size_t i = 0; i < n; ++i) zs.push_back(b.add_block("z_" + vname(i) + "_", s[i]));
  const CandidateId ca = b.add("ca");
  const CandidateId cb = b.add("cb");
  const Seq z_all = flatten(zs);

  for (std::size_t i = 0; i < n; ++i)
    b.vote(cat({nbh[i], ys[i], {cw, ch, p}, xs[i], without(c1, nbh[i]), z_all, without(x_all, xs[i]),
                without(y_all, ys[i]), {cb, ca}}));
  for (std::size_t i = 0; i < n; ++i)
    b.vote(cat({without(c1, {c1[i]}), {cb, ca, p, cw}, zs[i], {c1[i]}, without(z_all, zs[i]), x_all, y_all, {ch}}));
  for (std::size_t i = 0; i < n; ++i)
    b.vote(cat({{p, cw, c1[i]}, rev(without(c1, {c1[i]})), {cb, ca}, rev(z_all), rev(x_all), rev(y_all), {ch}}));

  b.e.rule = Rule::BordaComplete;
  b.e.special = p;
  b.e.active.resize(b.e.labels.size());
  for (CandidateId c = 0; c < b.e.active.size(); ++c) b.e.active[c] = c;

  const Election& e = b.e;
  expect(diff(p, cw, e) == ScoreValue{}, "diff(p,cw,V)=0");
  for (std::size_t i = 0; i < n; ++i) {
    expect(diff(c1[i], p, e) == ScoreValue{}, "diff(c1_" + vname(i) + ",p,V)=0");
    for (std::size_t j = 0; j < n; ++j) {
      Election pair = e;
      pair.votes = {e.votes[n + j], e.votes[2 * n + j]};
      const ScoreValue want = i == j ? ScoreValue::from_int(-static_cast<std::int64_t>(s[i]) - 4) : ScoreValue{};
      expect(diff(c1[i], p, pair) == want, "pair identity for c1_" + vname(i) + " and vertex " + vname(j));
    }
  }

  Seq ballots(n);
  for (std::size_t i = 0; i < n; ++i) ballots[i] = static_cast<CandidateId>(i);
  auto out = finish(std::move(b), ControlKind::CCDV, k, ballots, params("ccdv", g, k), 3 * n);
  for (auto& w : out.witness) w.gadget = "v" + std::to_string(w.pick + 1);
  add_sizes(out);
  out.sizes.push_back({"q", static_cast<std::int64_t>(q)});
  out.sizes.push_back({"r", static_cast<std::int64_t>(r)});
  for (std::size_t i = 0; i < n; ++i) out.sizes.push_back({"s_" + vname(i), static_cast<std::int64_t>(s[i])});
  return out;
}

ReductionOutput reduce_ccac(const Graph& g, std::size_t k) {
  const std::size_t n = g.n;
  Builder b;
  Seq c1, c2;
  for (std::size_t i = 0; i < n; ++i) c1.push_back(b.add("c1_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i) c2.push_back(b.add("c2_" + vname(i)));
  const CandidateId p = b.add("p");
  for (std::size_t i = 0; i < n; ++i) {
    const Seq nb = members(c1, closed_neighborhood(g, i));
    b.vote(cat({without(c2, {c2[i]}), {p}, nb, {c2[i]}, without(c1, nb)}));
    b.vote(cat({{c2[i], p}, rev(without(c2, {c2[i]})), rev(nb), rev(without(c1, nb))}));
  }
  b.e.rule = Rule::BordaComplete;
  b.e.special = p;
  b.activate(cat({c2, {p}}));
  for (std::size_t i = 0; i < n; ++i)
    expect(diff(c2[i], p, b.e) == ScoreValue{}, "diff(c2_" + vname(i) + ",p,V)=0");

  auto out = finish(std::move(b), ControlKind::CCAC, k, c1, params("ccac", g, k), n);
  out.instance.pool_candidates = c1;
  add_sizes(out);
  return out;
}

ReductionOutput reduce_ccdc(const Graph& g, std::size_t k) {
  const std::size_t n = g.n;
  Builder b;
  Seq c1, c2;
  std::vector<Seq> xs;
  for (std::size_t i = 0; i < n; ++i) c1.push_back(b.add("c1_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i) c2.push_back(b.add("c2_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i)
    xs.push_back(b.add_block("x_" + vname(i) + "_", closed_neighborhood(g, i).size()));
  const CandidateId p = b.add("p");
  const Seq x_all = flatten(xs);
  for (std::size_t i = 0; i < n; ++i) {
    const Seq nb = members(c1, closed_neighborhood(g, i));
    b.vote(cat({{c2[i]}, nb, {p}, without(c2, {c2[i]}), x_all, without(c1, nb)}));
    b.vote(cat({rev(without(c2, {c2[i]})), {p}, xs[i], {c2[i]}, without(x_all, xs[i]), c1}));
  }
  b.e.rule = Rule::BordaComplete;
  b.e.special = p;
  b.activate(cat({c1, c2, x_all, {p}}));
  for (std::size_t i = 0; i < n; ++i)
    expect(diff(p, c2[i], b.e) == ScoreValue{}, "diff(p,c2_" + vname(i) + ",V)=0");

  const std::size_t deletable = b.e.m() - 1;
  auto out = finish(std::move(b), ControlKind::CCDC, k, c1, params("ccdc", g, k), deletable);
  add_sizes(out);
  return out;
}

ReductionOutput reduce_2ccac_up(const Graph& g, std::size_t k, const ReduceOptions& opts) {
  const std::size_t n = g.n;
  const std::size_t extra = opts.as_printed ? 0 : 1;
  Builder b;
  Seq c1, c2;
  std::vector<Seq> xs;
  for (std::size_t i = 0; i < n; ++i) c1.push_back(b.add("c1_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i) xs.push_back(b.add_block("x_" + vname(i) + "_", n - degree(g, i) - 1 + extra));
  const Seq y = b.add_block("y_", n + extra);
  const CandidateId p = b.add("p");
  for (std::size_t i = 0; i < n; ++i) c2.push_back(b.add("c2_" + vname(i)));

  for (std::size_t i = 0; i < n; ++i)
    for (Vertex j : closed_neighborhood(g, i)) b.vote({c2[i], c1[j]});
  for (std::size_t i = 0; i < n; ++i)
    for (CandidateId x : xs[i]) b.vote({c1[i], x});
  for (CandidateId yj : y) b.vote({p, yj});

  b.e.rule = Rule::BordaUp;
  b.e.t_cap = 2;
  b.e.special = p;
  const Seq x_all = flatten(xs);
  b.activate(cat({c1, x_all, y, {p}}));
  const auto table = score_table(b.e);
  const auto want = ScoreValue::from_int(static_cast<std::int64_t>((b.e.m() - 1) * y.size()));
  expect(table[p] == want, "score(p,V)=(N1-1)|Y|");
  for (std::size_t i = 0; i < n; ++i) expect(table[c1[i]] == want, "score(c1_" + vname(i) + ",V)=score(p,V)");

  auto out = finish(std::move(b), ControlKind::CCAC, k, c2,
                    params(opts.as_printed ? "2ccac-up-printed" : "2ccac-up", g, k), n);
  out.instance.pool_candidates = c2;
  add_sizes(out);
  out.sizes.push_back({"X", static_cast<std::int64_t>(x_all.size())});
  out.sizes.push_back({"Y", static_cast<std::int64_t>(y.size())});
  return out;
}

ReductionOutput reduce_2ccdc_down(const Graph& g, std::size_t k) {
  const std::size_t n = g.n;
  Builder b;
  Seq c1, c2, y;
  std::vector<Seq> xs;
  for (std::size_t i = 0; i < n; ++i) c1.push_back(b.add("c1_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i) c2.push_back(b.add("c2_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i) xs.push_back(b.add_block("x_" + vname(i) + "_", n - degree(g, i) - 1));
  for (std::size_t i = 0; i < n; ++i) y.push_back(b.add("y_" + vname(i)));
  const CandidateId p = b.add("p");

  for (std::size_t i = 0; i < n; ++i)
    for (Vertex j : closed_neighborhood(g, i)) b.vote({c1[i], c2[j]});
  for (std::size_t i = 0; i < n; ++i)
    for (CandidateId x : xs[i]) b.vote({c1[i], x});
  for (std::size_t i = 0; i < n; ++i) b.vote({p, y[i]});

  b.e.rule = Rule::BordaDown;
  b.e.t_cap = 2;
  b.e.special = p;
  const Seq x_all = flatten(xs);
  b.activate(cat({c1, c2, x_all, y, {p}}));
  const auto table = score_table(b.e);
  const auto two_n = ScoreValue::from_int(static_cast<std::int64_t>(2 * n));
  expect(table[p] == two_n, "score(p,V)=2n");
  for (std::size_t i = 0; i < n; ++i) {
    expect(table[c1[i]] == two_n, "score(c1_" + vname(i) + ",V)=2n");
    expect(table[c2[i]] == ScoreValue::from_int(static_cast<std::int64_t>(degree(g, i) + 1)),
           "score(c2_" + vname(i) + ",V)=deg+1");
    expect(table[y[i]] == ScoreValue::from_int(1), "score(y_" + vname(i) + ",V)=1");
  }
  for (CandidateId x : x_all) expect(table[x] == ScoreValue::from_int(1), "score(x,V)=1");

  const std::size_t deletable = b.e.m() - 1;
  auto out = finish(std::move(b), ControlKind::CCDC, k, c2, params("2ccdc-down", g, k), deletable);
  add_sizes(out);
  return out;
}

ReductionOutput reduce_2ccdc_up(const Graph& g, std::size_t k) {
  const std::size_t n = g.n;
  if (n == 0) throw DomainError("2ccdc-up reduction needs a nonempty graph");
  const std::size_t d = degree(g, 0);
  bool regular = true;
  std::string report;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t dv = degree(g, v);
    regular = regular && dv == d;
    report += (v ? ", " : "") + std::string("deg(") + vname(v) + ")=" + std::to_string(dv);
  }
  if (!regular) throw DomainError("2ccdc-up reduction needs a regular graph: " + report);
  if (d == 0) throw DomainError("2ccdc-up reduction needs degree >= 1: " + report);

  Builder b;
  Seq c1, c2;
  std::vector<Seq> ys;
  for (std::size_t i = 0; i < n; ++i) c1.push_back(b.add("c1_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i) c2.push_back(b.add("c2_" + vname(i)));
  for (std::size_t i = 0; i < n; ++i) ys.push_back(b.add_block("y_" + vname(i) + "_", d + 1));
  const CandidateId p = b.add("p");
  const auto adj = adjacency(g);

  for (std::size_t i = 0; i < n; ++i)
    for (Vertex j : closed_neighborhood(g, i)) b.vote({c1[i], c2[j]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && !adj[i][j]) b.vote({c2[j], c1[i]});
  for (std::size_t i = 0; i < n; ++i)
    for (CandidateId yj : ys[i]) b.vote({yj, c1[i]});
  for (std::size_t i = 0; i < n; ++i) b.vote({c2[i], p});
  b.vote({p}, static_cast<std::int64_t>(d + 1));

  b.e.rule = Rule::BordaUp;
  b.e.t_cap = 2;
  b.e.special = p;
  const Seq y_all = flatten(ys);
  b.activate(cat({c1, c2, y_all, {p}}));
  const auto table = score_table(b.e);
  const auto big_n = static_cast<std::int64_t>(b.e.m());
  const auto want = ScoreValue::from_int((static_cast<std::int64_t>(d) + 1) * (big_n - 1) +
                                         static_cast<std::int64_t>(n) * (big_n - 2));
  expect(table[p] == want, "score(p,V)=(D+1)(N1-1)+n(N1-2)");
  for (std::size_t i = 0; i < n; ++i) expect(table[c1[i]] == want, "score(c1_" + vname(i) + ",V)=score(p,V)");

  const std::size_t deletable = b.e.m() - 1;
  auto out = finish(std::move(b), ControlKind::CCDC, k, c2, params("2ccdc-up", g, k), deletable);
  add_sizes(out);
  out.sizes.push_back({"D", static_cast<std::int64_t>(d)});
  return out;
}

ReductionOutput reduce_2ccac_down(const Graph& g, std::size_t k) {
  const std::size_t n = g.n;
  Builder b;
  Seq c1, c2;
  for (std::size_t i = 0; i < n; ++i) c1.push_back(b.add("c1_" + vname(i)));
  const CandidateId p = b.add("p");
  for (std::size_t i = 0; i < n; ++i) c2.push_back(b.add("c2_" + vname(i)));
  const auto adj = adjacency(g);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && !adj[i][j]) b.vote({c1[i], c2[j]});
  for (std::size_t i = 0; i < n; ++i) b.vote({c1[i]}, static_cast<std::int64_t>(degree(g, i) + 1));
  for (std::size_t i = 0; i < n; ++i) b.vote({p, c2[i]});

  b.e.rule = Rule::BordaDown;
  b.e.t_cap = 2;
  b.e.special = p;
  b.activate(cat({c1, {p}}));
  const auto table = score_table(b.e);
  const auto want = ScoreValue::from_int(static_cast<std::int64_t>(n));
  expect(table[p] == want, "score(p,V)=n");
  for (std::size_t i = 0; i < n; ++i) expect(table[c1[i]] == want, "score(c1_" + vname(i) + ",V)=n");

  auto out = finish(std::move(b), ControlKind::CCAC, k, c2, params("2ccac-down", g, k), n);
  out.instance.pool_candidates = c2;
  add_sizes(out);
  return out;
}

ControlInstance lift_up_to_av(const ControlInstance& inst, std::size_t t) {
  if (inst.base.rule != Rule::BordaUp) throw DomainError("lift expects a borda-up instance");
  if (t == 0) throw DomainError("lift needs t >= 1");
  const std::size_t registered = inst.base.m();
  if (registered < t + 1)
    throw DomainError("lift needs at least t+1=" + std::to_string(t + 1) + " registered candidates, got " +
                      std::to_string(registered));
  ControlInstance out = inst;
  Election& e = out.base;
  std::set<std::string> taken(e.labels.begin(), e.labels.end());
  for (std::size_t k = 0; k < registered - t - 1; ++k) {
    std::string label = "d_" + std::to_string(k);
    while (taken.count(label)) label += "_";
    taken.insert(label);
    e.labels.push_back(label);
    e.active.push_back(static_cast<CandidateId>(e.labels.size() - 1));
  }
  e.rule = Rule::BordaAv;
  return out;
}

const std::vector<std::string>& reduction_names() {
  static const std::vector<std::string> names{"ccdv",       "ccac",       "ccdc",     "2ccac-up", "2ccac-up-printed",
                                              "2ccdc-down", "2ccdc-up",   "2ccac-down", "2ccac-av", "2ccdc-av"};
  return names;
}

ReductionOutput reduce_by_name(const std::string& name, const Graph& g, std::size_t k, const ReduceOptions& opts) {
  if (name == "ccdv") return reduce_ccdv(g, k, opts);
  if (name == "ccac") return reduce_ccac(g, k);
  if (name == "ccdc") return reduce_ccdc(g, k);
  if (name == "2ccac-up") return reduce_2ccac_up(g, k, opts);
  if (name == "2ccac-up-printed") {
    ReduceOptions printed = opts;
    printed.as_printed = true;
    return reduce_2ccac_up(g, k, printed);
  }
  if (name == "2ccdc-down") return reduce_2ccdc_down(g, k);
  if (name == "2ccdc-up") return reduce_2ccdc_up(g, k);
  if (name == "2ccac-down") return reduce_2ccac_down(g, k);
  if (name == "2ccac-av" || name == "2ccdc-av") {
    ReductionOutput out = name == "2ccac-av" ? reduce_2ccac_up(g, k, opts) : reduce_2ccdc_up(g, k);
    out.instance = lift_up_to_av(out.instance, 2);
    out.provenance += " lifted-av";
    out.sizes.clear();
    add_sizes(out);
    return out;
  }
  throw DomainError("unknown reduction '" + name + "'");
}

Solution transport(const ReductionOutput& out, const std::vector<Vertex>& vertices) {
  Solution sol;
  for (Vertex v : vertices) {
    if (v >= out.witness.size()) throw DomainError("vertex " + vname(v) + " has no witness");
    sol.picks.push_back(out.witness[v].pick);
  }
  std::sort(sol.picks.begin(), sol.picks.end());
  return sol;
}

}  // namespace borda
