#include "borda/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace borda {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <class Int>
std::optional<Int> to_int(const std::string& s) {
  Int v{};
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || s.empty()) return std::nullopt;
  return v;
}

struct RawVote {
  std::size_t line = 0;
  std::int64_t mult = 1;
  std::vector<std::string> labels;
};

struct RawFile {
  std::size_t m = 0;
  std::optional<std::size_t> t;
  Rule rule = Rule::BordaComplete;
  std::optional<std::pair<std::size_t, std::string>> special;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> candidates;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> pool_candidates;
  std::optional<ControlKind> kind;
  std::optional<std::size_t> budget;
  std::optional<WinnerModel> model;
  std::vector<RawVote> votes;
  std::vector<RawVote> pool_votes;
};

RawVote parse_vote_line(const std::string& line, std::size_t no) {
  const auto colon = line.find(':');
  RawVote v;
  v.line = no;
  const auto mult = to_int<std::int64_t>(trim(line.substr(0, colon)));
  if (!mult || *mult <= 0) throw ParseError(no, "multiplicity must be a positive integer");
  v.mult = *mult;
  const std::string rest = trim(line.substr(colon + 1));
  if (rest.empty()) return v;
  std::size_t start = 0;
  while (true) {
    const auto gt = rest.find('>', start);
    const std::string label = trim(rest.substr(start, gt == std::string::npos ? std::string::npos : gt - start));
    if (label.empty() || label.find_first_of(" \t") != std::string::npos)
      throw ParseError(no, "malformed ranking '" + rest + "'");
    v.labels.push_back(label);
    if (gt == std::string::npos) break;
    start = gt + 1;
  }
  return v;
}

RawFile scan(const std::string& text, bool instance) {
  RawFile f;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  bool seen_header = false;
  bool in_pool = false;
  while (std::getline(in, line)) {
    ++no;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto w = words(s);
    const std::string& key = w[0];
    if (!seen_header) {
      if (key != "election" || w.size() != 4) throw ParseError(no, "expected 'election <m> <t|complete> <rule>'");
      const auto m = to_int<std::size_t>(w[1]);
      if (!m || *m == 0) throw ParseError(no, "candidate count must be a positive integer");
      f.m = *m;
      if (w[2] != "complete") {
        const auto t = to_int<std::size_t>(w[2]);
        if (!t || *t == 0) throw ParseError(no, "truncation bound must be a positive integer or 'complete'");
        f.t = *t;
      }
      try {
        f.rule = parse_rule(w[3]);
      } catch (const DomainError& e) {
        throw ParseError(no, e.what());
      }
      if (f.rule == Rule::BordaComplete && f.t) throw ParseError(no, "rule borda requires complete votes");
      seen_header = true;
      continue;
    }
    if (s.find(':') != std::string::npos && to_int<std::int64_t>(trim(s.substr(0, s.find(':'))))) {
      (in_pool ? f.pool_votes : f.votes).push_back(parse_vote_line(s, no));
      continue;
    }
    const auto once = [&](bool present) {
      if (present) throw ParseError(no, "duplicate '" + key + "' line");
    };
    const auto need_instance = [&] {
      if (!instance) throw ParseError(no, "'" + key + "' is only allowed in instance files");
    };
    if (key == "election") {
      throw ParseError(no, "duplicate 'election' line");
    } else if (key == "special") {
      once(f.special.has_value());
      if (w.size() != 2) throw ParseError(no, "expected 'special <label>'");
      f.special = {no, w[1]};
    } else if (key == "candidates") {
      once(f.candidates.has_value());
      f.candidates = {no, {w.begin() + 1, w.end()}};
    } else if (key == "pool-candidates") {
      need_instance();
      once(f.pool_candidates.has_value());
      f.pool_candidates = {no, {w.begin() + 1, w.end()}};
    } else if (key == "kind") {
      need_instance();
      once(f.kind.has_value());
      try {
        if (w.size() != 2) throw DomainError("expected 'kind <ccav|ccdv|ccac|ccdc>'");
        f.kind = parse_kind(w[1]);
      } catch (const DomainError& e) {
        throw ParseError(no, e.what());
      }
    } else if (key == "budget") {
      need_instance();
      once(f.budget.has_value());
      const auto b = w.size() == 2 ? to_int<std::size_t>(w[1]) : std::nullopt;
      if (!b) throw ParseError(no, "expected 'budget <non-negative integer>'");
      f.budget = *b;
    } else if (key == "model") {
      need_instance();
      once(f.model.has_value());
      try {
        if (w.size() != 2) throw DomainError("expected 'model <unique|cowinner>'");
        f.model = parse_model(w[1]);
      } catch (const DomainError& e) {
        throw ParseError(no, e.what());
      }
    } else if (key == "pool-votes") {
      need_instance();
      if (in_pool || w.size() != 1) throw ParseError(no, "unexpected 'pool-votes' line");
      in_pool = true;
    } else {
      throw ParseError(no, "unrecognized line '" + s + "'");
    }
  }
  if (!seen_header) throw ParseError(0, "missing 'election' header");
  if (!f.special) throw ParseError(0, "missing 'special' line");
  if (!f.candidates) throw ParseError(0, "missing 'candidates' line");
  if (instance && !f.kind) throw ParseError(0, "missing 'kind' line");
  if (instance && !f.budget) throw ParseError(0, "missing 'budget' line");
  return f;
}

struct Resolved {
  Election e;
  std::map<std::string, CandidateId> ids;
  CandidateSet pool;
};

Resolved resolve_candidates(const RawFile& f) {
  Resolved r;
  const auto add = [&](std::size_t line, const std::string& label) {
    if (!r.ids.emplace(label, static_cast<CandidateId>(r.e.labels.size())).second)
      throw ParseError(line, "duplicate candidate label '" + label + "'");
    r.e.labels.push_back(label);
  };
  const auto& [cline, cands] = *f.candidates;
  if (cands.size() != f.m)
    throw ParseError(cline, "declared " + std::to_string(f.m) + " candidates but listed " +
                                std::to_string(cands.size()));
  for (const auto& c : cands) add(cline, c);
  r.e.active.resize(cands.size());
  for (CandidateId c = 0; c < r.e.active.size(); ++c) r.e.active[c] = c;
  if (f.pool_candidates) {
    for (const auto& c : f.pool_candidates->second) {
      add(f.pool_candidates->first, c);
      r.pool.push_back(static_cast<CandidateId>(r.e.labels.size() - 1));
    }
  }
  const auto sp = r.ids.find(f.special->second);
  if (sp == r.ids.end() || sp->second >= f.m)
    throw ParseError(f.special->first, "special candidate '" + f.special->second + "' is not a registered candidate");
  r.e.special = sp->second;
  r.e.rule = f.rule;
  r.e.t_cap = f.t;
  return r;
}

Vote resolve_vote(const RawVote& raw, const std::map<std::string, CandidateId>& ids, std::size_t allowed_ids,
                  std::optional<std::size_t> t, std::size_t complete_len) {
  Vote v;
  v.multiplicity = raw.mult;
  std::vector<char> seen(allowed_ids, 0);
  for (const auto& label : raw.labels) {
    const auto it = ids.find(label);
    if (it == ids.end() || it->second >= allowed_ids) throw ParseError(raw.line, "unknown candidate '" + label + "'");
    if (seen[it->second]) throw ParseError(raw.line, "candidate '" + label + "' ranked twice");
    seen[it->second] = 1;
    v.ranking.push_back(it->second);
  }
  if (t && v.length() > *t)
    throw ParseError(raw.line, "ranking of length " + std::to_string(v.length()) + " exceeds t=" + std::to_string(*t));
  if (!t && v.length() != complete_len)
    throw ParseError(raw.line, "complete vote must rank all " + std::to_string(complete_len) + " candidates");
  return v;
}

std::string header(const Election& e) {
  return "election " + std::to_string(e.m()) + " " + (e.t_cap ? std::to_string(*e.t_cap) : "complete") + " " +
         rule_name(e.rule) + "\n";
}

std::string vote_line(const Vote& v, const Election& e) {
  std::string out = std::to_string(v.multiplicity) + ":";
  for (std::size_t i = 0; i < v.ranking.size(); ++i) out += (i ? " > " : " ") + e.labels[v.ranking[i]];
  return out + "\n";
}

std::string label_line(const std::string& key, const Election& e, const CandidateSet& ids) {
  std::string out = key;
  for (CandidateId c : ids) out += " " + e.labels[c];
  return out + "\n";
}

}  // namespace

Rule parse_rule(const std::string& s) {
  if (s == "borda") return Rule::BordaComplete;
  if (s == "up") return Rule::BordaUp;
  if (s == "down") return Rule::BordaDown;
  if (s == "av") return Rule::BordaAv;
  throw DomainError("unknown rule '" + s + "' (expected borda, up, down or av)");
}

ControlKind parse_kind(const std::string& s) {
  if (s == "ccav") return ControlKind::CCAV;
  if (s == "ccdv") return ControlKind::CCDV;
  if (s == "ccac") return ControlKind::CCAC;
  if (s == "ccdc") return ControlKind::CCDC;
  throw DomainError("unknown kind '" + s + "' (expected ccav, ccdv, ccac or ccdc)");
}

WinnerModel parse_model(const std::string& s) {
  if (s == "unique") return WinnerModel::Unique;
  if (s == "cowinner") return WinnerModel::CoWinner;
  throw DomainError("unknown winner model '" + s + "' (expected unique or cowinner)");
}

Election parse_election(const std::string& text) {
  const RawFile f = scan(text, false);
  Resolved r = resolve_candidates(f);
  for (const auto& raw : f.votes) r.e.votes.push_back(resolve_vote(raw, r.ids, r.e.labels.size(), f.t, f.m));
  try {
    validate(r.e);
  } catch (const DomainError& err) {
    throw ParseError(0, std::string("invalid election: ") + err.what());
  }
  return r.e;
}

ControlInstance parse_instance(const std::string& text) {
  const RawFile f = scan(text, true);
  Resolved r = resolve_candidates(f);
  ControlInstance inst;
  inst.kind = *f.kind;
  inst.budget = *f.budget;
  inst.model = f.model.value_or(WinnerModel::Unique);
  if (f.pool_candidates && inst.kind != ControlKind::CCAC)
    throw ParseError(f.pool_candidates->first, "pool-candidates is only allowed for kind ccac");
  if (!f.pool_votes.empty() && inst.kind != ControlKind::CCAV)
    throw ParseError(f.pool_votes.front().line, "pool votes are only allowed for kind ccav");
  const std::size_t universe = r.e.labels.size();
  for (const auto& raw : f.votes) r.e.votes.push_back(resolve_vote(raw, r.ids, universe, f.t, universe));
  for (const auto& raw : f.pool_votes) inst.pool_votes.push_back(resolve_vote(raw, r.ids, f.m, f.t, f.m));
  inst.pool_candidates = r.pool;
  inst.base = std::move(r.e);
  try {
    validate(inst);
  } catch (const DomainError& err) {
    throw ParseError(0, std::string("invalid instance: ") + err.what());
  }
  return inst;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(in, line)) {
    ++no;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto w = words(s);
    if (!n) {
      const auto v = w.size() == 2 && w[0] == "graph" ? to_int<std::size_t>(w[1]) : std::nullopt;
      if (!v) throw ParseError(no, "expected 'graph <n>'");
      n = *v;
      continue;
    }
    const auto a = w.size() == 2 ? to_int<std::size_t>(w[0]) : std::nullopt;
    const auto b = w.size() == 2 ? to_int<std::size_t>(w[1]) : std::nullopt;
    if (!a || !b) throw ParseError(no, "expected '<u> <v>'");
    if (*a >= *n || *b >= *n) throw ParseError(no, "vertex out of range");
    if (*a == *b) throw ParseError(no, "self-loop at vertex " + w[0]);
    if (!seen.insert(std::minmax(*a, *b)).second) throw ParseError(no, "duplicate edge " + w[0] + " " + w[1]);
    edges.emplace_back(*a, *b);
  }
  if (!n) throw ParseError(0, "missing 'graph' header");
  return make_graph(*n, std::move(edges));
}

std::vector<std::pair<Vertex, std::string>> parse_witness(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  std::vector<std::pair<Vertex, std::string>> out;
  while (std::getline(in, line)) {
    ++no;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto w = words(s);
    const auto v = w.size() == 2 ? to_int<std::size_t>(w[0]) : std::nullopt;
    if (!v) throw ParseError(no, "expected '<vertex> <gadget-id>'");
    out.emplace_back(*v, w[1]);
  }
  return out;
}

std::string serialize(const Election& e) {
  std::string out = header(e);
  out += "special " + e.labels[e.special] + "\n";
  out += label_line("candidates", e, e.active);
  for (const Vote& v : e.votes) out += vote_line(project_vote(v, e.active), e);
  return out;
}

std::string serialize(const ControlInstance& inst) {
  const Election& e = inst.base;
  std::string out = header(e);
  out += "special " + e.labels[e.special] + "\n";
  out += label_line("candidates", e, e.active);
  if (inst.kind == ControlKind::CCAC) out += label_line("pool-candidates", e, inst.pool_candidates);
  out += std::string("kind ") + kind_name(inst.kind) + "\n";
  out += "budget " + std::to_string(inst.budget) + "\n";
  out += std::string("model ") + model_name(inst.model) + "\n";
  CandidateSet visible = e.active;
  if (inst.kind == ControlKind::CCAC) {
    visible.insert(visible.end(), inst.pool_candidates.begin(), inst.pool_candidates.end());
    std::sort(visible.begin(), visible.end());
  }
  for (const Vote& v : e.votes) out += vote_line(project_vote(v, visible), e);
  if (inst.kind == ControlKind::CCAV) {
    out += "pool-votes\n";
    for (const Vote& v : inst.pool_votes) out += vote_line(v, e);
  }
  return out;
}

std::string serialize(const Graph& g) {
  std::string out = "graph " + std::to_string(g.n) + "\n";
  for (const auto& [a, b] : g.edges) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

std::string serialize_witness(const ReductionOutput& out) {
  std::string s;
  for (const auto& w : out.witness) s += std::to_string(w.vertex) + " " + w.gadget + "\n";
  return s;
}

Solution parse_picks(const ControlInstance& inst, const std::vector<std::string>& tokens) {
  std::vector<std::string> items;
  for (const auto& tok : tokens) {
    std::string cleaned;
    for (char ch : tok) cleaned += (ch == ',' || ch == '{' || ch == '}') ? ' ' : ch;
    for (auto& w : words(cleaned)) items.push_back(w);
  }
  Solution sol;
  for (const auto& item : items) {
    if (is_vote_control(inst.kind)) {
      const auto k = item.size() > 1 && item[0] == 'v' ? to_int<std::size_t>(item.substr(1)) : std::nullopt;
      if (!k || *k == 0) throw InvalidSolution("unknown pick '" + item + "' (expected v<k>)");
      sol.picks.push_back(*k - 1);
    } else {
      const auto& labels = inst.base.labels;
      const auto it = std::find(labels.begin(), labels.end(), item);
      if (it == labels.end()) throw InvalidSolution("unknown candidate '" + item + "'");
      sol.picks.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
  }
  return sol;
}

std::string format_picks(const ControlInstance& inst, const Solution& sol) {
  std::string out = "{";
  for (std::size_t i = 0; i < sol.picks.size(); ++i) out += (i ? "," : "") + pick_label(inst, sol.picks[i]);
  return out + "}";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace borda
