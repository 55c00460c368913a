#include "tdqe/benchgen.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "tdqe/error.hpp"

namespace tdqe {

namespace {

std::string rel_name(Relation r) { return std::string(symbol(r)); }

Relation rel_from_name(const std::string& s) {
  for (Relation r : {Relation::LT, Relation::GT, Relation::EQ, Relation::LE, Relation::GE}) {
    if (symbol(r) == s) return r;
  }
  throw ConfigError("unknown relation '" + s + "'");
}

}  // namespace

void validate(const GenConfig& cfg) {
  if (cfg.k < 1) throw ConfigError("k must be at least 1");
  if (cfg.n_vars < cfg.k + 1) throw ConfigError("need at least k + 1 variables");
  if (cfg.max_deg < 1) throw ConfigError("max_deg must be at least 1");
  if (cfg.include_prob < 0.05 || cfg.include_prob > 0.15) throw ConfigError("include_prob must lie in [0.05, 0.15]");
  if (cfg.coeff_min > cfg.coeff_max) throw ConfigError("empty coefficient range");
  if (cfg.coeff_min == 0 && cfg.coeff_max == 0) throw ConfigError("coefficient range contains only 0");
  if (cfg.n_elim && *cfg.n_elim > cfg.n_vars) throw ConfigError("cannot quantify more variables than exist");
  if (cfg.n_atoms && *cfg.n_atoms == 0) throw ConfigError("need at least one atom");
}

nlohmann::json to_json(const GenConfig& cfg) {
  nlohmann::json j{{"k", cfg.k},
                   {"n_vars", cfg.n_vars},
                   {"max_deg", cfg.max_deg},
                   {"include_prob", cfg.include_prob},
                   {"coeff_range", {cfg.coeff_min, cfg.coeff_max}},
                   {"seed", cfg.seed}};
  j["n_atoms"] = cfg.n_atoms ? nlohmann::json(*cfg.n_atoms) : nlohmann::json(nullptr);
  j["n_elim"] = cfg.n_elim ? nlohmann::json(*cfg.n_elim) : nlohmann::json(nullptr);
  j["rel"] = cfg.rel ? nlohmann::json(rel_name(*cfg.rel)) : nlohmann::json(nullptr);
  return j;
}

GenConfig gen_config_from_json(const nlohmann::json& j) {
  try {
    GenConfig cfg;
    cfg.k = j.at("k").get<std::size_t>();
    cfg.n_vars = j.at("n_vars").get<std::size_t>();
    cfg.max_deg = j.at("max_deg").get<std::uint32_t>();
    cfg.include_prob = j.at("include_prob").get<double>();
    cfg.coeff_min = j.at("coeff_range").at(0).get<long>();
    cfg.coeff_max = j.at("coeff_range").at(1).get<long>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("n_atoms") && !j["n_atoms"].is_null()) cfg.n_atoms = j["n_atoms"].get<std::size_t>();
    if (j.contains("n_elim") && !j["n_elim"].is_null()) cfg.n_elim = j["n_elim"].get<std::size_t>();
    if (j.contains("rel") && !j["rel"].is_null()) cfg.rel = rel_from_name(j["rel"].get<std::string>());
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad generator config: ") + e.what());
  }
}

KTree gen_ktree(const GenConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  KTree kt;
  std::vector<Var> first;
  for (std::size_t i = 0; i <= cfg.k; ++i) first.push_back(Var{static_cast<std::uint32_t>(i)});
  kt.graph.add_clique(first);
  kt.bags.push_back(first);
  kt.bag_parent.push_back(std::nullopt);
  for (std::size_t v = cfg.k + 1; v < cfg.n_vars; ++v) {
    std::size_t host = std::uniform_int_distribution<std::size_t>(0, kt.bags.size() - 1)(rng);
    std::vector<Var> base = kt.bags[host];
    std::size_t drop = std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng);
    base.erase(base.begin() + static_cast<std::ptrdiff_t>(drop));
    Var nv{static_cast<std::uint32_t>(v)};
    for (Var u : base) kt.graph.add_edge(nv, u);
    base.push_back(nv);
    std::sort(base.begin(), base.end());
    kt.bags.push_back(std::move(base));
    kt.bag_parent.push_back(host);
  }
  return kt;
}

TreeDecomp ktree_decomposition(const KTree& kt) {
  TreeDecomp t;
  t.bags = kt.bags;
  for (std::size_t i = 0; i < kt.bag_parent.size(); ++i) {
    if (kt.bag_parent[i]) t.edges.emplace_back(*kt.bag_parent[i], i);
  }
  t.root = 0;
  return t;
}

namespace {

// All monomials over `vars` with total degree <= max_deg.
std::vector<Monomial> monomials_upto(const std::vector<Var>& vars, std::uint32_t max_deg) {
  std::vector<Monomial> out;
  std::vector<Monomial::Power> current;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == vars.size()) {
      out.emplace_back(current);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      if (e > 0) current.emplace_back(vars[i], e);
      rec(i + 1, left - e);
      if (e > 0) current.pop_back();
    }
  };
  rec(0, max_deg);
  return out;
}

}  // namespace

QuantFormula gen_formula(const KTree& kt, const GenConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> coeff_dist(cfg.coeff_min, cfg.coeff_max);
  std::bernoulli_distribution include(cfg.include_prob);
  auto draw_coeff = [&]() {
    long c = 0;
    while (c == 0) c = coeff_dist(rng);
    return c;
  };

  const std::size_t n_bags = kt.bags.size();
  const std::size_t n_atoms = cfg.n_atoms.value_or(n_bags);
  std::vector<std::size_t> per_bag(n_bags, 0);
  for (std::size_t i = 0; i < n_atoms; ++i) ++per_bag[i % n_bags];

  const bool linear = cfg.max_deg == 1;
  const Relation rel = cfg.rel.value_or(linear ? Relation::LE : Relation::GE);
  VarTable table = VarTable::numbered(cfg.n_vars);
  std::vector<std::vector<PolyAtom>> atoms_of_bag(n_bags);

  constexpr std::size_t kMaxAttempts = 1000000;
  for (std::size_t b = 0; b < n_bags; ++b) {
    if (per_bag[b] == 0) continue;
    const auto& bag = kt.bags[b];
    std::vector<Monomial> monos = monomials_upto(bag, cfg.max_deg);
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (monos[i].total_degree() == cfg.max_deg) top.push_back(i);
    }
    std::size_t attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxAttempts) throw ConfigError("could not cover every bag variable; raise include_prob or n_atoms");
      std::vector<PolyAtom> drawn;
      std::set<Var> seen;
      for (std::size_t a = 0; a < per_bag[b]; ++a) {
        std::size_t forced = top[std::uniform_int_distribution<std::size_t>(0, top.size() - 1)(rng)];
        std::vector<Poly::Term> terms;
        for (std::size_t i = 0; i < monos.size(); ++i) {
          if (i == forced || include(rng)) terms.emplace_back(monos[i], Rat(draw_coeff()));
        }
        Poly p = Poly::from_terms(std::move(terms));
        for (Var v : p.vars()) seen.insert(v);
        drawn.push_back(PolyAtom{std::move(p), rel});
      }
      if (seen.size() == bag.size()) {
        atoms_of_bag[b] = std::move(drawn);
        break;
      }
    }
  }

  // Interleave so that atom i comes from bag i mod n_bags.
  std::vector<PolyAtom> atoms;
  std::vector<std::size_t> cursor(n_bags, 0);
  for (std::size_t i = 0; i < n_atoms; ++i) {
    std::size_t b = i % n_bags;
    atoms.push_back(atoms_of_bag[b][cursor[b]++]);
  }
  std::vector<Var> quantified;
  for (std::size_t i = 0; i < cfg.n_elim.value_or(cfg.n_vars); ++i) quantified.push_back(Var{static_cast<std::uint32_t>(i)});

  if (linear) {
    std::vector<LinearAtom> lin;
    for (const auto& a : atoms) lin.push_back(to_linear(a));
    return QuantFormula(std::move(table), std::move(quantified), std::move(lin));
  }
  return QuantFormula(std::move(table), std::move(quantified), std::move(atoms));
}

GenReport gen_properties_check(const QuantFormula& f, const KTree& kt, const GenConfig& cfg) {
  GenReport r;
  // Primal graph over all variables, so the check does not depend on n_elim.
  Graph full;
  for (std::size_t i = 0; i < f.num_atoms(); ++i) full.add_clique(f.atom_vars(i));
  for (const auto& [u, v] : full.edges()) {
    if (!kt.graph.has_edge(u, v)) {
      r.primal_in_ktree = false;
      r.problems.push_back("edge x" + std::to_string(u.index + 1) + "-x" + std::to_string(v.index + 1) + " not in the k-tree");
    }
  }
  TreeDecomp t = ktree_decomposition(kt);
  if (validate_td(kt.graph, t) || width(t) != cfg.k) {
    r.attachment_width_is_k = false;
    r.problems.push_back("attachment decomposition is invalid or has width " + std::to_string(width(t)));
  }
  std::set<Var> used;
  for (std::size_t i = 0; i < f.num_atoms(); ++i) {
    for (Var v : f.atom_vars(i)) used.insert(v);
  }
  for (Var v : f.quantified()) {
    if (!used.count(v)) {
      r.quantified_all_occur = false;
      r.problems.push_back("quantified variable " + f.vars().name(v) + " never occurs");
    }
  }
  return r;
}

}  // namespace tdqe
