// thoma2: verification CLI for the 2-categorical subdivision machinery.
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage error,
// 3 budget exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thoma2/colim.hpp"
#include "thoma2/exfun.hpp"
#include "thoma2/homology.hpp"
#include "thoma2/ideals.hpp"
#include "thoma2/nlax.hpp"
#include "thoma2/sset.hpp"
#include "thoma2/verify.hpp"

using namespace thoma2;

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

int report_exit(const Report& rep, bool as_json) {
  if (as_json) std::cout << rep.to_json().dump(2) << "\n";
  else std::cout << rep.summary() << "\n";
  if (!rep.ok()) return 1;
  return 0;
}

SimplicialSet load_sset(const std::string& path) { return SimplicialSet::from_json(load_json(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thoma2: subdivision, 2-nerves, ideals and their verifications"};
  app.require_subcommand(1);

  std::string in_path, out_path, poset_path, f_path, g_path, cat_path;
  int n = 2, k = 1, cap = 3, vcap = -1, ordinal = -1, iterations = 1;
  unsigned seed = 1;
  long long budget = Budget::default_limit();
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cap, "maximum simplicial degree");
    cmd->add_option("--budget", budget, "cell budget");
    cmd->add_flag("--json", as_json, "emit a machine-readable report");
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };
  auto add_poset_source = [&](CLI::App* cmd, bool required) {
    auto* p = cmd->add_option("--poset", poset_path, "input poset (JSON)");
    auto* o = cmd->add_option("--ordinal", ordinal, "use the ordinal [n] as the poset");
    if (required) p->excludes(o), o->excludes(p);
  };

  auto* c_sd = app.add_subcommand("sd", "barycentric subdivision of a simplicial set");
  c_sd->add_option("--in", in_path, "input simplicial set (JSON)")->required();
  add_common(c_sd);

  auto* c_nerve = app.add_subcommand("nerve", "nerve of a poset");
  add_poset_source(c_nerve, true);
  add_common(c_nerve);

  auto* c_n2 = app.add_subcommand("n2", "2-nerve of a chain 2-category over a poset");
  add_poset_source(c_n2, true);
  add_common(c_n2);

  auto* c_c2 = app.add_subcommand("c2", "2-categorification of a poset nerve (chain model)");
  add_poset_source(c_c2, true);
  add_common(c_c2);

  int excap = 2;  // composites of Ex default to degree 2
  auto* c_ex = app.add_subcommand("ex", "right adjoint of subdivision");
  c_ex->add_option("--in", in_path, "input simplicial set (JSON)")->required();
  c_ex->add_option("--iterations", iterations, "apply Ex this many times (1 or 2)");
  c_ex->add_option("--cap", excap, "maximum simplicial degree");
  c_ex->add_option("--budget", budget, "cell budget");
  c_ex->add_option("--out", out_path, "write output to a file instead of stdout");

  auto* c_hom = app.add_subcommand("homology", "integer homology of a simplicial set");
  c_hom->add_option("--in", in_path, "input simplicial set (JSON)")->required();
  add_common(c_hom);

  auto* c_push = app.add_subcommand("pushout", "pushout of simplicial sets along two maps");
  c_push->add_option("--in", in_path,
                     "bundle {a, b, c, f, g} of simplicial sets and maps (JSON)")
      ->required();
  add_common(c_push);

  auto* c_quot = app.add_subcommand("quotient", "collapse a left ideal of a chain 2-category");
  add_poset_source(c_quot, true);
  c_quot->add_option("--ideal", f_path, "file with the ideal's object tokens (JSON array)")
      ->required();
  add_common(c_quot);

  auto* c_gen = app.add_subcommand("generate", "emit a generating-set bundle");
  std::string kind = "horn";
  c_gen->add_option("--kind", kind, "horn or boundary");
  c_gen->add_option("--n", n, "degree");
  c_gen->add_option("--k", k, "horn index");
  add_common(c_gen);

  auto* c_verify = app.add_subcommand("verify", "run a named lemma verification");
  std::string lemma;
  c_verify->add_option("lemma", lemma, "one of: " + join(lemma_names(), ", "))->required();
  c_verify->add_option("--n", n, "degree parameter");
  c_verify->add_option("--k", k, "horn index");
  c_verify->add_option("--seed", seed, "sampling seed");
  add_poset_source(c_verify, false);
  c_verify->add_option("--cap", vcap, "maximum simplicial degree (per-lemma default)");
  c_verify->add_option("--budget", budget, "cell budget");
  c_verify->add_flag("--json", as_json, "emit a machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Budget budget_obj(budget);
    if (c_sd->parsed()) {
      SimplicialSet K = load_sset(in_path);
      emit(sd(K).to_json(), out_path);
      return 0;
    }
    auto poset_arg = [&]() {
      if (!poset_path.empty()) return Poset::from_json(load_json(poset_path));
      if (ordinal >= 0) return Poset::ordinal(ordinal);
      throw InvalidArgument("provide --poset or --ordinal");
    };
    if (c_nerve->parsed()) {
      emit(nerve(poset_arg(), cap).to_json(), out_path);
      return 0;
    }
    if (c_n2->parsed()) {
      N2Result r = n2(chain_two_category(poset_arg()), cap, &budget_obj);
      emit(r.sset->to_json(), out_path);
      return 0;
    }
    if (c_c2->parsed()) {
      nlohmann::json j;
      j["model"] = "chain-two-category";
      j["base"] = poset_arg().to_json();
      emit(j, out_path);
      return 0;
    }
    if (c_ex->parsed()) {
      auto K = std::make_shared<SimplicialSet>(load_sset(in_path));
      SimplicialSet e = ex(K, excap, &budget_obj);
      if (iterations == 2) e = ex(std::make_shared<SimplicialSet>(e), excap, &budget_obj);
      emit(e.to_json(), out_path);
      return 0;
    }
    if (c_hom->parsed()) {
      SimplicialSet K = load_sset(in_path);
      auto h = homology(K, cap);
      nlohmann::json j = nlohmann::json::array();
      for (size_t i = 0; i < h.size(); ++i)
        j.push_back({{"degree", i}, {"betti", h[i].betti}, {"torsion", h[i].torsion}});
      emit(j, out_path);
      return 0;
    }
    if (c_push->parsed()) {
      nlohmann::json bundle = load_json(in_path);
      auto A = std::make_shared<SimplicialSet>(SimplicialSet::from_json(bundle.at("a")));
      auto B = std::make_shared<SimplicialSet>(SimplicialSet::from_json(bundle.at("b")));
      auto C = std::make_shared<SimplicialSet>(SimplicialSet::from_json(bundle.at("c")));
      auto read_map = [&](const nlohmann::json& jm, std::shared_ptr<SimplicialSet> src,
                          std::shared_ptr<SimplicialSet> tgt) {
        std::vector<std::vector<EZ>> assign(src->dim_cap() + 1);
        for (int d = 0; d <= src->dim_cap(); ++d)
          for (int idx = 0; idx < src->count(d); ++idx) {
            const auto& e = jm.at(src->token(d, idx));
            int bd = e.at("dim").get<int>();
            int bi = tgt->index_of(bd, e.at("base").get<Token>());
            if (bi < 0) throw InvalidArgument("pushout bundle: unknown target simplex");
            assign[d].push_back(EZ{bd, bi, e.at("word").get<std::vector<int>>()});
          }
        return SimplicialMap(src, tgt, assign);
      };
      SimplicialMap f = read_map(bundle.at("f"), A, B);
      SimplicialMap g = read_map(bundle.at("g"), A, C);
      PushoutSSet po = pushout_sset(f, g);
      emit(po.object->to_json(), out_path);
      return 0;
    }
    if (c_quot->parsed()) {
      Poset p = poset_arg();
      auto b = chain_two_category(p);
      std::vector<int> ideal;
      for (const auto& t : load_json(f_path)) ideal.push_back(p.require(t.get<Token>()));
      QuotientResult q = quotient(b, ideal, &budget_obj);
      nlohmann::json j;
      j["objects"] = q.object->n_objects();
      j["basepoint"] = q.object->object_token(q.basepoint);
      Budget probe(budget);
      j["one_cells"] = q.object->all1(&probe).size();
      j["two_cells"] = q.object->all2(&probe).size();
      emit(j, out_path);
      return 0;
    }
    if (c_gen->parsed()) {
      GeneratingKind gk = kind == "boundary" ? GeneratingKind::Boundary : GeneratingKind::Horn;
      GeneratingSet gs = generating_sets(gk, n, k);
      emit(gs.to_json(), out_path);
      return 0;
    }
    if (c_verify->parsed()) {
      VerifyParams params;
      params.n = n;
      params.k = k;
      params.cap = vcap;
      params.seed = seed;
      params.budget = budget;
      if (!poset_path.empty()) params.poset = Poset::from_json(load_json(poset_path));
      else if (ordinal >= 0) params.poset = Poset::ordinal(ordinal);
      Report rep = verify_lemma(lemma, params);
      return report_exit(rep, as_json);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
