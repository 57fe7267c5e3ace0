#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/classes.hpp"
#include "actkit/colimit.hpp"
#include "actkit/congruence.hpp"
#include "actkit/corpus.hpp"
#include "actkit/cover.hpp"
#include "actkit/error.hpp"
#include "actkit/flatness.hpp"
#include "actkit/io.hpp"
#include "actkit/monoid.hpp"
#include "actkit/purity.hpp"
#include "actkit/suites.hpp"
#include "actkit/tensor.hpp"

using nlohmann::json;

namespace {

bool g_human = false;

std::string render(const json& j) { return g_human ? j.dump(2) : j.dump(); }

void emit(const json& j) { std::cout << render(j) << '\n'; }

void emit_error(const char* code, const std::string& message) {
  std::cerr << render(json{{"kind", "error"},
                           {"code", code},
                           {"message", message}})
            << '\n';
}

json load(const std::string& path) { return actkit::load_json_file(path); }

std::filesystem::path base_of(const std::string& path) {
  return std::filesystem::path(path).parent_path();
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out)
    throw actkit::Error(actkit::errc::invalid_input,
                        fmt::format("cannot write {}", path));
  out << j.dump(2) << '\n';
}

void deliver(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    emit(j);
  } else {
    write_file(out_path, j);
    emit(json{{"kind", "wrote"}, {"path", out_path}});
  }
}

// Validation commands report axiom violations as results (exit 1), not as
// input errors: diagnosing bad tables is their whole point.
template <class Fn>
int validated(Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const actkit::Error& e) {
    emit(json{{"kind", "validation"},
              {"valid", false},
              {"code", actkit::errc_name(e.code())},
              {"message", e.what()}});
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace actkit;

  CLI::App app{"exact computations with acts over finite monoids"};
  app.require_subcommand(1);
  app.fallthrough(true);
  app.add_flag("--human", g_human, "pretty-print the JSON output");
  int exit_code = 0;

  // ----- monoid
  auto* monoid_cmd = app.add_subcommand("monoid", "build or validate monoids");
  monoid_cmd->require_subcommand(1);

  auto* mnew = monoid_cmd->add_subcommand("new", "build a standard monoid");
  std::string mnew_builder, mnew_out;
  mnew->add_option("builder", mnew_builder,
                   "builder text, e.g. cyclic_group(3) or symmetric_inverse(2)")
      ->required();
  mnew->add_option("--out", mnew_out, "write the monoid JSON to this file");
  mnew->callback([&] {
    MonoidPtr m = standard_monoid(mnew_builder);
    deliver(monoid_to_json(*m), mnew_out);
  });

  auto* mval = monoid_cmd->add_subcommand("validate", "validate a monoid file");
  std::string mval_file;
  mval->add_option("file", mval_file, "monoid JSON file")->required();
  mval->callback([&] {
    json j = load(mval_file);
    exit_code = validated([&] {
      MonoidPtr m = monoid_from_json(j, base_of(mval_file));
      emit(json{{"kind", "validation"},
                {"valid", true},
                {"object", "monoid"},
                {"size", m->size()},
                {"identity", m->identity()}});
    });
  });

  // ----- act
  auto* act_cmd = app.add_subcommand("act", "operations on single acts");
  act_cmd->require_subcommand(1);

  auto* aval = act_cmd->add_subcommand("validate", "validate an act file");
  std::string aval_file;
  aval->add_option("file", aval_file, "act JSON file")->required();
  aval->callback([&] {
    json j = load(aval_file);
    exit_code = validated([&] {
      ActPtr a = act_from_json(j, base_of(aval_file));
      emit(json{{"kind", "validation"},
                {"valid", true},
                {"object", "act"},
                {"size", a->size()},
                {"monoid_size", a->monoid()->size()}});
    });
  });

  auto* adec = act_cmd->add_subcommand(
      "decompose", "split an act into indecomposable components");
  std::string adec_file;
  adec->add_option("file", adec_file, "act JSON file")->required();
  adec->callback([&] {
    ActPtr a = act_from_json(load(adec_file), base_of(adec_file));
    emit(json{{"kind", "decomposition"},
              {"size", a->size()},
              {"components", decompose_indecomposable(*a)}});
  });

  auto* aquo = act_cmd->add_subcommand(
      "quotient", "quotient an act by a right congruence");
  std::string aquo_file, aquo_out;
  aquo->add_option("file", aquo_file,
                   "congruence JSON file (carries its act)")
      ->required();
  aquo->add_option("--out", aquo_out, "write the quotient act to this file");
  aquo->callback([&] {
    Congruence rho = congruence_from_json(load(aquo_file), base_of(aquo_file));
    QuotientAct q = quotient_act(rho.act(), rho);
    json j = act_to_json(*q.act);
    j["natural"] = q.natural.values;
    deliver(j, aquo_out);
  });

  auto* aten = act_cmd->add_subcommand(
      "tensor", "tensor a right act with an act over the opposite monoid");
  std::string aten_left, aten_right;
  aten->add_option("left", aten_left, "right act JSON file")->required();
  aten->add_option("right", aten_right,
                   "act JSON file over the opposite monoid")
      ->required();
  aten->callback([&] {
    ActPtr a = act_from_json(load(aten_left), base_of(aten_left));
    ActPtr b = act_from_json(load(aten_right), base_of(aten_right));
    TensorProduct t = tensor(*a, *b);
    emit(json{{"kind", "tensor"},
              {"classes", t.num_classes},
              {"left_size", t.left_size},
              {"right_size", t.right_size},
              {"class_of", t.class_of}});
  });

  // ----- check
  auto* check_cmd =
      app.add_subcommand("check", "decide class membership of an act");
  std::string check_act, check_class;
  check_cmd->add_option("--act", check_act, "act JSON file")->required();
  check_cmd
      ->add_option("--class", check_class,
                   "one of Pr, SF, CP, E, LC")
      ->required();
  check_cmd->callback([&] {
    ActPtr a = act_from_json(load(check_act), base_of(check_act));
    ActClass cls = class_from_name(check_class);
    bool member = in_class(*a, cls);
    json out{{"kind", "class-check"},
             {"class", class_name(cls)},
             {"member", member}};
    if (!member && (cls == ActClass::CP || cls == ActClass::SF ||
                    cls == ActClass::E)) {
      if (cls != ActClass::E) {
        PCheck pc = satisfies_P(*a);
        if (!pc.holds)
          out["witness"] = json{{"condition", "P"},
                                {"a", pc.failure->a},
                                {"a_prime", pc.failure->a_prime},
                                {"u", pc.failure->u},
                                {"u_prime", pc.failure->u_prime}};
      }
      if (!out.contains("witness")) {
        ECheck ec = satisfies_E(*a);
        if (!ec.holds)
          out["witness"] = json{{"condition", "E"},
                                {"a", ec.failure->a},
                                {"u", ec.failure->u},
                                {"u_prime", ec.failure->u_prime}};
      }
    }
    emit(out);
    if (!member) exit_code = 1;
  });

  // ----- purity
  auto* pur_cmd = app.add_subcommand("purity", "decide purity of an epi");
  std::string pur_map;
  int pur_n = 0;
  bool pur_full = false;
  pur_cmd->add_option("--map", pur_map, "map JSON file")->required();
  auto* pur_n_opt =
      pur_cmd->add_option("--n", pur_n, "check n-purity for this n");
  pur_cmd->add_flag("--full", pur_full,
                    "check full purity (the default when --n is absent)")
      ->excludes(pur_n_opt);
  pur_cmd->callback([&] {
    ActMap g = map_from_json(load(pur_map), base_of(pur_map));
    PurityCheck pc = pur_n > 0 ? is_n_pure(g, pur_n) : is_pure_epi(g);
    json out{{"kind", "purity"},
             {"n", pur_n > 0 ? json(pur_n) : json("full")},
             {"pure", pc.pure}};
    if (!pc.pure) out["witness"] = pc.witness;
    emit(out);
    if (!pc.pure) exit_code = 1;
  });

  // ----- colimit
  auto* col_cmd =
      app.add_subcommand("colimit", "colimit of a finite direct system");
  std::string col_file;
  bool col_verify = false;
  col_cmd->add_option("--system", col_file, "system JSON file")->required();
  col_cmd->add_flag(
      "--verify", col_verify,
      "cross-check the one-shot description on directed systems");
  col_cmd->callback([&] {
    DirectSystem d = system_from_json(load(col_file), base_of(col_file));
    Cocone col = colimit(d);
    json legs = json::array();
    for (const auto& leg : col.legs) legs.push_back(leg.values);
    json out{{"kind", "colimit"},
             {"apex", act_to_json(*col.apex)},
             {"legs", std::move(legs)}};
    if (col_verify) {
      bool directed = is_directed(d);
      json v{{"directed", directed}};
      if (directed) {
        directed_colimit(d);  // aborts on any internal disagreement
        v["one_shot_agrees"] = true;
      }
      out["verified"] = std::move(v);
    }
    emit(out);
  });

  // ----- cover
  auto* cov_cmd =
      app.add_subcommand("cover", "find a class cover of an act");
  std::string cov_act, cov_class;
  bool cov_pre = false;
  cov_cmd->add_option("--act", cov_act, "act JSON file")->required();
  cov_cmd->add_option("--class", cov_class, "one of Pr, SF, CP")->required();
  cov_cmd->add_flag("--precover-only", cov_pre,
                    "stop after the canonical precover");
  cov_cmd->callback([&] {
    ActPtr a = act_from_json(load(cov_act), base_of(cov_act));
    ActClass cls = class_from_name(cov_class);
    if (cov_pre) {
      PrecoverCertificate cert = build_precover(a, cls);
      bool ok = verify_certificate(cert);
      emit(json{{"kind", "precover"},
                {"class", class_name(cls)},
                {"carrier_size", cert.carrier->size()},
                {"factorizations", cert.factorizations.size()},
                {"map", cert.map.values},
                {"verifies", ok}});
      if (!ok) exit_code = 1;
      return;
    }
    CoverSearch cs = find_cover(a, cls);
    json out{{"kind", "cover"},
             {"class", class_name(cls)},
             {"found", cs.found},
             {"candidates", cs.candidates},
             {"fallback_used", cs.fallback_used}};
    if (cs.found) out["cover"] = map_to_json(*cs.cover);
    emit(out);
    if (!cs.found) exit_code = 1;
  });

  // ----- corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "corpus generation");
  corpus_cmd->require_subcommand(1);
  auto* cgen = corpus_cmd->add_subcommand(
      "generate", "enumerate the monoid/act corpus into a directory");
  std::string cgen_out;
  CorpusSpec cgen_spec;
  cgen->add_option("--out", cgen_out, "output directory")->required();
  cgen->add_option("--max-monoid-order", cgen_spec.max_monoid_order,
                   "enumerate monoids up to this order");
  cgen->add_option("--max-act-size", cgen_spec.max_act_size,
                   "enumerate acts up to this size");
  cgen->add_option("--builder", cgen_spec.builders,
                   "builder monoids to include (repeatable; replaces the "
                   "default list)");
  cgen->callback([&] {
    Corpus c = generate_corpus(cgen_spec);
    std::filesystem::create_directories(cgen_out);
    for (const auto& e : c.entries) {
      std::filesystem::path dir = std::filesystem::path(cgen_out) / e.name;
      std::filesystem::create_directories(dir);
      write_file((dir / "monoid.json").string(), monoid_to_json(*e.monoid));
      for (std::size_t k = 0; k < e.acts.size(); ++k)
        write_file((dir / fmt::format("act{}.json", k)).string(),
                   act_to_json(*e.acts[k]));
      emit(json{{"kind", "corpus-entry"},
                {"name", e.name},
                {"monoid_size", e.monoid->size()},
                {"acts", e.acts.size()},
                {"path", dir.string()}});
    }
    emit(json{{"kind", "corpus"},
              {"entries", c.entries.size()},
              {"out", cgen_out}});
  });

  // ----- suite
  auto* suite_cmd = app.add_subcommand("suite", "theorem suites");
  suite_cmd->require_subcommand(1);

  auto* slist = suite_cmd->add_subcommand("list", "list the suite ids");
  slist->callback([&] {
    emit(json{{"kind", "suites"}, {"ids", suite_ids()}});
  });

  auto* srun = suite_cmd->add_subcommand("run", "run one or more suites");
  std::vector<std::string> srun_ids;
  bool srun_timing = false;
  CorpusSpec srun_spec;
  srun->add_option("ids", srun_ids, "suite ids, or 'all'")->required();
  srun->add_flag("--include-timing", srun_timing,
                 "include elapsed time in reports (breaks byte-for-byte "
                 "reproducibility)");
  srun->add_option("--max-monoid-order", srun_spec.max_monoid_order,
                   "corpus: enumerate monoids up to this order");
  srun->add_option("--max-act-size", srun_spec.max_act_size,
                   "corpus: enumerate acts up to this size");
  srun->add_option("--builder", srun_spec.builders,
                   "corpus: builder monoids (repeatable; replaces the "
                   "default list)");
  srun->callback([&] {
    std::vector<std::string> ids = srun_ids;
    if (ids.size() == 1 && ids[0] == "all") ids = suite_ids();
    {
      auto known = suite_ids();
      for (const auto& id : ids)
        if (std::find(known.begin(), known.end(), id) == known.end())
          throw Error(errc::unknown_suite,
                      fmt::format("no suite named '{}'", id));
    }
    std::vector<SuiteReport> reports;
    if (ids.size() == 1) {
      reports.push_back(run_suite(ids[0], srun_spec));
    } else {
      // suites only read shared immutable state, so they parallelize freely;
      // reports are emitted in request order either way
      std::vector<std::future<SuiteReport>> futs;
      futs.reserve(ids.size());
      for (const auto& id : ids)
        futs.push_back(std::async(std::launch::async, [&, id] {
          return run_suite(id, srun_spec);
        }));
      for (auto& f : futs) reports.push_back(f.get());
    }
    for (const auto& rep : reports) {
      emit(report_to_json(rep, srun_timing));
      if (!rep.pass) exit_code = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    emit_error("usage", e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(errc_name(e.code()), e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 2;
  }
  return exit_code;
}
