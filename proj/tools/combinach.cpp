// Command-line frontend: every subcommand assembles a JSON job and hands it
// to the job runner, so file-based jobs (--job) and flag-based invocations
// share one validation and execution path.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "combinach/errors.hpp"
#include "combinach/jobs.hpp"

namespace {

using combinach::Json;

int execute(const Json& job) {
  std::cout << combinach::run_job(job);
  return 0;
}

Json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw combinach::validation_error("bad JSON for " + what + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of hereditary families, submeasures, and induced norms"};
  app.require_subcommand(0, 1);

  std::string job_file;
  app.add_option("--job", job_file, "run a JSON job file");

  // shared option storage; each subcommand picks what it needs
  std::string family_s, vec_s, gen_s, weights_s, alpha_s, eps_s, set_s, output_s = "text";
  std::string which_s, period_s, sets_s, samples_s, coeffs_s, blocks_s, cells_s;
  std::int64_t n_v = 0, window_v = 0, horizon_v = 0, m_v = 0, max_v = -1;
  std::int64_t length_v = 0, depth_v = 0, j_v = 0, k_v = 0, big_n_v = 0;
  std::string cutoffs_s;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output_s, "output mode: text | records | csv");
  };

  Json job;

  auto* norm = app.add_subcommand("norm", "extended norm of a vector");
  norm->add_option("--family", family_s)->required();
  norm->add_option("--vec", vec_s)->required();
  add_output(norm);
  norm->callback([&] {
    job = {{"subcommand", "norm"},
           {"family", parse_json_arg(family_s, "--family")},
           {"vec", parse_json_arg(vec_s, "--vec")},
           {"output", output_s}};
  });

  auto* tail = app.add_subcommand("tail", "norm of the tail projection");
  tail->add_option("--family", family_s)->required();
  tail->add_option("--vec", vec_s)->required();
  tail->add_option("--n", n_v)->required();
  add_output(tail);
  tail->callback([&] {
    job = {{"subcommand", "tail"},
           {"family", parse_json_arg(family_s, "--family")},
           {"vec", parse_json_arg(vec_s, "--vec")},
           {"n", n_v},
           {"output", output_s}};
  });

  auto* phi_cmd = app.add_subcommand("phi", "submeasure value of a finite set");
  phi_cmd->add_option("--family", family_s)->required();
  phi_cmd->add_option("--weights", weights_s)->required();
  phi_cmd->add_option("--set", set_s)->required();
  add_output(phi_cmd);
  phi_cmd->callback([&] {
    job = {{"subcommand", "phi"},
           {"family", parse_json_arg(family_s, "--family")},
           {"weights", parse_json_arg(weights_s, "--weights")},
           {"set", parse_json_arg(set_s, "--set")},
           {"output", output_s}};
  });

  auto* profile = app.add_subcommand("tail-profile", "window tail values of a generated set");
  profile->add_option("--family", family_s)->required();
  profile->add_option("--weights", weights_s)->required();
  profile->add_option("--gen", gen_s)->required();
  profile->add_option("--cutoffs", cutoffs_s)->required();
  profile->add_option("--horizon", horizon_v)->required();
  add_output(profile);
  profile->callback([&] {
    job = {{"subcommand", "tail-profile"},
           {"family", parse_json_arg(family_s, "--family")},
           {"weights", parse_json_arg(weights_s, "--weights")},
           {"gen", parse_json_arg(gen_s, "--gen")},
           {"cutoffs", parse_json_arg(cutoffs_s, "--cutoffs")},
           {"horizon", horizon_v},
           {"output", output_s}};
  });

  auto* check = app.add_subcommand("schreier-check", "membership in a schreier family");
  check->add_option("--alpha", alpha_s)->required();
  check->add_option("--set", set_s)->required();
  add_output(check);
  check->callback([&] {
    job = {{"subcommand", "schreier-check"},
           {"alpha", alpha_s},
           {"set", parse_json_arg(set_s, "--set")},
           {"output", output_s}};
  });

  auto* contains = app.add_subcommand("contains", "membership in a family");
  contains->add_option("--family", family_s)->required();
  contains->add_option("--set", set_s)->required();
  add_output(contains);
  contains->callback([&] {
    job = {{"subcommand", "contains"},
           {"family", parse_json_arg(family_s, "--family")},
           {"set", parse_json_arg(set_s, "--set")},
           {"output", output_s}};
  });

  auto* enumerate = app.add_subcommand("enumerate", "members inside a window");
  enumerate->add_option("--family", family_s)->required();
  enumerate->add_option("--window", window_v)->required();
  enumerate->add_option("--max", max_v);
  add_output(enumerate);
  enumerate->callback([&] {
    job = {{"subcommand", "enumerate"},
           {"family", parse_json_arg(family_s, "--family")},
           {"window", window_v},
           {"output", output_s}};
    if (max_v >= 0) job["max"] = max_v;
  });

  auto* rank = app.add_subcommand("rank", "symbolic Cantor-Bendixson rank");
  rank->add_option("--family", family_s)->required();
  add_output(rank);
  rank->callback([&] {
    job = {{"subcommand", "rank"},
           {"family", parse_json_arg(family_s, "--family")},
           {"output", output_s}};
  });

  auto* precompact = app.add_subcommand("precompact", "symbolic precompactness verdict");
  precompact->add_option("--family", family_s)->required();
  add_output(precompact);
  precompact->callback([&] {
    job = {{"subcommand", "precompact"},
           {"family", parse_json_arg(family_s, "--family")},
           {"output", output_s}};
  });

  auto* spreading = app.add_subcommand("spreading", "exhaustive spreading test");
  spreading->add_option("--family", family_s)->required();
  spreading->add_option("--window", window_v)->required();
  add_output(spreading);
  spreading->callback([&] {
    job = {{"subcommand", "spreading"},
           {"family", parse_json_arg(family_s, "--family")},
           {"window", window_v},
           {"output", output_s}};
  });

  auto* witness = app.add_subcommand("witness", "quantitative witness reports");
  witness->add_option("which", which_s, "summable-like | trace-i2 | density-bound")->required();
  witness->add_option("--alpha", alpha_s);
  witness->add_option("--N", big_n_v);
  witness->add_option("--k", k_v);
  witness->add_option("--j", j_v);
  witness->add_option("--gen", gen_s);
  witness->add_option("--horizon", horizon_v);
  add_output(witness);
  witness->callback([&] {
    job = {{"subcommand", "witness"}, {"which", which_s}, {"output", output_s}};
    if (which_s == "summable-like") {
      job["alpha"] = alpha_s;
      job["N"] = big_n_v;
    } else if (which_s == "trace-i2") {
      job["k"] = k_v;
    } else if (which_s == "density-bound") {
      job["j"] = j_v;
      job["gen"] = parse_json_arg(gen_s, "--gen");
      job["N"] = big_n_v;
      job["horizon"] = horizon_v;
    }
  });

  auto* delta = app.add_subcommand("delta-system", "extract a delta system");
  delta->add_option("--sets", sets_s)->required();
  delta->add_option("--m", m_v)->required();
  add_output(delta);
  delta->callback([&] {
    job = {{"subcommand", "delta-system"},
           {"sets", parse_json_arg(sets_s, "--sets")},
           {"m", m_v},
           {"output", output_s}};
  });

  auto* l1 = app.add_subcommand("l1-check", "isometric l1 copy certificate");
  l1->add_option("--family", family_s)->required();
  l1->add_option("--gen", gen_s)->required();
  l1->add_option("--window", window_v)->required();
  l1->add_option("--samples", samples_s)->required();
  add_output(l1);
  l1->callback([&] {
    job = {{"subcommand", "l1-check"},
           {"family", parse_json_arg(family_s, "--family")},
           {"gen", parse_json_arg(gen_s, "--gen")},
           {"window", window_v},
           {"samples", parse_json_arg(samples_s, "--samples")},
           {"output", output_s}};
  });

  auto* c0 = app.add_subcommand("c0-check", "c0 branch basis certificate");
  c0->add_option("--period", period_s)->required();
  c0->add_option("--length", length_v)->required();
  c0->add_option("--coeffs", coeffs_s)->required();
  add_output(c0);
  c0->callback([&] {
    job = {{"subcommand", "c0-check"},
           {"period", period_s},
           {"length", length_v},
           {"coeffs", parse_json_arg(coeffs_s, "--coeffs")},
           {"output", output_s}};
  });

  auto* schur = app.add_subcommand("schur", "non-weak-nullness certificate");
  schur->add_option("--family", family_s)->required();
  schur->add_option("--blocks", blocks_s)->required();
  schur->add_option("--eps", eps_s)->required();
  schur->add_option("--gen", gen_s)->required();
  schur->add_option("--horizon", horizon_v)->required();
  add_output(schur);
  schur->callback([&] {
    job = {{"subcommand", "schur"},
           {"family", parse_json_arg(family_s, "--family")},
           {"blocks", parse_json_arg(blocks_s, "--blocks")},
           {"eps", eps_s},
           {"gen", parse_json_arg(gen_s, "--gen")},
           {"horizon", horizon_v},
           {"output", output_s}};
  });

  auto* variation = app.add_subcommand("variation", "variation norm identity check");
  variation->add_option("--depth", depth_v)->required();
  variation->add_option("--cells", cells_s)->required();
  add_output(variation);
  variation->callback([&] {
    job = {{"subcommand", "variation"},
           {"depth", depth_v},
           {"cells", parse_json_arg(cells_s, "--cells")},
           {"output", output_s}};
  });

  auto* ptak = app.add_subcommand("ptak", "filling failure search");
  ptak->add_option("--family", family_s)->required();
  ptak->add_option("--weights", weights_s)->required();
  ptak->add_option("--eps", eps_s)->required();
  ptak->add_option("--horizon", horizon_v)->required();
  add_output(ptak);
  ptak->callback([&] {
    job = {{"subcommand", "ptak"},
           {"family", parse_json_arg(family_s, "--family")},
           {"weights", parse_json_arg(weights_s, "--weights")},
           {"eps", eps_s},
           {"horizon", horizon_v},
           {"output", output_s}};
  });

  auto* mazur = app.add_subcommand("mazur", "small convex combination search");
  mazur->add_option("--family", family_s)->required();
  mazur->add_option("--weights", weights_s)->required();
  mazur->add_option("--eps", eps_s)->required();
  mazur->add_option("--horizon", horizon_v)->required();
  mazur->add_option("--blocks", blocks_s);
  add_output(mazur);
  mazur->callback([&] {
    job = {{"subcommand", "mazur"},
           {"family", parse_json_arg(family_s, "--family")},
           {"weights", parse_json_arg(weights_s, "--weights")},
           {"eps", eps_s},
           {"horizon", horizon_v},
           {"output", output_s}};
    if (!blocks_s.empty()) job["blocks"] = parse_json_arg(blocks_s, "--blocks");
  });

  auto* exhfin = app.add_subcommand("exh-fin", "FIN vs EXH evidence probe");
  exhfin->add_option("--family", family_s)->required();
  exhfin->add_option("--weights", weights_s)->required();
  exhfin->add_option("--gen", gen_s)->required();
  exhfin->add_option("--horizon", horizon_v)->required();
  add_output(exhfin);
  exhfin->callback([&] {
    job = {{"subcommand", "exh-fin"},
           {"family", parse_json_arg(family_s, "--family")},
           {"weights", parse_json_arg(weights_s, "--weights")},
           {"gen", parse_json_arg(gen_s, "--gen")},
           {"horizon", horizon_v},
           {"output", output_s}};
  });

  auto* evidence = app.add_subcommand("exh-evidence", "tail evidence report");
  evidence->add_option("--family", family_s)->required();
  evidence->add_option("--weights", weights_s)->required();
  evidence->add_option("--gen", gen_s)->required();
  evidence->add_option("--eps", eps_s)->required();
  evidence->add_option("--cutoffs", cutoffs_s)->required();
  evidence->add_option("--horizon", horizon_v)->required();
  add_output(evidence);
  evidence->callback([&] {
    job = {{"subcommand", "exh-evidence"},
           {"family", parse_json_arg(family_s, "--family")},
           {"weights", parse_json_arg(weights_s, "--weights")},
           {"gen", parse_json_arg(gen_s, "--gen")},
           {"eps", eps_s},
           {"cutoffs", parse_json_arg(cutoffs_s, "--cutoffs")},
           {"horizon", horizon_v},
           {"output", output_s}};
  });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->callback([&] { job = {{"subcommand", "selftest"}}; });

  try {
    app.parse(argc, argv);

    if (!job_file.empty()) {
      std::ifstream in(job_file);
      if (!in) throw combinach::validation_error("cannot open job file '" + job_file + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      std::cout << combinach::run_job_text(buffer.str());
      return 0;
    }
    if (job.is_null()) {
      std::cerr << app.help();
      return 2;
    }
    return execute(job);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const combinach::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const combinach::precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 3;
  } catch (const combinach::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
