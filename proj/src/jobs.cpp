#include "combinach/jobs.hpp"

#include <algorithm>
#include <set>

#include "combinach/acceptance.hpp"
#include "combinach/diagnostics.hpp"
#include "combinach/errors.hpp"
#include "combinach/ordinal.hpp"
#include "combinach/schreier.hpp"
#include "combinach/submeasures.hpp"
#include "combinach/witnesses.hpp"

namespace combinach {

namespace {

void check_fields(const Json& j, const std::set<std::string>& allowed,
                  const std::string& what) {
  if (!j.is_object()) throw validation_error(what + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) {
      throw validation_error("unknown field '" + key + "' in " + what);
    }
  }
}

std::string need_string(const Json& j, const std::string& field, const std::string& what) {
  if (!j.contains(field) || !j.at(field).is_string()) {
    throw validation_error(what + " needs string field '" + field + "'");
  }
  return j.at(field).get<std::string>();
}

index_t need_int(const Json& j, const std::string& field, const std::string& what) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw validation_error(what + " needs integer field '" + field + "'");
  }
  return j.at(field).get<index_t>();
}

const Json& need_member(const Json& j, const std::string& field, const std::string& what) {
  if (!j.contains(field)) throw validation_error(what + " needs field '" + field + "'");
  return j.at(field);
}

}  // namespace

BlockRule parse_block_rule(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "full") return BlockRule::full();
    if (s == "one") return BlockRule::one();
    if (s == "farah") return BlockRule::farah();
    if (s == "linear") return BlockRule::linear();
    if (s == "halved-by-log") return BlockRule::halved_by_log();
    throw validation_error("unknown block rule '" + s + "'");
  }
  check_fields(j, {"table", "default"}, "block rule");
  std::map<index_t, index_t> table;
  if (j.contains("table")) {
    for (const auto& [key, value] : j.at("table").items()) {
      if (!value.is_number_integer()) throw validation_error("block rule table values must be integers");
      table[std::stoll(key)] = value.get<index_t>();
    }
  }
  index_t dflt = 0;
  if (j.contains("default")) dflt = j.at("default").get<index_t>();
  return BlockRule::from_table(std::move(table), dflt);
}

FiniteSet parse_set(const Json& j) {
  if (!j.is_array()) throw validation_error("set must be a JSON array of integers");
  std::vector<index_t> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw validation_error("set elements must be integers");
    v.push_back(e.get<index_t>());
  }
  return FiniteSet::from_unsorted(std::move(v));
}

Family parse_family(const Json& j) {
  const std::string kind = need_string(j, "kind", "family");
  if (kind == "explicit") {
    check_fields(j, {"kind", "sets"}, "family");
    std::vector<FiniteSet> sets;
    for (const auto& s : need_member(j, "sets", "explicit family")) sets.push_back(parse_set(s));
    return Family::explicit_family(std::move(sets));
  }
  if (kind == "singletons") {
    check_fields(j, {"kind"}, "family");
    return Family::singletons();
  }
  if (kind == "all-finite") {
    check_fields(j, {"kind"}, "family");
    return Family::all_finite();
  }
  if (kind == "partition-blocks") {
    check_fields(j, {"kind"}, "family");
    return Family::partition_blocks();
  }
  if (kind == "block-capped-joined") {
    check_fields(j, {"kind", "cap"}, "family");
    return Family::block_capped_joined(parse_block_rule(need_member(j, "cap", "family")));
  }
  if (kind == "block-capped-local") {
    check_fields(j, {"kind", "cap"}, "family");
    return Family::block_capped_local(parse_block_rule(need_member(j, "cap", "family")));
  }
  if (kind == "schreier") {
    check_fields(j, {"kind", "alpha"}, "family");
    return Family::schreier(ord_parse(need_string(j, "alpha", "schreier family")));
  }
  if (kind == "antichains") {
    check_fields(j, {"kind"}, "family");
    return Family::antichains();
  }
  if (kind == "restrict") {
    check_fields(j, {"kind", "base", "window"}, "family");
    return Family::restrict(parse_family(need_member(j, "base", "restrict family")),
                            parse_set(need_member(j, "window", "restrict family")));
  }
  throw validation_error("unknown family kind '" + kind + "'");
}

SetGenerator parse_generator(const Json& j) {
  const std::string kind = need_string(j, "kind", "generator");
  if (kind == "explicit") {
    check_fields(j, {"kind", "set"}, "generator");
    return SetGenerator::explicit_finite(parse_set(need_member(j, "set", "generator")));
  }
  if (kind == "all") {
    check_fields(j, {"kind"}, "generator");
    return SetGenerator::all_indices();
  }
  if (kind == "block-prefix") {
    check_fields(j, {"kind", "rule"}, "generator");
    return SetGenerator::block_prefix(parse_block_rule(need_member(j, "rule", "generator")));
  }
  if (kind == "blocks-union") {
    check_fields(j, {"kind", "blocks"}, "generator");
    return SetGenerator::blocks_union(parse_generator(need_member(j, "blocks", "generator")));
  }
  if (kind == "tree-branch") {
    check_fields(j, {"kind", "period"}, "generator");
    return SetGenerator::tree_branch(need_string(j, "period", "generator"));
  }
  if (kind == "union" || kind == "intersect" || kind == "minus") {
    check_fields(j, {"kind", "a", "b"}, "generator");
    SetGenerator a = parse_generator(need_member(j, "a", "generator"));
    SetGenerator b = parse_generator(need_member(j, "b", "generator"));
    if (kind == "union") return SetGenerator::set_union(std::move(a), std::move(b));
    if (kind == "intersect") return SetGenerator::set_intersect(std::move(a), std::move(b));
    return SetGenerator::set_minus(std::move(a), std::move(b));
  }
  if (kind == "tail-from") {
    check_fields(j, {"kind", "n"}, "generator");
    return SetGenerator::tail_from(need_int(j, "n", "generator"));
  }
  throw validation_error("unknown generator kind '" + kind + "'");
}

WeightSeq parse_weights(const Json& j) {
  const std::string kind = need_string(j, "kind", "weights");
  if (kind == "lambda") {
    check_fields(j, {"kind"}, "weights");
    return WeightSeq::lambda();
  }
  if (kind == "harmonic") {
    check_fields(j, {"kind"}, "weights");
    return WeightSeq::harmonic();
  }
  if (kind == "one") {
    check_fields(j, {"kind"}, "weights");
    return WeightSeq::one();
  }
  if (kind == "geometric") {
    check_fields(j, {"kind"}, "weights");
    return WeightSeq::geometric();
  }
  if (kind == "inverse-square-blocks") {
    check_fields(j, {"kind"}, "weights");
    return WeightSeq::inverse_square_blocks();
  }
  if (kind == "custom") {
    check_fields(j, {"kind", "table", "fallback"}, "weights");
    std::map<index_t, Rational> table;
    for (const auto& [key, value] : need_member(j, "table", "custom weights").items()) {
      if (!value.is_string()) throw validation_error("weight table values must be rational strings");
      table[std::stoll(key)] = parse_rational(value.get<std::string>());
    }
    return WeightSeq::custom(std::move(table),
                             parse_weights(need_member(j, "fallback", "custom weights")));
  }
  throw validation_error("unknown weights kind '" + kind + "'");
}

FinVec parse_vector(const Json& j) {
  if (!j.is_object()) throw validation_error("vector must map index strings to rational strings");
  FinVec x;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw validation_error("vector entries must be rational strings");
    index_t i = 0;
    try {
      i = std::stoll(key);
    } catch (const std::exception&) {
      throw validation_error("bad vector index '" + key + "'");
    }
    x.set(i, parse_rational(value.get<std::string>()));
  }
  return x;
}

namespace {

enum class OutputMode { Text, Records, Csv };

OutputMode parse_output_mode(const Json& job) {
  if (!job.contains("output")) return OutputMode::Text;
  const std::string mode = job.at("output").get<std::string>();
  if (mode == "text") return OutputMode::Text;
  if (mode == "records") return OutputMode::Records;
  if (mode == "csv") return OutputMode::Csv;
  throw validation_error("unknown output mode '" + mode + "'");
}

Json certificate_record(const Certificate& cert) {
  Json facts = Json::array();
  for (const auto& [k, v] : cert.facts) facts.push_back(Json::array({k, v}));
  Json rec;
  rec["kind"] = cert.kind;
  rec["success"] = cert.success;
  rec["facts"] = facts;
  rec["searched"] = cert.searched;
  return rec;
}

std::string certificate_text(const Certificate& cert) {
  std::string out = cert.kind + ": " + (cert.success ? "success" : "no certificate") + "\n";
  for (const auto& [k, v] : cert.facts) out += "  " + k + ": " + v + "\n";
  out += "  searched: " + cert.searched + "\n";
  return out;
}

std::string emit(OutputMode mode, const std::string& text, const Json& record) {
  if (mode == OutputMode::Records) return record.dump() + "\n";
  return text;
}

std::vector<index_t> parse_index_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw validation_error(what + " must be an array of integers");
  std::vector<index_t> v;
  for (const auto& e : j) v.push_back(e.get<index_t>());
  return v;
}

std::vector<FinVec> parse_vector_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw validation_error(what + " must be an array of vectors");
  std::vector<FinVec> v;
  for (const auto& e : j) v.push_back(parse_vector(e));
  return v;
}

}  // namespace

std::string run_job(const Json& job) {
  const std::string sub = need_string(job, "subcommand", "job");
  const OutputMode mode = parse_output_mode(job);
  if (mode == OutputMode::Csv && sub != "tail-profile") {
    throw validation_error("csv output is only available for tail-profile");
  }

  if (sub == "norm") {
    check_fields(job, {"subcommand", "output", "family", "vec"}, "norm job");
    const Rational value = ext_norm(parse_family(need_member(job, "family", "norm job")),
                                    parse_vector(need_member(job, "vec", "norm job")));
    Json rec;
    rec["norm"] = format_rational(value);
    return emit(mode, format_rational(value) + "\n", rec);
  }

  if (sub == "tail") {
    check_fields(job, {"subcommand", "output", "family", "vec", "n"}, "tail job");
    const Rational value = tail_norm(parse_family(need_member(job, "family", "tail job")),
                                     parse_vector(need_member(job, "vec", "tail job")),
                                     need_int(job, "n", "tail job"));
    Json rec;
    rec["tail_norm"] = format_rational(value);
    return emit(mode, format_rational(value) + "\n", rec);
  }

  if (sub == "phi") {
    check_fields(job, {"subcommand", "output", "family", "weights", "set"}, "phi job");
    const Rational value = phi({parse_family(need_member(job, "family", "phi job")),
                                parse_weights(need_member(job, "weights", "phi job"))},
                               parse_set(need_member(job, "set", "phi job")));
    Json rec;
    rec["phi"] = format_rational(value);
    return emit(mode, format_rational(value) + "\n", rec);
  }

  if (sub == "tail-profile") {
    check_fields(job, {"subcommand", "output", "family", "weights", "gen", "cutoffs", "horizon"},
                 "tail-profile job");
    const SubmeasureSpec spec{parse_family(need_member(job, "family", "tail-profile job")),
                              parse_weights(need_member(job, "weights", "tail-profile job"))};
    const index_t horizon = need_int(job, "horizon", "tail-profile job");
    const auto profile =
        tail_profile(spec, parse_generator(need_member(job, "gen", "tail-profile job")),
                     parse_index_list(need_member(job, "cutoffs", "tail-profile job"), "cutoffs"),
                     horizon);
    if (mode == OutputMode::Csv) return tail_profile_csv(profile, horizon);
    std::string text;
    Json rows = Json::array();
    for (const auto& p : profile) {
      text += std::to_string(p.cutoff) + " " + format_rational(p.value) + "\n";
      Json row;
      row["cutoff"] = p.cutoff;
      row["value"] = format_rational(p.value);
      rows.push_back(row);
    }
    Json rec;
    rec["horizon"] = horizon;
    rec["profile"] = rows;
    return emit(mode, text, rec);
  }

  if (sub == "schreier-check") {
    check_fields(job, {"subcommand", "output", "alpha", "set"}, "schreier-check job");
    const bool in = schreier_contains(ord_parse(need_string(job, "alpha", "schreier-check job")),
                                      parse_set(need_member(job, "set", "schreier-check job")));
    Json rec;
    rec["contains"] = in;
    return emit(mode, std::string(in ? "true" : "false") + "\n", rec);
  }

  if (sub == "contains") {
    check_fields(job, {"subcommand", "output", "family", "set"}, "contains job");
    const bool in = family_contains(parse_family(need_member(job, "family", "contains job")),
                                    parse_set(need_member(job, "set", "contains job")));
    Json rec;
    rec["contains"] = in;
    return emit(mode, std::string(in ? "true" : "false") + "\n", rec);
  }

  if (sub == "enumerate") {
    check_fields(job, {"subcommand", "output", "family", "window", "max"}, "enumerate job");
    std::size_t max_count = SIZE_MAX;
    if (job.contains("max")) max_count = (std::size_t)need_int(job, "max", "enumerate job");
    const auto result = enumerate_members(
        parse_family(need_member(job, "family", "enumerate job")),
        need_int(job, "window", "enumerate job"), max_count);
    std::string text;
    Json rows = Json::array();
    for (const auto& m : result.members) {
      text += m.to_string() + "\n";
      rows.push_back(m.to_string());
    }
    if (result.truncated) text += "(truncated)\n";
    Json rec;
    rec["members"] = rows;
    rec["truncated"] = result.truncated;
    return emit(mode, text, rec);
  }

  if (sub == "rank") {
    check_fields(job, {"subcommand", "output", "family"}, "rank job");
    const auto rank = symbolic_rank(parse_family(need_member(job, "family", "rank job")));
    const std::string text = rank ? ord_print(*rank) : "none";
    Json rec;
    rec["rank"] = text;
    return emit(mode, text + "\n", rec);
  }

  if (sub == "precompact") {
    check_fields(job, {"subcommand", "output", "family"}, "precompact job");
    const auto st = precompact_status(parse_family(need_member(job, "family", "precompact job")));
    std::string verdict;
    switch (st.verdict) {
      case PrecompactStatus::Verdict::Precompact:
        verdict = "precompact";
        break;
      case PrecompactStatus::Verdict::NotPrecompact:
        verdict = "not-precompact";
        break;
      case PrecompactStatus::Verdict::Unknown:
        verdict = "unknown";
        break;
    }
    std::string text = verdict + ": " + st.reason + "\n";
    if (st.witness) text += "witness: " + st.witness->describe() + "\n";
    Json rec;
    rec["verdict"] = verdict;
    rec["reason"] = st.reason;
    if (st.witness) rec["witness"] = st.witness->describe();
    return emit(mode, text, rec);
  }

  if (sub == "spreading") {
    check_fields(job, {"subcommand", "output", "family", "window"}, "spreading job");
    const auto violation =
        spreading_check(parse_family(need_member(job, "family", "spreading job")),
                        need_int(job, "window", "spreading job"));
    Json rec;
    if (!violation) {
      rec["spreading"] = "OK";
      return emit(mode, "OK\n", rec);
    }
    rec["spreading"] = "violation";
    rec["member"] = violation->member.to_string();
    rec["dominating"] = violation->dominating.to_string();
    return emit(mode,
                "violation: member " + violation->member.to_string() + " dominating " +
                    violation->dominating.to_string() + "\n",
                rec);
  }

  if (sub == "witness") {
    const std::string which = need_string(job, "which", "witness job");
    if (which == "summable-like") {
      check_fields(job, {"subcommand", "output", "which", "alpha", "N"}, "witness job");
      const auto w = summable_like_witness(ord_parse(need_string(job, "alpha", "witness job")),
                                           (int)need_int(job, "N", "witness job"));
      std::string text;
      Json rows = Json::array();
      for (std::size_t n = 0; n < w.sets.size(); ++n) {
        text += "F_" + std::to_string(n) + " = " + w.sets[n].to_string() +
                " phi = " + format_rational(w.set_values[n]) + "\n";
        Json row;
        row["set"] = w.sets[n].to_string();
        row["phi"] = format_rational(w.set_values[n]);
        rows.push_back(row);
      }
      text += "union phi = " + format_rational(w.union_value) + "\n";
      Json rec;
      rec["alpha"] = ord_print(w.alpha);
      rec["N"] = w.N;
      rec["pieces"] = rows;
      rec["union_phi"] = format_rational(w.union_value);
      return emit(mode, text, rec);
    }
    if (which == "trace-i2") {
      check_fields(job, {"subcommand", "output", "which", "k"}, "witness job");
      const auto w = trace_vs_i2_witness((int)need_int(job, "k", "witness job"));
      std::string text;
      Json rows = Json::array();
      for (const auto& level : w.levels) {
        text += "k=" + std::to_string(level.k) + " trace tail(from " +
                std::to_string(level.cutoff) + ") = " + format_rational(level.trace_tail_value) +
                ", S_2 window value = " + format_rational(level.s2_value) + "\n";
        Json row;
        row["k"] = level.k;
        row["cutoff"] = level.cutoff;
        row["trace_tail"] = format_rational(level.trace_tail_value);
        row["s2_value"] = format_rational(level.s2_value);
        rows.push_back(row);
      }
      Json rec;
      rec["levels"] = rows;
      rec["horizon"] = w.horizon;
      return emit(mode, text, rec);
    }
    if (which == "density-bound") {
      check_fields(job, {"subcommand", "output", "which", "j", "gen", "N", "horizon"},
                   "witness job");
      const auto r = density_bound_check((int)need_int(job, "j", "witness job"),
                                         parse_generator(need_member(job, "gen", "witness job")),
                                         need_int(job, "N", "witness job"),
                                         need_int(job, "horizon", "witness job"));
      const std::string text = "phi_1(tail window) = " + format_rational(r.value) +
                               " <= bound " + format_rational(r.bound) + "\n";
      Json rec;
      rec["value"] = format_rational(r.value);
      rec["bound"] = format_rational(r.bound);
      return emit(mode, text, rec);
    }
    throw validation_error("unknown witness '" + which + "'");
  }

  if (sub == "delta-system") {
    check_fields(job, {"subcommand", "output", "sets", "m"}, "delta-system job");
    std::vector<FiniteSet> sets;
    for (const auto& s : need_member(job, "sets", "delta-system job")) sets.push_back(parse_set(s));
    const auto d = delta_system_extract(sets, (int)need_int(job, "m", "delta-system job"));
    Json rec;
    if (!d) {
      rec["found"] = false;
      return emit(mode, "not found\n", rec);
    }
    std::string text = "root " + d->root.to_string() + "\n";
    Json rows = Json::array();
    for (const auto& s : d->sets) {
      text += s.to_string() + "\n";
      rows.push_back(s.to_string());
    }
    rec["found"] = true;
    rec["root"] = d->root.to_string();
    rec["sets"] = rows;
    return emit(mode, text, rec);
  }

  if (sub == "l1-check") {
    check_fields(job, {"subcommand", "output", "family", "gen", "window", "samples"},
                 "l1-check job");
    const Certificate cert = l1_copy_check(
        parse_family(need_member(job, "family", "l1-check job")),
        parse_generator(need_member(job, "gen", "l1-check job")),
        need_int(job, "window", "l1-check job"),
        parse_vector_list(need_member(job, "samples", "l1-check job"), "samples"));
    return emit(mode, certificate_text(cert), certificate_record(cert));
  }

  if (sub == "c0-check") {
    check_fields(job, {"subcommand", "output", "period", "length", "coeffs"}, "c0-check job");
    std::vector<std::vector<Rational>> coeffs;
    for (const auto& row : need_member(job, "coeffs", "c0-check job")) {
      std::vector<Rational> one;
      for (const auto& c : row) one.push_back(parse_rational(c.get<std::string>()));
      coeffs.push_back(std::move(one));
    }
    const Certificate cert =
        c0_branch_check(need_string(job, "period", "c0-check job"),
                        (int)need_int(job, "length", "c0-check job"), coeffs);
    return emit(mode, certificate_text(cert), certificate_record(cert));
  }

  if (sub == "schur") {
    check_fields(job, {"subcommand", "output", "family", "blocks", "eps", "gen", "horizon"},
                 "schur job");
    const Certificate cert = schur_witness(
        parse_family(need_member(job, "family", "schur job")),
        BlockSequence(parse_vector_list(need_member(job, "blocks", "schur job"), "blocks")),
        parse_rational(need_string(job, "eps", "schur job")),
        parse_generator(need_member(job, "gen", "schur job")),
        need_int(job, "horizon", "schur job"));
    return emit(mode, certificate_text(cert), certificate_record(cert));
  }

  if (sub == "variation") {
    check_fields(job, {"subcommand", "output", "depth", "cells"}, "variation job");
    std::vector<Rational> cells;
    for (const auto& c : need_member(job, "cells", "variation job")) {
      cells.push_back(parse_rational(c.get<std::string>()));
    }
    const DyadicMeasure m((int)need_int(job, "depth", "variation job"), std::move(cells));
    const Certificate cert = variation_identity_check(m);
    std::string text = "variation = " + format_rational(variation_norm(m)) + "\n";
    text += certificate_text(cert);
    return emit(mode, text, certificate_record(cert));
  }

  if (sub == "ptak") {
    check_fields(job, {"subcommand", "output", "family", "weights", "eps", "horizon"}, "ptak job");
    const Certificate cert = ptak_fill_search(
        parse_family(need_member(job, "family", "ptak job")),
        parse_weights(need_member(job, "weights", "ptak job")),
        parse_rational(need_string(job, "eps", "ptak job")), need_int(job, "horizon", "ptak job"));
    return emit(mode, certificate_text(cert), certificate_record(cert));
  }

  if (sub == "mazur") {
    check_fields(job, {"subcommand", "output", "family", "weights", "eps", "horizon", "blocks"},
                 "mazur job");
    std::optional<BlockSequence> blocks;
    if (job.contains("blocks")) {
      blocks = BlockSequence(parse_vector_list(job.at("blocks"), "blocks"));
    }
    const Certificate cert = mazur_combination_search(
        parse_family(need_member(job, "family", "mazur job")), blocks,
        parse_weights(need_member(job, "weights", "mazur job")),
        parse_rational(need_string(job, "eps", "mazur job")),
        need_int(job, "horizon", "mazur job"));
    return emit(mode, certificate_text(cert), certificate_record(cert));
  }

  if (sub == "exh-fin") {
    check_fields(job, {"subcommand", "output", "family", "weights", "gen", "horizon"},
                 "exh-fin job");
    const Certificate cert = exh_vs_fin_probe(
        parse_family(need_member(job, "family", "exh-fin job")),
        parse_weights(need_member(job, "weights", "exh-fin job")),
        parse_generator(need_member(job, "gen", "exh-fin job")),
        need_int(job, "horizon", "exh-fin job"));
    return emit(mode, certificate_text(cert), certificate_record(cert));
  }

  if (sub == "exh-evidence") {
    check_fields(job,
                 {"subcommand", "output", "family", "weights", "gen", "eps", "cutoffs", "horizon"},
                 "exh-evidence job");
    const auto ev = exh_evidence(
        {parse_family(need_member(job, "family", "exh-evidence job")),
         parse_weights(need_member(job, "weights", "exh-evidence job"))},
        parse_generator(need_member(job, "gen", "exh-evidence job")),
        parse_rational(need_string(job, "eps", "exh-evidence job")),
        parse_index_list(need_member(job, "cutoffs", "exh-evidence job"), "cutoffs"),
        need_int(job, "horizon", "exh-evidence job"));
    std::string verdict;
    switch (ev.verdict) {
      case ExhEvidence::Verdict::Supports:
        verdict = "SUPPORTS-MEMBERSHIP";
        break;
      case ExhEvidence::Verdict::Refutes:
        verdict = "REFUTES-MEMBERSHIP-AT(" + std::to_string(ev.refute_cutoff) + ", " +
                  format_rational(ev.refute_value) + ")";
        break;
      case ExhEvidence::Verdict::Inconclusive:
        verdict = "INCONCLUSIVE";
        break;
    }
    std::string text;
    Json rows = Json::array();
    for (const auto& p : ev.profile) {
      text += std::to_string(p.cutoff) + " " + format_rational(p.value) + "\n";
      Json row;
      row["cutoff"] = p.cutoff;
      row["value"] = format_rational(p.value);
      rows.push_back(row);
    }
    text += verdict + "\n" + ev.statement + "\n";
    Json rec;
    rec["profile"] = rows;
    rec["verdict"] = verdict;
    rec["statement"] = ev.statement;
    return emit(mode, text, rec);
  }

  if (sub == "selftest") {
    check_fields(job, {"subcommand", "output"}, "selftest job");
    std::string out;
    const bool ok = run_acceptance(out);
    if (!ok) throw verification_error(out + "acceptance suite failed");
    return out;
  }

  throw validation_error("unknown subcommand '" + sub + "'");
}

std::string run_job_text(const std::string& job_json) {
  Json job;
  try {
    job = Json::parse(job_json);
  } catch (const std::exception& e) {
    throw validation_error(std::string("bad job JSON: ") + e.what());
  }
  return run_job(job);
}

}  // namespace combinach
