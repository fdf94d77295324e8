#include "combinach/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <vector>

#include "combinach/diagnostics.hpp"
#include "combinach/errors.hpp"
#include "combinach/jobs.hpp"
#include "combinach/norms.hpp"
#include "combinach/schreier.hpp"
#include "combinach/submeasures.hpp"
#include "combinach/witnesses.hpp"

namespace combinach {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

FinVec random_vector(std::mt19937& rng, index_t lo, index_t hi, int max_support,
                     bool quarters_only) {
  std::uniform_int_distribution<index_t> pick_index(lo, hi - 1);
  std::uniform_int_distribution<int> pick_size(1, max_support);
  std::uniform_int_distribution<int> pick_num(-8, 8);
  std::uniform_int_distribution<int> pick_den_exp(0, 3);
  std::uniform_int_distribution<int> pick_quarter(0, 5);
  static const int quarter_values[6] = {4, -4, 2, -2, 1, -1};

  FinVec x;
  const int size = pick_size(rng);
  for (int i = 0; i < size; ++i) {
    const index_t idx = pick_index(rng);
    if (quarters_only) {
      x.set(idx, Rational(quarter_values[pick_quarter(rng)], 4));
    } else {
      int num = pick_num(rng);
      if (num == 0) num = 3;
      x.set(idx, Rational(num, 1 << pick_den_exp(rng)));
    }
  }
  return x;
}

FiniteSet random_set(std::mt19937& rng, index_t lo, index_t hi, int max_size) {
  std::uniform_int_distribution<index_t> pick_index(lo, hi - 1);
  std::uniform_int_distribution<int> pick_size(0, max_size);
  std::vector<index_t> v;
  const int size = pick_size(rng);
  for (int i = 0; i < size; ++i) v.push_back(pick_index(rng));
  return FiniteSet::from_unsorted(std::move(v));
}

// ---- criteria ------------------------------------------------------------

bool criterion_closed_forms(std::string& detail) {
  const auto start = Clock::now();
  std::mt19937 rng(10013);
  const Family all = Family::all_finite();
  const Family singles = Family::singletons();
  const Family blocks = Family::partition_blocks();
  for (int trial = 0; trial < 200; ++trial) {
    const FinVec x = random_vector(rng, 1, 64, 12, false);
    Rational l1 = 0, sup = 0;
    std::map<index_t, Rational> block_sums;
    for (const auto& [i, q] : x.entries()) {
      const Rational a = abs(q);
      l1 += a;
      sup = std::max(sup, a);
      block_sums[block_of(i)] += a;
    }
    Rational best_block = 0;
    for (const auto& [b, s] : block_sums) best_block = std::max(best_block, s);
    if (ext_norm(all, x) != l1 || ext_norm(singles, x) != sup ||
        ext_norm(blocks, x) != best_block) {
      detail = "mismatch on trial " + std::to_string(trial);
      return false;
    }
  }
  if (seconds_since(start) >= 2.0) {
    detail = "runtime budget of 2 s exceeded";
    return false;
  }
  detail = "200 random vectors, three closed forms, exact";
  return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
  const auto start = Clock::now();
  const std::vector<Family> families = {
      Family::schreier(ord_parse("1")),     Family::schreier(ord_parse("2")),
      Family::schreier(ord_parse("3")),     Family::schreier(ord_parse("w")),
      Family::schreier(ord_parse("w+1")),   Family::schreier(ord_parse("w*2")),
      Family::schreier(ord_parse("w^2")),   Family::antichains(),
      Family::block_capped_joined(BlockRule::farah()),
  };
  std::mt19937 rng(10037);
  for (const Family& family : families) {
    // cached member masks make the brute-force side affordable; this is
    // norm_oracle's computation with the enumeration hoisted out of the loop
    const auto members = enumerate_members(family, 16);
    std::vector<std::uint32_t> masks;
    masks.reserve(members.members.size());
    for (const FiniteSet& m : members.members) {
      std::uint32_t mask = 0;
      for (index_t i : m) mask |= 1u << (i - 1);
      masks.push_back(mask);
    }
    for (int trial = 0; trial < 300; ++trial) {
      const FinVec x = random_vector(rng, 1, 16, 8, true);
      std::array<int, 16> quarters{};
      for (const auto& [i, q] : x.entries()) {
        quarters[(std::size_t)i - 1] = (int)abs(4 * q.get_num().get_si() / q.get_den().get_si());
      }
      int best = 0;
      for (std::uint32_t mask : masks) {
        int sum = 0;
        std::uint32_t m = mask;
        while (m) {
          const int bit = __builtin_ctz(m);
          sum += quarters[(std::size_t)bit];
          m &= m - 1;
        }
        best = std::max(best, sum);
      }
      if (ext_norm(family, x) != Rational(best, 4)) {
        detail = "mismatch for " + family.describe() + " on trial " + std::to_string(trial);
        return false;
      }
    }
  }
  if (seconds_since(start) >= 60.0) {
    detail = "runtime budget of 60 s exceeded";
    return false;
  }
  detail = "9 family kinds x 300 random vectors, brute force agrees exactly";
  return true;
}

bool criterion_s1_law(std::string& detail) {
  const OrdinalCNF one = OrdinalCNF::nat(1);
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    std::vector<index_t> v;
    for (int b = 0; b < 12; ++b) {
      if (mask & (1u << b)) v.push_back(b + 1);
    }
    const FiniteSet f(std::move(v));
    const bool law = f.empty() || (index_t)f.size() <= f.min();
    if (schreier_contains(one, f) != law) {
      detail = "law fails on " + f.to_string();
      return false;
    }
  }
  detail = "all 4096 subsets of [1,12], zero exceptions";
  return true;
}

bool criterion_hereditary_spreading(std::string& detail) {
  const std::vector<std::string> alphas = {"1", "2", "3", "w", "w+1", "w*2", "w^2"};
  for (const std::string& alpha : alphas) {
    const Family family = Family::schreier(ord_parse(alpha));
    const auto members = enumerate_members(family, 13);
    for (const FiniteSet& member : members.members) {
      // removal-closure implies full subset closure
      for (std::size_t drop = 0; drop < member.size(); ++drop) {
        std::vector<index_t> v;
        for (std::size_t i = 0; i < member.size(); ++i) {
          if (i != drop) v.push_back(member[i]);
        }
        if (!family_contains(family, FiniteSet(std::move(v)))) {
          detail = "heredity fails for alpha=" + alpha + " at " + member.to_string();
          return false;
        }
      }
    }
    if (const auto violation = spreading_check(family, 12)) {
      detail = "spreading fails for alpha=" + alpha + " at " + violation->member.to_string();
      return false;
    }
  }
  detail = "7 ordinals, window [1,12], exhaustive";
  return true;
}

bool criterion_witness_values(std::string& detail) {
  for (const std::string& alpha : {"2", "3", "w"}) {
    for (int n_exp = 0; n_exp <= 3; ++n_exp) {
      const auto w = summable_like_witness(ord_parse(alpha), n_exp);
      const Rational expected(1, 1 << n_exp);
      for (const Rational& v : w.set_values) {
        if (v != expected) {
          detail = "piece value mismatch at alpha=" + alpha;
          return false;
        }
      }
      if (w.union_value != 1) {
        detail = "union value mismatch at alpha=" + alpha;
        return false;
      }
    }
  }
  const auto trace = trace_vs_i2_witness(3);
  for (const auto& level : trace.levels) {
    if (level.trace_tail_value != Rational(1, 1 << level.k) || level.s2_value < 1) {
      detail = "trace witness mismatch at k=" + std::to_string(level.k);
      return false;
    }
  }
  detail = "summable-like values 2^-N and 1 for alpha in {2,3,w}; trace tails 2^-k, S_2 >= 1";
  return true;
}

bool criterion_density_bound(std::string& detail) {
  std::mt19937 rng(10061);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<index_t> points;
    for (index_t n = 5; n <= 9; ++n) {
      const index_t cap = (index_t{1} << (n - 4)) - 1;  // strictly below 2^(n-4)
      std::uniform_int_distribution<index_t> pick_count(0, cap);
      const index_t count = pick_count(rng);
      std::vector<index_t> block;
      for (index_t k = block_start(n); k < block_start(n + 1); ++k) block.push_back(k);
      std::shuffle(block.begin(), block.end(), rng);
      points.insert(points.end(), block.begin(), block.begin() + count);
    }
    const SetGenerator gen = SetGenerator::explicit_finite(FiniteSet::from_unsorted(points));
    try {
      const auto report = density_bound_check(4, gen, 4, 1024);
      if (!(report.value <= report.bound)) {
        detail = "bound violated on trial " + std::to_string(trial);
        return false;
      }
    } catch (const std::exception& e) {
      detail = std::string("unexpected error: ") + e.what();
      return false;
    }
  }
  detail = "50 sets of block density < 2^-4, phi_1 tail <= 5/16 exactly";
  return true;
}

bool criterion_variation_identity(std::string& detail) {
  // exhaustive: depth <= 3 with cell values in {-2..2}/4
  for (int depth = 0; depth <= 3; ++depth) {
    const std::size_t cells = std::size_t{1} << depth;
    std::vector<int> digits(cells, 0);
    while (true) {
      std::vector<Rational> values;
      values.reserve(cells);
      for (std::size_t i = 0; i < cells; ++i) values.push_back(Rational(digits[i] - 2, 4));
      const DyadicMeasure m(depth, std::move(values));
      if (!variation_identity_check(m).success) {
        detail = "identity fails at depth " + std::to_string(depth);
        return false;
      }
      std::size_t pos = 0;
      while (pos < cells && digits[pos] == 4) digits[pos++] = 0;
      if (pos == cells) break;
      ++digits[pos];
    }
  }
  // plus random depth-6 measures
  std::mt19937 rng(10093);
  std::uniform_int_distribution<int> pick_num(-16, 16);
  std::uniform_int_distribution<int> pick_den_exp(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> values;
    for (int i = 0; i < 64; ++i) values.push_back(Rational(pick_num(rng), 1 << pick_den_exp(rng)));
    if (!variation_identity_check(DyadicMeasure(6, std::move(values))).success) {
      detail = "identity fails on random depth-6 trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "exhaustive depth <= 3 over {-2..2}/4 plus 100 random depth-6 measures";
  return true;
}

bool criterion_l1_c0_witnesses(std::string& detail) {
  std::mt19937 rng(10111);
  const SetGenerator chain = SetGenerator::block_prefix(BlockRule::one());
  const FiniteSet realized = chain.realize(64);
  std::vector<FinVec> samples;
  std::uniform_int_distribution<int> pick_num(-8, 8);
  std::uniform_int_distribution<int> pick_den_exp(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    FinVec x;
    for (index_t i : realized) {
      const int num = pick_num(rng);
      if (num != 0) x.set(i, Rational(num, 1 << pick_den_exp(rng)));
    }
    samples.push_back(std::move(x));
  }
  const Certificate l1 =
      l1_copy_check(Family::block_capped_joined(BlockRule::farah()), chain, 64, samples);
  if (!l1.success) {
    detail = "l1 copy equalities fail";
    return false;
  }

  const std::vector<std::string> periods = {"0", "1", "01", "10", "011"};
  std::uniform_int_distribution<int> pick_len(1, 10);
  for (int trial = 0; trial < 20; ++trial) {
    const std::string period = periods[(std::size_t)trial % periods.size()];
    const int length = pick_len(rng);
    std::vector<Rational> coeffs;
    for (int i = 0; i < length; ++i) coeffs.push_back(Rational(pick_num(rng), 1 << pick_den_exp(rng)));
    if (!c0_branch_check(period, length, {coeffs}).success) {
      detail = "c0 branch norm differs from max on trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "20 l1 chain samples and 20 c0 branch samples, exact equalities";
  return true;
}

bool criterion_ptak_mazur(std::string& detail) {
  const Family s1 = Family::schreier(OrdinalCNF::nat(1));
  for (const auto& eps : {Rational(1, 2), Rational(1, 4)}) {
    {
      const auto start = Clock::now();
      const Certificate cert = ptak_fill_search(s1, WeightSeq::lambda(), eps, 1 << 12);
      if (!cert.success) {
        detail = "ptak search found no certificate at eps=" + format_rational(eps);
        return false;
      }
      if (seconds_since(start) >= 10.0) {
        detail = "ptak runtime budget of 10 s exceeded";
        return false;
      }
    }
    {
      const auto start = Clock::now();
      const Certificate cert =
          mazur_combination_search(s1, std::nullopt, WeightSeq::lambda(), eps, 1 << 12);
      if (!cert.success) {
        detail = "mazur search found no combination below eps=" + format_rational(eps);
        return false;
      }
      if (seconds_since(start) >= 10.0) {
        detail = "mazur runtime budget of 10 s exceeded";
        return false;
      }
    }
  }
  detail = "certificates found for eps in {1/2, 1/4} at horizon 2^12 within budget";
  return true;
}

bool criterion_submeasure_axioms(std::string& detail) {
  const std::vector<SubmeasureSpec> specs = {
      {Family::all_finite(), WeightSeq::harmonic()},
      {Family::singletons(), WeightSeq::one()},
      {Family::partition_blocks(), WeightSeq::lambda()},
      {Family::block_capped_joined(BlockRule::farah()), WeightSeq::lambda()},
      {Family::block_capped_joined(BlockRule::linear()), WeightSeq::inverse_square_blocks()},
      {Family::block_capped_local(BlockRule::one()), WeightSeq::one()},
      {Family::antichains(), WeightSeq::lambda()},
      {Family::schreier(ord_parse("1")), WeightSeq::lambda()},
      {Family::schreier(ord_parse("2")), WeightSeq::lambda()},
      {Family::schreier(ord_parse("w")), WeightSeq::lambda()},
  };
  std::mt19937 rng(10133);
  for (int trial = 0; trial < 500; ++trial) {
    const SubmeasureSpec& spec = specs[(std::size_t)trial % specs.size()];
    if (phi(spec, FiniteSet()) != 0) {
      detail = "phi(empty) != 0";
      return false;
    }
    const FiniteSet a = random_set(rng, 1, 64, 8);
    const FiniteSet b = random_set(rng, 1, 64, 8);
    const Rational pa = phi(spec, a);
    const Rational pb = phi(spec, b);
    const Rational pu = phi(spec, a.unite(b));
    if (!(pa <= pu && pu <= pa + pb)) {
      detail = "axioms fail on trial " + std::to_string(trial) + " for " + spec.family.describe();
      return false;
    }
  }
  detail = "500 random (spec, A, B) triples, monotone + subadditive + phi(empty)=0";
  return true;
}

bool criterion_tail_profile_monotone(std::string& detail) {
  struct Case {
    SubmeasureSpec spec;
    SetGenerator gen;
  };
  const std::vector<Case> cases = {
      {{Family::all_finite(), WeightSeq::geometric()}, SetGenerator::all_indices()},
      {{Family::singletons(), WeightSeq::one()}, SetGenerator::all_indices()},
      {{Family::partition_blocks(), WeightSeq::lambda()}, SetGenerator::block_prefix(BlockRule::one())},
      {{Family::block_capped_joined(BlockRule::farah()), WeightSeq::lambda()},
       SetGenerator::block_prefix(BlockRule::one())},
      {{Family::block_capped_local(BlockRule::one()), WeightSeq::lambda()},
       SetGenerator::all_indices()},
      {{Family::antichains(), WeightSeq::lambda()},
       SetGenerator::block_prefix(BlockRule::halved_by_log())},
      {{Family::schreier(ord_parse("1")), WeightSeq::lambda()}, SetGenerator::all_indices()},
      {{Family::schreier(ord_parse("2")), WeightSeq::lambda()},
       SetGenerator::block_prefix(BlockRule::one())},
  };
  const std::vector<index_t> cutoffs = {2, 4, 8, 16, 32};
  const std::vector<index_t> horizons = {64, 128};
  for (const Case& c : cases) {
    std::vector<Rational> previous;
    for (index_t horizon : horizons) {
      const auto profile = tail_profile(c.spec, c.gen, cutoffs, horizon);
      for (std::size_t i = 1; i < profile.size(); ++i) {
        if (profile[i].value > profile[i - 1].value) {
          detail = "profile increases in cutoff for " + c.spec.family.describe();
          return false;
        }
      }
      if (!previous.empty()) {
        for (std::size_t i = 0; i < profile.size(); ++i) {
          if (profile[i].value < previous[i]) {
            detail = "profile decreases in horizon for " + c.spec.family.describe();
            return false;
          }
        }
      }
      previous.clear();
      for (const auto& p : profile) previous.push_back(p.value);
    }
  }
  detail = "8 catalog specs, cutoffs {2..32}, horizons {64,128}";
  return true;
}

struct CriterionRow {
  int number;
  std::string title;
  bool (*run)(std::string&);
};

const std::vector<CriterionRow>& criteria_1_to_11() {
  static const std::vector<CriterionRow> rows = {
      {1, "closed-form norm identities", criterion_closed_forms},
      {2, "oracle equivalence", criterion_oracle_equivalence},
      {3, "S_1 law", criterion_s1_law},
      {4, "hereditary + spreading", criterion_hereditary_spreading},
      {5, "quantitative witness values", criterion_witness_values},
      {6, "density bound", criterion_density_bound},
      {7, "variation identity", criterion_variation_identity},
      {8, "l1/c0 copy witnesses", criterion_l1_c0_witnesses},
      {9, "ptak/mazur searches", criterion_ptak_mazur},
      {10, "submeasure axioms", criterion_submeasure_axioms},
      {11, "tail-profile monotonicity", criterion_tail_profile_monotone},
  };
  return rows;
}

bool run_1_to_11(std::string& out) {
  bool all = true;
  for (const auto& row : criteria_1_to_11()) {
    std::string detail;
    bool ok = false;
    try {
      ok = row.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    all = all && ok;
    out += std::string(ok ? "PASS" : "FAIL") + " " + std::to_string(row.number) + " " + row.title +
           ": " + detail + "\n";
  }
  return all;
}

bool criterion_determinism(std::string& detail, const std::string& first_pass) {
  std::string second_pass;
  if (!run_1_to_11(second_pass)) {
    detail = "criteria failed on the second run";
    return false;
  }
  if (second_pass != first_pass) {
    detail = "selftest output differs between two consecutive runs";
    return false;
  }
  const std::vector<std::string> jobs = {
      R"({"subcommand":"norm","family":{"kind":"schreier","alpha":"1"},"vec":{"4":"1/4","5":"1/4","6":"1/4","7":"1/4"}})",
      R"({"subcommand":"witness","which":"summable-like","alpha":"2","N":2})",
      R"({"subcommand":"norm","family":{"kind":"all-finite"},"vec":{"1":"1/2","3":"-3/4"}})",
      R"({"subcommand":"phi","family":{"kind":"partition-blocks"},"weights":{"kind":"lambda"},"set":[8,9,10,11,12,13,14,15]})",
      R"({"subcommand":"witness","which":"trace-i2","k":2,"output":"records"})",
      R"({"subcommand":"tail-profile","family":{"kind":"partition-blocks"},"weights":{"kind":"lambda"},"gen":{"kind":"block-prefix","rule":"one"},"cutoffs":[2,4,8],"horizon":64,"output":"csv"})",
  };
  for (const std::string& job : jobs) {
    if (run_job_text(job) != run_job_text(job)) {
      detail = "job output differs between two consecutive runs";
      return false;
    }
  }
  detail = "selftest and CLI example outputs byte-identical across two runs";
  return true;
}

}  // namespace

bool run_acceptance(std::string& output) {
  std::string first_pass;
  bool all = run_1_to_11(first_pass);
  output += first_pass;

  std::string detail;
  bool ok = false;
  try {
    ok = criterion_determinism(detail, first_pass);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  all = all && ok;
  output += std::string(ok ? "PASS" : "FAIL") + " 12 determinism: " + detail + "\n";
  output += all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n";
  return all;
}

}  // namespace combinach
