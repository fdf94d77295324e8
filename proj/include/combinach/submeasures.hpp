#pragma once

#include <string>
#include <vector>

#include "combinach/family.hpp"
#include "combinach/rational.hpp"
#include "combinach/setgen.hpp"
#include "combinach/weights.hpp"

namespace combinach {

// phi(A) = ext_norm(family, tau restricted to A); a lower semicontinuous
// submeasure on finite sets.
struct SubmeasureSpec {
  Family family;
  WeightSeq tau;
};

Rational phi(const SubmeasureSpec& spec, const FiniteSet& set);

struct TailProfilePoint {
  index_t cutoff = 0;
  Rational value;  // phi(A n [cutoff, horizon)) — a certified lower bound of phi(A \ cutoff)
};

// Window tail values of the realized set; nonincreasing in the cutoff and
// nondecreasing in the horizon.
std::vector<TailProfilePoint> tail_profile(const SubmeasureSpec& spec, const SetGenerator& gen,
                                           const std::vector<index_t>& cutoffs, index_t horizon);

std::string tail_profile_csv(const std::vector<TailProfilePoint>& profile, index_t horizon);

// Trace submeasure on tree codes: the weights 2^(-depth) of the
// prefix-minimal elements.  Agrees with phi((antichains, lambda), A).
Rational phi_trace(const FiniteSet& codes);

struct ExhEvidence {
  enum class Verdict { Supports, Refutes, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  // Refutes: the largest cutoff n whose window value v is >= eps; this
  // certifies phi(A \ n) >= v and nothing stronger.
  index_t refute_cutoff = 0;
  Rational refute_value;
  std::vector<TailProfilePoint> profile;
  Rational window_value;       // phi(A n [1, horizon))
  Rational half_window_value;  // phi(A n [1, horizon/2))
  bool window_stable = false;  // growth below eps across the doubling
  std::string statement;       // the exact inequality the report certifies
};

// Tail-profile evidence for membership of the denoted set in Exh(phi).
// Window values are lower bounds; the report never claims tail_phi = 0.
ExhEvidence exh_evidence(const SubmeasureSpec& spec, const SetGenerator& gen, const Rational& eps,
                         const std::vector<index_t>& cutoffs, index_t horizon);

}  // namespace combinach
