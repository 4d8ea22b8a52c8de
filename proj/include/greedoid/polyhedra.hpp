// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREEDOID_POLYHEDRA_HPP_
#define GREEDOID_POLYHEDRA_HPP_

#include <string>
#include <vector>

#include "greedoid/greedy.hpp"

namespace greedoid {

// A rational vector indexed by the full ground set.
using RationalPoint = std::vector<Rational>;

// All U with p(U) < r(S) - r(S-U); empty means p lies in the polyhedron Q cut
// out by those inequalities. Brute force over the 2^n subsets.
std::vector<Mask> q_violations(const Greedoid& g, const RationalPoint& p);

// True iff coeffs·sh_B >= bound for the shadow vector of every base; with
// non-negative coefficients the inequality is then valid on the whole
// up-hull of the shadow polytope.
bool separating_inequality_check(const Greedoid& g,
                                 const RationalPoint& coeffs,
                                 const Rational& bound);

struct ShadowOptimum {
  Mask base = 0;
  Rational value;
};

// Minimizes c over the shadow vectors of all bases, c >= 0 (throws
// kNegativeWeight). Equals the minimum path-sum base value.
ShadowOptimum min_over_shadow(const Greedoid& g, const RationalPoint& c);

// The n dual sets and values certifying min{cx : x in Q}: y >= 0, the values
// over the sets containing x add up to c(x), and the rank-weighted total
// equals the primal optimum.
struct DualCertificate {
  std::vector<Mask> sets;
  std::vector<Rational> values;
  Rational objective;
};

// The greedy run behind a certificate, kept for the structural assertions on
// the construction.
struct CertificateRun {
  DualCertificate certificate;
  std::vector<int> pick_order;    // s_1..s_r
  std::vector<Mask> prefixes;     // B_1..B_r with B_1 = ∅
  std::vector<Mask> base_paths;   // P_0..P_r, P_0 = ∅
  Mask base = 0;
};

// Builds the certificate from the lowest-index minimizing greedy run on the
// path-sum objective: U_i = Γ(B_i) with y = the path-cost increments for the
// picked elements, singletons with the leftover costs for the rest. The
// elements outside the base are taken in ascending index order. Requires a
// local forest greedoid and c >= 0.
CertificateRun dual_certificate_run(const Greedoid& g, const RationalPoint& c);
DualCertificate dual_certificate(const Greedoid& g, const RationalPoint& c);

struct CertificateReport {
  bool values_nonnegative = false;
  bool covers_costs = false;          // per-element covering equalities
  bool objective_matches_ranks = false;  // objective recomputed from ranks
  bool strong_duality = false;        // objective == min over shadow vectors
  std::vector<std::string> failures;
  bool ok() const {
    return values_nonnegative && covers_costs && objective_matches_ranks &&
           strong_duality;
  }
};

// Exact verification of a certificate against the definition, with the ranks
// and the primal optimum recomputed independently of the construction.
CertificateReport verify_certificate(const Greedoid& g, const RationalPoint& c,
                                     const DualCertificate& cert);

// With integer c >= 0 the primal optimum is a shadow vector (integral by
// definition) and the constructed dual values are integers.
bool integrality_check(const Greedoid& g, const RationalPoint& c);

// The construction-level facts the certificate proof rests on, re-checked on
// a concrete run: the first-appearance path identity, contiguity of the
// index sets per element together with the telescoping value sums, the
// monotone path costs, and the closed-form ranks of the complements.
struct ClaimReport {
  bool first_appearance_paths = false;
  bool contiguous_intervals = false;
  bool monotone_path_costs = false;
  bool complement_ranks = false;
  bool ok() const {
    return first_appearance_paths && contiguous_intervals &&
           monotone_path_costs && complement_ranks;
  }
};

ClaimReport check_certificate_claims(const Greedoid& g, const RationalPoint& c,
                                     const CertificateRun& run);

}  // namespace greedoid

#endif  // GREEDOID_POLYHEDRA_HPP_
