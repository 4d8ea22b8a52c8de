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

#include "greedoid/polyhedra.hpp"

#include <algorithm>

namespace greedoid {

namespace {

Rational point_sum(const RationalPoint& p, Mask m) {
  Rational total = 0;
  for (int i : elements_of(m)) total += p[i];
  return total;
}

void require_nonnegative(const RationalPoint& c) {
  for (const Rational& v : c) {
    if (v < 0) fail(Errc::kNegativeWeight, "weights must be non-negative");
  }
}

}  // namespace

std::vector<Mask> q_violations(const Greedoid& g, const RationalPoint& p) {
  std::vector<Mask> out;
  const Mask all = g.universe();
  const int r = g.rank();
  for (Mask u = 0;; ++u) {
    if (point_sum(p, u) < r - g.rank(all & ~u)) out.push_back(u);
    if (u == all) break;
  }
  return out;
}

bool separating_inequality_check(const Greedoid& g,
                                 const RationalPoint& coeffs,
                                 const Rational& bound) {
  for (Mask base : g.bases()) {
    const ShadowVector sh = shadow_vector(g, base);
    Rational lhs = 0;
    for (int i = 0; i < g.n(); ++i) lhs += coeffs[i] * sh[i];
    if (lhs < bound) return false;
  }
  return true;
}

ShadowOptimum min_over_shadow(const Greedoid& g, const RationalPoint& c) {
  require_nonnegative(c);
  ShadowOptimum best;
  bool have = false;
  for (Mask base : g.bases()) {
    const ShadowVector sh = shadow_vector(g, base);
    Rational value = 0;
    for (int i = 0; i < g.n(); ++i) value += c[i] * sh[i];
    if (!have || value < best.value ||
        (value == best.value && lex_less(base, best.base))) {
      best = ShadowOptimum{base, value};
      have = true;
    }
  }
  return best;
}

CertificateRun dual_certificate_run(const Greedoid& g,
                                    const RationalPoint& c) {
  if (!g.is_local_forest()) {
    fail(Errc::kNotLocalForest,
         "dual certificates need a local forest greedoid");
  }
  require_nonnegative(c);

  const GreedyTrace trace =
      greedy(g, Objective::path_sum(WeightVector(c), Direction::kMin));
  CertificateRun run;
  run.base = trace.base;
  run.pick_order = trace.pick_sequence();
  const int r = static_cast<int>(run.pick_order.size());
  const int n = g.n();

  run.prefixes.resize(r);
  run.base_paths.resize(r + 1);
  run.base_paths[0] = 0;
  Mask prefix = 0;
  for (int i = 0; i < r; ++i) {
    run.prefixes[i] = prefix;
    run.base_paths[i + 1] = path(g, run.base, run.pick_order[i]);
    prefix = with(prefix, run.pick_order[i]);
  }

  DualCertificate cert;
  cert.sets.resize(n);
  cert.values.resize(n);
  for (int i = 0; i < r; ++i) {
    cert.sets[i] = g.continuations(run.prefixes[i]);
    cert.values[i] = point_sum(c, run.base_paths[i + 1]) -
                     point_sum(c, run.base_paths[i]);
  }
  // Ground-set elements outside the base, ascending.
  const std::vector<int> rest = elements_of(g.universe() & ~run.base);
  for (int k = 0; k < static_cast<int>(rest.size()); ++k) {
    const int s = rest[k];
    Rational already = 0;
    for (int i = 0; i < r; ++i) {
      if (contains(cert.sets[i], s)) already += cert.values[i];
    }
    cert.sets[r + k] = single(s);
    cert.values[r + k] = c[s] - already;
  }
  // Objective via the closed-form complement ranks: r(S-U_i) = i-1 for the
  // first r sets and r(S) afterwards. verify_certificate recomputes it from
  // the actual rank table.
  Rational objective = 0;
  for (int i = 0; i < r; ++i) {
    objective += (r - i) * cert.values[i];
  }
  cert.objective = objective;
  run.certificate = std::move(cert);
  return run;
}

DualCertificate dual_certificate(const Greedoid& g, const RationalPoint& c) {
  return dual_certificate_run(g, c).certificate;
}

CertificateReport verify_certificate(const Greedoid& g,
                                     const RationalPoint& c,
                                     const DualCertificate& cert) {
  CertificateReport report;
  const int n = g.n();

  if (static_cast<int>(cert.sets.size()) != n ||
      static_cast<int>(cert.values.size()) != n) {
    report.failures.push_back("certificate must have exactly n entries");
    return report;
  }

  report.values_nonnegative = true;
  for (int i = 0; i < n; ++i) {
    if (cert.values[i] < 0) {
      report.values_nonnegative = false;
      report.failures.push_back("negative dual value on U" +
                                std::to_string(i + 1));
      break;
    }
  }

  report.covers_costs = true;
  for (int x = 0; x < n; ++x) {
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      if (contains(cert.sets[i], x)) total += cert.values[i];
    }
    if (total != c[x]) {
      report.covers_costs = false;
      report.failures.push_back("covering equality fails at element " +
                                g.ground().label(x));
      break;
    }
  }

  Rational from_ranks = 0;
  const int r = g.rank();
  for (int i = 0; i < n; ++i) {
    from_ranks += (r - g.rank(g.universe() & ~cert.sets[i])) * cert.values[i];
  }
  report.objective_matches_ranks = from_ranks == cert.objective;
  if (!report.objective_matches_ranks) {
    report.failures.push_back("objective does not match the rank form");
  }

  report.strong_duality = min_over_shadow(g, c).value == cert.objective;
  if (!report.strong_duality) {
    report.failures.push_back("objective differs from the shadow minimum");
  }
  return report;
}

bool integrality_check(const Greedoid& g, const RationalPoint& c) {
  for (const Rational& v : c) {
    if (!is_integer(v)) {
      fail(Errc::kBadParams, "integrality check needs integer weights");
    }
  }
  const CertificateRun run = dual_certificate_run(g, c);
  for (const Rational& y : run.certificate.values) {
    if (!is_integer(y)) return false;
  }
  // The primal optimum is attained on a shadow vector, which is integral by
  // definition; recompute it and its value for completeness.
  const ShadowOptimum primal = min_over_shadow(g, c);
  return is_integer(primal.value) &&
         primal.value == run.certificate.objective;
}

ClaimReport check_certificate_claims(const Greedoid& g,
                                     const RationalPoint& c,
                                     const CertificateRun& run) {
  ClaimReport report;
  const int r = static_cast<int>(run.pick_order.size());
  const DualCertificate& cert = run.certificate;

  Mask covered = 0;
  for (int i = 0; i < r; ++i) covered |= cert.sets[i];

  // First appearance: if x first enters at U_j then the x-path in B_j + x is
  // P_{j-1} + x.
  report.first_appearance_paths = true;
  for (int x : elements_of(covered)) {
    int j = -1;
    for (int i = 0; i < r; ++i) {
      if (contains(cert.sets[i], x)) {
        j = i;
        break;
      }
    }
    const Mask bjx = with(run.prefixes[j], x);
    if (path(g, bjx, x) != with(run.base_paths[j], x)) {
      report.first_appearance_paths = false;
      break;
    }
  }

  // Contiguity: {i <= r : x in U_i} is an interval [j, k], and the dual
  // values over it telescope to c(P_k) - c(P_{j-1}).
  report.contiguous_intervals = true;
  for (int x : elements_of(covered)) {
    int j = -1, k = -1;
    for (int i = 0; i < r; ++i) {
      if (!contains(cert.sets[i], x)) continue;
      if (j < 0) j = i;
      k = i;
    }
    for (int i = j; i <= k; ++i) {
      if (!contains(cert.sets[i], x)) {
        report.contiguous_intervals = false;
        break;
      }
    }
    if (!report.contiguous_intervals) break;
    Rational total = 0;
    for (int i = j; i <= k; ++i) total += cert.values[i];
    Rational pk = 0, pj = 0;
    for (int e : elements_of(run.base_paths[k + 1])) pk += c[e];
    for (int e : elements_of(run.base_paths[j])) pj += c[e];
    if (total != pk - pj) {
      report.contiguous_intervals = false;
      break;
    }
  }

  report.monotone_path_costs = true;
  for (int i = 1; i + 1 <= r; ++i) {
    Rational prev = 0, next = 0;
    for (int e : elements_of(run.base_paths[i])) prev += c[e];
    for (int e : elements_of(run.base_paths[i + 1])) next += c[e];
    if (prev > next) {
      report.monotone_path_costs = false;
      break;
    }
  }

  report.complement_ranks = true;
  for (int i = 0; i < g.n(); ++i) {
    const int expected = i < r ? i : g.rank();
    if (g.rank(g.universe() & ~cert.sets[i]) != expected) {
      report.complement_ranks = false;
      break;
    }
  }
  return report;
}

}  // namespace greedoid
