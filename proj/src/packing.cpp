#include "tomolab/packing.hpp"

#include <cmath>

namespace tomolab {

double projector_overlap(const Projector& p, const HaarUnitary& u, const Projector& q) {
  if (p.dim() != u.dim || q.dim() != u.dim) throw std::invalid_argument("projector_overlap: dimension mismatch");
  return (p.matrix() * u.matrix * q.matrix() * u.matrix.adjoint()).trace().real();
}

OverlapTails overlap_tail_empirical(int d, int r1, int r2, double t, long trials, RngStream& rng) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("overlap_tail_empirical: t must be in (0,1)");
  const Projector p1 = Projector::standard(d, r1);
  const Projector p2 = Projector::standard(d, r2);
  const double center = double(r1) * r2 / d;
  long low = 0, high = 0;
  for (long i = 0; i < trials; ++i) {
    RngStream sub = rng.child(i);
    const HaarUnitary u = haar_unitary(d, sub);
    const double overlap = projector_overlap(p1, u, p2);
    if (overlap <= (1.0 - t) * center) ++low;
    if (overlap >= (1.0 + t) * center) ++high;
  }
  OverlapTails out;
  out.lower_freq = double(low) / trials;
  out.upper_freq = double(high) / trials;
  out.lower_bound = std::exp(-double(r1) * r2 * t * t / 2.0);
  out.upper_bound = std::exp(-double(r1) * r2 * t * t / 4.0);
  out.trials = trials;
  return out;
}

std::vector<std::string> PackingResult::vacuous_constraints() const {
  std::vector<std::string> out;
  for (const ConstraintStats& c : constraints)
    if (c.rejections == 0) out.push_back(c.name);
  return out;
}

namespace {

long resolve_budget(int n_target, long max_draws) {
  if (n_target < 1) throw std::invalid_argument("packing: n_target must be >= 1");
  return max_draws > 0 ? max_draws : kDrawBudgetPerTarget * long(n_target);
}

}  // namespace

PackingResult build_trace_packing(int d, double eps, int n_target, long max_draws, RngStream& rng) {
  return build_chi2_constrained_packing(d, eps, n_target, {}, 0.0, max_draws, rng);
}

PackingResult build_chi2_constrained_packing(int d, double eps, int n_target, const std::vector<Povm>& povms,
                                             double tau, long max_draws, RngStream& rng) {
  const long budget = resolve_budget(n_target, max_draws);
  PackingResult out;
  out.d = d;
  out.separation = eps / 2.0;
  out.constraints.push_back({"trace-separation > eps/2", 0});
  for (std::size_t k = 0; k < povms.size(); ++k)
    out.constraints.push_back({"f_chi2 <= tau for measurement " + std::to_string(k), 0});

  std::vector<DensityMatrix> accepted_states;
  for (long draw = 0; draw < budget && int(out.unitaries.size()) < n_target; ++draw) {
    ++out.n_draws;
    RngStream sub = rng.child(draw);
    const HaarUnitary u = haar_unitary(d, sub);
    const DensityMatrix cand = perturbed_state(eps, d, u);

    bool ok = true;
    for (const DensityMatrix& prev : accepted_states) {
      if (trace_distance(cand, prev) <= eps / 2.0) {
        ++out.constraints[0].rejections;
        ok = false;
        break;
      }
    }
    if (ok) {
      for (std::size_t k = 0; k < povms.size(); ++k) {
        if (f_chi2(eps, d, povms[k], u) > tau) {
          ++out.constraints[1 + k].rejections;
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      ++out.n_rejected;
      continue;
    }
    out.unitaries.push_back(u.matrix);
    accepted_states.push_back(cand);
  }
  out.complete = int(out.unitaries.size()) == n_target;
  return out;
}

PackingResult build_shadow_packing(int d, int n_target, long max_draws, RngStream& rng) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("build_shadow_packing: d must be even");
  const long budget = resolve_budget(n_target, max_draws);
  const CMat q = basis_projector_matrix(d, d / 2);
  PackingResult out;
  out.d = d;
  out.separation = double(d) / 3.0;
  out.constraints.push_back({"pairwise rotated-projector overlap <= d/3", 0});

  std::vector<CMat> rotated;  // U_i Q U_i^dag, cached
  for (long draw = 0; draw < budget && int(out.unitaries.size()) < n_target; ++draw) {
    ++out.n_draws;
    RngStream sub = rng.child(draw);
    const HaarUnitary u = haar_unitary(d, sub);
    const CMat cand = u.matrix.leftCols(d / 2) * u.matrix.leftCols(d / 2).adjoint();

    bool ok = true;
    for (const CMat& prev : rotated) {
      if ((cand * prev).trace().real() > double(d) / 3.0) {
        ++out.constraints[0].rejections;
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++out.n_rejected;
      continue;
    }
    out.unitaries.push_back(u.matrix);
    rotated.push_back(cand);
  }
  out.complete = int(out.unitaries.size()) == n_target;
  return out;
}

PackingResult build_rank_r_packing(int d, int r, double nu, int n_target, long max_draws, RngStream& rng) {
  if (d < 3 || r < 1 || 3 * r > d) throw std::invalid_argument("build_rank_r_packing: need 1 <= r <= d/3");
  if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("build_rank_r_packing: nu must be in (0,1)");
  const long budget = resolve_budget(n_target, max_draws);
  const double threshold = std::sqrt(nu) / 4.0;
  PackingResult out;
  out.d = d;
  out.separation = threshold;
  out.constraints.push_back({"trace-separation > sqrt(nu)/4", 0});

  std::vector<DensityMatrix> accepted_states;
  for (long draw = 0; draw < budget && int(out.unitaries.size()) < n_target; ++draw) {
    ++out.n_draws;
    RngStream sub = rng.child(draw);
    const HaarUnitary block = haar_unitary(d - r, sub);
    const DensityMatrix cand = rank_r_state(nu, r, d, block);

    bool ok = true;
    for (const DensityMatrix& prev : accepted_states) {
      if (trace_distance(cand, prev) <= threshold) {
        ++out.constraints[0].rejections;
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++out.n_rejected;
      continue;
    }
    out.unitaries.push_back(embed_block_unitary(block.matrix, d));
    accepted_states.push_back(cand);
  }
  out.complete = int(out.unitaries.size()) == n_target;
  return out;
}

PackingCheck verify_trace_packing(const PackingResult& r, double eps) {
  PackingCheck check;
  check.worst = std::numeric_limits<double>::infinity();
  std::vector<DensityMatrix> states;
  states.reserve(r.unitaries.size());
  for (const CMat& u : r.unitaries) states.push_back(perturbed_state(eps, r.d, HaarUnitary(r.d, u)));
  check.ok = true;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double dist = trace_distance(states[i], states[j]);
      check.worst = std::min(check.worst, dist);
      if (dist <= eps / 2.0) check.ok = false;
      ++check.n_pairs;
    }
  return check;
}

PackingCheck verify_chi2_packing(const PackingResult& r, double eps, const std::vector<Povm>& povms, double tau) {
  PackingCheck check = verify_trace_packing(r, eps);
  double worst_f = 0.0;
  for (const CMat& u : r.unitaries)
    for (const Povm& m : povms) worst_f = std::max(worst_f, f_chi2(eps, r.d, m, HaarUnitary(r.d, u)));
  if (worst_f > tau) check.ok = false;
  return check;
}

PackingCheck verify_shadow_packing(const PackingResult& r) {
  PackingCheck check;
  const int d = r.d;
  std::vector<CMat> rotated;
  rotated.reserve(r.unitaries.size());
  for (const CMat& u : r.unitaries) rotated.push_back(u.leftCols(d / 2) * u.leftCols(d / 2).adjoint());
  check.ok = true;
  check.worst = 0.0;
  for (std::size_t i = 0; i < rotated.size(); ++i)
    for (std::size_t j = i + 1; j < rotated.size(); ++j) {
      const double overlap = (rotated[i] * rotated[j]).trace().real();
      check.worst = std::max(check.worst, overlap);
      if (overlap > double(d) / 3.0) check.ok = false;
      ++check.n_pairs;
    }
  return check;
}

PackingCheck verify_rank_r_packing(const PackingResult& r, int rank, double nu) {
  PackingCheck check;
  check.worst = std::numeric_limits<double>::infinity();
  const double threshold = std::sqrt(nu) / 4.0;
  std::vector<DensityMatrix> states;
  for (const CMat& u : r.unitaries) {
    const CMat block = u.topLeftCorner(r.d - rank, r.d - rank);
    states.push_back(rank_r_state(nu, rank, r.d, HaarUnitary(r.d - rank, block)));
  }
  check.ok = true;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double dist = trace_distance(states[i], states[j]);
      check.worst = std::min(check.worst, dist);
      if (dist <= threshold) check.ok = false;
      ++check.n_pairs;
    }
  return check;
}

}  // namespace tomolab
