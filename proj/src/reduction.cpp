#include "brauer/reduction.hpp"

#include <optional>

namespace brauer {

namespace {

void validate_points(const std::vector<ObstructedPoint>& points,
                     const char* where) {
  for (const ObstructedPoint& pt : points) {
    if (pt.residue_degree < 1) {
      throw std::invalid_argument(std::string(where) +
                                  ": residue degrees must be positive");
    }
  }
}

// Visits the degrees d <= bound with genus1_splits(beta, model, d), in
// increasing order, until the visitor returns false.
template <typename Visitor>
void for_each_qualifying(const LocalClass& beta, const CurveModel& model,
                         const Int& bound, Visitor&& visit) {
  const Int i = local_index(beta);
  if (const auto* cap = std::get_if<CapacityCurveModel>(&model)) {
    // Fast path.  A qualifying degree d has ind(beta_d) = i / gcd(i, d)
    // dividing a curve index that is 1 or p, so d must be a multiple of
    // step = i/p (when p | i) or of i; on such d, ind(beta_d) is 1 when
    // i | d and p otherwise.
    const Int& p = cap->p();
    const Int step = i % p == 0 ? Int(i / p) : i;
    const Int point_modulus = pow_int(p, cap->cpc() + 1);  // p^{cpc+1} | d <=> point
    for (Int d = step; d <= bound; d += step) {
      bool qualifies = d % i == 0                 // beta already split over E
                       || d % point_modulus != 0;  // ind(beta_d) = p = ind(C_d)
      if (qualifies && !visit(d)) return;
    }
    return;
  }
  for (Int d = 1; d <= bound; ++d) {
    if (genus1_splits(beta, model, LocalExtension(d)) && !visit(d)) return;
  }
}

// No qualifying degree is smaller than this, so a gcd that reaches it is
// final and the scan may stop early.
Int gcd_floor(const LocalClass& beta, const CurveModel& model) {
  if (const auto* cap = std::get_if<CapacityCurveModel>(&model)) {
    const Int i = local_index(beta);
    return i % cap->p() == 0 ? Int(i / cap->p()) : i;
  }
  return 1;
}

}  // namespace

ModuliData::ModuliData(Int i, Int D, Int delta, StrataMap strata,
                       std::vector<ObstructedPoint> deg0_points)
    : i_(std::move(i)),
      D_(std::move(D)),
      delta_(std::move(delta)),
      strata_(std::move(strata)),
      deg0_points_(std::move(deg0_points)) {
  if (i_ < 1 || D_ < 1 || delta_ < 1) {
    throw std::invalid_argument("ModuliData: i, D, delta must be positive");
  }
  if (D_ % delta_ != 0) {
    throw std::invalid_argument("ModuliData: delta = " + delta_.str() +
                                " does not divide D = " + D_.str());
  }
  for (auto it = strata_.begin(); it != strata_.end();) {
    const auto& [r, d] = it->first;
    if (r < 1) {
      throw std::invalid_argument("ModuliData: stratum rank must be positive");
    }
    if (d < 0 || d >= D_) {
      throw std::invalid_argument("ModuliData: stratum slope " + d.str() +
                                  " outside [0, " + D_.str() + ")");
    }
    validate_points(it->second, "ModuliData");
    it = it->second.empty() ? strata_.erase(it) : std::next(it);
  }
  validate_points(deg0_points_, "ModuliData");
}

IotaResult iota_with_witness(std::span<const ObstructedPoint> points,
                             const Invariant& beta) {
  if (points.empty()) {
    throw std::invalid_argument("iota: no points to minimize over");
  }
  std::optional<IotaResult> best;
  for (const ObstructedPoint& pt : points) {
    Int value = pt.residue_degree * order(add(pt.obstruction, beta));
    if (!best || value < best->value) best = IotaResult{value, pt};
  }
  return *best;
}

Int iota(std::span<const ObstructedPoint> points, const Invariant& beta) {
  return iota_with_witness(points, beta).value;
}

GeneralReductionResult general_index_reduction_witness(const ModuliData& data,
                                                       const Invariant& beta) {
  std::optional<GeneralReductionResult> best;
  for (const auto& [key, points] : data.strata()) {
    const auto& [r, d] = key;
    if (data.i() % r != 0) continue;  // only ranks dividing ind(beta) enter
    IotaResult stratum = iota_with_witness(points, beta);
    Int value = r * stratum.value;
    if (!best || value < best->value) {
      best = GeneralReductionResult{value, r, d, stratum.minimizer};
    }
  }
  if (!best) {
    throw std::invalid_argument(
        "general_index_reduction: no stratum contributes (no stable points "
        "with rank dividing i)");
  }
  return *best;
}

Int general_index_reduction(const ModuliData& data, const Invariant& beta) {
  return general_index_reduction_witness(data, beta).value;
}

bool svdb_divisibility_check(const ModuliData& data, const Invariant& beta,
                             const Int& computed_index) {
  if (computed_index < 1) {
    throw std::invalid_argument(
        "svdb_divisibility_check: computed index must be positive");
  }
  std::optional<Int> best;
  auto lo = data.strata().lower_bound({1, 0});
  auto hi = data.strata().upper_bound({1, data.D()});
  for (auto it = lo; it != hi; ++it) {
    Int value = iota(it->second, beta);
    if (!best || value < *best) best = value;
  }
  // No rank-1 data: the min is +infinity, which divides no finite index.
  if (!best) return false;
  return (data.delta() * computed_index) % *best == 0;
}

bool genus1_splits(const LocalClass& beta, const CurveModel& model,
                   const LocalExtension& ext) {
  Int ind_beta = local_index(restrict_local(beta, ext));
  Int ind_curve = curve_index_after_extension(model, ext);
  return ind_curve % ind_beta == 0;
}

Int default_search_bound(const LocalClass& beta, const CurveModel& model) {
  const auto* cap = std::get_if<CapacityCurveModel>(&model);
  if (!cap) {
    throw std::invalid_argument(
        "default_search_bound: tabulated curve models need an explicit bound");
  }
  return local_index(beta) * pow_int(cap->p(), cap->cpc() + 1);
}

Int genus1_index_reduction_min(const LocalClass& beta, const CurveModel& model,
                               const Int& bound) {
  if (bound < 1) {
    throw std::invalid_argument("genus1_index_reduction_min: bound < 1");
  }
  std::optional<Int> found;
  for_each_qualifying(beta, model, bound, [&](const Int& d) {
    found = d;
    return false;
  });
  if (!found) throw bound_exhausted(bound);
  return *found;
}

Genus1GcdResult genus1_index_reduction_gcd_witness(const LocalClass& beta,
                                                   const CurveModel& model,
                                                   const Int& bound) {
  if (bound < 1) {
    throw std::invalid_argument("genus1_index_reduction_gcd: bound < 1");
  }
  const Int floor = gcd_floor(beta, model);
  std::optional<Genus1GcdResult> acc;
  for_each_qualifying(beta, model, bound, [&](const Int& d) {
    if (!acc) {
      acc = Genus1GcdResult{d, d};
    } else {
      acc->value = gcd(acc->value, d);
    }
    return acc->value != floor;  // gcd can never drop below the floor
  });
  if (!acc) throw bound_exhausted(bound);
  return *acc;
}

Int genus1_index_reduction_gcd(const LocalClass& beta, const CurveModel& model,
                               const Int& bound) {
  return genus1_index_reduction_gcd_witness(beta, model, bound).value;
}

Int capacity_closed_form(const Int& m, const Int& p, unsigned n,
                         unsigned cpc) {
  if (m < 1) {
    throw std::invalid_argument("capacity_closed_form: m must be positive");
  }
  if (!is_prime(p)) {
    throw std::domain_error("capacity_closed_form: p = " + p.str() +
                            " is not prime");
  }
  if (n == 0) {
    throw std::invalid_argument(
        "capacity_closed_form: n must be positive (p must divide the index)");
  }
  if (m % p == 0) {
    throw std::domain_error("capacity_closed_form: p divides m");
  }
  return cpc < n - 1 ? m * pow_int(p, n) : m * pow_int(p, n - 1);
}

bool homogeneous_reduction_check(const ModuliData& data, const Invariant& beta,
                                 const Int& computed_index) {
  if (data.deg0_points().empty()) {
    throw std::invalid_argument(
        "homogeneous_reduction_check: no degree-0 stratum points");
  }
  return iota(data.deg0_points(), beta) == computed_index;
}

}  // namespace brauer
