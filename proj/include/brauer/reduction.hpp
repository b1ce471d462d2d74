#pragma once

// Index reduction: how the index of a Brauer class β over k drops after
// passing to the function field of a variety.
//
// Two engines live here.  The general one evaluates
//
//   ind(β_{k(X)}) = min over r | ind(β) and slopes d in [0, D) of
//                   r · min over stratum points (resdeg · ord(obstruction + β))
//
// on user-supplied moduli data (closed points of moduli spaces of stable
// sheaves, each carrying a residue degree and an obstruction class), plus the
// Schofield–van den Bergh divisibility bound as an independent verifier.
//
// The genus-1 engine works over local fields, where Roquette's criterion
// makes splitting after base change decidable from the curve index alone:
// β ⊗ k(C_E) is split iff ind(β_E) | ind(C_E).  The reduced index is then
// both the minimal and the gcd of the qualifying extension degrees, and for
// capacity-model curves it has a closed form.

#include "brauer/classes.hpp"
#include "brauer/curves.hpp"
#include "brauer/qz.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace brauer {

// A qualifying-degree search ran out of candidates; carries the bound.
class bound_exhausted : public std::runtime_error {
 public:
  explicit bound_exhausted(const Int& bound)
      : std::runtime_error("no qualifying degree <= bound " + bound.str()),
        bound_(bound) {}

  const Int& bound() const { return bound_; }

 private:
  Int bound_;
};

// A closed point of a moduli space, reduced to what the formulas consume:
// the degree of its residue field over k and the Brauer obstruction to
// lifting it to an actual sheaf.
struct ObstructedPoint {
  Int residue_degree;
  Invariant obstruction;

  friend bool operator==(const ObstructedPoint&,
                         const ObstructedPoint&) = default;
};

// Point data for the general formula over a variety X: i = ind(β), D the
// slope period, delta | D the divisor degree gcd, strata keyed by
// (rank r >= 1, slope d in [0, D)) listing the known closed points of the
// moduli space of stable sheaves of rank r and degree r·d, and the points of
// the degree-0 (homogeneous) stratum when available.  Strata without known
// points are simply absent.
class ModuliData {
 public:
  using StrataMap = std::map<std::pair<Int, Int>, std::vector<ObstructedPoint>>;

  ModuliData(Int i, Int D, Int delta, StrataMap strata,
             std::vector<ObstructedPoint> deg0_points);

  const Int& i() const { return i_; }
  const Int& D() const { return D_; }
  const Int& delta() const { return delta_; }
  const StrataMap& strata() const { return strata_; }
  const std::vector<ObstructedPoint>& deg0_points() const {
    return deg0_points_;
  }

 private:
  Int i_;
  Int D_;
  Int delta_;
  StrataMap strata_;
  std::vector<ObstructedPoint> deg0_points_;
};

struct IotaResult {
  Int value;
  ObstructedPoint minimizer;
};

// min over points of resdeg · ord(obstruction + β): the index contribution
// of one stratum.  Throws std::invalid_argument on an empty point list.
Int iota(std::span<const ObstructedPoint> points, const Invariant& beta);
IotaResult iota_with_witness(std::span<const ObstructedPoint> points,
                             const Invariant& beta);

struct GeneralReductionResult {
  Int value;
  Int rank;   // r of the minimizing stratum
  Int slope;  // d of the minimizing stratum
  ObstructedPoint minimizer;
};

// The general formula: min of r · iota(stratum, β) over r | i and slopes
// d in [0, D).  Strata absent from the data are skipped (no stable sheaves
// there); strata whose rank does not divide i never enter.  Throws
// std::invalid_argument when no stratum contributes.
Int general_index_reduction(const ModuliData& data, const Invariant& beta);
GeneralReductionResult general_index_reduction_witness(const ModuliData& data,
                                                       const Invariant& beta);

// Schofield–van den Bergh bound, used as a verifier: the min of
// iota(stratum(1, d), β) over slopes d must divide delta · ind(β_{k(X)}).
// With no rank-1 stratum data at all the min is +infinity, which divides
// nothing, so the check reports false.
bool svdb_divisibility_check(const ModuliData& data, const Invariant& beta,
                             const Int& computed_index);

// Roquette's criterion for β over the function field of C_E.
bool genus1_splits(const LocalClass& beta, const CurveModel& model,
                   const LocalExtension& ext);

// Sufficient search bound for capacity-model curves: ind(β) · p^{cpc+1}.
// Tabulated curves admit no principled default; callers must supply one
// (std::invalid_argument otherwise).
Int default_search_bound(const LocalClass& beta, const CurveModel& model);

// Minimal degree d <= bound with genus1_splits(β, C, d); this is
// ind(β_{k(C)}).  Throws bound_exhausted when no degree qualifies.
Int genus1_index_reduction_min(const LocalClass& beta, const CurveModel& model,
                               const Int& bound);

struct Genus1GcdResult {
  Int value;
  Int first_qualifying;
};

// gcd of all qualifying degrees <= bound; equals the min whenever the bound
// is large enough for the gcd to stabilize.  Throws bound_exhausted when no
// degree qualifies.
Int genus1_index_reduction_gcd(const LocalClass& beta, const CurveModel& model,
                               const Int& bound);
Genus1GcdResult genus1_index_reduction_gcd_witness(const LocalClass& beta,
                                                   const CurveModel& model,
                                                   const Int& bound);

// Closed form for ind(β_{k(C)}) over a capacity-cpc curve of prime index p,
// where ind(β) = m·p^n with p coprime to m and n >= 1:
//
//   ind(β_{k(C)}) = m·p^n      if cpc < n - 1,
//                   m·p^{n-1}  otherwise.
//
// Throws std::domain_error if p | m or p is not prime, std::invalid_argument
// for m < 1 or n = 0.
Int capacity_closed_form(const Int& m, const Int& p, unsigned n, unsigned cpc);

// Homogeneous variant of the general formula: over a degree-0 stratum the
// reduced index must equal iota(deg0_points, β) on the nose.  Throws
// std::invalid_argument when the data has no degree-0 points.
bool homogeneous_reduction_check(const ModuliData& data, const Invariant& beta,
                                 const Int& computed_index);

}  // namespace brauer
