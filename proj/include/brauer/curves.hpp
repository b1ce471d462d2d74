#pragma once

// Point-capacity models for genus-1 curves over local fields: everything the
// index-reduction formulas need to know about a curve C is which finite
// extensions E/k give C a rational point, equivalently the curve index
// ind(C_E) (1 when a point exists, the curve's prime index p otherwise).

#include "brauer/classes.hpp"
#include "brauer/numeric.hpp"

#include <map>
#include <optional>
#include <variant>

namespace brauer {

// Genus-1 curve of prime index p whose point behaviour is governed by a
// single capacity cpc: C picks up a point over E exactly when
// v_p([E:k]) > cpc.  (Capacity is the largest r such that some extension of
// degree m'·p^r with p coprime to m' leaves C pointless.)
class CapacityCurveModel {
 public:
  CapacityCurveModel(Int p, unsigned cpc);

  const Int& p() const { return p_; }
  unsigned cpc() const { return cpc_; }

  bool has_point(const Int& degree) const {
    return valuation(degree, p_) > cpc_;
  }

 private:
  Int p_;
  unsigned cpc_;
};

// Curve given by an explicit table of indices by extension degree, with a
// default for degrees not listed.  Used for curves whose point behaviour is
// known empirically rather than through a capacity.
class TabulatedCurveModel {
 public:
  TabulatedCurveModel(std::map<Int, Int> table, Int default_index);

  const std::map<Int, Int>& table() const { return table_; }
  const Int& default_index() const { return default_index_; }

  const Int& index_at(const Int& degree) const;

 private:
  std::map<Int, Int> table_;
  Int default_index_;
};

using CurveModel = std::variant<CapacityCurveModel, TabulatedCurveModel>;

Int curve_index_at_degree(const CurveModel& model, const Int& degree);
Int curve_index_after_extension(const CurveModel& model,
                                const LocalExtension& ext);

// Recovers the capacity from the point predicate: the largest v_p(degree)
// among pointless degrees <= search_bound.  Returns nullopt ("split") when
// the curve has index 1 over k.  Throws std::domain_error for a tabulated
// curve whose index over k is composite (capacity needs a prime index).
std::optional<unsigned> capacity_of(const CurveModel& model,
                                    const Int& search_bound);

}  // namespace brauer
