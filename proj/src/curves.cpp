#include "brauer/curves.hpp"

namespace brauer {

CapacityCurveModel::CapacityCurveModel(Int p, unsigned cpc)
    : p_(std::move(p)), cpc_(cpc) {
  if (!is_prime(p_)) {
    throw std::domain_error("CapacityCurveModel: p = " + p_.str() +
                            " is not prime");
  }
}

TabulatedCurveModel::TabulatedCurveModel(std::map<Int, Int> table,
                                         Int default_index)
    : table_(std::move(table)), default_index_(std::move(default_index)) {
  if (default_index_ < 1) {
    throw std::invalid_argument(
        "TabulatedCurveModel: default index must be positive");
  }
  for (const auto& [degree, index] : table_) {
    if (degree < 1 || index < 1) {
      throw std::invalid_argument(
          "TabulatedCurveModel: degrees and indices must be positive");
    }
  }
}

const Int& TabulatedCurveModel::index_at(const Int& degree) const {
  auto it = table_.find(degree);
  return it != table_.end() ? it->second : default_index_;
}

Int curve_index_at_degree(const CurveModel& model, const Int& degree) {
  if (degree < 1) {
    throw std::invalid_argument("curve index: degree must be positive");
  }
  if (const auto* cap = std::get_if<CapacityCurveModel>(&model)) {
    return cap->has_point(degree) ? Int(1) : cap->p();
  }
  return std::get<TabulatedCurveModel>(model).index_at(degree);
}

Int curve_index_after_extension(const CurveModel& model,
                                const LocalExtension& ext) {
  return curve_index_at_degree(model, ext.degree());
}

std::optional<unsigned> capacity_of(const CurveModel& model,
                                    const Int& search_bound) {
  if (search_bound < 1) {
    throw std::invalid_argument("capacity_of: search bound must be positive");
  }
  // Capacity is defined relative to the curve's prime index over k, which is
  // the index at degree 1.
  Int p = curve_index_at_degree(model, 1);
  if (p == 1) return std::nullopt;  // split over k: no pointless extensions
  if (!is_prime(p)) {
    throw std::domain_error("capacity_of: curve index over k is " + p.str() +
                            ", capacity needs a prime index");
  }
  std::optional<unsigned> best;
  for (Int d = 1; d <= search_bound; ++d) {
    if (curve_index_at_degree(model, d) != 1) {
      unsigned r = valuation(d, p);
      if (!best || r > *best) best = r;
    }
  }
  return best;
}

}  // namespace brauer
