#include "brauer/classes.hpp"

#include <algorithm>

namespace brauer {

LocalExtension::LocalExtension(Int degree) : degree_(std::move(degree)) {
  if (degree_ < 1) {
    throw std::invalid_argument("LocalExtension: degree must be positive");
  }
}

LocalExtension::LocalExtension(Int degree, Int e, Int f)
    : LocalExtension(std::move(degree)) {
  if (e < 1 || f < 1 || e * f != degree_) {
    throw std::invalid_argument(
        "LocalExtension: need e, f >= 1 with e * f == degree (got e = " +
        e.str() + ", f = " + f.str() + ", degree = " + degree_.str() + ")");
  }
  ef_ = {std::move(e), std::move(f)};
}

Int local_index(const LocalClass& a) {
  return order(a.inv);
}

LocalClass restrict_local(const LocalClass& a, const LocalExtension& ext) {
  return LocalClass{scale(a.inv, ext.degree())};
}

GlobalClass::GlobalClass(std::map<std::string, Invariant> places)
    : places_(std::move(places)) {
  Invariant sum;
  for (const auto& [place, inv] : places_) sum = add(sum, inv);
  if (!sum.is_zero()) {
    throw std::invalid_argument(
        "GlobalClass: reciprocity violated, invariants sum to " + sum.str());
  }
}

Int global_index(const GlobalClass& a) {
  Int idx = 1;
  for (const auto& [place, inv] : a.places()) idx = lcm(idx, order(inv));
  return idx;
}

GlobalExtensionProfile::GlobalExtensionProfile(
    Int total_degree, std::map<std::string, std::vector<Int>> local_degrees)
    : total_degree_(std::move(total_degree)),
      local_degrees_(std::move(local_degrees)) {
  if (total_degree_ < 1) {
    throw std::invalid_argument(
        "GlobalExtensionProfile: total degree must be positive");
  }
  for (auto& [place, degs] : local_degrees_) {
    if (degs.empty()) {
      throw std::invalid_argument("GlobalExtensionProfile: place '" + place +
                                  "' lists no local degrees");
    }
    Int sum = 0;
    for (const Int& d : degs) {
      if (d < 1) {
        throw std::invalid_argument("GlobalExtensionProfile: place '" + place +
                                    "' has a local degree < 1");
      }
      sum += d;
    }
    if (sum != total_degree_) {
      throw std::invalid_argument("GlobalExtensionProfile: local degrees at '" +
                                  place + "' sum to " + sum.str() +
                                  ", expected " + total_degree_.str());
    }
    std::sort(degs.begin(), degs.end());
  }
}

GlobalClass restrict_global(const GlobalClass& a,
                            const GlobalExtensionProfile& profile) {
  std::map<std::string, Invariant> out;
  for (const auto& [place, inv] : a.places()) {
    auto it = profile.local_degrees().find(place);
    if (it == profile.local_degrees().end()) {
      if (!inv.is_zero()) {
        throw std::invalid_argument(
            "restrict_global: place '" + place +
            "' carries invariant " + inv.str() +
            " but the extension profile does not cover it");
      }
      continue;  // split at this place; nothing survives restriction
    }
    const std::vector<Int>& degs = it->second;
    for (size_t k = 0; k < degs.size(); ++k) {
      out.emplace(place + "#" + std::to_string(k + 1), scale(inv, degs[k]));
    }
  }
  return GlobalClass(std::move(out));  // constructor re-checks reciprocity
}

}  // namespace brauer
