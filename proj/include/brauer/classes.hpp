#pragma once

// Brauer classes over local fields and over global fields modelled as
// labelled families of local invariants, together with restriction along
// field extensions.
//
// Local facts used throughout: the index of a local class equals the order
// of its invariant, and restricting along a degree-d extension multiplies
// the invariant by d, so ind(A_E) = ind(A) / gcd(ind(A), [E:k]).
// Global classes satisfy reciprocity (invariants sum to 0 in Q/Z) and have
// index lcm of the local indices.

#include "brauer/qz.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

// A Brauer class over a local field, carried by its invariant.
struct LocalClass {
  Invariant inv;

  friend bool operator==(const LocalClass&, const LocalClass&) = default;
};

// A finite extension E/k of local fields.  Only the degree enters the
// restriction law; ramification/residue degrees (e, f) are optional metadata
// for callers that tabulate curve indices by extension shape.
class LocalExtension {
 public:
  explicit LocalExtension(Int degree);
  LocalExtension(Int degree, Int e, Int f);  // requires e * f == degree

  const Int& degree() const { return degree_; }
  const std::optional<std::pair<Int, Int>>& ramification() const {
    return ef_;
  }

 private:
  Int degree_;
  std::optional<std::pair<Int, Int>> ef_;
};

Int local_index(const LocalClass& a);

// Restriction along E/k: the invariant is scaled by [E:k].
LocalClass restrict_local(const LocalClass& a, const LocalExtension& ext);

// A Brauer class over a global field: one invariant per labelled place.
// Construction validates reciprocity (sum of invariants is 0 in Q/Z); places
// may carry the zero invariant.  The empty family is the split class.
class GlobalClass {
 public:
  GlobalClass() = default;
  explicit GlobalClass(std::map<std::string, Invariant> places);

  const std::map<std::string, Invariant>& places() const { return places_; }

  friend bool operator==(const GlobalClass&, const GlobalClass&) = default;

 private:
  std::map<std::string, Invariant> places_;
};

// lcm of the local indices; 1 for the empty family.
Int global_index(const GlobalClass& a);

// How a degree-N global extension decomposes at each place: the multiset of
// local degrees of the places above it.  Each listed place's degrees must
// sum to N (degrees are stored sorted ascending).
class GlobalExtensionProfile {
 public:
  GlobalExtensionProfile(Int total_degree,
                         std::map<std::string, std::vector<Int>> local_degrees);

  const Int& total_degree() const { return total_degree_; }
  const std::map<std::string, std::vector<Int>>& local_degrees() const {
    return local_degrees_;
  }

 private:
  Int total_degree_;
  std::map<std::string, std::vector<Int>> local_degrees_;
};

// Restriction along the profile: place v with local degrees d_1..d_r yields
// places "v#1".."v#r" with invariants d_j * inv_v.  Places absent from the
// profile must carry the zero invariant (they are dropped); a nonzero
// uncovered place is an error.  The result satisfies reciprocity because
// each place's degrees sum to the same total degree.
GlobalClass restrict_global(const GlobalClass& a,
                            const GlobalExtensionProfile& profile);

}  // namespace brauer
