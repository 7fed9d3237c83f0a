#pragma once

#include <wtensor/bigint.hpp>
#include <wtensor/poly.hpp>

#include <array>
#include <bit>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtensor {

// Label sets live inside a universe of at most 8 labels 0..7, encoded as bit
// masks; structures are small integer vectors whose meaning is fixed per
// species.
using LabelSet = unsigned;
using Structure = std::vector<int>;
using LabelPerm = std::array<int, 8>;  // label -> label bijection

constexpr int kMaxLabels = 8;

inline int set_size(LabelSet x) { return std::popcount(x); }

inline LabelSet full_set(int n) { return n ? ((1u << n) - 1u) : 0u; }

std::vector<int> elements(LabelSet x);

// All submasks of x in a canonical ascending order (bit i of the counter maps
// to the i-th smallest element of x).
std::vector<LabelSet> submasks_sorted(LabelSet x);

LabelSet apply_perm(const LabelPerm& sigma, LabelSet x);

// A set-valued Joyal species restricted to the 8-label universe: an explicit
// structure list per label set plus transport along bijections. Structure
// counts depend only on |X|; transport functoriality is a tested invariant.
class SetSpecies {
 public:
  virtual ~SetSpecies() = default;
  virtual std::string name() const = 0;
  // Canonical deterministically ordered structures on X.
  virtual std::vector<Structure> structures(LabelSet x) const = 0;
  // Transport along sigma (defined on the elements of the structure's label set).
  virtual Structure transport(const LabelPerm& sigma, const Structure& s) const = 0;
  // #structures on an n-element set.
  virtual BigInt count(int n) const;
};

// E: exactly one structure on every X.
std::unique_ptr<SetSpecies> exponential_species();
// J: one structure on the empty set only (the tensor unit).
std::unique_ptr<SetSpecies> unit_species();
// k-element subsets of X.
std::unique_ptr<SetSpecies> ksubset_species(int k);
// Linear orders on X.
std::unique_ptr<SetSpecies> linear_order_species();
// Arbitrary cardinality sequence with bare-index structures and trivial
// transport (a genuine functor because the action is trivial).
std::unique_ptr<SetSpecies> synthetic_species(std::vector<long> card, std::string name = "synthetic");

// Cardinality sequence #F<n>.
using SpeciesCard = std::vector<long>;

SpeciesCard card_of(const SetSpecies& f, int n_max);

// The weight functor L: either a finite color set of size >= 0 (enumeration
// mode) or the formal weight lam (counting mode).
class LWeight {
 public:
  static LWeight formal() { return LWeight(std::nullopt); }
  static LWeight of_colors(long c) {
    if (c < 0) throw std::invalid_argument("LWeight: negative color count");
    return LWeight(c);
  }
  bool is_formal() const { return !colors_.has_value(); }
  long colors() const {
    if (is_formal()) throw std::logic_error("LWeight: formal weight has no color set");
    return *colors_;
  }
  // lam for formal mode, the constant |colors| otherwise.
  RingPoly weight() const {
    return is_formal() ? RingPoly::lambda() : RingPoly(*colors_);
  }

 private:
  explicit LWeight(std::optional<long> c) : colors_(c) {}
  std::optional<long> colors_;
};

}  // namespace wtensor
