#include <wtensor/species.hpp>

#include <algorithm>

namespace wtensor {

std::vector<int> elements(LabelSet x) {
  std::vector<int> out;
  for (int i = 0; i < kMaxLabels; ++i)
    if (x & (1u << i)) out.push_back(i);
  return out;
}

std::vector<LabelSet> submasks_sorted(LabelSet x) {
  std::vector<int> els = elements(x);
  std::vector<LabelSet> out;
  out.reserve(1u << els.size());
  for (unsigned k = 0; k < (1u << els.size()); ++k) {
    LabelSet m = 0;
    for (size_t i = 0; i < els.size(); ++i)
      if (k & (1u << i)) m |= (1u << els[i]);
    out.push_back(m);
  }
  return out;
}

LabelSet apply_perm(const LabelPerm& sigma, LabelSet x) {
  LabelSet out = 0;
  for (int i = 0; i < kMaxLabels; ++i)
    if (x & (1u << i)) out |= (1u << sigma[static_cast<size_t>(i)]);
  return out;
}

BigInt SetSpecies::count(int n) const {
  return BigInt(static_cast<long>(structures(full_set(n)).size()));
}

namespace {

class ExpSpecies final : public SetSpecies {
 public:
  std::string name() const override { return "E"; }
  std::vector<Structure> structures(LabelSet) const override { return {Structure{}}; }
  Structure transport(const LabelPerm&, const Structure& s) const override { return s; }
  BigInt count(int) const override { return BigInt(1); }
};

class UnitSpecies final : public SetSpecies {
 public:
  std::string name() const override { return "J"; }
  std::vector<Structure> structures(LabelSet x) const override {
    if (x == 0) return {Structure{}};
    return {};
  }
  Structure transport(const LabelPerm&, const Structure& s) const override { return s; }
  BigInt count(int n) const override { return BigInt(n == 0 ? 1 : 0); }
};

class KSubsetSpecies final : public SetSpecies {
 public:
  explicit KSubsetSpecies(int k) : k_(k) {}
  std::string name() const override { return "subsets" + std::to_string(k_); }
  std::vector<Structure> structures(LabelSet x) const override {
    std::vector<Structure> out;
    for (LabelSet m : submasks_sorted(x))
      if (set_size(m) == k_) out.push_back(elements(m));
    std::sort(out.begin(), out.end());
    return out;
  }
  Structure transport(const LabelPerm& sigma, const Structure& s) const override {
    Structure out;
    out.reserve(s.size());
    for (int v : s) out.push_back(sigma[static_cast<size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int k_;
};

class LinearOrderSpecies final : public SetSpecies {
 public:
  std::string name() const override { return "L"; }
  std::vector<Structure> structures(LabelSet x) const override {
    Structure base = elements(x);
    std::vector<Structure> out;
    std::sort(base.begin(), base.end());
    do {
      out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
  }
  Structure transport(const LabelPerm& sigma, const Structure& s) const override {
    Structure out;
    out.reserve(s.size());
    for (int v : s) out.push_back(sigma[static_cast<size_t>(v)]);
    return out;  // positions keep their meaning; labels are renamed
  }
};

class SyntheticSpecies final : public SetSpecies {
 public:
  SyntheticSpecies(std::vector<long> card, std::string name)
      : card_(std::move(card)), name_(std::move(name)) {
    for (long c : card_)
      if (c < 0) throw std::invalid_argument("synthetic species: negative cardinality");
  }
  std::string name() const override { return name_; }
  std::vector<Structure> structures(LabelSet x) const override {
    size_t n = static_cast<size_t>(set_size(x));
    if (n >= card_.size())
      throw std::out_of_range("synthetic species: label set beyond cardinality table");
    std::vector<Structure> out;
    out.reserve(static_cast<size_t>(card_[n]));
    for (long i = 0; i < card_[n]; ++i) out.push_back(Structure{static_cast<int>(i)});
    return out;
  }
  Structure transport(const LabelPerm&, const Structure& s) const override { return s; }
  BigInt count(int n) const override {
    if (n < 0 || static_cast<size_t>(n) >= card_.size())
      throw std::out_of_range("synthetic species: size beyond cardinality table");
    return BigInt(card_[static_cast<size_t>(n)]);
  }

 private:
  std::vector<long> card_;
  std::string name_;
};

}  // namespace

std::unique_ptr<SetSpecies> exponential_species() { return std::make_unique<ExpSpecies>(); }
std::unique_ptr<SetSpecies> unit_species() { return std::make_unique<UnitSpecies>(); }
std::unique_ptr<SetSpecies> ksubset_species(int k) { return std::make_unique<KSubsetSpecies>(k); }
std::unique_ptr<SetSpecies> linear_order_species() {
  return std::make_unique<LinearOrderSpecies>();
}
std::unique_ptr<SetSpecies> synthetic_species(std::vector<long> card, std::string name) {
  return std::make_unique<SyntheticSpecies>(std::move(card), std::move(name));
}

SpeciesCard card_of(const SetSpecies& f, int n_max) {
  SpeciesCard out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    BigInt c = f.count(n);
    if (!c.fits_slong_p()) throw std::overflow_error("card_of: cardinality too large");
    out.push_back(c.get_si());
  }
  return out;
}

}  // namespace wtensor
