#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccg/groups.hpp"

namespace ccg {

// Brute-force ground truth. Elements are kept sorted by their base-q key, the
// entries read row by row with the first entry least significant.
class EnumeratedGroup {
 public:
  EnumeratedGroup(GroupSpec spec, std::vector<uint64_t> keys);

  const GroupSpec& spec() const { return spec_; }
  size_t size() const { return keys_.size(); }
  uint64_t key(size_t i) const { return keys_[i]; }
  Matrix element(size_t i) const;
  std::optional<size_t> index(const Matrix& x) const;
  std::optional<size_t> index_of_key(uint64_t k) const;
  // A small generating set chosen greedily from a seeded shuffle.
  const std::vector<size_t>& generators() const;

 private:
  GroupSpec spec_;
  std::vector<uint64_t> keys_;
  mutable std::vector<size_t> gens_;
};

uint64_t matrix_key(const Matrix& x);
Matrix key_matrix(uint64_t key, int n, const FieldPtr& F);

constexpr uint64_t kDefaultOracleCap = 10'000'000;

EnumeratedGroup enumerate_group(const GroupSpec& spec, uint64_t cap = kDefaultOracleCap);

// Conjugacy classes as sorted index lists, ordered by their least element.
std::vector<std::vector<size_t>> brute_classes(const EnumeratedGroup& g);
std::vector<Matrix> brute_centralizer(const EnumeratedGroup& g, const Matrix& x);
std::optional<Matrix> brute_conjugator(const EnumeratedGroup& g, const Matrix& x, const Matrix& y);

// Order of the group generated by the given matrices, or nullopt past the cap.
std::optional<uint64_t> closure_order(const std::vector<Matrix>& gens, int n, const FieldPtr& F, uint64_t cap);

}  // namespace ccg
