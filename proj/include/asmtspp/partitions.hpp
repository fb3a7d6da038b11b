#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace asmtspp {

/// Integer partition. Zero parts are allowed on input and trimmed, so two
/// partitions that differ only by trailing zeros compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of positive parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Sum of the parts.
  int weight() const;
  bool empty() const { return parts_.empty(); }
  /// 0-based part access; zero past the last positive part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Parts padded with zeros to exactly n entries; throws if longer.
  std::vector<int> padded(int n) const;

  bool fits_in_box(int rows, int cols) const;

  /// `(6,6,5,5,3,1)`; the empty partition prints as `()`.
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Frobenius coordinates (a_1, ..., a_l | b_1, ..., b_l) with strictly
/// decreasing non-negative arms and legs.
struct FrobeniusCoords {
  std::vector<int> arms;
  std::vector<int> legs;

  int rank() const { return static_cast<int>(arms.size()); }
  /// Throws std::invalid_argument unless arms and legs are strictly
  /// decreasing, non-negative and of equal length.
  void validate() const;
  /// `(a1,...,al|b1,...,bl)`, empty as `(|)`.
  std::string str() const;
  static FrobeniusCoords parse(std::string_view text);

  friend bool operator==(const FrobeniusCoords& a, const FrobeniusCoords& b) {
    return a.arms == b.arms && a.legs == b.legs;
  }
};

Partition conjugate(const Partition& lambda);
/// Side length of the largest square inside the Young diagram.
int durfee_size(const Partition& lambda);
FrobeniusCoords to_frobenius(const Partition& lambda);
Partition from_frobenius(const FrobeniusCoords& f);

/// Complement inside the n x n square: lambda^c_{n+1-i} = n - lambda_i.
Partition complement(const Partition& lambda, int n);

/// k-tall of size n: at most n+k-1 parts, lambda_1 <= n-1, and with
/// Frobenius coordinates (a | b+k) one has b_i >= 0 and a_i <= b_i.
bool is_k_tall(const Partition& lambda, int k, int n);

/// Lattice path of unit north (N) and east (E) steps.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws unless the word is over {N, E}, balanced, and never has more
  /// E than N in a prefix.
  explicit DyckPath(std::string word);

  const std::string& word() const { return word_; }
  int semilength() const { return static_cast<int>(word_.size() / 2); }

  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.word_ == b.word_; }
  friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.word_ < b.word_; }

 private:
  std::string word_;
};

DyckPath ktall_to_dyck(const Partition& lambda, int k, int n);
Partition dyck_to_ktall(const DyckPath& path, int k);

/// Every partition with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// Every k-tall partition of size n.
std::vector<Partition> k_tall_partitions(int k, int n);
std::vector<DyckPath> all_dyck_paths(int n);

}  // namespace asmtspp
