#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qhall {

/// Cyclic vertex arithmetic on 1..n: wrap(n + 1, n) == 1, wrap(0, n) == n.
constexpr int wrap(int x, int n) {
  int r = (x - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

/// A partition stored as strictly positive, weakly decreasing parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts descending and drops zeros. Negative parts are rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int sum() const;

  /// k-th part, 0-based; missing parts read as 0.
  int part(std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  int first() const { return part(0); }

  bool contains(int value) const;
  int count_equal(int value) const;
  int count_greater(int value) const;

  Partition dual() const;
  Partition with_part_added(int value) const;
  /// Removes one copy of `value`; value 0 is a no-op.
  Partition with_part_removed(int value) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

inline Partition dual(const Partition& p) { return p.dual(); }

class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> coords);
  static DimVector zero(int n) { return DimVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static DimVector unit(int n, int vertex);

  int n() const { return static_cast<int>(coords_.size()); }
  /// Vertex-indexed (1-based, cyclic) access.
  int operator[](int vertex) const { return coords_[static_cast<std::size_t>(wrap(vertex, n()) - 1)]; }
  std::span<const int> coords() const { return coords_; }
  int total() const;
  bool is_zero() const { return total() == 0; }

  DimVector operator+(const DimVector& o) const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector& a, const DimVector& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<int> coords_;
};

/// An n-tuple of partitions indexing the isoclass of the nilpotent module
/// M(pi) = sum_{i,j} S_i[dual(pi^(i))_j]. Both the components and their duals
/// are kept; most algorithms work on the duals (lengths of vertex-i-topped summands).
class MultiPartition {
 public:
  MultiPartition() = default;
  static MultiPartition empty(int n);
  static MultiPartition from_parts(int n, std::vector<Partition> comps);
  static MultiPartition from_duals(int n, std::vector<Partition> duals);

  int n() const { return n_; }
  /// pi^(i), vertex i taken cyclically.
  const Partition& component(int vertex) const { return comps_[index(vertex)]; }
  /// dual(pi^(i)), vertex i taken cyclically.
  const Partition& dual(int vertex) const { return duals_[index(vertex)]; }
  std::span<const Partition> components() const { return comps_; }
  std::span<const Partition> duals() const { return duals_; }

  int size() const;
  bool is_empty() const;
  /// Longest indecomposable summand.
  int max_length() const;

  /// Same module with dual(vertex) replaced.
  MultiPartition with_dual(int vertex, Partition d) const;

  friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
    return a.n_ == b.n_ && a.comps_ == b.comps_;
  }
  friend std::strong_ordering operator<=>(const MultiPartition& a, const MultiPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.comps_ <=> b.comps_;
  }

 private:
  std::size_t index(int vertex) const { return static_cast<std::size_t>(wrap(vertex, n_) - 1); }

  int n_ = 0;
  std::vector<Partition> comps_;
  std::vector<Partition> duals_;
};

class Word {
 public:
  Word() = default;
  Word(int n, std::vector<int> letters);
  Word(int n, std::initializer_list<int> letters) : Word(n, std::vector<int>(letters)) {}

  int n() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return letters_[k]; }

  /// Letters [from, length).
  Word suffix(std::size_t from) const;
  Word operator+(const Word& o) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

DimVector dim_vector(const MultiPartition& pi);
DimVector content(const Word& w);

/// Every multipartition with the given dimension vector, sorted by
/// (component, parts) lexicographically.
std::vector<MultiPartition> enumerate_pi(const DimVector& d);

/// Every dimension vector with the given number of vertices and total at most `max_total`.
std::vector<DimVector> dim_vectors_up_to(int n, int max_total);

/// Every word of length exactly `length` over 1..n, lexicographic.
std::vector<Word> words_of_length(int n, int length);
/// Every word with the given content, lexicographic.
std::vector<Word> words_with_content(const DimVector& d);

std::string to_string(const Partition& p);
std::string to_string(const MultiPartition& pi);
std::string to_string(const DimVector& d);
std::string to_string(const Word& w);

}  // namespace qhall

template <>
struct std::hash<qhall::MultiPartition> {
  std::size_t operator()(const qhall::MultiPartition& pi) const noexcept;
};
