#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace twistpost {

/// Dense element index in [0, n).
using Elem = std::uint32_t;

/// An n x n table of element indices, stored row-major.
///
/// Holds any binary operation on a finite carrier: the group product, the
/// actions a|>b and a<|b, the sub-adjacent product, and so on.
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(std::size_t n, Elem fill = 0) : n_(n), data_(n * n, fill) {}

  /// Builds from nested rows; throws InvalidTable if not square or out of range.
  static OpTable from_rows(const std::vector<std::vector<Elem>>& rows);

  std::size_t order() const { return n_; }
  Elem operator()(Elem a, Elem b) const { return data_[a * n_ + b]; }
  Elem& at(Elem a, Elem b) { return data_[a * n_ + b]; }
  std::span<const Elem> row(Elem a) const { return {data_.data() + a * n_, n_}; }
  std::span<const Elem> raw() const { return data_; }

  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;
  friend auto operator<=>(const OpTable& l, const OpTable& r) { return l.data_ <=> r.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

/// A length-n table of element indices: a unary map on the carrier.
class MapTable {
 public:
  MapTable() = default;
  explicit MapTable(std::size_t n, Elem fill = 0) : data_(n, fill) {}
  explicit MapTable(std::vector<Elem> v) : data_(std::move(v)) {}

  static MapTable identity(std::size_t n);
  /// Throws InvalidTable if an entry is >= codomain_order.
  static MapTable checked(std::vector<Elem> v, std::size_t codomain_order);

  std::size_t size() const { return data_.size(); }
  Elem operator[](Elem a) const { return data_[a]; }
  Elem& operator[](Elem a) { return data_[a]; }
  const std::vector<Elem>& values() const { return data_; }

  bool is_bijective() const;
  std::optional<MapTable> inverse() const;
  /// (this o inner)(x) = this[inner[x]]
  MapTable after(const MapTable& inner) const;
  std::size_t image_size() const;

  friend bool operator==(const MapTable&, const MapTable&) = default;
  friend auto operator<=>(const MapTable& l, const MapTable& r) { return l.data_ <=> r.data_; }

 private:
  std::vector<Elem> data_;
};

/// Unary map whose entries may be undefined (weak structures where L_a is not
/// invertible).
using PartialMap = std::vector<std::optional<Elem>>;

/// Witness element tuples; always the lexicographically first failure.
struct Pair {
  Elem a = 0, b = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
};
struct Triple {
  Elem a = 0, b = 0, c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

}  // namespace twistpost
