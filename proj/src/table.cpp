#include "twistpost/table.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "twistpost/config.hpp"
#include "twistpost/error.hpp"

namespace twistpost {

OpTable OpTable::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  OpTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::InvalidTable, "row " + std::to_string(i) + " has length " +
                                               std::to_string(rows[i].size()) + ", expected " +
                                               std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n) {
        throw Error(ErrorCode::InvalidTable, "entry [" + std::to_string(i) + "][" + std::to_string(j) +
                                                 "] = " + std::to_string(rows[i][j]) + " out of range");
      }
      t.at(i, j) = rows[i][j];
    }
  }
  return t;
}

std::vector<std::vector<Elem>> OpTable::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(data_.begin() + i * n_, data_.begin() + (i + 1) * n_);
  return out;
}

MapTable MapTable::identity(std::size_t n) {
  MapTable m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Elem>(i);
  return m;
}

MapTable MapTable::checked(std::vector<Elem> v, std::size_t codomain_order) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= codomain_order) {
      throw Error(ErrorCode::InvalidTable,
                  "map entry [" + std::to_string(i) + "] = " + std::to_string(v[i]) + " out of range");
    }
  }
  return MapTable(std::move(v));
}

bool MapTable::is_bijective() const {
  std::vector<bool> seen(data_.size(), false);
  for (Elem x : data_) {
    if (x >= data_.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::optional<MapTable> MapTable::inverse() const {
  if (!is_bijective()) return std::nullopt;
  MapTable inv(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) inv[data_[i]] = static_cast<Elem>(i);
  return inv;
}

MapTable MapTable::after(const MapTable& inner) const {
  MapTable out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = data_[inner[i]];
  return out;
}

std::size_t MapTable::image_size() const {
  std::vector<Elem> v = data_;
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotATwistedPostGroup: return "NotATwistedPostGroup";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CocycleNotSurjective: return "CocycleNotSurjective";
    case ErrorCode::CocycleNotNormalized: return "CocycleNotNormalized";
    case ErrorCode::NotInner: return "NotInner";
    case ErrorCode::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::VerificationMismatch: return "VerificationMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

Limits initial_limits() {
  Limits l;
  if (const char* env = std::getenv("TWISTPOST_MAX_ORDER")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0) l.enumeration_order = v;
    } catch (const std::exception&) {
      // malformed value: keep the default
    }
  }
  return l;
}

Limits& mutable_limits() {
  static Limits l = initial_limits();
  return l;
}

}  // namespace

const Limits& limits() { return mutable_limits(); }
void set_limits(const Limits& l) { mutable_limits() = l; }

}  // namespace twistpost
