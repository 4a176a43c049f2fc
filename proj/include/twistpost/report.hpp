#pragma once

#include <deque>
#include <string>
#include <vector>

#include "twistpost/table.hpp"

namespace twistpost {

/// Outcome of one exhaustively checked law. On failure `witness` holds the
/// lexicographically first offending element tuple.
struct Check {
  std::string name;
  bool ok = true;
  std::vector<Elem> witness;
  std::string detail;
};

/// An ordered list of checks. Reports never throw on failed laws; the caller
/// decides what a failure means.
struct Report {
  std::deque<Check> checks;  // stable references across add()

  bool ok() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  const Check* first_failure() const;

  Check& add(std::string name, bool ok = true, std::vector<Elem> witness = {}, std::string detail = {});
  void append(const Report& other, const std::string& prefix = {});
  std::string summary() const;
  /// "name fails at (w0,w1,..): detail" for the first failure, empty if ok.
  std::string failure_message() const;
};

}  // namespace twistpost
