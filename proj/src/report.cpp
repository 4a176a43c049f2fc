#include "twistpost/report.hpp"

#include <algorithm>
#include <sstream>

namespace twistpost {

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->ok;
}

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

Check& Report::add(std::string name, bool ok, std::vector<Elem> witness, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(witness), std::move(detail)});
  return checks.back();
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    copy.name = prefix + copy.name;
    checks.push_back(std::move(copy));
  }
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.ok ? "  ok   " : "  FAIL ") << c.name;
    if (!c.ok && !c.witness.empty()) {
      os << "  witness (";
      for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
      os << ")";
    }
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  return os.str();
}

std::string Report::failure_message() const {
  const Check* f = first_failure();
  if (!f) return {};
  std::ostringstream os;
  os << f->name << " fails";
  if (!f->witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < f->witness.size(); ++i) os << (i ? "," : "") << f->witness[i];
    os << ")";
  }
  if (!f->detail.empty()) os << ": " << f->detail;
  return os.str();
}

}  // namespace twistpost
