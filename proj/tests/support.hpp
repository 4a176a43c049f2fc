#pragma once

#include "oracle.hpp"
#include "twistpost/group.hpp"
#include "twistpost/table.hpp"

namespace support {

inline oracle::Table rows(const twistpost::OpTable& t) {
  oracle::Table out(t.order(), oracle::Row(t.order()));
  for (twistpost::Elem a = 0; a < t.order(); ++a)
    for (twistpost::Elem b = 0; b < t.order(); ++b) out[a][b] = t(a, b);
  return out;
}

inline oracle::Map values(const twistpost::MapTable& m) { return oracle::Map(m.values().begin(), m.values().end()); }

inline oracle::Group group(const twistpost::FiniteGroup& g) { return *oracle::as_group(rows(g.mul())); }

inline twistpost::OpTable table(const oracle::Table& t) {
  std::vector<std::vector<twistpost::Elem>> r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i].assign(t[i].begin(), t[i].end());
  return twistpost::OpTable::from_rows(r);
}

inline twistpost::MapTable map(const oracle::Map& m) {
  return twistpost::MapTable(std::vector<twistpost::Elem>(m.begin(), m.end()));
}

}  // namespace support
