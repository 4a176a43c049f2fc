#include "twistpost/enumerate.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <map>
#include <thread>

#include <fmt/format.h>

#include "twistpost/config.hpp"
#include "twistpost/error.hpp"

namespace twistpost {

namespace {

using Clock = std::chrono::steady_clock;

struct Labeled {
  OpTable tri;
  MapTable phi;
};

class Search {
 public:
  Search(const FiniteGroup& g, std::vector<MapTable> maps, const EnumerationTask& task, std::atomic<std::size_t>& nodes,
         std::atomic<bool>& stop, Clock::time_point deadline)
      : g_(g), maps_(std::move(maps)), task_(task), nodes_(nodes), stop_(stop), deadline_(deadline) {
    std::map<MapTable, int> index;
    for (std::size_t i = 0; i < maps_.size(); ++i) index[maps_[i]] = static_cast<int>(i);
    comp_.assign(maps_.size(), std::vector<int>(maps_.size()));
    for (std::size_t i = 0; i < maps_.size(); ++i)
      for (std::size_t j = 0; j < maps_.size(); ++j) comp_[i][j] = index.at(maps_[i].after(maps_[j]));
  }

  std::size_t choices() const { return maps_.size() * g_.order(); }

  // Explores the subtrees whose first choice index c satisfies c % stride == offset.
  void run(std::size_t offset, std::size_t stride) {
    State s{std::vector<int>(g_.order(), -1), std::vector<int>(g_.order(), -1)};
    const Elem first = 0;
    for (std::size_t c = offset; c < choices(); c += stride) {
      if (!tick()) return;
      State next = s;
      if (assign(next, first, static_cast<int>(c / g_.order()), static_cast<int>(c % g_.order()))) descend(next);
    }
  }

  std::vector<Labeled> found;

 private:
  struct State {
    std::vector<int> l;
    std::vector<int> p;
  };

  bool tick() {
    if (stop_) return false;
    const std::size_t k = ++nodes_;
    if (k > task_.max_candidates || ((k & 1023u) == 0 && Clock::now() > deadline_)) {
      stop_ = true;
      return false;
    }
    return true;
  }

  Elem circ(const State& s, Elem x, Elem y) const { return g_.op(static_cast<Elem>(s.p[x]), maps_[s.l[x]][y]); }

  // Assigns (L_a, Phi(a)) and closes under the forced values.
  bool assign(State& s, Elem a, int li, int p) {
    s.l[a] = li;
    s.p[a] = p;
    std::deque<Elem> queue{a};
    std::vector<Elem> assigned;
    for (Elem x = 0; x < g_.order(); ++x)
      if (s.l[x] >= 0 && x != a) assigned.push_back(x);
    while (!queue.empty()) {
      const Elem u = queue.front();
      queue.pop_front();
      assigned.push_back(u);
      for (Elem v : assigned) {
        if (!force(s, u, v, queue) || !force(s, v, u, queue)) return false;
      }
    }
    return true;
  }

  bool force(State& s, Elem x, Elem y, std::deque<Elem>& queue) {
    const Elem c = circ(s, x, y);
    const int lc = comp_[s.l[x]][s.l[y]];
    const int pc = static_cast<int>(circ(s, x, static_cast<Elem>(s.p[y])));
    if (s.l[c] >= 0) return s.l[c] == lc && s.p[c] == pc;
    s.l[c] = lc;
    s.p[c] = pc;
    queue.push_back(c);
    return true;
  }

  void descend(const State& s) {
    Elem next = 0;
    while (next < g_.order() && s.l[next] >= 0) ++next;
    if (next == g_.order()) {
      Labeled out{OpTable(g_.order()), MapTable(g_.order())};
      for (Elem a = 0; a < g_.order(); ++a) {
        out.phi[a] = static_cast<Elem>(s.p[a]);
        for (Elem b = 0; b < g_.order(); ++b) out.tri.at(a, b) = maps_[s.l[a]][b];
      }
      found.push_back(std::move(out));
      return;
    }
    for (std::size_t li = 0; li < maps_.size(); ++li)
      for (Elem p = 0; p < g_.order(); ++p) {
        if (!tick()) return;
        State child = s;
        if (assign(child, next, static_cast<int>(li), static_cast<int>(p))) descend(child);
      }
  }

  const FiniteGroup& g_;
  std::vector<MapTable> maps_;
  std::vector<std::vector<int>> comp_;
  const EnumerationTask& task_;
  std::atomic<std::size_t>& nodes_;
  std::atomic<bool>& stop_;
  Clock::time_point deadline_;
};

std::optional<TwistedPostGroup> accept(const FiniteGroup& g, const Labeled& x, const EnumerationTask& task) {
  if (!task.two_sided) {
    TwistedPostGroup t = TwistedPostGroup::left(g, x.tri, x.phi);
    if (!task.weak && t.kind() != Kind::LeftTwisted) throw Error(ErrorCode::InternalInconsistency, "search produced a weak structure");
    return t;
  }
  const OpTable circ = left_circ(g, x.tri, x.phi);
  OpTable tri_right(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) tri_right.at(a, b) = g.op(circ(a, b), g.inv(x.phi[b]));
  const TwoSidedReport r = classify_two_sided(g, x.tri, tri_right, x.phi);
  if (!r.kind || (!task.weak && *r.kind != Kind::TwoSidedTwisted)) return std::nullopt;
  return TwistedPostGroup::two_sided(g, x.tri, std::move(tri_right), x.phi);
}

}  // namespace

EnumerationResult enumerate_tpg(const EnumerationTask& task) {
  if (task.max_candidates == 0 || task.time_budget_seconds <= 0 || task.parallelism == 0)
    throw Error(ErrorCode::PreconditionFailed, "enumeration bounds must be positive");
  const FiniteGroup g = builtin_group(task.group);
  if (g.order() > limits().enumeration_order)
    throw Error(ErrorCode::UnsupportedOrder,
                fmt::format("order {} exceeds the enumeration bound {}", g.order(), limits().enumeration_order));

  std::vector<MapTable> maps = task.weak ? endomorphisms(g) : automorphisms(g);
  std::atomic<std::size_t> nodes{0};
  std::atomic<bool> stop{false};
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(task.time_budget_seconds));

  const unsigned workers = task.parallelism;
  std::vector<Search> searches;
  for (unsigned w = 0; w < workers; ++w) searches.emplace_back(g, maps, task, nodes, stop, deadline);
  if (workers == 1) {
    searches[0].run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { searches[w].run(w, workers); });
    for (auto& th : pool) th.join();
  }

  EnumerationResult out;
  out.nodes = nodes;
  out.truncated = stop;
  std::map<CanonicalForm, TwistedPostGroup> classes;
  const std::string provenance =
      fmt::format("enumerated:group={};two_sided={};weak={}", task.group, task.two_sided, task.weak);
  for (const auto& s : searches)
    for (const auto& x : s.found) {
      const auto t = accept(g, x, task);
      if (!t) continue;
      ++out.labeled_count;
      CanonicalForm f = canonical_form(*t);
      if (classes.count(f)) continue;
      TwistedPostGroup rep = TwistedPostGroup::from_tables(make_group(f.mul), f.tri, f.tri_right, f.phi);
      classes.emplace(std::move(f), std::move(rep));
    }
  for (auto& [f, t] : classes) {
    out.entries.push_back(make_entry(t, provenance));
    out.structures.push_back(t);
  }
  return out;
}

}  // namespace twistpost
