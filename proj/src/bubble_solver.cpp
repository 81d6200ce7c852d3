#include "defdom/bubble_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "defdom/defense.hpp"
#include "defdom/error.hpp"

namespace defdom {

// ---------------------------------------------------------------------------
// OffsetMinHeap

OffsetMinHeap::OffsetMinHeap(int max_id) : pos_(max_id + 1, -1) {}

void OffsetMinHeap::place(std::size_t i, Item item) {
  items_[i] = item;
  pos_[item.id] = static_cast<int>(i);
}

void OffsetMinHeap::sift_up(std::size_t i) {
  const Item item = items_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!before(item, items_[parent])) break;
    place(i, items_[parent]);
    i = parent;
  }
  place(i, item);
}

void OffsetMinHeap::sift_down(std::size_t i) {
  const Item item = items_[i];
  const std::size_t n = items_.size();
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && before(items_[child + 1], items_[child])) ++child;
    if (!before(items_[child], item)) break;
    place(i, items_[child]);
    i = child;
  }
  place(i, item);
}

void OffsetMinHeap::push(int id, std::int64_t key) {
  ++inserts_;
  items_.push_back({key, id});
  sift_up(items_.size() - 1);
}

void OffsetMinHeap::erase(int id) {
  ++deletes_;
  const auto i = static_cast<std::size_t>(pos_[id]);
  pos_[id] = -1;
  const Item last = items_.back();
  items_.pop_back();
  if (i == items_.size()) return;
  place(i, last);
  sift_up(i);
  sift_down(static_cast<std::size_t>(pos_[last.id]));
}

void OffsetMinHeap::update(int id, std::int64_t key) {
  const auto i = static_cast<std::size_t>(pos_[id]);
  if (items_[i].key == key) return;
  ++rekeys_;
  items_[i].key = key;
  sift_up(i);
  sift_down(static_cast<std::size_t>(pos_[id]));
}

std::vector<std::pair<int, std::int64_t>> OffsetMinHeap::snapshot() const {
  std::vector<std::pair<int, std::int64_t>> out;
  out.reserve(items_.size());
  for (const auto& it : items_) out.emplace_back(it.id, it.key);
  return out;
}

// ---------------------------------------------------------------------------
// BubbleSolver

BubbleSolver::BubbleSolver(const LinearBubbleModel& lbm, int k, bool validate)
    : lbm_(lbm),
      k_(k),
      n_(lbm.n()),
      m_(lbm.size()),
      validate_(validate),
      d_(m_ + 1, 0),
      used_(m_ + 1, 0),
      next_(m_ + 1, 0),
      prev_(m_ + 1, 0),
      spare_(m_ + 1),
      node_of_(m_ + 1, -1),
      run_at_top_(m_ + 1, -1),
      heap_(m_) {
  if (n_ == 0) throw EmptyGraph();
  if (k < 1 || k >= n_) throw BadParameters("bubble solver needs 1 <= k < n");
  for (int b = 0; b <= m_; ++b) spare_[b] = b;
  if (validate_) graph_ = pig_from_linear(lbm);
}

int BubbleSolver::find_spare(int b) {
  int root = b;
  while (spare_[root] != root) {
    root = spare_[root];
    ++stats_.spare_steps;
  }
  while (spare_[b] != root) {
    const int up = spare_[b];
    spare_[b] = root;
    b = up;
  }
  return root;
}

void BubbleSolver::link_above(int b, int below) {
  const int above = next_[below];
  next_[below] = b;
  prev_[b] = below;
  next_[b] = above;
  prev_[above] = b;
  ++stats_.list_ops;
}

void BubbleSolver::unlink(int b) {
  next_[prev_[b]] = next_[b];
  prev_[next_[b]] = prev_[b];
  next_[b] = prev_[b] = 0;
  ++stats_.list_ops;
}

void BubbleSolver::advance_cursors() {
  while (first_bubble_ < m_ && lbm_[first_bubble_].max_v < first_) {
    ++first_bubble_;
    ++stats_.list_ops;
  }
  while (last_bubble_ < m_ && lbm_[last_bubble_].max_v < last_) {
    ++last_bubble_;
    ++stats_.list_ops;
  }
  // maxN values are bubble ends, so this lands exactly on max(N[A]).
  while (reach_bubble_ < m_ && lbm_[reach_bubble_].max_v < lbm_[last_bubble_].max_nbr) {
    ++reach_bubble_;
    ++stats_.list_ops;
  }
}

bool BubbleSolver::node_before(int a, int b) const {
  const Node& x = nodes_[a];
  const Node& y = nodes_[b];
  return x.gap != y.gap ? x.gap < y.gap : x.bubble > y.bubble;
}

int BubbleSolver::meld(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  if (node_before(b, a)) std::swap(a, b);
  nodes_[b].sibling = nodes_[a].child;
  nodes_[a].child = b;
  return a;
}

int BubbleSolver::pop(int root) {
  // Two-pass pairing of the children.
  std::vector<int>& pairs = scratch_;
  pairs.clear();
  for (int c = nodes_[root].child; c >= 0;) {
    const int d = nodes_[c].sibling;
    const int next = d >= 0 ? nodes_[d].sibling : -1;
    nodes_[c].sibling = -1;
    if (d >= 0) nodes_[d].sibling = -1;
    pairs.push_back(meld(c, d));
    c = next;
  }
  int out = -1;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) out = meld(*it, out);
  return out;
}

// Drops dead nodes off the top of a pairing heap.
int BubbleSolver::clean(int root) {
  while (root >= 0 && node_of_[nodes_[root].bubble] != root) root = pop(root);
  return root;
}

const BubbleSolver::Run& BubbleSolver::run_of(int bubble) const {
  auto it = std::lower_bound(runs_.begin() + static_cast<std::ptrdiff_t>(run_begin_), runs_.end(), bubble,
                             [](const Run& r, int b) { return r.top < b; });
  return *it;
}

void BubbleSolver::add_new_vertices(int delta) {
  if (delta < 0 || last_ + delta > n_)
    throw Overflow("cannot extend the attack by " + std::to_string(delta) + " past vertex " +
                   std::to_string(n_));
  struct Receipt {
    int bubble;
    int count;
  };
  std::vector<Receipt> receivers;
  while (delta > 0) {
    ++stats_.chunks;
    const int chunk =
        lbm_[last_bubble_].max_v == last_ ? 1 : std::min(delta, lbm_[last_bubble_].max_v - last_);
    last_ += chunk;
    delta -= chunk;
    advance_cursors();

    // The chunk's new defenders: the rightmost non-defenders of N[A],
    // taken bubble by bubble downward from max(N[A]).
    receivers.clear();
    int want = chunk;
    for (int b = find_spare(reach_bubble_); want > 0; b = find_spare(b)) {
      if (b == 0 || lbm_[b].max_v < lbm_[first_bubble_].min_nbr)
        throw std::logic_error("no spare vertex left in N[A]");
      const int take = std::min(want, lbm_[b].size - d_[b]);
      d_[b] += take;
      want -= take;
      receivers.push_back({b, take});
      if (d_[b] == lbm_[b].size) spare_[b] = b - 1;
    }

    // Every f bubble at or above the lowest receiver now covers a later
    // attacker. Those bubbles and the receivers form one run of consecutive
    // defenders ending at max(N[A]), which is paired with A's top.
    const int lowest = receivers.back().bubble;
    int root = -1;
    int live = 0;
    int top = receivers.front().bubble;
    while (runs_.size() > run_begin_ && runs_.back().top >= lowest) {
      const Run& run = runs_.back();
      heap_.erase(run.top);
      run_at_top_[run.top] = -1;
      root = meld(root, run.root);
      ++melds_;
      live += run.live;
      top = std::max(top, run.top);
      runs_.pop_back();
    }
    for (const auto& [r, count] : receivers) {
      if (used_[r] == 0) {
        // Bubbles between r and max(N[A]) are full, hence already in f.
        link_above(r, prev_[r == reach_bubble_ ? 0 : r + 1]);
        node_of_[r] = static_cast<int>(nodes_.size());
        nodes_.push_back({lbm_[r].max_nbr - lbm_[r].max_v, r, -1, -1});
        ++bubble_inserts_;
        root = meld(root, node_of_[r]);
        ++live;
      }
      used_[r] += count;
    }
    const std::int64_t base = static_cast<std::int64_t>(lbm_[reach_bubble_].max_v) - last_ + heap_.offset();
    run_at_top_[top] = static_cast<int>(runs_.size());
    runs_.push_back({top, root, live, base});
    heap_.push(top, nodes_[root].gap + base);
  }
}

void BubbleSolver::remove_left(int delta) {
  if (delta < 0 || delta > last_ - first_ + 1)
    throw Overflow("cannot drop " + std::to_string(delta) + " attackers");
  first_ += delta;
  while (delta > 0) {
    const int b = next_[0];
    if (used_[b] > delta) {
      used_[b] -= delta;
      break;
    }
    delta -= used_[b];
    used_[b] = 0;
    unlink(b);
    node_of_[b] = -1;
    ++bubble_deletes_;
    // b is the lowest f bubble, so it sits in the lowest run.
    Run& run = runs_[run_begin_];
    if (--run.live == 0) {
      heap_.erase(run.top);
      run_at_top_[run.top] = -1;
      ++run_begin_;
    } else if (nodes_[run.root].bubble == b) {
      run.root = clean(run.root);
      heap_.update(run.top, nodes_[run.root].gap + run.base);
    }
  }
  advance_cursors();
}

void BubbleSolver::shift(int s) {
  first_ += s;
  last_ += s;
  heap_.shift(s);
  advance_cursors();
}

std::int64_t BubbleSolver::slack() const { return heap_.top_key() - heap_.offset(); }

Vertex BubbleSolver::bottleneck() const {
  const Run& run = runs_[run_at_top_[heap_.top()]];
  const int b = nodes_[run.root].bubble;
  return lbm_[b].max_nbr - static_cast<Vertex>(slack());
}

bool BubbleSolver::step() {
  if (last_ >= n_) return false;
  ++stats_.loop_iterations;
  const std::int64_t s = slack();
  if (s > 0) {
    ++stats_.slack_shifts;
    shift(static_cast<int>(std::min<std::int64_t>(s, n_ - last_)));
  } else {
    ++stats_.bottlenecks;
    const Vertex v = bottleneck();
    const int move = std::min(n_ - last_, v - first_ + 1);
    remove_left(move);
    add_new_vertices(move);
  }
  if (validate_) check_invariants();
  return true;
}

std::vector<Vertex> BubbleSolver::run() {
  add_new_vertices(k_);
  if (validate_) check_invariants();
  while (step()) {
  }
  return defenders();
}

std::vector<BubbleSolver::Segment> BubbleSolver::segments() const {
  std::vector<Segment> out;
  for (int b = next_[0]; b != 0; b = next_[b]) out.push_back({b, used_[b]});
  return out;
}

std::optional<Vertex> BubbleSolver::defended_by(int bubble) const {
  if (used_[bubble] == 0) return std::nullopt;
  const Run& run = run_of(bubble);
  const std::int64_t slack = lbm_[bubble].max_nbr - lbm_[bubble].max_v + run.base - heap_.offset();
  return lbm_[bubble].max_nbr - static_cast<Vertex>(slack);
}

std::vector<std::pair<int, int>> BubbleSolver::runs() const {
  std::vector<std::pair<int, int>> out;
  int b = next_[0];
  for (std::size_t i = run_begin_; i < runs_.size(); ++i) {
    out.emplace_back(b, runs_[i].top);
    b = next_[runs_[i].top];
  }
  return out;
}

std::vector<Vertex> BubbleSolver::defenders() const {
  std::vector<Vertex> out;
  for (int b = 1; b <= m_; ++b)
    for (Vertex v = lbm_[b].max_v - d_[b] + 1; v <= lbm_[b].max_v; ++v) out.push_back(v);
  return out;
}

BubbleSolverStats BubbleSolver::stats() const {
  BubbleSolverStats s = stats_;
  s.heap_inserts = bubble_inserts_;
  s.heap_deletes = bubble_deletes_;
  s.run_updates = heap_.inserts() + heap_.deletes() + heap_.rekeys() + melds_;
  return s;
}

void BubbleSolver::check_invariants() const {
  auto fail = [&](const std::string& what) {
    throw std::logic_error("bubble solver invariant broken at A=[" + std::to_string(first_) + ".." +
                           std::to_string(last_) + "]: " + what);
  };
  const ProperIntervalGraph g = graph_ ? *graph_ : pig_from_linear(lbm_);
  const std::vector<Vertex> d = defenders();
  const auto f = defends_consecutive(g, d, {first_, last_});
  if (!f) fail("defenders do not defend A");

  std::vector<int> used(m_ + 1, 0);
  std::vector<Vertex> top_attacker(m_ + 1, 0);
  for (const auto& [defender, attacker] : f->pairs) {
    const int b = lbm_.bubble_of(defender);
    ++used[b];
    top_attacker[b] = std::max(top_attacker[b], attacker);
  }
  int total = 0;
  int prev = 0;
  for (const auto& seg : segments()) {
    if (seg.bubble <= prev) fail("f list out of bubble order");
    prev = seg.bubble;
    total += seg.count;
  }
  if (total != last_ - first_ + 1) fail("segments do not cover A");
  if (heap_.size() > k_) fail("heap larger than k");
  for (int b = 1; b <= m_; ++b) {
    if (used[b] != used_[b])
      fail("bubble " + std::to_string(b) + " used " + std::to_string(used_[b]) +
           ", rightmost defense uses " + std::to_string(used[b]));
    if (used[b] > 0 && defended_by(b) != top_attacker[b])
      fail("bubble " + std::to_string(b) + " slack out of date");
    if (used[b] > 0 && lbm_[b].max_nbr < *defended_by(b)) fail("negative slack");
  }
  // Runs partition f in bubble order and the offset heap tracks each run's
  // smallest member.
  int members = 0;
  int lowest = 0;
  for (std::size_t i = run_begin_; i < runs_.size(); ++i) {
    const Run& run = runs_[i];
    if (run.top <= lowest || used_[run.top] == 0) fail("run tops out of order");
    int live = 0;
    std::int64_t best_gap = 0;
    int best = 0;
    for (int b = lowest + 1; b <= run.top; ++b) {
      if (used_[b] == 0) continue;
      const std::int64_t gap = lbm_[b].max_nbr - lbm_[b].max_v;
      if (live == 0 || gap <= best_gap) {
        best_gap = gap;
        best = b;
      }
      ++live;
    }
    if (live != run.live) fail("run live count");
    if (nodes_[run.root].bubble != best) fail("run minimum is not its pairing-heap root");
    if (heap_.key(run.top) != best_gap + run.base) fail("run key out of date");
    members += live;
    lowest = run.top;
  }
  if (members != static_cast<int>(segments().size())) fail("runs do not cover f");
}

// ---------------------------------------------------------------------------

std::vector<Vertex> solve_bubble(const LinearBubbleModel& lbm, int k, BubbleSolverStats* stats,
                                 bool validate) {
  if (lbm.n() == 0) throw EmptyGraph();
  if (k < 1) throw BadParameters("k must be at least 1");
  BubbleSolverStats total;
  std::vector<Vertex> out;

  int start = 1;
  for (int i = 1; i <= lbm.size(); ++i) {
    if (lbm[i].max_nbr != lbm[i].max_v) continue;
    const Vertex v0 = lbm[start].min_v - 1;
    const int size = lbm[i].max_v - v0;
    if (k >= size) {
      for (Vertex v = v0 + 1; v <= lbm[i].max_v; ++v) out.push_back(v);
    } else {
      std::vector<Bubble> part;
      part.reserve(i - start + 1);
      for (int b = start; b <= i; ++b) {
        Bubble x = lbm[b];
        x.min_v -= v0;
        x.max_v -= v0;
        x.min_nbr -= v0;
        x.max_nbr -= v0;
        part.push_back(x);
      }
      const LinearBubbleModel sub(std::move(part));
      BubbleSolver solver(sub, k, validate);
      for (Vertex v : solver.run()) out.push_back(v + v0);
      const BubbleSolverStats s = solver.stats();
      total.loop_iterations += s.loop_iterations;
      total.slack_shifts += s.slack_shifts;
      total.bottlenecks += s.bottlenecks;
      total.chunks += s.chunks;
      total.heap_inserts += s.heap_inserts;
      total.heap_deletes += s.heap_deletes;
      total.run_updates += s.run_updates;
      total.list_ops += s.list_ops;
      total.spare_steps += s.spare_steps;
    }
    start = i + 1;
  }
  if (stats) *stats = total;
  return out;
}

std::vector<Vertex> solve_bubble(const ProperIntervalGraph& g, int k, BubbleSolverStats* stats,
                                 bool validate) {
  if (g.n() == 0) throw EmptyGraph();
  return solve_bubble(bubbles_from_pig(g), k, stats, validate);
}

}  // namespace defdom
