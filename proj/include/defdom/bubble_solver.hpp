#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "defdom/bubbles.hpp"
#include "defdom/pig.hpp"

namespace defdom {

/// Indexed binary min-heap keyed by (key, -id) with a lazy additive offset:
/// the slack of an item is key - offset, so shifting every slack down by s
/// is a single `shift(s)`.
class OffsetMinHeap {
 public:
  explicit OffsetMinHeap(int max_id = 0);

  bool empty() const { return items_.empty(); }
  int size() const { return static_cast<int>(items_.size()); }
  bool contains(int id) const { return pos_[id] >= 0; }

  void push(int id, std::int64_t key);
  void erase(int id);
  /// Replaces the stored key of an item already in the heap.
  void update(int id, std::int64_t key);

  /// Minimum slack item; the rightmost bubble among ties.
  int top() const { return items_.front().id; }
  std::int64_t top_key() const { return items_.front().key; }
  std::int64_t key(int id) const { return items_[pos_[id]].key; }
  std::int64_t slack(int id) const { return key(id) - offset_; }

  std::int64_t offset() const { return offset_; }
  void shift(std::int64_t s) { offset_ += s; }

  /// (id, key) pairs in heap-array order.
  std::vector<std::pair<int, std::int64_t>> snapshot() const;

  std::int64_t inserts() const { return inserts_; }
  std::int64_t deletes() const { return deletes_; }
  std::int64_t rekeys() const { return rekeys_; }

 private:
  struct Item {
    std::int64_t key;
    int id;
  };
  static bool before(const Item& a, const Item& b) {
    return a.key != b.key ? a.key < b.key : a.id > b.id;
  }
  void place(std::size_t i, Item item);
  void sift_up(std::size_t i);
  void sift_down(std::size_t i);

  std::vector<Item> items_;
  std::vector<int> pos_;
  std::int64_t offset_ = 0;
  std::int64_t inserts_ = 0;
  std::int64_t deletes_ = 0;
  std::int64_t rekeys_ = 0;
};

struct BubbleSolverStats {
  std::int64_t loop_iterations = 0;
  std::int64_t slack_shifts = 0;
  std::int64_t bottlenecks = 0;
  std::int64_t chunks = 0;
  /// Bubbles entering and leaving f.
  std::int64_t heap_inserts = 0;
  std::int64_t heap_deletes = 0;
  /// Run-level work: offset-heap inserts, deletes and rekeys plus melds.
  std::int64_t run_updates = 0;
  /// f-list links and unlinks plus bubble cursor advances.
  std::int64_t list_ops = 0;
  /// Union-find steps locating the nearest bubble with a non-defender.
  std::int64_t spare_steps = 0;

  std::int64_t heap_ops() const { return heap_inserts + heap_deletes + run_updates; }
};

/// One run of the bubble-model greedy on a connected graph given by its
/// linear bubble model, with 1 <= k < n.
///
/// The defense f against A = [first..last] is kept as per-bubble counts of
/// used defenders threaded on a list in bubble order. Defenders inside a
/// bubble are always its top d_i vertices, and f always uses the top |A|
/// defenders of D in order.
///
/// The slack of an f bubble is maxNbr - f_i, where f_i is the last attacker
/// its defenders cover. f bubbles are grouped into runs of consecutive
/// defenders; inside a run f is order preserving with no gaps, so
/// slack_i = (maxNbr_i - maxV_i) + lag, with one lag per run. Each run keeps
/// its bubbles in a pairing heap keyed by the static maxNbr_i - maxV_i, and
/// the offset heap holds one item per run, identified by its top bubble.
/// Runs only merge, which happens when new defenders arrive below them.
class BubbleSolver {
 public:
  struct Segment {
    int bubble;
    int count;
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  BubbleSolver(const LinearBubbleModel& lbm, int k, bool validate = false);

  /// Initialises with add_new_vertices(k), then loops to completion.
  std::vector<Vertex> run();

  /// One main-loop iteration; false once the window has reached n.
  bool step();

  void add_new_vertices(int delta);
  void remove_left(int delta);
  /// Moves A and f right by s.
  void shift(int s);
  std::int64_t slack() const;
  Vertex bottleneck() const;

  Vertex first_index() const { return first_; }
  Vertex last_index() const { return last_; }
  int defenders_in(int bubble) const { return d_[bubble]; }
  /// f as (bubble, used count) from the first attacker to the last.
  std::vector<Segment> segments() const;
  /// Last attacker covered by the bubble's defenders, or nullopt if unused.
  std::optional<Vertex> defended_by(int bubble) const;
  /// One item per run of f, keyed by the run's smallest slack plus offset.
  const OffsetMinHeap& heap() const { return heap_; }
  /// Runs of f from the lowest, as (lowest bubble, top bubble).
  std::vector<std::pair<int, int>> runs() const;
  std::vector<Vertex> defenders() const;
  BubbleSolverStats stats() const;

  /// Re-derives f with the rightmost scan and compares; throws
  /// std::logic_error on any mismatch.
  void check_invariants() const;

 private:
  struct Node {
    std::int64_t gap;
    int bubble;
    int child;
    int sibling;
  };
  struct Run {
    int top;
    int root;
    int live;
    // slack of a member = its gap + base - offset
    std::int64_t base;
  };

  int find_spare(int b);
  void link_above(int b, int below);
  void unlink(int b);
  void advance_cursors();
  bool node_before(int a, int b) const;
  int meld(int a, int b);
  int pop(int root);
  int clean(int root);
  const Run& run_of(int bubble) const;

  const LinearBubbleModel& lbm_;
  int k_;
  int n_;
  int m_;
  bool validate_;
  std::optional<ProperIntervalGraph> graph_;

  Vertex first_ = 1;
  Vertex last_ = 0;
  int first_bubble_ = 1;
  int last_bubble_ = 0;
  int reach_bubble_ = 0;

  std::vector<int> d_;
  std::vector<int> used_;
  // f list over bubble ids; 0 is the sentinel, next_[0] is the lowest bubble.
  std::vector<int> next_;
  std::vector<int> prev_;
  // Union-find towards the nearest bubble below with spare vertices.
  std::vector<int> spare_;
  // Pairing-heap nodes; node_of_[b] is bubble b's live node or -1.
  std::vector<Node> nodes_;
  std::vector<int> node_of_;
  // Runs bottom to top; runs_[run_begin_..] are live.
  std::vector<Run> runs_;
  std::size_t run_begin_ = 0;
  std::vector<int> run_at_top_;
  OffsetMinHeap heap_;
  std::vector<int> scratch_;
  std::int64_t bubble_inserts_ = 0;
  std::int64_t bubble_deletes_ = 0;
  std::int64_t melds_ = 0;
  BubbleSolverStats stats_;
};

/// Minimum k-defensive set via the bubble model; disconnected models are
/// split into components as in solve_greedy.
std::vector<Vertex> solve_bubble(const LinearBubbleModel& lbm, int k,
                                 BubbleSolverStats* stats = nullptr, bool validate = false);

std::vector<Vertex> solve_bubble(const ProperIntervalGraph& g, int k,
                                 BubbleSolverStats* stats = nullptr, bool validate = false);

}  // namespace defdom
