#include "fca/mining.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "fca/errors.hpp"

namespace fca {

namespace {

/// A node of the closed-set search tree: `extent` = current extent,
/// `intent` = attributes accumulated so far (closed over [0, next_attribute)),
/// `next_attribute` = first attribute index still to consider.
struct SearchNode {
  ObjectSet extent;
  AttributeSet intent;
  std::size_t next_attribute;
};

/// Per-worker scratch buffers; keeps the hot loop free of allocations for
/// rejected candidates. `canonical` is only valid within one expand_one
/// call, so subtree traversal uses an explicit stack instead of recursion.
/// `pending` batches capacity accounting so workers do not contend on the
/// shared counter per concept.
struct Workspace {
  ObjectSet candidate;
  std::vector<std::size_t> canonical;
  std::vector<SearchNode> stack;
  std::size_t pending = 0;
};

/// Append-only concept store made of fixed-size chunks. Chunks never
/// reallocate, so concurrent workers growing large result sets do not cycle
/// huge mappings through the kernel; the caller assembles one exact-size
/// vector at the end.
class ChunkedConcepts {
 public:
  static constexpr std::size_t kChunkSize = 1024;

  void push(Concept c) {
    if (chunks_.empty() || chunks_.back().size() == kChunkSize) {
      chunks_.emplace_back();
      chunks_.back().reserve(kChunkSize);
    }
    chunks_.back().push_back(std::move(c));
  }

  std::size_t size() const {
    if (chunks_.empty()) return 0;
    return (chunks_.size() - 1) * kChunkSize + chunks_.back().size();
  }

  void move_into(std::vector<Concept>& out) {
    for (auto& chunk : chunks_)
      out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
    chunks_.clear();
  }

 private:
  std::vector<std::vector<Concept>> chunks_;
};

class Enumerator {
 public:
  Enumerator(const FormalContext& ctx, const MiningOptions& options)
      : ctx_(ctx), options_(options), emitted_(0), overflow_(false) {}

  std::vector<Concept> run() {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned threads = options_.threads == 0 ? hw : options_.threads;

    ChunkedConcepts warm;
    std::vector<ChunkedConcepts> locals;
    SearchNode root{ctx_.full_objects(), ctx_.empty_attributes(), 0};

    if (threads <= 1) {
      Workspace ws;
      expand(std::move(root), ws, warm);
      flush(ws);
    } else {
      run_parallel(std::move(root), threads, warm, locals);
    }
    if (overflow_.load(std::memory_order_relaxed))
      throw CapacityError("concept limit of " + std::to_string(options_.max_concepts) +
                              " exceeded",
                          emitted_.load(std::memory_order_relaxed));

    std::size_t total = warm.size();
    for (const auto& local : locals) total += local.size();
    std::vector<Concept> out;
    out.reserve(total);
    warm.move_into(out);
    for (auto& local : locals) local.move_into(out);

    std::sort(out.begin(), out.end(), concept_less);
    return out;
  }

 private:
  /// Expands one node: absorbs full-extent attributes into the intent,
  /// spawns a child per canonical candidate attribute, then emits the node's
  /// concept. Children inherit the final intent because an attribute shared
  /// by every object of this extent is shared by every subset of it; child
  /// extents are recomputed after the scan so candidates that fail the
  /// canonicity test never allocate.
  template <typename EmitChild>
  void expand_one(SearchNode node, Workspace& ws, ChunkedConcepts& out,
                  EmitChild&& emit_child) {
    const std::size_t m = ctx_.attribute_count();
    ws.canonical.clear();
    for (std::size_t j = node.next_attribute; j < m; ++j) {
      if (node.intent.test(j)) continue;
      ws.candidate.assign_intersection(node.extent, ctx_.column(j));
      if (ws.candidate == node.extent) {
        node.intent.set(j);
        continue;
      }
      if (is_canonical(ws.candidate, node.intent, j)) ws.canonical.push_back(j);
    }
    for (std::size_t j : ws.canonical) {
      ObjectSet extent;
      extent.assign_intersection(node.extent, ctx_.column(j));
      AttributeSet intent = node.intent;
      intent.set(j);
      emit_child(SearchNode{std::move(extent), std::move(intent), j + 1});
    }
    emit(std::move(node.extent), std::move(node.intent), ws, out);
  }

  /// CbO canonicity: the candidate extent must not be covered by any
  /// attribute below j that is outside the current intent; otherwise the
  /// same concept is reached on a lexicographically earlier path.
  bool is_canonical(const ObjectSet& extent, const AttributeSet& intent, std::size_t j) const {
    for (std::size_t k = 0; k < j; ++k) {
      if (intent.test(k)) continue;
      if (extent.is_subset_of(ctx_.column(k))) return false;
    }
    return true;
  }

  /// Depth-first expansion of a whole subtree.
  void expand(SearchNode node, Workspace& ws, ChunkedConcepts& out) {
    ws.stack.clear();
    ws.stack.push_back(std::move(node));
    while (!ws.stack.empty()) {
      if (overflow_.load(std::memory_order_relaxed)) return;
      SearchNode current = std::move(ws.stack.back());
      ws.stack.pop_back();
      expand_one(std::move(current), ws, out,
                 [&](SearchNode child) { ws.stack.push_back(std::move(child)); });
    }
  }

  void run_parallel(SearchNode root, unsigned threads, ChunkedConcepts& warm,
                    std::vector<ChunkedConcepts>& locals) {
    // Breadth-first warm-up to build enough independent subtrees, then one
    // worker per thread pulls subtrees off a shared index.
    std::deque<SearchNode> frontier;
    frontier.push_back(std::move(root));
    Workspace ws;
    const std::size_t target = static_cast<std::size_t>(threads) * 16;
    while (!frontier.empty() && frontier.size() < target) {
      SearchNode node = std::move(frontier.front());
      frontier.pop_front();
      expand_one(std::move(node), ws, warm,
                 [&](SearchNode child) { frontier.push_back(std::move(child)); });
    }

    std::vector<SearchNode> tasks(std::make_move_iterator(frontier.begin()),
                                  std::make_move_iterator(frontier.end()));
    flush(ws);
    if (tasks.empty()) return;  // small search spaces finish in the warm-up
    std::atomic<std::size_t> next_task{0};
    locals.resize(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        // Stack-local buffers per worker; assigned to the shared slot once at
        // the end so the hot push path never shares cache lines.
        ChunkedConcepts mined;
        Workspace worker_ws;
        for (;;) {
          const std::size_t i = next_task.fetch_add(1, std::memory_order_relaxed);
          if (i >= tasks.size()) break;
          expand(std::move(tasks[i]), worker_ws, mined);
          flush(worker_ws);
        }
        locals[t] = std::move(mined);
      });
    }
    for (auto& th : pool) th.join();
  }

  void emit(ObjectSet extent, AttributeSet intent, Workspace& ws, ChunkedConcepts& out) {
    if (++ws.pending >= 4096) flush(ws);
    if (overflow_.load(std::memory_order_relaxed)) return;
    const std::size_t n = ctx_.object_count();
    const double support = n == 0 ? 0.0 : 100.0 * static_cast<double>(extent.count()) /
                                              static_cast<double>(n);
    out.push(Concept{std::move(extent), std::move(intent), support});
  }

  void flush(Workspace& ws) {
    if (ws.pending == 0) return;
    const std::size_t total =
        emitted_.fetch_add(ws.pending, std::memory_order_relaxed) + ws.pending;
    ws.pending = 0;
    if (total > options_.max_concepts) overflow_.store(true, std::memory_order_relaxed);
  }

  const FormalContext& ctx_;
  MiningOptions options_;
  std::atomic<std::size_t> emitted_;
  std::atomic<bool> overflow_;
};

}  // namespace

std::vector<Concept> enumerate_concepts(const FormalContext& ctx, const MiningOptions& options) {
  Enumerator e(ctx, options);
  return e.run();
}

std::vector<Concept> brute_force_concepts(const FormalContext& ctx) {
  const std::size_t m = ctx.attribute_count();
  if (m > 25)
    throw std::invalid_argument("brute force enumeration limited to 25 attributes, got " +
                                std::to_string(m));

  std::vector<Concept> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    AttributeSet b = AttributeSet::empty(m);
    for (std::size_t j = 0; j < m; ++j)
      if ((mask >> j) & 1) b.set(j);
    AttributeSet closed = ctx.close(b);
    if (!(closed == b)) continue;
    out.push_back(make_concept(ctx, ctx.derive(b), std::move(closed)));
  }
  std::sort(out.begin(), out.end(), concept_less);
  return out;
}

double support_percent(const FormalContext& ctx, const Concept& c) {
  if (ctx.object_count() == 0)
    throw std::invalid_argument("support undefined for an empty context");
  if (c.extent.dimension() != ctx.object_count())
    throw std::invalid_argument("concept does not belong to this context");
  return 100.0 * static_cast<double>(c.extent.count()) /
         static_cast<double>(ctx.object_count());
}

Concept make_concept(const FormalContext& ctx, ObjectSet extent, AttributeSet intent) {
  const std::size_t n = ctx.object_count();
  const double support =
      n == 0 ? 0.0 : 100.0 * static_cast<double>(extent.count()) / static_cast<double>(n);
  return Concept{std::move(extent), std::move(intent), support};
}

std::string concept_to_json_line(const FormalContext& ctx, const Concept& c) {
  if (c.extent.dimension() != ctx.object_count() ||
      c.intent.dimension() != ctx.attribute_count())
    throw std::invalid_argument("concept does not belong to this context");
  nlohmann::json j;
  auto& extent = j["extent"] = nlohmann::json::array();
  c.extent.for_each([&](std::size_t i) { extent.push_back(ctx.object_names()[i]); });
  auto& intent = j["intent"] = nlohmann::json::array();
  c.intent.for_each([&](std::size_t i) { intent.push_back(ctx.attribute_names()[i]); });
  j["support"] = c.support_percent;
  return j.dump();
}

void write_concepts_jsonl(const FormalContext& ctx, std::span<const Concept> concepts,
                          std::ostream& out) {
  for (const Concept& c : concepts) out << concept_to_json_line(ctx, c) << '\n';
}

}  // namespace fca
