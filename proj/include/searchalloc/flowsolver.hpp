#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "searchalloc/model.hpp"

namespace searchalloc {

enum class NodeKind { Source, Sink };

struct NodeRef {
  NodeKind kind;
  int index;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

// One heap pop: the j-th unit of demand at `location`, worth p_{kj}.
// `skipped` marks stale pops for already-eliminated locations.
struct ExtractionEvent {
  int location;
  int index;      // j, 1-based
  double value;   // p_{kj}
  bool skipped;
};

// A successful augmentation. `path` alternates sink, source, sink, ...
// from the demanded sink to the terminal agent with residual supply.
struct AssignmentEvent {
  std::vector<NodeRef> path;
  int agent;  // terminal agent m*
};

// A failed augmenting-path search: every node visited by the BFS is
// removed from further consideration as one isolated group.
struct EliminationEvent {
  std::vector<int> agents;
  std::vector<int> locations;
  double value;  // p_{k,j*} of the triggering extraction
};

struct TerminationEvent {
  double last_value;  // last value extracted before the heap emptied
};

using TraceEvent =
    std::variant<ExtractionEvent, AssignmentEvent, EliminationEvent, TerminationEvent>;

struct SolveTrace {
  std::vector<TraceEvent> events;
};

struct SolveStats {
  long long heap_pushes = 0;
  long long heap_pops = 0;
  long long bfs_edge_visits = 0;  // adjacency entries examined across all searches
  long long augmentations = 0;
  long long eliminations = 0;
};

struct SolveResult {
  Schedule schedule;
  SolveTrace trace;
  SolveStats stats;
};

// Specialized primal-dual solver for the homogeneous problem.
// Requires a validated instance; exact (see the certificate module).
SolveResult solve(const SearchInstance& inst);

}  // namespace searchalloc
