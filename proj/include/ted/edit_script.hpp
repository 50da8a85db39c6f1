// An edit script is an ordered list of node edits whose summed cost equals
// the computed distance. Insertions into the first tree are recorded as
// deletions from the second, which is the same transformation read in the
// cheaper direction; apply_script undoes that reading when it rebuilds.
#pragma once

#include <string>
#include <vector>

#include "ted/cost_model.hpp"
#include "ted/distance.hpp"
#include "ted/tree.hpp"

namespace ted {

enum class EditOpKind { delete_f, delete_g, relabel };

struct EditOp {
  EditOpKind kind;
  int f_node = -1;  // delete_f and relabel
  int g_node = -1;  // delete_g and relabel
  std::string from_label;
  std::string to_label;
};

// Target-shape node used when replaying a script that contains insertions.
struct ScriptShapeNode {
  std::string label;
  std::vector<int> children;
  int match = -1;  // node of the first tree mapped here, -1 if inserted
};

struct EditScript {
  std::vector<EditOp> ops;
  long long total_cost = 0;
  // Shape of the second tree with the node mapping; empty in hand-built
  // scripts, in which case apply_script supports deletions and relabels only.
  std::vector<ScriptShapeNode> g_shape;
  int g_root = -1;
};

// Runs the distance and backtracks one optimal script.
EditScript edit_script(const Tree& f, const Tree& g, const CostModel& costs,
                       Algo algo = Algo::dmrw);

// Replays a script against its first tree. Scripts with a target shape
// rebuild that shape; shapeless scripts splice deleted nodes (children move
// up in place) and must not delete a root that still has children. Throws
// std::invalid_argument on out-of-range or doubly edited nodes.
Tree apply_script(const Tree& f, const EditScript& script);

}  // namespace ted
