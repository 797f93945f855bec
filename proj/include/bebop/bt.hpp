#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bebop/behavior.hpp"
#include "bebop/space.hpp"

namespace bebop {

enum class NodeStatus { Success, Failure, Running };

std::string status_name(NodeStatus s);

// One argument slot of an action leaf: either a fixed value or a free
// parameter to be bound from the tree's search space.
struct ParamArg {
    bool free = true;
    double value = 0.0;
};

struct BTNode {
    enum class Kind { Sequence, Fallback, Action, Condition };

    Kind kind = Kind::Sequence;
    int id = 0;
    std::vector<BTNode> children;

    // Action leaves
    std::string behavior;
    std::string target;
    std::vector<ParamArg> args;

    // Condition leaves
    ConditionAtom condition;

    bool is_leaf() const { return kind == Kind::Action || kind == Kind::Condition; }
    bool is_control() const { return !is_leaf(); }
};

BTNode make_sequence(std::vector<BTNode> children);
BTNode make_fallback(std::vector<BTNode> children);
BTNode make_action(std::string behavior, std::string target, std::size_t n_params);
BTNode make_condition(ConditionAtom atom);

// Renumbers node ids in depth-first preorder; returns the total node count.
int assign_ids(BTNode& tree);

void visit(const BTNode& tree, const std::function<void(const BTNode&)>& fn);

// Checks structural invariants (control arity, leaf arity, unique ids) and
// that every behavior resolves in the library. Throws ConfigError.
void validate_tree(const BTNode& tree, const BehaviorLibrary& library);

// Name of the search-space dimension behind a free slot. Node ids make the
// names unique within a tree and stable across subtree extraction.
std::string slot_name(const BTNode& action_node, const BehaviorLibrary& library,
                      std::size_t arg_index);

// The one primitive invocation a root tick may emit.
struct PrimitiveRequest {
    int node_id = 0;
    std::string behavior;
    ParamVector params; // bound values, one per behavior parameter
};

using ConditionEval = std::function<bool(const ConditionAtom&)>;
using BoundParams = std::unordered_map<std::string, double>;

BoundParams bind_params(const ParamSpace& space, const ParamVector& values);

struct TickContext {
    ConditionEval eval;                 // evaluates atoms on the current observation
    const BehaviorLibrary* library = nullptr;
    const BoundParams* bound = nullptr; // may be null when the tree has no free slots
    std::optional<PrimitiveRequest> request;
};

// Reactive, memoryless tick. Children are re-evaluated from the left on every
// call; an action leaf first checks its postconditions and returns Success
// without acting when they already hold, otherwise it emits its primitive and
// returns Running. Condition leaves never return Running.
NodeStatus tick(const BTNode& node, TickContext& ctx);

// Number of action leaves, depth-first left to right.
int count_action_nodes(const BTNode& tree);

// Action leaves that still carry at least one free parameter slot.
int count_parameterized_actions(const BTNode& tree);

// Subtree for stage n of cascaded learning. Traverses depth first counting
// parameterized action leaves; the result spans from the first such leaf up to
// but not including leaf n+1, with truncation-induced single-child control
// nodes collapsed. For n equal to the total count the full tree is returned.
BTNode extract_subtree(const BTNode& tree, int n);

// One search dimension per unbound slot, depth-first; bounds and priors come
// from the behavior library.
ParamSpace free_parameters(const BTNode& tree, const BehaviorLibrary& library);

} // namespace bebop
