#include "bebop/bt.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bebop {

std::string status_name(NodeStatus s) {
    switch (s) {
    case NodeStatus::Success: return "success";
    case NodeStatus::Failure: return "failure";
    case NodeStatus::Running: return "running";
    }
    return "?";
}

BTNode make_sequence(std::vector<BTNode> children) {
    BTNode n;
    n.kind = BTNode::Kind::Sequence;
    n.children = std::move(children);
    return n;
}

BTNode make_fallback(std::vector<BTNode> children) {
    BTNode n;
    n.kind = BTNode::Kind::Fallback;
    n.children = std::move(children);
    return n;
}

BTNode make_action(std::string behavior, std::string target, std::size_t n_params) {
    BTNode n;
    n.kind = BTNode::Kind::Action;
    n.behavior = std::move(behavior);
    n.target = std::move(target);
    n.args.assign(n_params, ParamArg{});
    return n;
}

BTNode make_condition(ConditionAtom atom) {
    BTNode n;
    n.kind = BTNode::Kind::Condition;
    n.condition = std::move(atom);
    return n;
}

namespace {

void assign_ids_rec(BTNode& node, int& next) {
    node.id = next++;
    for (auto& c : node.children) {
        assign_ids_rec(c, next);
    }
}

} // namespace

int assign_ids(BTNode& tree) {
    int next = 0;
    assign_ids_rec(tree, next);
    return next;
}

void visit(const BTNode& tree, const std::function<void(const BTNode&)>& fn) {
    fn(tree);
    for (const auto& c : tree.children) {
        visit(c, fn);
    }
}

void validate_tree(const BTNode& tree, const BehaviorLibrary& library) {
    std::unordered_set<int> ids;
    visit(tree, [&](const BTNode& n) {
        if (!ids.insert(n.id).second) {
            throw ConfigError("duplicate node id " + std::to_string(n.id));
        }
        if (n.is_control() && n.children.empty()) {
            throw ConfigError("control node without children");
        }
        if (n.is_leaf() && !n.children.empty()) {
            throw ConfigError("leaf node with children");
        }
        if (n.kind == BTNode::Kind::Action) {
            const BehaviorSpec& spec = library.get(n.behavior);
            if (spec.params.size() != n.args.size()) {
                throw ConfigError("behavior " + n.behavior + " expects " +
                                  std::to_string(spec.params.size()) + " parameters, node has " +
                                  std::to_string(n.args.size()));
            }
        }
    });
}

std::string slot_name(const BTNode& action_node, const BehaviorLibrary& library,
                      std::size_t arg_index) {
    const BehaviorSpec& spec = library.get(action_node.behavior);
    return "n" + std::to_string(action_node.id) + "." + action_node.behavior + "." +
           spec.params[arg_index].name;
}

BoundParams bind_params(const ParamSpace& space, const ParamVector& values) {
    space.validate(values);
    BoundParams out;
    out.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        out.emplace(space.dim(i).name, values[i]);
    }
    return out;
}

namespace {

NodeStatus tick_action(const BTNode& node, TickContext& ctx) {
    const BehaviorSpec* spec = ctx.library ? ctx.library->find(node.behavior) : nullptr;
    if (spec == nullptr) {
        throw ConfigError("unknown behavior: " + node.behavior);
    }
    if (spec->is_composite()) {
        throw ConfigError("behavior " + node.behavior + " is composite and must be expanded");
    }
    bool post_met = !spec->postconditions.empty();
    for (const auto& c : spec->postconditions) {
        if (!ctx.eval(c)) {
            post_met = false;
            break;
        }
    }
    if (post_met) {
        return NodeStatus::Success;
    }
    PrimitiveRequest req;
    req.node_id = node.id;
    req.behavior = node.behavior;
    req.params.reserve(node.args.size());
    for (std::size_t i = 0; i < node.args.size(); ++i) {
        const ParamArg& a = node.args[i];
        if (!a.free) {
            req.params.push_back(a.value);
            continue;
        }
        const std::string name = slot_name(node, *ctx.library, i);
        if (ctx.bound == nullptr) {
            throw ConfigError("unbound parameter slot " + name);
        }
        auto it = ctx.bound->find(name);
        if (it == ctx.bound->end()) {
            throw ConfigError("unbound parameter slot " + name);
        }
        req.params.push_back(it->second);
    }
    // The first non-skipped action wins the tick; control-flow short circuits
    // make a second emission impossible.
    if (ctx.request.has_value()) {
        throw ConfigError("multiple primitives emitted in one tick");
    }
    ctx.request = std::move(req);
    return NodeStatus::Running;
}

} // namespace

NodeStatus tick(const BTNode& node, TickContext& ctx) {
    switch (node.kind) {
    case BTNode::Kind::Sequence:
        for (const auto& c : node.children) {
            const NodeStatus s = tick(c, ctx);
            if (s != NodeStatus::Success) {
                return s;
            }
        }
        return NodeStatus::Success;
    case BTNode::Kind::Fallback:
        for (const auto& c : node.children) {
            const NodeStatus s = tick(c, ctx);
            if (s != NodeStatus::Failure) {
                return s;
            }
        }
        return NodeStatus::Failure;
    case BTNode::Kind::Condition:
        return ctx.eval(node.condition) ? NodeStatus::Success : NodeStatus::Failure;
    case BTNode::Kind::Action:
        return tick_action(node, ctx);
    }
    throw ConfigError("corrupt node kind");
}

int count_action_nodes(const BTNode& tree) {
    int n = 0;
    visit(tree, [&](const BTNode& node) {
        if (node.kind == BTNode::Kind::Action) {
            ++n;
        }
    });
    return n;
}

namespace {

bool has_free_slot(const BTNode& node) {
    return std::any_of(node.args.begin(), node.args.end(),
                       [](const ParamArg& a) { return a.free; });
}

} // namespace

int count_parameterized_actions(const BTNode& tree) {
    int n = 0;
    visit(tree, [&](const BTNode& node) {
        if (node.kind == BTNode::Kind::Action && has_free_slot(node)) {
            ++n;
        }
    });
    return n;
}

namespace {

void preorder_index(const BTNode& node, int& next, std::vector<const BTNode*>& order) {
    order.push_back(&node);
    ++next;
    for (const auto& c : node.children) {
        preorder_index(c, next, order);
    }
}

// Rebuilds the tree restricted to preorder positions [start, stop), collapsing
// single-child control nodes and dropping emptied ones.
std::optional<BTNode> restrict_span(const BTNode& node, int& pos, int start, int stop) {
    const int my_pos = pos++;
    if (node.is_leaf()) {
        if (my_pos >= start && my_pos < stop) {
            return node;
        }
        return std::nullopt;
    }
    std::vector<BTNode> kept;
    for (const auto& c : node.children) {
        auto sub = restrict_span(c, pos, start, stop);
        if (sub) {
            kept.push_back(std::move(*sub));
        }
    }
    if (kept.empty()) {
        return std::nullopt;
    }
    if (kept.size() == 1) {
        return std::move(kept.front());
    }
    BTNode out;
    out.kind = node.kind;
    out.id = node.id;
    out.children = std::move(kept);
    return out;
}

} // namespace

BTNode extract_subtree(const BTNode& tree, int n) {
    std::vector<const BTNode*> order;
    int count = 0;
    preorder_index(tree, count, order);

    std::vector<int> action_positions;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i]->kind == BTNode::Kind::Action && has_free_slot(*order[i])) {
            action_positions.push_back(static_cast<int>(i));
        }
    }
    const int total = static_cast<int>(action_positions.size());
    if (n < 1 || n > total) {
        throw std::invalid_argument("subtree index " + std::to_string(n) + " out of range [1, " +
                                    std::to_string(total) + "]");
    }
    if (n == total) {
        return tree;
    }
    const int start = action_positions[0];
    const int stop = action_positions[static_cast<std::size_t>(n)];
    int pos = 0;
    auto out = restrict_span(tree, pos, start, stop);
    return std::move(*out);
}

ParamSpace free_parameters(const BTNode& tree, const BehaviorLibrary& library) {
    std::vector<Dimension> dims;
    visit(tree, [&](const BTNode& node) {
        if (node.kind != BTNode::Kind::Action) {
            return;
        }
        const BehaviorSpec& spec = library.get(node.behavior);
        for (std::size_t i = 0; i < node.args.size(); ++i) {
            if (!node.args[i].free) {
                continue;
            }
            const ParamSpec& p = spec.params[i];
            Dimension d;
            d.name = slot_name(node, library, i);
            d.kind = p.kind;
            d.lower = p.lower;
            d.upper = p.upper;
            d.values = p.values;
            d.prior_mode = p.prior_mode;
            d.prior_strength = p.prior_strength;
            dims.push_back(std::move(d));
        }
    });
    return ParamSpace(std::move(dims));
}

} // namespace bebop
