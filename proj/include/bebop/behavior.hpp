#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bebop/util.hpp"

namespace bebop {

// A ground condition: predicate name, object arguments and an optional numeric
// threshold. Equality is syntactic; there is no arithmetic entailment.
struct ConditionAtom {
    std::string pred;
    std::vector<std::string> args;
    std::optional<double> threshold;

    bool operator==(const ConditionAtom& other) const {
        return pred == other.pred && args == other.args && threshold == other.threshold;
    }
    bool operator!=(const ConditionAtom& other) const { return !(*this == other); }

    std::string text() const {
        std::string out = pred;
        for (const auto& a : args) {
            out += " " + a;
        }
        if (threshold) {
            out += " " + format_double(*threshold);
        }
        return out;
    }
};

inline ConditionAtom atom(std::string pred, std::vector<std::string> args = {},
                          std::optional<double> threshold = std::nullopt) {
    return ConditionAtom{std::move(pred), std::move(args), threshold};
}

enum class ParamKind { Real, Integer, Ordinal, Categorical };

struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::Real;
    double lower = 0.0;
    double upper = 1.0;
    std::vector<std::string> values; // ordinal / categorical levels
    std::optional<double> prior_mode;
    double prior_strength = 0.0;
};

enum class Primitive { Reach, Grasp, Push, Open, Atomic };

Primitive primitive_from_name(const std::string& name);
std::string primitive_name(Primitive p);
int primitive_arity(Primitive p);

// Planner-facing description of a behavior. `target` is the object the
// primitive acts on and `frame` the reference frame the offsets are taken in
// (an object id, a named pose, or "world").
struct BehaviorSpec {
    std::string name;
    Primitive primitive = Primitive::Reach;
    std::string target;
    std::string frame;
    std::vector<ConditionAtom> preconditions;
    std::vector<ConditionAtom> postconditions;
    std::vector<ParamSpec> params;
    std::vector<std::string> composite; // expansion into other behaviors
    std::optional<std::string> alias;   // planning-time alias of another behavior

    bool is_composite() const { return !composite.empty(); }
};

class BehaviorLibrary {
public:
    BehaviorLibrary() = default;
    explicit BehaviorLibrary(std::vector<BehaviorSpec> behaviors)
        : behaviors_(std::move(behaviors)) {}

    void add(BehaviorSpec spec) { behaviors_.push_back(std::move(spec)); }

    const BehaviorSpec& get(const std::string& name) const {
        for (const auto& b : behaviors_) {
            if (b.name == name) {
                return b;
            }
        }
        throw ConfigError("unknown behavior: " + name);
    }

    const BehaviorSpec* find(const std::string& name) const {
        for (const auto& b : behaviors_) {
            if (b.name == name) {
                return &b;
            }
        }
        return nullptr;
    }

    const std::vector<BehaviorSpec>& all() const { return behaviors_; }

    // True when `name` appears inside some composite expansion; such behaviors
    // are reached through expansion, not selected by the planner directly.
    bool is_composite_member(const std::string& name) const {
        for (const auto& b : behaviors_) {
            for (const auto& m : b.composite) {
                if (m == name) {
                    return true;
                }
            }
        }
        return false;
    }

private:
    std::vector<BehaviorSpec> behaviors_;
};

struct GoalSpec {
    std::vector<ConditionAtom> goals;
    std::vector<ConditionAtom> initial_state;

    bool initially_true(const ConditionAtom& c) const {
        for (const auto& a : initial_state) {
            if (a == c) {
                return true;
            }
        }
        return false;
    }
};

} // namespace bebop
