#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/functionals.hpp"

namespace hardylab {

/// Everything an inequality evaluator needs for one margin computation.
struct MarginInputs {
    Domain domain = Domain::ball(2, 1.0);
    std::optional<Profile> profile;
    std::optional<TensorProfile> tensor;
    std::map<std::string, double> params; ///< p, q, s, gamma, eps, r, B, C, ...
    QuadratureConfig cfg;

    double param(const std::string& key) const;
    double param_or(const std::string& key, double fallback) const;
};

struct MarginResult {
    Estimate lhs; ///< the side that must dominate
    Estimate rhs; ///< the dominated side (all remainder terms folded in)
    double margin = 0.0; ///< lhs - rhs
    double err = 0.0;    ///< propagated quadrature error
    double constant_used = 1.0;
    double D_used = 0.0;
    int escalations = 0;
    bool pass = false;
    std::string note;
};

/// A registry-all default evaluation point.
struct MarginCase {
    std::string domain_id = "ball";
    int n = 2;
    double size = 1.0;
    std::string family;
    std::vector<std::pair<std::string, double>> family_params;
    std::map<std::string, double> params;
};

struct InequalityRecord {
    std::string id;
    std::string anchor;     ///< statement label in the source text
    std::string statement;  ///< one-line description of what is checked
    std::string constant_note;
    bool existential_constant = false;
    std::string escalate_key; ///< "C" or "B" when an existential knob may grow
    std::function<MarginResult(const MarginInputs&)> evaluate;
    std::vector<MarginCase> defaults;
    std::vector<std::string> aliases;
};

/// Version of the serialized registry table (bump on any id/anchor change).
inline constexpr int kRegistryVersion = 1;

/// The full inequality catalog, in a stable order.
const std::vector<InequalityRecord>& registry();

/// Case-normalizing lookup (accepts aliases); nullptr when unknown.
const InequalityRecord* find_record(const std::string& id);

/// Throwing lookup that lists valid ids in the error message.
const InequalityRecord& require_record(const std::string& id);

/// Evaluate with automatic escalation of the record's existential knob by
/// powers of e until the margin clears (reported in the result).
MarginResult evaluate_margin(const InequalityRecord& rec, MarginInputs inputs);

/// Convenience: lookup + evaluate.
MarginResult inequality_margin(const std::string& id, const MarginInputs& inputs);

/// Build the profile (or tensor profile) a default case asks for.
MarginInputs build_case_inputs(const InequalityRecord& rec, const MarginCase& c,
                               const QuadratureConfig& cfg = {});

} // namespace hardylab
