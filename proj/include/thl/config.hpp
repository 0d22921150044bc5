#pragma once

#include "thl/algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace thl {

struct TaskSpec {
    std::string command;
    std::optional<std::size_t> max_degree;
    std::optional<std::string> twist;
    bool lambda_coinvariants = true;
    std::string format = "human";
};

struct JobConfig {
    std::string name;
    Algebra algebra;
    FiniteGroupAction group;
    TaskSpec task;
    std::size_t default_degree = 3;
    std::optional<std::string> default_twist;

    std::size_t max_degree() const { return task.max_degree.value_or(default_degree); }
    // Resolved twist element; throws ValidationError if the name is unknown.
    std::size_t twist_element() const;
};

// JSON document:
//   algebra: { basis: [names], unit: index, mult: d x d x d rationals, mult[i][j] = e_i e_j }
//   group:   { elements: [names], table: r x r names, action: { name: d columns of d rationals } }
//   task:    { command, max_degree, twist, lambda_coinvariants, format }   (all optional)
// Rationals are integers or "p", "p/q" strings. Throws ParseError with the field path or the
// line/column of a syntax error, and ValidationError when the algebra or action laws fail.
JobConfig parse_config(const std::string& text, const std::string& source = "<config>");
JobConfig load_config(const std::string& path);

// Built-in fixture as a job.
JobConfig fixture_job(const std::string& name);

} // namespace thl
