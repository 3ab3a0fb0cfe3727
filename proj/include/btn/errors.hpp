#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btn {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector/layer width disagreement.
struct dimension_error : error {
    using error::error;
};

// Operation requires state the object does not carry (e.g. no middle layer).
struct state_error : error {
    using error::error;
};

struct range_error : error {
    using error::error;
};

// Malformed caller-supplied values (overlapping point sets, bad bits, ...).
struct input_error : error {
    using error::error;
};

// Request provably unsatisfiable (e.g. more vectors than the cube holds).
struct infeasible_error : error {
    using error::error;
};

// Computation exceeds the configured budget.
struct resource_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

// Randomized search ran out of attempts.
struct search_exhausted : error {
    using error::error;
};

// A candidate key vector produced equal dot products on two dataset rows.
struct key_collision : error {
    std::size_t first;
    std::size_t second;
    key_collision(std::size_t i, std::size_t j)
        : error("key collision between vectors " + std::to_string(i) + " and " +
                std::to_string(j)),
          first(i),
          second(j) {}
};

// Duplicate code vectors passed to a table-mapping layer.
struct code_collision : error {
    std::size_t first;
    std::size_t second;
    code_collision(std::size_t i, std::size_t j)
        : error("duplicate code vectors at positions " + std::to_string(i) +
                " and " + std::to_string(j)),
          first(i),
          second(j) {}
};

}  // namespace btn
