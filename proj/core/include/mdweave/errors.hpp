#ifndef mdweave_errors_hpp
#define mdweave_errors_hpp

#include <stdexcept>
#include <string>

namespace mdweave {

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edge endpoint is not a vertex of the model.
struct DanglingEdge : ModelError {
    using ModelError::ModelError;
};

// A hook or prototype is not a vertex of the model.
struct RoleNotVertex : ModelError {
    using ModelError::ModelError;
};

// An element is declared both hook and prototype.
struct RoleConflict : ModelError {
    using ModelError::ModelError;
};

struct MetaModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// areComposite was given an empty reference set.
struct EmptyReferenceSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// extend_disjoint was given models sharing a vertex.
struct NotDisjoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A document failed to parse; carries the offending 1-based line number.
struct SyntaxError : std::runtime_error {
    SyntaxError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line(line) {}

    std::size_t line;
};

} // namespace mdweave

#endif
