#pragma once

#include <stdexcept>
#include <string>

namespace wheels {

/// Bad caller input: unknown vertex, duplicate edge, malformed file.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its precondition (e.g. embedding a nonplanar graph).
class precondition_error : public std::logic_error {
public:
    explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

/// Exhaustive search refused because the instance exceeds the configured bound.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// wheel_plus_paths_to_k5 could not assemble a valid subdivision from its premises.
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

/// No disjoint choice of replacement paths lifts a subdivision through a gadget.
class lifting_failure : public std::runtime_error {
public:
    explicit lifting_failure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wheels
