#pragma once

#include <stdexcept>

namespace chromdp {

/// Malformed input text or an edge list that is not a simple graph.
class parse_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A vertex count above the configured cap, raised before any large allocation.
class capacity_error : public std::length_error
{
public:
    using std::length_error::length_error;
};

}
