#pragma once

#include <stdexcept>
#include <string>

namespace jjline {

// Thrown when a chain transfer matrix cannot be converted back to r/t
// because the total transmission vanishes (perfectly reflecting chain).
class singular_matrix_error : public std::runtime_error {
public:
    explicit singular_matrix_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a SQUID working point sits too close to a half-flux-quantum
// bias, where the effective inductance diverges and the mapping to line
// parameters loses meaning.
class tuning_singularity_error : public std::runtime_error {
public:
    explicit tuning_singularity_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a chain matrix has m11 = 0, so no transmitted wave exists
// and the r/t extraction degenerates (distinct from a singular element).
class total_reflection_error : public std::runtime_error {
public:
    explicit total_reflection_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a reflection doublet cannot be resolved into two distinct
// peaks on the requested scan window.
class unresolved_doublet_error : public std::runtime_error {
public:
    explicit unresolved_doublet_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a quality factor is requested at a point of total
// reflection, where stored energy never leaks and Q diverges.
class infinite_q_error : public std::runtime_error {
public:
    explicit infinite_q_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace jjline
