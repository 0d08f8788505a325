#pragma once

#include <stdexcept>
#include <string>

namespace khess {

// Input left the Garding cone (sigma_k <= 0 or sigma_j <= 0 for some j <= k).
class admissibility_error : public std::domain_error {
public:
    explicit admissibility_error(const std::string& what) : std::domain_error(what) {}
};

// tr F^{ij} collapsed below representable scale.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Mesh width too coarse for the requested domain.
class resolution_error : public std::invalid_argument {
public:
    explicit resolution_error(const std::string& what) : std::invalid_argument(what) {}
};

// A stencil could not be closed (missing neighbor / malformed grid data).
class assembly_error : public std::runtime_error {
public:
    explicit assembly_error(const std::string& what) : std::runtime_error(what) {}
};

// Linear solve breakdown or non-finite arithmetic inside an iteration.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad or missing key in an experiment config; carries the offending key.
class config_error : public std::runtime_error {
public:
    config_error(const std::string& key, const std::string& what)
        : std::runtime_error("config key '" + key + "': " + what), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

} // namespace khess
