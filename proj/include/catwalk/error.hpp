#ifndef CATWALK_ERROR_HPP
#define CATWALK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catwalk
{

// Base of every exception thrown by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed text, class violations, precondition failures.
class invalid_input : public error
{
public:
    using error::error;
};

// A size exceeded the configured exhaustive-search bound.
class resource_limit : public error
{
public:
    resource_limit(const std::string &what, std::size_t requested, std::size_t bound)
        : error(what + ": requested " + std::to_string(requested) + ", bound is " + std::to_string(bound)),
          requested_(requested), bound_(bound)
    {
    }

    std::size_t requested() const noexcept { return requested_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t requested_;
    std::size_t bound_;
};

// A decomposition met a state its construction rules out.
class internal_error : public error
{
public:
    using error::error;
};

namespace detail
{

inline void require(bool cond, const char *msg)
{
    if (!cond) {
        throw invalid_input(msg);
    }
}

inline void ensure(bool cond, const char *msg)
{
    if (!cond) {
        throw internal_error(msg);
    }
}

} // namespace detail

// Default bound on walk lengths for enumeration.
inline constexpr std::size_t default_max_walk_length = 24;
// Default bound for exhaustive verification sweeps.
inline constexpr std::size_t default_max_exhaustive = 12;

} // namespace catwalk

#endif
