#pragma once

#include <stdexcept>
#include <string>

namespace snmat {

// Machine-readable error kinds; the CLI surfaces these verbatim.
enum class errc {
    domain,
    parse,
    chain_mismatch,
    radix_mismatch,
    depth_exceeded,
    division_by_zero,
    field_mismatch,
    kind_mismatch,
    unbalanced,
};

const char* errc_name(errc kind) noexcept;

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what)
{
    throw error(kind, what);
}

}  // namespace snmat
