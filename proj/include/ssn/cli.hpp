#pragma once

#include <iosfwd>

namespace ssn::cli {

/// Entry point of the ssnet tool. Exit status: 0 on success, 1 on a domain
/// error or a failed verify check, 2 on an argument error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ssn::cli
